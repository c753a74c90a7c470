#include "jumpfree/runner.hpp"

#include "jumpfree/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace jumpfree {

namespace {

    // A bad configuration or input; reported with exit code 1.
    class UsageError : public std::runtime_error {
    public:
        using std::runtime_error::runtime_error;
    };

    struct Outcome {
        int exit_code = 0;
        json body = json::object();
    };

    std::optional<json> load_input(const RunConfig &config)
    {
        if (config.input) return config.input;
        if (!config.input_path) return std::nullopt;
        std::ifstream in(*config.input_path);
        if (!in) throw UsageError("cannot open input file '" + *config.input_path + "'");
        try {
            return json::parse(in);
        } catch (const json::parse_error &e) {
            throw UsageError("input file '" + *config.input_path + "' is not valid JSON: " + e.what());
        }
    }

    UniverseSpec universe_of(const RunConfig &config)
    {
        UniverseSpec u = config.universe;
        u.k = config.k;
        return u;
    }

    void require_min_arity(std::size_t k)
    {
        if (k < 2) throw UsageError("this command requires k >= 2 (got " + std::to_string(k) + ")");
    }

    void require_min_cube_size(std::size_t p)
    {
        if (p < 2) throw UsageError("this command requires p >= 2 (got " + std::to_string(p) + ")");
    }

    // Family from the input document, or generated over the configured
    // universe. Records where it came from in `body`.
    Family load_family(const RunConfig &config, const std::optional<json> &input, json &body)
    {
        if (input) {
            const json &doc = input->is_object() && input->contains("family") ? input->at("family") : *input;
            body["family_source"] = "input";
            return doc.get<Family>();
        }
        const auto u = universe_of(config);
        const auto universe = build_universe(u);
        body["family_source"] = "generated";
        body["family_kind"] = std::string(to_string(config.family));
        body["universe"] = u;
        body["universe_size"] = universe.size();
        if (universe.empty()) throw UsageError("the configured universe is empty; enable --cubes or set --samples");
        return gen_family(config.family, universe);
    }

    Cube cube_for(const RunConfig &config, const std::optional<json> &input, std::size_t k)
    {
        if (input && input->is_object() && input->contains("cube")) return cube_from_json(input->at("cube"));
        if (!config.cube) throw UsageError("a cube is required (--cube e1,e2,... or \"cube\" in the input)");
        return Cube(*config.cube, k);
    }

    // A single function: {"function":..., "cube":...}, a bare function, or a
    // member of a family (input or generated).
    FiniteFunction load_function(const RunConfig &config, const std::optional<json> &input, json &body,
                                 std::optional<Family> *family_out = nullptr)
    {
        if (input && input->is_object() && input->contains("function")) {
            body["function_source"] = "input";
            return input->at("function").get<FiniteFunction>();
        }
        if (input && input->is_object() && input->contains("entries")) {
            body["function_source"] = "input";
            return input->get<FiniteFunction>();
        }
        auto fam = load_family(config, input, body);
        if (fam.members().empty()) throw UsageError("family has no members");
        const auto id = config.member.value_or(fam.members().front().id());
        FiniteFunction f;
        try {
            f = member(fam, id);
        } catch (const std::out_of_range &e) {
            throw UsageError(e.what());
        }
        body["function_source"] = "family";
        if (family_out) *family_out = std::move(fam);
        return f;
    }

    Outcome cmd_gen(const RunConfig &config, const std::optional<json> &input)
    {
        Outcome out;
        const auto fam = load_family(config, input, out.body);
        out.body["family"] = fam;
        return out;
    }

    Outcome cmd_check_jumpfree(const RunConfig &config, const std::optional<json> &input)
    {
        Outcome out;
        const auto fam = load_family(config, input, out.body);
        out.body["members"] = fam.size();
        const auto witness = is_jump_free_family(fam, config.threads);
        out.body["jump_free"] = !witness;
        if (witness) {
            out.body["violation"] = *witness;
            out.exit_code = 2;
        }
        return out;
    }

    Outcome cmd_check_full(const RunConfig &config, const std::optional<json> &input)
    {
        Outcome out;
        const auto fam = load_family(config, input, out.body);
        const auto u = universe_of(config);
        const auto universe = build_universe(u);
        // Fullness is only meaningful relative to an explicit universe.
        out.body["universe"] = u;
        out.body["universe_size"] = universe.size();
        out.body["members"] = fam.size();
        const auto missing = is_full_over(fam, universe);
        out.body["full_over_universe"] = !missing;
        if (missing) {
            out.body["violation"] = json{{"missing_domain", tuple_set_to_json(*missing)}};
            out.exit_code = 2;
        }
        return out;
    }

    Outcome cmd_check_rr(const RunConfig &config, const std::optional<json> &input)
    {
        Outcome out;
        const auto f = load_function(config, input, out.body);
        require_min_arity(f.k());
        const auto cube = cube_for(config, input, f.k());
        require_min_cube_size(cube.p());

        const auto report = regressive_regularity(f, cube);
        out.body["function_id"] = f.id();
        out.body["cube"] = cube;
        out.body["report"] = report;
        out.body["regressively_regular"] = report.overall;
        out.body["reflexive"] = is_reflexive(f);
        if (!report.overall) {
            for (const auto &[ot, verdict] : report.per_class)
                if (verdict.kind == ClassVerdict::Kind::Violated) {
                    out.body["violation"] = json{{"class", ot.to_string()}, {"detail", verdict}};
                    break;
                }
            out.exit_code = 2;
        }
        return out;
    }

    Outcome cmd_search(const RunConfig &config, const std::optional<json> &input)
    {
        Outcome out;
        const auto fam = load_family(config, input, out.body);
        require_min_arity(fam.k());
        require_min_cube_size(config.p);
        const auto witness = find_regressively_regular_witness(fam, config.p);
        out.body["members"] = fam.size();
        out.body["found"] = witness.has_value();
        out.body["witness"] = witness ? json(*witness) : json();
        return out;
    }

    Outcome cmd_sets(const RunConfig &config, const std::optional<json> &input)
    {
        Outcome out;
        std::optional<Family> fam;
        const bool explicit_cube = config.cube || (input && input->is_object() && input->contains("cube"));

        FiniteFunction f;
        std::optional<Cube> cube;
        if (explicit_cube) {
            f = load_function(config, input, out.body, &fam);
            require_min_arity(f.k());
            cube = cube_for(config, input, f.k());
        } else {
            // No cube given: use the first regressively regular witness.
            fam = load_family(config, input, out.body);
            require_min_arity(fam->k());
            require_min_cube_size(config.p);
            const auto witness = find_regressively_regular_witness(*fam, config.p);
            out.body["witness"] = witness ? json(*witness) : json();
            if (!witness) {
                out.body["found"] = false;
                return out;
            }
            f = member(*fam, witness->function_id);
            cube = witness->cube;
        }
        require_min_cube_size(cube->p());

        const auto sets = build_fh(f, *cube, config.gammas, config.semantics);
        out.body["found"] = true;
        out.body["function_id"] = f.id();
        out.body["cube"] = *cube;
        out.body["F"] = sets.f_set;
        out.body["H"] = sets.h_set;
        out.body["size_F"] = sets.f_set.total_size();
        out.body["size_H"] = sets.h_set.total_size();
        out.body["fh_equal"] = fh_equal(sets.f_set, sets.h_set);
        return out;
    }

    Outcome cmd_solve(const RunConfig &config, const std::optional<json> &input)
    {
        Outcome out;
        IntMultiset ms;
        if (config.values) {
            ms = IntMultiset::from_values(*config.values);
        } else if (input) {
            const json &doc = input->is_object() && input->contains("multiset") ? input->at("multiset") : *input;
            ms = doc.get<IntMultiset>();
        } else {
            throw UsageError("solve needs --values or an input multiset");
        }
        const auto cert = solve_subset_sum(ms, config.method);
        out.body["multiset"] = ms;
        out.body["size"] = ms.total_size();
        out.body["solvable"] = cert.has_value();
        out.body["certificate"] = cert ? json(*cert) : json();
        return out;
    }

    Outcome cmd_experiment(const RunConfig &config, const std::optional<json> &input)
    {
        Outcome out;
        const auto fam = load_family(config, input, out.body);
        require_min_arity(fam.k());
        require_min_cube_size(config.p);
        const auto report = run_subset_sum_experiment(fam, config.p, config.gammas, config.method);
        out.body.update(json(report));
        return out;
    }

    std::string csv_field(const json &v)
    {
        std::string s = v.is_string() ? v.get<std::string>() : v.dump();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char c : s) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        return quoted + '"';
    }

} // namespace

json config_to_json(const RunConfig &config)
{
    json j{{"command", config.command},
           {"k", config.k},
           {"p", config.p},
           {"universe", universe_of(config)},
           {"family", std::string(to_string(config.family))},
           {"gammas", config.gammas},
           {"semantics", std::string(to_string(config.semantics))},
           {"method", std::string(to_string(config.method))},
           {"format", config.format == OutputFormat::Json ? "json" : "csv"},
           {"threads", config.threads}};
    if (config.input_path) j["input"] = *config.input_path;
    if (config.cube) j["cube"] = *config.cube;
    if (config.member) j["member"] = *config.member;
    if (config.values) j["values"] = *config.values;
    return j;
}

RunConfig config_from_json(const json &j)
{
    RunConfig c;
    c.command = j.value("command", c.command);
    if (j.contains("universe")) c.universe = j.at("universe").get<UniverseSpec>();
    c.k = j.value("k", c.universe.k);
    c.p = j.value("p", c.p);
    if (j.contains("family")) c.family = parse_family_kind(j.at("family").get<std::string>());
    if (j.contains("gammas")) c.gammas = j.at("gammas").get<GammaTriple>();
    if (j.contains("semantics")) c.semantics = parse_semantics(j.at("semantics").get<std::string>());
    if (j.contains("method")) c.method = parse_solver_method(j.at("method").get<std::string>());
    if (j.contains("format")) {
        const auto f = j.at("format").get<std::string>();
        if (f != "json" && f != "csv") throw std::invalid_argument("format must be json or csv");
        c.format = f == "csv" ? OutputFormat::Csv : OutputFormat::Json;
    }
    if (j.contains("input")) c.input_path = j.at("input").get<std::string>();
    if (j.contains("cube")) c.cube = j.at("cube").get<std::vector<Nat>>();
    if (j.contains("member")) c.member = j.at("member").get<std::string>();
    if (j.contains("values")) c.values = j.at("values").get<std::vector<Int>>();
    c.threads = j.value("threads", c.threads);
    c.universe.k = c.k;
    return c;
}

RunResult run(const RunConfig &config)
{
    RunResult result;
    json &report = result.report;
    report["command"] = config.command;
    try {
        report["config"] = config_to_json(config);
        universe_of(config).validate();

        const auto input = load_input(config);
        Outcome out;
        if (config.command == "gen")
            out = cmd_gen(config, input);
        else if (config.command == "check-jumpfree")
            out = cmd_check_jumpfree(config, input);
        else if (config.command == "check-full")
            out = cmd_check_full(config, input);
        else if (config.command == "check-rr")
            out = cmd_check_rr(config, input);
        else if (config.command == "search")
            out = cmd_search(config, input);
        else if (config.command == "sets")
            out = cmd_sets(config, input);
        else if (config.command == "solve")
            out = cmd_solve(config, input);
        else if (config.command == "experiment")
            out = cmd_experiment(config, input);
        else
            throw UsageError("unknown command '" + config.command + "'");

        report.update(out.body);
        result.exit_code = out.exit_code;
    } catch (const CapacityError &e) {
        report["error"] = e.what();
        report["error_kind"] = "capacity";
        result.exit_code = 1;
    } catch (const std::exception &e) {
        report["error"] = e.what();
        report["error_kind"] = "usage";
        result.exit_code = 1;
    }
    return result;
}

std::string format_report(const json &report, OutputFormat format)
{
    if (format == OutputFormat::Json) return report.dump(2) + '\n';

    std::string header, row;
    for (const auto &[key, value] : report.items()) {
        if (value.is_structured()) continue;
        if (!header.empty()) {
            header += ',';
            row += ',';
        }
        header += csv_field(key);
        row += csv_field(value);
    }
    return header + '\n' + row + '\n';
}

json without_timings(json report)
{
    if (report.is_object()) {
        report.erase("timings_ms");
        for (auto &[key, value] : report.items()) value = without_timings(std::move(value));
    } else if (report.is_array()) {
        for (auto &value : report) value = without_timings(std::move(value));
    }
    return report;
}

} // namespace jumpfree
