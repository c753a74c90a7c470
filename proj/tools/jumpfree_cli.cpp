// Command-line driver: jumpfree <command> [options]

#include "jumpfree/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

template <class T>
std::vector<T> parse_list(const std::string &text)
{
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const long long v = std::stoll(item, &used);
        if (used != item.size()) throw CLI::ValidationError("list", "bad number '" + item + "'");
        if constexpr (std::is_unsigned_v<T>)
            if (v < 0) throw CLI::ValidationError("list", "negative value '" + item + "'");
        out.push_back(static_cast<T>(v));
    }
    return out;
}

} // namespace

int main(int argc, char **argv)
{
    using namespace jumpfree;

    CLI::App app{"Finite checks and witness searches for jump-free function families."};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, family, gamma, semantics, method, format, input, cube, member, values;
    std::size_t k = 2, p = 2, max_domain = 8, samples = 0;
    Nat grid = 4;
    std::uint64_t seed = 0;
    bool cubes = true;
    unsigned threads = 1;

    auto *o_config = app.add_option("--config", config_path, "JSON run configuration; flags override it")->check(CLI::ExistingFile);
    auto *o_k = app.add_option("--k", k, "arity");
    auto *o_p = app.add_option("--p", p, "cube size |E|");
    auto *o_grid = app.add_option("--grid", grid, "coordinates range over 0..grid-1");
    auto *o_max = app.add_option("--max-domain", max_domain, "largest domain in the universe");
    auto *o_samples = app.add_option("--samples", samples, "number of seeded random domains");
    auto *o_seed = app.add_option("--seed", seed, "universe seed");
    auto *o_cubes = app.add_flag("--cubes,!--no-cubes", cubes, "include every cube that fits");
    auto *o_family = app.add_option("--family", family, "max | min | predmin | constmin");
    auto *o_gamma = app.add_option("--gamma", gamma, "g0,g1,g2 from zigzag, zigzagNeg, shifted:<n>");
    auto *o_sem = app.add_option("--semantics", semantics, "multiset | set");
    auto *o_method = app.add_option("--method", method, "exhaustive | dp | mitm");
    auto *o_format = app.add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    auto *o_input = app.add_option("--input", input, "serialized family, function, or multiset")->check(CLI::ExistingFile);
    auto *o_cube = app.add_option("--cube", cube, "cube elements, e.g. 2,5");
    auto *o_member = app.add_option("--member", member, "family member id");
    auto *o_values = app.add_option("--values", values, "multiset values for solve, e.g. 3,-1,-2");
    auto *o_threads = app.add_option("--threads", threads, "worker threads for family checks");

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"gen", "emit a generated family"},
        {"check-jumpfree", "check the jump-free condition on every ordered member pair"},
        {"check-full", "check fullness against the configured universe"},
        {"check-rr", "classify one function over one cube"},
        {"search", "find a member regressively regular over a p-cube"},
        {"sets", "build the F and H integer multisets"},
        {"solve", "target-zero subset sum"},
        {"experiment", "witness search, F/H construction and solving end to end"},
    };
    for (const auto &[name, description] : commands) app.add_subcommand(name, description);

    CLI11_PARSE(app, argc, argv);

    RunConfig config;
    try {
        if (*o_config) {
            std::ifstream in(config_path);
            config = config_from_json(nlohmann::json::parse(in));
        }
        config.command = app.get_subcommands().front()->get_name();
        if (*o_k) config.k = k;
        if (*o_p) config.p = p;
        if (*o_grid) config.universe.grid_bound = grid;
        if (*o_max) config.universe.max_domain_size = max_domain;
        if (*o_samples) config.universe.sample_count = samples;
        if (*o_seed) config.universe.seed = seed;
        if (*o_cubes) config.universe.include_all_cubes = cubes;
        if (*o_family) config.family = parse_family_kind(family);
        if (*o_gamma) config.gammas = GammaTriple::parse(gamma);
        if (*o_sem) config.semantics = parse_semantics(semantics);
        if (*o_method) config.method = parse_solver_method(method);
        if (*o_format) config.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
        if (*o_input) config.input_path = input;
        if (*o_cube) config.cube = parse_list<Nat>(cube);
        if (*o_member) config.member = member;
        if (*o_values) config.values = parse_list<Int>(values);
        if (*o_threads) config.threads = threads;
        config.universe.k = config.k;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    const auto result = run(config);
    std::cout << format_report(result.report, config.format);
    if (result.exit_code == 1 && result.report.contains("error"))
        std::cerr << "error: " << result.report["error"].get<std::string>() << '\n';
    return result.exit_code;
}
