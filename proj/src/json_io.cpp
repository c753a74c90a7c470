#include "jumpfree/json_io.hpp"

#include <stdexcept>

namespace jumpfree {

namespace {

    Nat nat_from_json(const json &j, const char *what)
    {
        if (!j.is_number_integer() || (!j.is_number_unsigned() && j.get<Int>() < 0))
            throw std::invalid_argument(std::string(what) + " must be nonnegative integers");
        return j.get<Nat>();
    }

} // namespace

void to_json(json &j, const KTuple &x)
{
    j = json::array();
    for (Nat c : x) j.push_back(c);
}

void from_json(const json &j, KTuple &x)
{
    if (!j.is_array()) throw std::invalid_argument("tuple must be a JSON array");
    std::vector<Nat> coords;
    for (const auto &c : j) coords.push_back(nat_from_json(c, "tuple coordinates"));
    x = KTuple(std::move(coords));
}

json tuple_set_to_json(const TupleSet &d)
{
    json j = json::array();
    for (const auto &x : d) j.push_back(x);
    return j;
}

TupleSet tuple_set_from_json(const json &j)
{
    if (!j.is_array()) throw std::invalid_argument("domain must be a JSON array of tuples");
    TupleSet d;
    for (const auto &t : j) d.insert(t.get<KTuple>());
    common_arity(d);
    return d;
}

void to_json(json &j, const Cube &c)
{
    j = json{{"elements", c.elements()}, {"k", c.k()}};
}

Cube cube_from_json(const json &j)
{
    return Cube(j.at("elements").get<std::vector<Nat>>(), j.at("k").get<std::size_t>());
}

void to_json(json &j, const FiniteFunction &f)
{
    json entries = json::array();
    for (const auto &[x, v] : f.entries()) entries.push_back(json::array({json(x), v}));
    j = json{{"id", f.id()}, {"k", f.k()}, {"entries", std::move(entries)}};
}

void from_json(const json &j, FiniteFunction &f)
{
    std::map<KTuple, Nat> entries;
    for (const auto &e : j.at("entries")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("function entry must be [tuple, value]");
        const auto x = e[0].get<KTuple>();
        if (!entries.emplace(x, nat_from_json(e[1], "function values")).second)
            throw std::invalid_argument("duplicate domain tuple " + x.to_string());
    }
    f = FiniteFunction(j.at("id").get<std::string>(), j.at("k").get<std::size_t>(), std::move(entries));
}

void to_json(json &j, const Family &fam)
{
    j = json{{"k", fam.k()}, {"members", fam.members()}};
}

void from_json(const json &j, Family &fam)
{
    const json &members = j.is_array() ? j : j.at("members");
    auto fs = members.get<std::vector<FiniteFunction>>();
    std::size_t k = 0;
    if (j.is_object() && j.contains("k"))
        k = j.at("k").get<std::size_t>();
    else if (!fs.empty())
        k = fs.front().k();
    fam = Family(k, std::move(fs));
}

void to_json(json &j, const JumpFreeWitness &w)
{
    j = json{{"id_a", w.id_a}, {"id_b", w.id_b}, {"x", w.x}, {"value_a", w.value_a}, {"value_b", w.value_b}};
}

void to_json(json &j, const ClassVerdict &v)
{
    switch (v.kind) {
    case ClassVerdict::Kind::Case1: j = json{{"verdict", "Case1"}, {"value", v.value}}; break;
    case ClassVerdict::Kind::Case2: j = json{{"verdict", "Case2"}}; break;
    case ClassVerdict::Kind::Violated:
        j = json{{"verdict", "Violated"}, {"below_min", v.below_min ? json(*v.below_min) : json()},
                 {"case1_evidence", v.case1_evidence}};
        break;
    }
}

void to_json(json &j, const RegularityReport &r)
{
    json per_class = json::object();
    for (const auto &[ot, verdict] : r.per_class) per_class[ot.to_string()] = verdict;
    j = json{{"overall", r.overall}, {"per_class", std::move(per_class)}};
}

void to_json(json &j, const UniverseSpec &u)
{
    j = json{{"k", u.k},
             {"grid", u.grid_bound},
             {"max_domain", u.max_domain_size},
             {"samples", u.sample_count},
             {"seed", u.seed},
             {"cubes", u.include_all_cubes}};
}

void from_json(const json &j, UniverseSpec &u)
{
    UniverseSpec out;
    out.k = j.value("k", out.k);
    out.grid_bound = j.value("grid", out.grid_bound);
    out.max_domain_size = j.value("max_domain", out.max_domain_size);
    out.sample_count = j.value("samples", out.sample_count);
    out.seed = j.value("seed", out.seed);
    out.include_all_cubes = j.value("cubes", out.include_all_cubes);
    u = out;
}

void to_json(json &j, const SearchStats &s)
{
    j = json{{"functions_examined", s.functions_examined}, {"cubes_examined", s.cubes_examined}};
}

void to_json(json &j, const WitnessResult &w)
{
    j = json{{"function_id", w.function_id}, {"cube", w.cube}, {"report", w.report}, {"search_stats", w.stats}};
}

void to_json(json &j, const IntMultiset &ms)
{
    j = json::array();
    for (const auto &[v, m] : ms.counts()) j.push_back(json::array({v, m}));
}

void from_json(const json &j, IntMultiset &ms)
{
    if (!j.is_array()) throw std::invalid_argument("multiset must be a JSON array of [value, multiplicity]");
    IntMultiset out;
    for (const auto &e : j) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("multiset entry must be [value, multiplicity]");
        if (!e[0].is_number_integer()) throw std::invalid_argument("multiset values must be integers");
        out.add(e[0].get<Int>(), nat_from_json(e[1], "multiplicities"));
    }
    ms = std::move(out);
}

void to_json(json &j, const ZBijection &g)
{
    j = g.to_string();
}

void to_json(json &j, const GammaTriple &g)
{
    j = json{{"g0", g.g0}, {"g1", g.g1}, {"g2", g.g2}};
}

void from_json(const json &j, GammaTriple &g)
{
    if (j.is_string()) {
        g = GammaTriple::parse(j.get<std::string>());
        return;
    }
    g = GammaTriple{ZBijection::parse(j.at("g0").get<std::string>()), ZBijection::parse(j.at("g1").get<std::string>()),
                    ZBijection::parse(j.at("g2").get<std::string>())};
}

void to_json(json &j, const SubsetCertificate &c)
{
    j = json{{"chosen", c.chosen}, {"sum", c.sum}};
}

void to_json(json &j, const ExperimentReport &r)
{
    const auto optional_json = [](const auto &opt) { return opt ? json(*opt) : json(); };
    j = json{{"outcome", r.outcome == ExperimentReport::Outcome::Completed ? "completed" : "no_witness"},
             {"k", r.k},
             {"p", r.p},
             {"gammas", r.gammas},
             {"method", std::string(to_string(r.method))},
             {"witness", optional_json(r.witness)},
             {"timings_ms",
              {{"search", r.timings.search_ms},
               {"build", r.timings.build_ms},
               {"solve_F", r.timings.solve_f_ms},
               {"solve_H", r.timings.solve_h_ms}}}};
    if (r.outcome == ExperimentReport::Outcome::NoWitness) return;
    j["F"] = r.f_set;
    j["H"] = r.h_set;
    j["certificate_F"] = optional_json(r.certificate_f);
    j["certificate_H"] = optional_json(r.certificate_h);
    j["fh_equal"] = r.fh_equal;
    j["solvable_F"] = r.solvable_f;
    j["solvable_H"] = r.solvable_h;
    j["agreement"] = r.agreement;
    j["cardinality_ok"] = r.cardinality_ok;
}

} // namespace jumpfree
