// Python bindings. Structured values cross the boundary as plain Python
// objects in the same shapes as the JSON formats used by the CLI.

#include "jumpfree/core.hpp"
#include "jumpfree/families.hpp"
#include "jumpfree/intsets.hpp"
#include "jumpfree/json_io.hpp"
#include "jumpfree/predicates.hpp"
#include "jumpfree/runner.hpp"
#include "jumpfree/subsetsum.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace jumpfree;

namespace {

py::object to_py(const json &j)
{
    switch (j.type()) {
    case json::value_t::null:
        return py::none();
    case json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
        return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned:
        return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float:
        return py::float_(j.get<double>());
    case json::value_t::string:
        return py::str(j.get<std::string>());
    case json::value_t::array: {
        py::list out;
        for (const auto &e : j) out.append(to_py(e));
        return std::move(out);
    }
    case json::value_t::object: {
        py::dict out;
        for (const auto &[k, v] : j.items()) out[py::str(k)] = to_py(v);
        return std::move(out);
    }
    default:
        throw py::type_error("unsupported JSON value");
    }
}

json from_py(py::handle h)
{
    if (h.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
    if (py::isinstance<py::int_>(h)) {
        if (h.cast<py::int_>() < py::int_(0)) return h.cast<std::int64_t>();
        return h.cast<std::uint64_t>();
    }
    if (py::isinstance<py::float_>(h)) return h.cast<double>();
    if (py::isinstance<py::str>(h)) return h.cast<std::string>();
    if (py::isinstance<py::dict>(h)) {
        json out = json::object();
        for (const auto &[k, v] : h.cast<py::dict>()) out[py::str(k).cast<std::string>()] = from_py(v);
        return out;
    }
    if (py::isinstance<py::sequence>(h) || py::isinstance<py::iterable>(h)) {
        json out = json::array();
        for (const auto &e : h) out.push_back(from_py(e));
        return out;
    }
    throw py::type_error("cannot convert " + py::repr(h).cast<std::string>() + " to JSON");
}

template <class T>
T parse(py::handle h)
{
    return from_py(h).get<T>();
}

template <class T>
py::object dump(const T &value)
{
    return to_py(json(value));
}

template <class T>
py::object dump(const std::optional<T> &value)
{
    return value ? dump(*value) : py::none();
}

KTuple tuple_arg(const std::vector<Nat> &coords)
{
    return KTuple(coords);
}

py::tuple ranks(const OrderType &t)
{
    return py::cast(std::vector<std::uint32_t>(t.ranks.begin(), t.ranks.end()));
}

TupleSet domain_arg(py::handle h)
{
    return tuple_set_from_json(from_py(h));
}

Cube cube_arg(const std::vector<Nat> &elements, std::size_t k)
{
    return Cube(elements, k);
}

py::list multiset_values(const IntMultiset &ms)
{
    return py::cast(ms.values());
}

} // namespace

PYBIND11_MODULE(_jumpfree, m)
{
    m.doc() = "Order types, jump-free families, regressive regularity and target-zero subset sum.";

    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

    m.def("order_signature", [](const std::vector<Nat> &x) { return ranks(order_signature(tuple_arg(x))); },
          py::arg("x"));
    m.def(
        "order_equivalent",
        [](const std::vector<Nat> &x, const std::vector<Nat> &y) { return order_equivalent(tuple_arg(x), tuple_arg(y)); },
        py::arg("x"), py::arg("y"));
    m.def(
        "enumerate_order_types",
        [](std::size_t k) {
            py::list out;
            for (const auto &t : enumerate_order_types(k)) out.append(ranks(t));
            return out;
        },
        py::arg("k"));
    m.def("field", [](py::handle d) { return field(domain_arg(d)); }, py::arg("domain"));
    m.def(
        "cubes_in",
        [](py::handle d, std::size_t p) {
            std::vector<std::vector<Nat>> out;
            for (const auto &c : cubes_in(domain_arg(d), p)) out.push_back(c.elements());
            return out;
        },
        py::arg("domain"), py::arg("p"));

    m.def("is_reflexive", [](py::handle f) { return is_reflexive(parse<FiniteFunction>(f)); }, py::arg("function"));
    m.def(
        "predecessor_set",
        [](py::handle d, const std::vector<Nat> &x) { return to_py(tuple_set_to_json(predecessor_set(domain_arg(d), tuple_arg(x)))); },
        py::arg("domain"), py::arg("x"));
    m.def(
        "jump_free_violation",
        [](py::handle fa, py::handle fb) {
            return dump(jump_free_violation(parse<FiniteFunction>(fa), parse<FiniteFunction>(fb)));
        },
        py::arg("fa"), py::arg("fb"));
    m.def(
        "is_jump_free_family",
        [](py::handle fam, unsigned threads) {
            const auto family = parse<Family>(fam);
            std::optional<JumpFreeWitness> w;
            {
                py::gil_scoped_release release;
                w = is_jump_free_family(family, threads);
            }
            return dump(w);
        },
        py::arg("family"), py::arg("threads") = 1,
        "Returns None when the family is jump-free, else the canonical first violation.");
    m.def(
        "is_full_over",
        [](py::handle fam, py::handle universe) {
            std::vector<TupleSet> u;
            for (const auto &d : universe) u.push_back(domain_arg(d));
            const auto missing = is_full_over(parse<Family>(fam), u);
            return missing ? to_py(tuple_set_to_json(*missing)) : py::none();
        },
        py::arg("family"), py::arg("universe"));
    m.def(
        "regressive_regularity",
        [](py::handle f, const std::vector<Nat> &cube) {
            const auto fn = parse<FiniteFunction>(f);
            return dump(regressive_regularity(fn, cube_arg(cube, fn.k())));
        },
        py::arg("function"), py::arg("cube"));

    m.def(
        "build_universe",
        [](std::size_t k, Nat grid, std::size_t max_domain, std::size_t samples, std::uint64_t seed, bool cubes) {
            UniverseSpec u;
            u.k = k;
            u.grid_bound = grid;
            u.max_domain_size = max_domain;
            u.sample_count = samples;
            u.seed = seed;
            u.include_all_cubes = cubes;
            py::list out;
            for (const auto &d : build_universe(u)) out.append(to_py(tuple_set_to_json(d)));
            return out;
        },
        py::arg("k") = 2, py::arg("grid") = 4, py::arg("max_domain") = 8, py::arg("samples") = 0,
        py::arg("seed") = 0, py::arg("cubes") = true);
    m.def(
        "gen_family",
        [](const std::string &kind, py::handle universe) {
            std::vector<TupleSet> u;
            for (const auto &d : universe) u.push_back(domain_arg(d));
            return dump(gen_family(parse_family_kind(kind), u));
        },
        py::arg("kind"), py::arg("universe"));
    m.def(
        "find_witness",
        [](py::handle fam, std::size_t p) { return dump(find_regressively_regular_witness(parse<Family>(fam), p)); },
        py::arg("family"), py::arg("p"));

    m.def("apply_gamma", [](const std::string &name, Nat n) { return ZBijection::parse(name).apply(n); },
          py::arg("name"), py::arg("n"));
    m.def(
        "build_fh",
        [](py::handle f, const std::vector<Nat> &cube, const std::string &gammas, const std::string &semantics) {
            const auto fn = parse<FiniteFunction>(f);
            const auto sets = build_fh(fn, cube_arg(cube, fn.k()), GammaTriple::parse(gammas), parse_semantics(semantics));
            py::dict out;
            out["F"] = multiset_values(sets.f_set);
            out["H"] = multiset_values(sets.h_set);
            out["fh_equal"] = fh_equal(sets.f_set, sets.h_set);
            return out;
        },
        py::arg("function"), py::arg("cube"), py::arg("gammas") = "zigzag", py::arg("semantics") = "multiset",
        "F and H as ascending value lists (repeated values under multiset semantics).");

    m.def(
        "solve_subset_sum",
        [](const std::vector<Int> &values, const std::string &method) -> py::object {
            const auto ms = IntMultiset::from_values(values);
            const auto m = parse_solver_method(method);
            std::optional<SubsetCertificate> cert;
            {
                py::gil_scoped_release release;
                cert = solve_subset_sum(ms, m);
            }
            return cert ? py::object(multiset_values(cert->chosen)) : py::none();
        },
        py::arg("values"), py::arg("method") = "dp",
        "A nonempty sub-multiset summing to zero as a value list, or None. Raises CapacityError past the "
        "method's size guard.");
    m.def(
        "run_experiment",
        [](py::handle fam, std::size_t p, const std::string &gammas, const std::string &method) {
            const auto family = parse<Family>(fam);
            const auto g = GammaTriple::parse(gammas);
            const auto sm = parse_solver_method(method);
            std::optional<ExperimentReport> r;
            {
                py::gil_scoped_release release;
                r = run_subset_sum_experiment(family, p, g, sm);
            }
            return dump(*r);
        },
        py::arg("family"), py::arg("p") = 2, py::arg("gammas") = "zigzag", py::arg("method") = "dp");

    m.def(
        "run",
        [](py::handle config) {
            auto j = from_py(config);
            json data;
            if (j.contains("data")) {
                data = j.at("data");
                j.erase("data");
            }
            auto cfg = config_from_json(j);
            if (!data.is_null()) cfg.input = std::move(data);
            const auto result = run(cfg);
            return py::make_tuple(result.exit_code, to_py(result.report));
        },
        py::arg("config"),
        "Runs a CLI subcommand from a config mapping; returns (exit_code, report). An inline \"data\" entry "
          "replaces the input file.");
}
