#include "jumpfree/families.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace jumpfree {

namespace {

    // Unbiased draw in [0, bound) from the raw engine output, so replay does
    // not depend on the standard library's distribution implementation.
    std::uint64_t draw_below(std::mt19937_64 &rng, std::uint64_t bound)
    {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t r;
        do {
            r = rng();
        } while (r >= limit);
        return r % bound;
    }

    // grid^k, saturating.
    std::uint64_t grid_points(Nat grid, std::size_t k)
    {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < k; ++i) {
            if (total > std::numeric_limits<std::uint64_t>::max() / grid) return std::numeric_limits<std::uint64_t>::max();
            total *= grid;
        }
        return total;
    }

    void append_subsets(Nat n, std::size_t size, std::size_t k, std::vector<TupleSet> &out)
    {
        std::vector<Nat> chosen;
        auto rec = [&](auto &self, Nat next) -> void {
            if (chosen.size() == size) {
                TupleSet d;
                for_each_power_tuple(chosen, k, [&](KTuple t) { d.insert(d.end(), std::move(t)); });
                out.push_back(std::move(d));
                return;
            }
            for (Nat e = next; e + (size - chosen.size()) <= n; ++e) {
                chosen.push_back(e);
                self(self, e + 1);
                chosen.pop_back();
            }
        };
        rec(rec, 0);
    }

} // namespace

void UniverseSpec::validate() const
{
    if (k < 1) throw std::invalid_argument("universe: k must be >= 1");
    if (grid_bound < 2) throw std::invalid_argument("universe: grid bound must be >= 2");
    if (max_domain_size < 1) throw std::invalid_argument("universe: max domain size must be >= 1");
}

std::vector<TupleSet> build_universe(const UniverseSpec &spec)
{
    spec.validate();
    std::vector<TupleSet> domains;

    if (spec.include_all_cubes) {
        for (std::size_t size = 2; size <= spec.grid_bound; ++size) {
            if (grid_points(size, spec.k) > spec.max_domain_size) break;
            append_subsets(spec.grid_bound, size, spec.k, domains);
        }
    }

    std::mt19937_64 rng(spec.seed);
    const std::uint64_t capacity = std::min<std::uint64_t>(spec.max_domain_size, grid_points(spec.grid_bound, spec.k));
    for (std::size_t s = 0; s < spec.sample_count; ++s) {
        const std::uint64_t target = 1 + draw_below(rng, capacity);
        TupleSet d;
        while (d.size() < target) {
            std::vector<Nat> coords(spec.k);
            for (auto &c : coords) c = draw_below(rng, spec.grid_bound);
            d.insert(KTuple(std::move(coords)));
        }
        domains.push_back(std::move(d));
    }

    std::set<TupleSet> seen;
    std::vector<TupleSet> unique;
    for (auto &d : domains)
        if (seen.insert(d).second) unique.push_back(std::move(d));
    return unique;
}

std::string_view to_string(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::Max: return "max";
    case FamilyKind::Min: return "min";
    case FamilyKind::PredMin: return "predmin";
    case FamilyKind::ConstMin: return "constmin";
    }
    return "?";
}

FamilyKind parse_family_kind(std::string_view name)
{
    for (auto kind : {FamilyKind::Max, FamilyKind::Min, FamilyKind::PredMin, FamilyKind::ConstMin})
        if (to_string(kind) == name) return kind;
    throw std::invalid_argument("unknown family kind '" + std::string(name) + "'");
}

Family gen_family(FamilyKind kind, const std::vector<TupleSet> &universe)
{
    if (universe.empty()) throw std::invalid_argument("gen_family: empty universe");
    const std::size_t k = common_arity(universe.front());

    std::vector<FiniteFunction> members;
    members.reserve(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i) {
        const auto &d = universe[i];
        if (common_arity(d) != k) throw std::invalid_argument("gen_family: universe domains of mixed arity");

        std::map<KTuple, Nat> entries;
        const Nat field_min = d.empty() ? 0 : field(d).front();
        for (const auto &x : d) {
            Nat value = 0;
            switch (kind) {
            case FamilyKind::Max: value = x.max(); break;
            case FamilyKind::Min: value = x.min(); break;
            case FamilyKind::ConstMin: value = field_min; break;
            case FamilyKind::PredMin: {
                value = x.min();
                for (const auto &z : predecessor_set(d, x)) value = std::min(value, z.min());
                break;
            }
            }
            entries.emplace_hint(entries.end(), x, value);
        }
        members.emplace_back("f" + std::to_string(i), k, std::move(entries));
    }
    return Family(k, std::move(members));
}

std::optional<WitnessResult> find_regressively_regular_witness(const Family &fam, std::size_t p)
{
    if (p < 2) throw std::invalid_argument("witness search: p must be >= 2");
    if (fam.k() < 2) throw std::invalid_argument("witness search: k must be >= 2");

    SearchStats stats;
    for (const auto &f : fam.members()) {
        ++stats.functions_examined;
        for (auto &cube : cubes_in(f.domain(), p)) {
            ++stats.cubes_examined;
            auto report = regressive_regularity(f, cube);
            if (report.overall) return WitnessResult{f.id(), std::move(cube), std::move(report), stats};
        }
    }
    return std::nullopt;
}

const FiniteFunction &member(const Family &fam, std::string_view id)
{
    for (const auto &f : fam.members())
        if (f.id() == id) return f;
    throw std::out_of_range("family has no member '" + std::string(id) + "'");
}

} // namespace jumpfree
