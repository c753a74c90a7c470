#pragma once

// Rule-generated function families over bounded universes, and the
// best-effort search for a member that is regressively regular over a cube.

#include "jumpfree/core.hpp"
#include "jumpfree/predicates.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jumpfree {

/// Finite scope standing in for "every finite subset of N^k".
struct UniverseSpec {
    std::size_t k = 2;
    /// Coordinates range over 0..grid_bound-1.
    Nat grid_bound = 4;
    std::size_t max_domain_size = 8;
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;
    bool include_all_cubes = true;

    /// Throws std::invalid_argument unless k >= 1, grid_bound >= 2 and
    /// max_domain_size >= 1.
    void validate() const;

    friend bool operator==(const UniverseSpec &, const UniverseSpec &) = default;
};

/// Cubes E^k (E inside the grid, 2 <= |E|, |E|^k <= max_domain_size) by
/// size then lexicographically, followed by sample_count seeded random
/// domains. Duplicates keep their first position.
std::vector<TupleSet> build_universe(const UniverseSpec &spec);

enum class FamilyKind { Max, Min, PredMin, ConstMin };

std::string_view to_string(FamilyKind kind);
/// Throws std::invalid_argument for an unknown name.
FamilyKind parse_family_kind(std::string_view name);

/// One member per domain, ids "f0", "f1", ... in universe order.
///   max:      f(x) = max(x)
///   min:      f(x) = min(x)
///   predmin:  f(x) = min(field(D_x ∪ {x}))
///   constmin: f(x) = min(field(D))   (not jump-free)
/// Throws std::invalid_argument for an empty universe.
Family gen_family(FamilyKind kind, const std::vector<TupleSet> &universe);

struct SearchStats {
    std::size_t functions_examined = 0;
    std::size_t cubes_examined = 0;

    friend bool operator==(const SearchStats &, const SearchStats &) = default;
};

struct WitnessResult {
    std::string function_id;
    Cube cube;
    RegularityReport report;
    SearchStats stats;

    friend bool operator==(const WitnessResult &, const WitnessResult &) = default;
};

/// Scans members in order and, per member, cubes_in(domain, p) in order;
/// returns the first (f, E) with f regressively regular over E^k. Returning
/// nothing says only that this finite family holds no witness.
std::optional<WitnessResult> find_regressively_regular_witness(const Family &fam, std::size_t p);

/// Looks up a member by id; throws std::out_of_range if absent.
const FiniteFunction &member(const Family &fam, std::string_view id);

} // namespace jumpfree
