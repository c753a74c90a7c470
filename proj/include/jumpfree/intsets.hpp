#pragma once

// Interval partition of N relative to a cube point, bijections N -> Z, and
// the F/H integer multisets built from a function restricted to a cube.

#include "jumpfree/core.hpp"
#include "jumpfree/predicates.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jumpfree {

/// A parametric bijection N -> Z.
///   zigzag:     0, 1, -1, 2, -2, ...  (even n -> -n/2, odd n -> (n+1)/2)
///   zigzagNeg:  the negation of zigzag
///   shifted:o   zigzag followed by +o
struct ZBijection {
    enum class Kind { Zigzag, ZigzagNeg, Shifted };

    Kind kind = Kind::Zigzag;
    Int offset = 0;

    Int apply(Nat n) const;
    Nat inverse(Int z) const;

    /// "zigzag", "zigzagNeg" or "shifted:<offset>".
    std::string to_string() const;
    static ZBijection parse(std::string_view text);

    friend bool operator==(const ZBijection &, const ZBijection &) = default;
};

struct GammaTriple {
    ZBijection g0;
    ZBijection g1;
    ZBijection g2;

    const ZBijection &operator[](int interval) const;
    /// Comma-separated, e.g. "zigzag,zigzag,shifted:10".
    static GammaTriple parse(std::string_view text);

    friend bool operator==(const GammaTriple &, const GammaTriple &) = default;
};

/// Integer multiset with explicit multiplicities (never zero).
class IntMultiset {
public:
    IntMultiset() = default;
    IntMultiset(std::initializer_list<Int> values);
    static IntMultiset from_values(const std::vector<Int> &values);

    void add(Int value, std::uint64_t multiplicity = 1);

    const std::map<Int, std::uint64_t> &counts() const noexcept { return counts_; }
    std::uint64_t multiplicity(Int value) const;
    std::uint64_t total_size() const noexcept { return total_; }
    bool empty() const noexcept { return total_ == 0; }
    /// Ascending, each value repeated by its multiplicity.
    std::vector<Int> values() const;
    IntMultiset negated() const;
    /// True when every value's multiplicity is within `other`'s.
    bool is_submultiset_of(const IntMultiset &other) const;
    Int sum() const;

    friend bool operator==(const IntMultiset &, const IntMultiset &) = default;

private:
    std::map<Int, std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

enum class Semantics { Multiset, Set };

std::string_view to_string(Semantics s);
Semantics parse_semantics(std::string_view name);

/// 0 if f(x) < min(E); 1 if min(E) <= f(x) < min(x); 2 if f(x) >= min(x).
/// Throws std::invalid_argument when x is not in E^k or f is undefined at x.
int classify_interval(const FiniteFunction &f, const Cube &e, const KTuple &x);

struct FHSets {
    IntMultiset f_set;
    IntMultiset h_set;
};

/// F collects g_i(f(x)) over x in E^k with interval index i; H omits index 1.
/// Under Set semantics every contribution appears once.
FHSets build_fh(const FiniteFunction &f, const Cube &e, const GammaTriple &gammas,
                Semantics semantics = Semantics::Multiset);

bool fh_equal(const IntMultiset &f_set, const IntMultiset &h_set);

} // namespace jumpfree
