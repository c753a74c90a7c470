#pragma once

// Decision procedures over finite functions and families: reflexivity,
// the jump-free condition, bounded fullness and regressive regularity.

#include "jumpfree/core.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jumpfree {

/// A function from a finite domain D of N^k into N. Reflexivity is not
/// assumed; see is_reflexive.
class FiniteFunction {
public:
    FiniteFunction() = default;
    /// Throws std::invalid_argument when an entry has arity != k or k == 0.
    FiniteFunction(std::string id, std::size_t k, std::map<KTuple, Nat> entries);

    const std::string &id() const noexcept { return id_; }
    std::size_t k() const noexcept { return k_; }
    const std::map<KTuple, Nat> &entries() const noexcept { return entries_; }

    bool defined_at(const KTuple &x) const { return entries_.contains(x); }
    /// Throws std::out_of_range when x is outside the domain.
    Nat at(const KTuple &x) const;
    TupleSet domain() const;

    void set(const KTuple &x, Nat value);

    friend bool operator==(const FiniteFunction &, const FiniteFunction &) = default;

private:
    std::string id_;
    std::size_t k_ = 0;
    std::map<KTuple, Nat> entries_;
};

/// Finite stand-in for a family Q of T(k): members share k, ids are unique.
class Family {
public:
    Family() = default;
    Family(std::size_t k, std::vector<FiniteFunction> members);

    std::size_t k() const noexcept { return k_; }
    const std::vector<FiniteFunction> &members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }

    friend bool operator==(const Family &, const Family &) = default;

private:
    std::size_t k_ = 0;
    std::vector<FiniteFunction> members_;
};

/// A point where fA(x) < fB(x) although A_x ⊆ B_x and fA = fB on A_x.
struct JumpFreeWitness {
    std::string id_a;
    std::string id_b;
    KTuple x;
    Nat value_a = 0;
    Nat value_b = 0;

    friend bool operator==(const JumpFreeWitness &, const JumpFreeWitness &) = default;
};

struct ClassVerdict {
    enum class Kind { Case1, Case2, Violated };

    Kind kind = Kind::Case2;
    /// The shared value for Case1.
    Nat value = 0;
    /// For Violated: a tuple of the class with f(x) < min(x).
    std::optional<KTuple> below_min;
    /// For Violated: why Case1 fails. Either two tuples of the class with
    /// different values, or a single tuple whose value is >= min(E).
    std::vector<KTuple> case1_evidence;

    friend bool operator==(const ClassVerdict &, const ClassVerdict &) = default;
};

struct RegularityReport {
    std::map<OrderType, ClassVerdict> per_class;
    bool overall = true;

    friend bool operator==(const RegularityReport &, const RegularityReport &) = default;
};

bool is_reflexive(const FiniteFunction &f);

/// D_x: the tuples of d whose maximum is strictly below max(x). Throws
/// std::invalid_argument when x is not in d.
TupleSet predecessor_set(const TupleSet &d, const KTuple &x);

/// Checks the jump-free implication for the ordered pair (fa, fb) only and
/// returns the lexicographically first violating x.
std::optional<JumpFreeWitness> jump_free_violation(const FiniteFunction &fa, const FiniteFunction &fb);

/// First violation over all ordered member pairs (self-pairs included), in
/// row-major pair order. With threads > 1 rows are checked concurrently; the
/// result is the same witness a serial scan returns.
std::optional<JumpFreeWitness> is_jump_free_family(const Family &fam, unsigned threads = 1);

/// First domain of `universe` that is the domain of no member.
std::optional<TupleSet> is_full_over(const Family &fam, const std::vector<TupleSet> &universe);

/// Classifies every order type realized in E^k. Requires f.k() >= 2,
/// |E| >= 2, E.k() == f.k() and E^k inside the domain of f.
RegularityReport regressive_regularity(const FiniteFunction &f, const Cube &e);

} // namespace jumpfree
