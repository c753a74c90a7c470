#pragma once

// Tuples of N^k, order types, fields and cubes.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace jumpfree {

/// A nonnegative integer (an element of N).
using Nat = std::uint64_t;
/// An integer (an element of Z).
using Int = std::int64_t;

/// A point of N^k.
class KTuple {
public:
    KTuple() = default;
    explicit KTuple(std::vector<Nat> coords);
    KTuple(std::initializer_list<Nat> coords);

    std::size_t k() const noexcept { return coords_.size(); }
    Nat operator[](std::size_t i) const { return coords_[i]; }
    std::span<const Nat> coords() const noexcept { return coords_; }
    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }

    Nat min() const;
    Nat max() const;

    std::string to_string() const;

    friend auto operator<=>(const KTuple &, const KTuple &) = default;
    friend bool operator==(const KTuple &, const KTuple &) = default;

private:
    std::vector<Nat> coords_;
};

/// A finite subset of N^k, kept in lexicographic order.
using TupleSet = std::set<KTuple>;

/// Canonical representative of an order-equivalence class: the dense rank of
/// each coordinate among the distinct coordinate values.
struct OrderType {
    std::vector<std::uint32_t> ranks;

    std::size_t k() const noexcept { return ranks.size(); }
    /// Renders as "(r0,r1,...)".
    std::string to_string() const;

    friend auto operator<=>(const OrderType &, const OrderType &) = default;
    friend bool operator==(const OrderType &, const OrderType &) = default;
};

/// The cube E^k for a finite set E of nonnegative integers.
class Cube {
public:
    /// Sorts `elements`; throws std::invalid_argument on duplicates, an
    /// empty set, or k == 0.
    Cube(std::vector<Nat> elements, std::size_t k);

    const std::vector<Nat> &elements() const noexcept { return elements_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t p() const noexcept { return elements_.size(); }
    Nat min() const noexcept { return elements_.front(); }

    bool contains(const KTuple &x) const;
    /// All p^k tuples of E^k in lexicographic order.
    std::vector<KTuple> tuples() const;

    friend auto operator<=>(const Cube &, const Cube &) = default;
    friend bool operator==(const Cube &, const Cube &) = default;

private:
    std::vector<Nat> elements_;
    std::size_t k_;
};

std::pair<Nat, Nat> min_max(const KTuple &x);

OrderType order_signature(const KTuple &x);

/// Literal pairwise comparison of the strict-inequality and equality index
/// sets. Independent of order_signature. Throws on arity mismatch.
bool order_equivalent(const KTuple &x, const KTuple &y);

/// Every order type of N^k, lexicographically ordered. Requires k >= 1.
std::vector<OrderType> enumerate_order_types(std::size_t k);

/// Sorted set of all coordinates of tuples in `a`. Throws on mixed arities.
std::vector<Nat> field(const TupleSet &a);

/// Arity shared by all tuples in `d`, or 0 when `d` is empty. Throws on
/// mixed arities.
std::size_t common_arity(const TupleSet &d);

/// Every p-subset E of field(d), in lexicographic order, with E^k inside d.
std::vector<Cube> cubes_in(const TupleSet &d, std::size_t p);

/// Calls `visit` with every tuple of {values}^k in lexicographic order.
template <class Visit>
void for_each_power_tuple(std::span<const Nat> values, std::size_t k, Visit &&visit)
{
    if (values.empty()) return;
    std::vector<std::size_t> idx(k, 0);
    std::vector<Nat> coords(k, values[0]);
    while (true) {
        visit(KTuple(coords));
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < values.size()) {
                coords[pos] = values[idx[pos]];
                break;
            }
            idx[pos] = 0;
            coords[pos] = values[0];
            if (pos == 0) return;
        }
        if (k == 0) return;
    }
}

} // namespace jumpfree
