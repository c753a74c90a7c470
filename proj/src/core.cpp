#include "jumpfree/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace jumpfree {

KTuple::KTuple(std::vector<Nat> coords) : coords_(std::move(coords)) {}

KTuple::KTuple(std::initializer_list<Nat> coords) : coords_(coords) {}

Nat KTuple::min() const
{
    if (coords_.empty()) throw std::invalid_argument("min of an empty tuple");
    return *std::min_element(coords_.begin(), coords_.end());
}

Nat KTuple::max() const
{
    if (coords_.empty()) throw std::invalid_argument("max of an empty tuple");
    return *std::max_element(coords_.begin(), coords_.end());
}

std::string KTuple::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coords_[i]);
    }
    return out + ')';
}

std::string OrderType::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(ranks[i]);
    }
    return out + ')';
}

Cube::Cube(std::vector<Nat> elements, std::size_t k) : elements_(std::move(elements)), k_(k)
{
    if (k_ == 0) throw std::invalid_argument("cube arity must be >= 1");
    if (elements_.empty()) throw std::invalid_argument("cube needs at least one element");
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
        throw std::invalid_argument("cube elements must be distinct");
}

bool Cube::contains(const KTuple &x) const
{
    if (x.k() != k_) return false;
    return std::all_of(x.begin(), x.end(), [&](Nat c) {
        return std::binary_search(elements_.begin(), elements_.end(), c);
    });
}

std::vector<KTuple> Cube::tuples() const
{
    std::vector<KTuple> out;
    for_each_power_tuple(elements_, k_, [&](KTuple t) { out.push_back(std::move(t)); });
    return out;
}

std::pair<Nat, Nat> min_max(const KTuple &x)
{
    return {x.min(), x.max()};
}

OrderType order_signature(const KTuple &x)
{
    std::vector<Nat> distinct(x.begin(), x.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    OrderType ot;
    ot.ranks.reserve(x.k());
    for (Nat c : x) {
        auto it = std::lower_bound(distinct.begin(), distinct.end(), c);
        ot.ranks.push_back(static_cast<std::uint32_t>(it - distinct.begin()));
    }
    return ot;
}

bool order_equivalent(const KTuple &x, const KTuple &y)
{
    if (x.k() != y.k()) throw std::invalid_argument("order_equivalent: arity mismatch");
    std::set<std::pair<std::size_t, std::size_t>> less_x, less_y, eq_x, eq_y;
    for (std::size_t i = 0; i < x.k(); ++i) {
        for (std::size_t j = 0; j < x.k(); ++j) {
            if (x[i] < x[j]) less_x.emplace(i, j);
            if (y[i] < y[j]) less_y.emplace(i, j);
            if (x[i] == x[j]) eq_x.emplace(i, j);
            if (y[i] == y[j]) eq_y.emplace(i, j);
        }
    }
    return less_x == less_y && eq_x == eq_y;
}

std::vector<OrderType> enumerate_order_types(std::size_t k)
{
    if (k == 0) throw std::invalid_argument("enumerate_order_types: k must be >= 1");
    std::vector<Nat> values(k);
    for (std::size_t i = 0; i < k; ++i) values[i] = i;

    std::set<OrderType> seen;
    for_each_power_tuple(values, k, [&](const KTuple &t) { seen.insert(order_signature(t)); });
    return {seen.begin(), seen.end()};
}

std::size_t common_arity(const TupleSet &d)
{
    if (d.empty()) return 0;
    const std::size_t k = d.begin()->k();
    for (const auto &t : d)
        if (t.k() != k) throw std::invalid_argument("tuples of mixed arity");
    return k;
}

std::vector<Nat> field(const TupleSet &a)
{
    common_arity(a);
    std::set<Nat> coords;
    for (const auto &t : a) coords.insert(t.begin(), t.end());
    return {coords.begin(), coords.end()};
}

namespace {

    struct CubeSearch {
        const TupleSet &domain;
        std::vector<Nat> candidates;
        std::size_t k;
        std::size_t p;
        std::vector<Nat> chosen;
        std::vector<Cube> found;

        // Every tuple over chosen+{e} that uses e must already be in the domain.
        bool extends(Nat e) const
        {
            std::vector<Nat> values = chosen;
            values.push_back(e);
            bool ok = true;
            for_each_power_tuple(values, k, [&](const KTuple &t) {
                if (!ok) return;
                if (std::find(t.begin(), t.end(), e) == t.end()) return;
                if (!domain.contains(t)) ok = false;
            });
            return ok;
        }

        void search(std::size_t next)
        {
            if (chosen.size() == p) {
                found.emplace_back(chosen, k);
                return;
            }
            for (std::size_t i = next; i + (p - chosen.size()) <= candidates.size(); ++i) {
                const Nat e = candidates[i];
                if (!extends(e)) continue;
                chosen.push_back(e);
                search(i + 1);
                chosen.pop_back();
            }
        }
    };

} // namespace

std::vector<Cube> cubes_in(const TupleSet &d, std::size_t p)
{
    if (p == 0) throw std::invalid_argument("cubes_in: p must be >= 1");
    const std::size_t k = common_arity(d);
    if (k == 0) return {};

    // Only coordinates whose diagonal tuple (e,...,e) is present can belong to E.
    std::vector<Nat> candidates;
    for (Nat e : field(d))
        if (d.contains(KTuple(std::vector<Nat>(k, e)))) candidates.push_back(e);

    CubeSearch search{d, std::move(candidates), k, p, {}, {}};
    search.search(0);
    return std::move(search.found);
}

} // namespace jumpfree
