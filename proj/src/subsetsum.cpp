#include "jumpfree/subsetsum.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <tuple>
#include <unordered_map>

namespace jumpfree {

namespace {

    std::uint64_t weight(const IntMultiset &ms)
    {
        std::uint64_t w = 0;
        for (const auto &[v, m] : ms.counts()) w += static_cast<std::uint64_t>(std::llabs(v)) * m;
        return w;
    }

    void check_dp_weight(const IntMultiset &ms)
    {
        if (weight(ms) > dp_max_weight)
            throw CapacityError("dp solver: total weight " + std::to_string(weight(ms)) + " exceeds " +
                                std::to_string(dp_max_weight));
    }

    SubsetCertificate make_certificate(IntMultiset chosen)
    {
        const Int sum = chosen.sum();
        return {std::move(chosen), sum};
    }

    std::optional<SubsetCertificate> solve_exhaustive(const IntMultiset &ms)
    {
        if (ms.total_size() > exhaustive_max_size)
            throw CapacityError("exhaustive solver: multiset of size " + std::to_string(ms.total_size()) + " exceeds " +
                                std::to_string(exhaustive_max_size));

        std::vector<std::pair<Int, std::uint64_t>> distinct(ms.counts().begin(), ms.counts().end());
        std::vector<std::uint64_t> taken(distinct.size(), 0);
        // Mixed-radix counter over multiplicities 0..m per distinct value.
        while (true) {
            std::size_t pos = 0;
            while (pos < distinct.size() && taken[pos] == distinct[pos].second) taken[pos++] = 0;
            if (pos == distinct.size()) return std::nullopt;
            ++taken[pos];

            Int sum = 0;
            for (std::size_t i = 0; i < distinct.size(); ++i) sum += distinct[i].first * static_cast<Int>(taken[i]);
            if (sum == 0) {
                IntMultiset chosen;
                for (std::size_t i = 0; i < distinct.size(); ++i) chosen.add(distinct[i].first, taken[i]);
                return make_certificate(std::move(chosen));
            }
        }
    }

    // Reachable nonempty subset sums over the nonzero items, indexed by
    // sum - lowest. first_item[s] is the item whose sweep first reached s;
    // singleton[s] says that item alone attains s, otherwise s - item was
    // reached by a strictly earlier item.
    struct SumTable {
        std::vector<Int> items;
        Int lowest = 0;
        std::vector<std::int32_t> first_item;
        std::vector<std::uint8_t> singleton;

        bool reached(Int s) const
        {
            const Int idx = s - lowest;
            return idx >= 0 && idx < static_cast<Int>(first_item.size()) && first_item[idx] >= 0;
        }

        IntMultiset recover(Int s) const
        {
            IntMultiset chosen;
            while (true) {
                const auto idx = static_cast<std::size_t>(s - lowest);
                const Int v = items[first_item[idx]];
                chosen.add(v);
                if (singleton[idx]) return chosen;
                s -= v;
            }
        }
    };

    // Fills the table; stops early once zero is reached when stop_at_zero.
    SumTable build_sum_table(const IntMultiset &ms, bool stop_at_zero)
    {
        check_dp_weight(ms);

        SumTable table;
        Int highest = 0;
        for (const auto &[v, m] : ms.counts()) {
            if (v == 0) continue;
            table.items.insert(table.items.end(), m, v);
            (v < 0 ? table.lowest : highest) += v * static_cast<Int>(m);
        }
        const auto span = static_cast<std::size_t>(highest - table.lowest + 1);
        table.first_item.assign(span, -1);
        table.singleton.assign(span, 0);

        const Int zero_idx = -table.lowest;
        for (std::size_t i = 0; i < table.items.size(); ++i) {
            const Int v = table.items[i];
            const auto mark = [&](Int from) {
                const Int to = from + v;
                if (table.first_item[from] >= 0 && table.first_item[to] < 0) table.first_item[to] = static_cast<std::int32_t>(i);
            };
            // Sweep away from the direction of v so no entry set by this item
            // is reused as a source for the same item.
            if (v > 0) {
                for (Int from = static_cast<Int>(span) - 1 - v; from >= 0; --from) mark(from);
            } else {
                for (Int from = -v; from < static_cast<Int>(span); ++from) mark(from);
            }
            const Int own = v - table.lowest;
            if (table.first_item[own] < 0) {
                table.first_item[own] = static_cast<std::int32_t>(i);
                table.singleton[own] = 1;
            }
            if (stop_at_zero && table.first_item[zero_idx] >= 0) break;
        }
        return table;
    }

    std::optional<SubsetCertificate> solve_dp(const IntMultiset &ms)
    {
        check_dp_weight(ms);
        if (ms.multiplicity(0) > 0) return make_certificate(IntMultiset{0});

        const auto table = build_sum_table(ms, true);
        if (!table.reached(0)) return std::nullopt;
        return make_certificate(table.recover(0));
    }

    std::optional<SubsetCertificate> solve_mitm(const IntMultiset &ms)
    {
        if (ms.total_size() > mitm_max_size)
            throw CapacityError("mitm solver: multiset of size " + std::to_string(ms.total_size()) + " exceeds " +
                                std::to_string(mitm_max_size));

        const auto items = ms.values();
        const std::size_t left_n = items.size() / 2;
        const std::size_t right_n = items.size() - left_n;

        const auto subset_sum = [&](std::size_t offset, std::uint64_t mask) {
            Int s = 0;
            for (std::size_t b = 0; mask; ++b, mask >>= 1)
                if (mask & 1) s += items[offset + b];
            return s;
        };

        // Smallest nonempty right-half mask per sum.
        std::unordered_map<Int, std::uint64_t> right;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << right_n); ++mask)
            right.try_emplace(subset_sum(left_n, mask), mask);

        // Best match ordered by (|left sum|, left mask, right mask).
        std::optional<std::tuple<Int, std::uint64_t, std::uint64_t>> best;
        const auto consider = [&](Int a, std::uint64_t lm, std::uint64_t rm) {
            std::tuple<Int, std::uint64_t, std::uint64_t> cand{std::llabs(a), lm, rm};
            if (!best || cand < *best) best = cand;
        };
        for (std::uint64_t lm = 0; lm < (std::uint64_t{1} << left_n); ++lm) {
            const Int a = subset_sum(0, lm);
            if (lm != 0 && a == 0) consider(a, lm, 0);
            if (auto it = right.find(-a); it != right.end()) consider(a, lm, it->second);
        }
        if (!best) return std::nullopt;

        const auto [_, lm, rm] = *best;
        IntMultiset chosen;
        for (std::size_t b = 0; b < left_n; ++b)
            if (lm >> b & 1) chosen.add(items[b]);
        for (std::size_t b = 0; b < right_n; ++b)
            if (rm >> b & 1) chosen.add(items[left_n + b]);
        return make_certificate(std::move(chosen));
    }

} // namespace

std::string_view to_string(SolverMethod m)
{
    switch (m) {
    case SolverMethod::Exhaustive: return "exhaustive";
    case SolverMethod::Dp: return "dp";
    case SolverMethod::Mitm: return "mitm";
    }
    return "?";
}

SolverMethod parse_solver_method(std::string_view name)
{
    for (auto m : {SolverMethod::Exhaustive, SolverMethod::Dp, SolverMethod::Mitm})
        if (to_string(m) == name) return m;
    throw std::invalid_argument("unknown solver method '" + std::string(name) + "'");
}

std::optional<SubsetCertificate> solve_subset_sum(const IntMultiset &ms, SolverMethod method)
{
    switch (method) {
    case SolverMethod::Exhaustive: return solve_exhaustive(ms);
    case SolverMethod::Dp: return solve_dp(ms);
    case SolverMethod::Mitm: return solve_mitm(ms);
    }
    throw std::invalid_argument("unknown solver method");
}

std::vector<Int> dp_reachable_sums(const IntMultiset &ms)
{
    const auto table = build_sum_table(ms, false);
    std::vector<Int> sums;
    for (std::size_t idx = 0; idx < table.first_item.size(); ++idx)
        if (table.first_item[idx] >= 0) sums.push_back(static_cast<Int>(idx) + table.lowest);
    // Zeros are excluded from the table; each one is a nonempty subset on its
    // own and extends every other reachable sum by nothing.
    if (ms.multiplicity(0) > 0 && !table.reached(0)) sums.insert(std::lower_bound(sums.begin(), sums.end(), 0), 0);
    return sums;
}

bool is_valid_certificate(const SubsetCertificate &cert, const IntMultiset &ms)
{
    return !cert.chosen.empty() && cert.chosen.is_submultiset_of(ms) && cert.chosen.sum() == 0 && cert.sum == 0;
}

} // namespace jumpfree
