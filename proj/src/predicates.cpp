#include "jumpfree/predicates.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

namespace jumpfree {

FiniteFunction::FiniteFunction(std::string id, std::size_t k, std::map<KTuple, Nat> entries)
    : id_(std::move(id)), k_(k), entries_(std::move(entries))
{
    if (k_ == 0) throw std::invalid_argument("function arity must be >= 1");
    for (const auto &[x, v] : entries_)
        if (x.k() != k_)
            throw std::invalid_argument("function " + id_ + ": tuple " + x.to_string() + " has wrong arity");
}

Nat FiniteFunction::at(const KTuple &x) const
{
    auto it = entries_.find(x);
    if (it == entries_.end()) throw std::out_of_range("function " + id_ + " undefined at " + x.to_string());
    return it->second;
}

TupleSet FiniteFunction::domain() const
{
    TupleSet d;
    for (const auto &entry : entries_) d.insert(d.end(), entry.first);
    return d;
}

void FiniteFunction::set(const KTuple &x, Nat value)
{
    if (x.k() != k_) throw std::invalid_argument("function " + id_ + ": wrong arity for " + x.to_string());
    entries_[x] = value;
}

Family::Family(std::size_t k, std::vector<FiniteFunction> members) : k_(k), members_(std::move(members))
{
    std::set<std::string> ids;
    for (const auto &f : members_) {
        if (f.k() != k_) throw std::invalid_argument("family member " + f.id() + " has arity " + std::to_string(f.k()));
        if (!ids.insert(f.id()).second) throw std::invalid_argument("duplicate family member id " + f.id());
    }
}

bool is_reflexive(const FiniteFunction &f)
{
    const auto fld = field(f.domain());
    return std::all_of(f.entries().begin(), f.entries().end(), [&](const auto &entry) {
        return std::binary_search(fld.begin(), fld.end(), entry.second);
    });
}

TupleSet predecessor_set(const TupleSet &d, const KTuple &x)
{
    if (!d.contains(x)) throw std::invalid_argument("predecessor_set: " + x.to_string() + " is not in the domain");
    const Nat bound = x.max();
    TupleSet out;
    for (const auto &z : d)
        if (z.max() < bound) out.insert(out.end(), z);
    return out;
}

std::optional<JumpFreeWitness> jump_free_violation(const FiniteFunction &fa, const FiniteFunction &fb)
{
    if (fa.k() != fb.k()) throw std::invalid_argument("jump_free_violation: arity mismatch");

    const auto a = fa.domain();
    const auto b = fb.domain();
    for (const auto &[x, value_a] : fa.entries()) {
        if (!fb.defined_at(x)) continue;
        const Nat value_b = fb.at(x);
        if (value_a >= value_b) continue;

        const auto a_x = predecessor_set(a, x);
        const auto b_x = predecessor_set(b, x);
        if (!std::includes(b_x.begin(), b_x.end(), a_x.begin(), a_x.end())) continue;
        const bool agree = std::all_of(a_x.begin(), a_x.end(), [&](const KTuple &y) { return fa.at(y) == fb.at(y); });
        if (!agree) continue;

        return JumpFreeWitness{fa.id(), fb.id(), x, value_a, value_b};
    }
    return std::nullopt;
}

std::optional<JumpFreeWitness> is_jump_free_family(const Family &fam, unsigned threads)
{
    const auto &members = fam.members();
    const auto check_row = [&](std::size_t row) -> std::optional<JumpFreeWitness> {
        for (const auto &fb : members)
            if (auto w = jump_free_violation(members[row], fb)) return w;
        return std::nullopt;
    };

    if (threads <= 1 || members.size() < 2) {
        for (std::size_t row = 0; row < members.size(); ++row)
            if (auto w = check_row(row)) return w;
        return std::nullopt;
    }

    std::vector<std::optional<JumpFreeWitness>> per_row(members.size());
    std::atomic<std::size_t> next_row{0};
    std::atomic<std::size_t> first_hit{members.size()};
    {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < threads; ++t)
            workers.emplace_back([&] {
                for (std::size_t row; (row = next_row.fetch_add(1)) < members.size();) {
                    if (row > first_hit.load()) break;
                    per_row[row] = check_row(row);
                    if (per_row[row]) {
                        std::size_t seen = first_hit.load();
                        while (row < seen && !first_hit.compare_exchange_weak(seen, row)) {}
                    }
                }
            });
    }
    for (auto &w : per_row)
        if (w) return w;
    return std::nullopt;
}

std::optional<TupleSet> is_full_over(const Family &fam, const std::vector<TupleSet> &universe)
{
    std::set<TupleSet> covered;
    for (const auto &f : fam.members()) covered.insert(f.domain());
    for (const auto &d : universe) {
        const std::size_t k = common_arity(d);
        if (k != 0 && fam.k() != 0 && k != fam.k())
            throw std::invalid_argument("is_full_over: universe domain arity differs from family arity");
        if (!covered.contains(d)) return d;
    }
    return std::nullopt;
}

RegularityReport regressive_regularity(const FiniteFunction &f, const Cube &e)
{
    if (f.k() < 2) throw std::invalid_argument("regressive_regularity: k must be >= 2");
    if (e.p() < 2) throw std::invalid_argument("regressive_regularity: |E| must be >= 2");
    if (e.k() != f.k()) throw std::invalid_argument("regressive_regularity: cube arity differs from function arity");

    std::map<OrderType, std::vector<KTuple>> classes;
    for (auto &x : e.tuples()) {
        if (!f.defined_at(x)) throw std::invalid_argument("regressive_regularity: " + x.to_string() + " outside domain");
        classes[order_signature(x)].push_back(std::move(x));
    }

    const Nat min_e = e.min();
    RegularityReport report;
    for (const auto &[ot, members] : classes) {
        ClassVerdict verdict;
        const Nat first_value = f.at(members.front());

        std::optional<KTuple> differs;
        for (const auto &x : members)
            if (f.at(x) != first_value) {
                differs = x;
                break;
            }
        std::optional<KTuple> below_min;
        for (const auto &x : members)
            if (f.at(x) < x.min()) {
                below_min = x;
                break;
            }

        if (!differs && first_value < min_e) {
            verdict.kind = ClassVerdict::Kind::Case1;
            verdict.value = first_value;
        } else if (!below_min) {
            verdict.kind = ClassVerdict::Kind::Case2;
        } else {
            verdict.kind = ClassVerdict::Kind::Violated;
            verdict.below_min = below_min;
            if (differs)
                verdict.case1_evidence = {members.front(), *differs};
            else
                verdict.case1_evidence = {members.front()};
            report.overall = false;
        }
        report.per_class.emplace(ot, std::move(verdict));
    }
    return report;
}

} // namespace jumpfree
