#include "jumpfree/intsets.hpp"

#include <charconv>
#include <set>
#include <stdexcept>

namespace jumpfree {

namespace {

    Int zigzag(Nat n)
    {
        const Int half = static_cast<Int>(n / 2);
        return (n % 2 == 0) ? -half : half + 1;
    }

    Nat unzigzag(Int z)
    {
        return z > 0 ? static_cast<Nat>(z) * 2 - 1 : static_cast<Nat>(-z) * 2;
    }

    Int parse_int(std::string_view text)
    {
        Int value = 0;
        const char *end = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(text.data(), end, value);
        if (ec != std::errc() || ptr != end || text.empty())
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
        return value;
    }

} // namespace

Int ZBijection::apply(Nat n) const
{
    switch (kind) {
    case Kind::Zigzag: return zigzag(n);
    case Kind::ZigzagNeg: return -zigzag(n);
    case Kind::Shifted: return zigzag(n) + offset;
    }
    return 0;
}

Nat ZBijection::inverse(Int z) const
{
    switch (kind) {
    case Kind::Zigzag: return unzigzag(z);
    case Kind::ZigzagNeg: return unzigzag(-z);
    case Kind::Shifted: return unzigzag(z - offset);
    }
    return 0;
}

std::string ZBijection::to_string() const
{
    switch (kind) {
    case Kind::Zigzag: return "zigzag";
    case Kind::ZigzagNeg: return "zigzagNeg";
    case Kind::Shifted: return "shifted:" + std::to_string(offset);
    }
    return "?";
}

ZBijection ZBijection::parse(std::string_view text)
{
    if (text == "zigzag") return {Kind::Zigzag, 0};
    if (text == "zigzagNeg") return {Kind::ZigzagNeg, 0};
    constexpr std::string_view shifted = "shifted:";
    if (text.starts_with(shifted)) return {Kind::Shifted, parse_int(text.substr(shifted.size()))};
    throw std::invalid_argument("unknown bijection '" + std::string(text) + "'");
}

const ZBijection &GammaTriple::operator[](int interval) const
{
    switch (interval) {
    case 0: return g0;
    case 1: return g1;
    case 2: return g2;
    }
    throw std::out_of_range("interval index must be 0, 1 or 2");
}

GammaTriple GammaTriple::parse(std::string_view text)
{
    std::vector<ZBijection> parts;
    while (true) {
        const auto comma = text.find(',');
        parts.push_back(ZBijection::parse(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (parts.size() == 1) return {parts[0], parts[0], parts[0]};
    if (parts.size() != 3) throw std::invalid_argument("gamma triple needs 1 or 3 bijections");
    return {parts[0], parts[1], parts[2]};
}

IntMultiset::IntMultiset(std::initializer_list<Int> values)
{
    for (Int v : values) add(v);
}

IntMultiset IntMultiset::from_values(const std::vector<Int> &values)
{
    IntMultiset ms;
    for (Int v : values) ms.add(v);
    return ms;
}

void IntMultiset::add(Int value, std::uint64_t multiplicity)
{
    if (multiplicity == 0) return;
    counts_[value] += multiplicity;
    total_ += multiplicity;
}

std::uint64_t IntMultiset::multiplicity(Int value) const
{
    auto it = counts_.find(value);
    return it == counts_.end() ? 0 : it->second;
}

std::vector<Int> IntMultiset::values() const
{
    std::vector<Int> out;
    out.reserve(total_);
    for (const auto &[v, m] : counts_) out.insert(out.end(), m, v);
    return out;
}

IntMultiset IntMultiset::negated() const
{
    IntMultiset out;
    for (const auto &[v, m] : counts_) out.add(-v, m);
    return out;
}

bool IntMultiset::is_submultiset_of(const IntMultiset &other) const
{
    for (const auto &[v, m] : counts_)
        if (other.multiplicity(v) < m) return false;
    return true;
}

Int IntMultiset::sum() const
{
    Int s = 0;
    for (const auto &[v, m] : counts_) s += v * static_cast<Int>(m);
    return s;
}

std::string_view to_string(Semantics s)
{
    return s == Semantics::Multiset ? "multiset" : "set";
}

Semantics parse_semantics(std::string_view name)
{
    if (name == "multiset") return Semantics::Multiset;
    if (name == "set") return Semantics::Set;
    throw std::invalid_argument("unknown semantics '" + std::string(name) + "'");
}

int classify_interval(const FiniteFunction &f, const Cube &e, const KTuple &x)
{
    if (!e.contains(x)) throw std::invalid_argument("classify_interval: " + x.to_string() + " is outside E^k");
    if (!f.defined_at(x)) throw std::invalid_argument("classify_interval: function undefined at " + x.to_string());
    const Nat v = f.at(x);
    if (v < e.min()) return 0;
    if (v < x.min()) return 1;
    return 2;
}

FHSets build_fh(const FiniteFunction &f, const Cube &e, const GammaTriple &gammas, Semantics semantics)
{
    if (f.k() < 2) throw std::invalid_argument("build_fh: k must be >= 2");
    if (e.p() < 2) throw std::invalid_argument("build_fh: |E| must be >= 2");
    if (e.k() != f.k()) throw std::invalid_argument("build_fh: cube arity differs from function arity");

    FHSets out;
    if (semantics == Semantics::Multiset) {
        for (const auto &x : e.tuples()) {
            if (!f.defined_at(x)) throw std::invalid_argument("build_fh: cube point " + x.to_string() + " outside domain");
            const int i = classify_interval(f, e, x);
            const Int z = gammas[i].apply(f.at(x));
            out.f_set.add(z);
            if (i != 1) out.h_set.add(z);
        }
        return out;
    }

    // Set semantics: image of f on E^k intersected with each interval, then
    // pushed through the interval's bijection and united.
    std::set<Nat> per_interval[3];
    for (const auto &x : e.tuples()) {
        if (!f.defined_at(x)) throw std::invalid_argument("build_fh: cube point " + x.to_string() + " outside domain");
        per_interval[classify_interval(f, e, x)].insert(f.at(x));
    }
    std::set<Int> f_union, h_union;
    for (int i = 0; i < 3; ++i)
        for (Nat v : per_interval[i]) {
            const Int z = gammas[i].apply(v);
            f_union.insert(z);
            if (i != 1) h_union.insert(z);
        }
    for (Int z : f_union) out.f_set.add(z);
    for (Int z : h_union) out.h_set.add(z);
    return out;
}

bool fh_equal(const IntMultiset &f_set, const IntMultiset &h_set)
{
    return f_set == h_set;
}

} // namespace jumpfree
