#include "semideal/nat_ideal.hpp"

#include "semideal/error.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace semideal {

namespace {

constexpr std::uint64_t inf = std::numeric_limits<std::uint64_t>::max();

// Shortest paths on residues mod m = min(gens); gens are reduced, gcd 1.
std::vector<std::uint64_t> apery_from_generators(const std::vector<std::uint64_t>& gens) {
    std::uint64_t m = gens.front();
    if (m > NatIdeal::max_multiplicity)
        raise(Errc::ResourceLimit, "multiplicity " + std::to_string(m) + " exceeds the cap");
    std::vector<std::uint64_t> dist(m, inf);
    dist[0] = 0;
    using Item = std::pair<std::uint64_t, std::uint64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    queue.emplace(0, 0);
    while (!queue.empty()) {
        auto [d, r] = queue.top();
        queue.pop();
        if (d != dist[r]) continue;
        for (std::size_t k = 1; k < gens.size(); ++k) {
            std::uint64_t nd = d + gens[k];
            std::uint64_t nr = (r + gens[k]) % m;
            if (nd < dist[nr]) {
                dist[nr] = nd;
                queue.emplace(nd, nr);
            }
        }
    }
    for (auto v : dist)
        if (v == inf) raise(Errc::InternalError, "generators do not have gcd 1");
    return dist;
}

} // namespace

NatIdeal NatIdeal::principal(const Int& g) {
    if (g < 0) raise(Errc::InvalidArgument, "negative generator");
    NatIdeal r;
    if (g == 0) return r;
    r.period_ = g;
    r.apery_ = {0};
    return r;
}

NatIdeal NatIdeal::generated_by(std::span<const Int> gens) {
    Int d = 0;
    for (const auto& g : gens) {
        if (g < 0) raise(Errc::InvalidArgument, "negative generator");
        d = gcd(d, g);
    }
    if (d == 0) return zero();
    std::vector<std::uint64_t> reduced;
    for (const auto& g : gens) {
        if (g == 0) continue;
        Int q = g / d;
        if (!fits_u64(q) || to_u64(q) > max_reduced_value)
            raise(Errc::ResourceLimit, "reduced generator too large for exact enumeration");
        reduced.push_back(to_u64(q));
    }
    std::sort(reduced.begin(), reduced.end());
    reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
    NatIdeal r;
    r.period_ = d;
    r.apery_ = apery_from_generators(reduced);
    return r;
}

NatIdeal NatIdeal::from_predicate(const Int& period, std::uint64_t bound,
                                  const std::function<bool(std::uint64_t)>& member) {
    if (period <= 0) raise(Errc::InvalidArgument, "period must be positive");
    auto in = [&](std::uint64_t n) { return n == 0 || n >= bound || member(n); };
    std::uint64_t m = 1;
    while (!in(m)) ++m;
    if (m > max_multiplicity) raise(Errc::ResourceLimit, "multiplicity exceeds the cap");
    NatIdeal r;
    r.period_ = period;
    r.apery_.assign(m, inf);
    std::uint64_t missing = m;
    for (std::uint64_t n = 0; missing > 0; ++n) {
        if (r.apery_[n % m] == inf && in(n)) {
            r.apery_[n % m] = n;
            --missing;
        }
    }
    return r;
}

std::uint64_t NatIdeal::conductor_index() const {
    if (is_zero()) return 0;
    std::uint64_t mx = *std::max_element(apery_.begin(), apery_.end());
    std::uint64_t m = multiplicity();
    return mx + 1 > m ? std::max<std::uint64_t>(mx + 1 - m, 1) : 1;
}

Int NatIdeal::conductor() const { return period_ * from_u64(conductor_index()); }

bool NatIdeal::contains_reduced(std::uint64_t n) const {
    if (n == 0) return true;
    if (is_zero()) return false;
    return n >= apery_[n % apery_.size()];
}

bool NatIdeal::contains(const Int& x) const {
    if (x == 0) return true;
    if (is_zero() || x < 0) return false;
    if (mod(x, period_) != 0) return false;
    Int q = x / period_;
    if (!fits_u64(q)) return true;   // far beyond any conductor we can represent
    return contains_reduced(to_u64(q));
}

bool NatIdeal::contains(const NatIdeal& other) const {
    for (const auto& g : other.minimal_generators())
        if (!contains(g)) return false;
    return true;
}

std::vector<Int> NatIdeal::exceptionals() const {
    std::vector<Int> out;
    std::uint64_t c = conductor_index();
    for (std::uint64_t n = 1; n < c; ++n)
        if (contains_reduced(n)) out.push_back(period_ * from_u64(n));
    return out;
}

std::vector<std::uint64_t> NatIdeal::reduced_minimal_generators() const {
    if (is_zero()) return {};
    std::uint64_t m = multiplicity();
    std::vector<std::uint64_t> sorted;
    for (std::uint64_t r = 1; r < m; ++r) sorted.push_back(apery_[r]);
    std::sort(sorted.begin(), sorted.end());
    // A nonzero Apery element is redundant iff it is a minimal generator plus
    // a nonzero member.
    std::vector<std::uint64_t> gens{m};
    for (auto w : sorted) {
        bool minimal = true;
        for (std::size_t k = 1; k < gens.size() && minimal; ++k)
            if (gens[k] < w && contains_reduced(w - gens[k])) minimal = false;
        if (minimal) gens.push_back(w);
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

std::vector<Int> NatIdeal::minimal_generators() const {
    std::vector<Int> out;
    for (auto g : reduced_minimal_generators()) out.push_back(period_ * from_u64(g));
    return out;
}

Int NatIdeal::min_nonzero() const {
    if (is_zero()) raise(Errc::EmptyIdeal, "zero ideal has no nonzero member");
    return period_ * from_u64(multiplicity());
}

NatIdeal NatIdeal::scaled(const Int& k) const {
    if (k < 0) raise(Errc::InvalidArgument, "negative scale");
    if (k == 0 || is_zero()) return zero();
    NatIdeal r = *this;
    r.period_ = period_ * k;
    return r;
}

NatIdeal NatIdeal::divided(const Int& k) const {
    if (is_zero()) return *this;
    if (k <= 0 || mod(period_, k) != 0) raise(Errc::InternalError, "divisor does not divide the period");
    NatIdeal r = *this;
    r.period_ = period_ / k;
    return r;
}

std::string NatIdeal::to_string() const {
    if (is_zero()) return "(0)";
    std::string s = "(";
    auto gens = minimal_generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ",";
        s += gens[i].get_str();
    }
    return s + ")";
}

NatIdeal nat_sum(const NatIdeal& a, const NatIdeal& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto gens = a.minimal_generators();
    for (auto& g : b.minimal_generators()) gens.push_back(std::move(g));
    return NatIdeal::generated_by(gens);
}

NatIdeal nat_product(const NatIdeal& a, const NatIdeal& b) {
    if (a.is_zero() || b.is_zero()) return NatIdeal::zero();
    auto ga = a.reduced_minimal_generators(), gb = b.reduced_minimal_generators();
    std::vector<Int> gens;
    for (auto x : ga)
        for (auto y : gb) gens.push_back(from_u64(x) * from_u64(y));
    return NatIdeal::generated_by(gens).scaled(a.period() * b.period());
}

namespace {

std::uint64_t ceil_index(const Int& value, const Int& unit) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_mpz_t(), unit.get_mpz_t());
    if (!fits_u64(q) || to_u64(q) > NatIdeal::max_multiplicity * 16)
        raise(Errc::ResourceLimit, "enumeration bound too large");
    return to_u64(q);
}

} // namespace

NatIdeal nat_intersect(const NatIdeal& a, const NatIdeal& b) {
    if (a.is_zero() || b.is_zero()) return NatIdeal::zero();
    Int l = lcm(a.period(), b.period());
    Int top = std::max(a.conductor(), b.conductor());
    std::uint64_t bound = ceil_index(top, l);
    return NatIdeal::from_predicate(l, bound, [&](std::uint64_t n) {
        Int x = l * from_u64(n);
        return a.contains(x) && b.contains(x);
    });
}

NatIdeal nat_quotient(const NatIdeal& a, const NatIdeal& b) {
    if (b.is_zero()) raise(Errc::ZeroDivisorIdeal, "residual by the zero ideal");
    if (a.is_zero()) return NatIdeal::zero();
    // s*b in a for all generators b forces period(a) | s*period(b)
    Int q = a.period() / gcd(a.period(), b.period());
    auto gens = b.minimal_generators();
    // once s*min(b) >= conductor(a), every s*g is a member
    std::uint64_t bound = ceil_index(a.conductor(), Int(q * gens.front()));
    return NatIdeal::from_predicate(q, bound, [&](std::uint64_t n) {
        Int s = q * from_u64(n);
        for (const auto& g : gens)
            if (!a.contains(Int(s * g))) return false;
        return true;
    });
}

} // namespace semideal
