#include "semideal/ideal.hpp"

#include "semideal/error.hpp"

#include <algorithm>

namespace semideal {

namespace {

bool is_gcd_family(const Instance& inst) {
    return inst.id() == InstanceId::gcd || inst.id() == InstanceId::gcd_supported;
}

const Int& dvs_exp(const DvsValue& v) { return *v.exponent; }

} // namespace

Ideal Ideal::zero(const Instance& inst) {
    switch (inst.id()) {
    case InstanceId::n0: return n0(NatIdeal::zero());
    case InstanceId::dvs: return dvs(DvsValue::zero());
    case InstanceId::lagrassa: return lagrassa(LaGrassaIdeal::zero);
    case InstanceId::quad5: return quad(QuadIdeal::zero());
    default: return gcd(inst, Int(0));
    }
}

Ideal Ideal::unit(const Instance& inst) {
    switch (inst.id()) {
    case InstanceId::n0: return n0(NatIdeal::unit());
    case InstanceId::dvs: return dvs(DvsValue::power(0));
    case InstanceId::lagrassa: return lagrassa(LaGrassaIdeal::all);
    case InstanceId::quad5: return quad(QuadIdeal::unit());
    default: return gcd(inst, Int(1));
    }
}

Ideal Ideal::n0(NatIdeal i) { return Ideal(Instance::n0(), std::move(i)); }

Ideal Ideal::gcd(const Instance& inst, const Int& g) {
    if (!is_gcd_family(inst)) raise(Errc::InvalidArgument, "generator payload needs gcd or gcd-supported");
    if (g < 0) raise(Errc::InvalidArgument, "negative generator");
    if (!inst.in_support(g)) raise(Errc::OutOfSupport, g.get_str() + " has a prime factor outside the support");
    return Ideal(inst, g);
}

Ideal Ideal::dvs(DvsValue v) {
    if (!v.is_zero() && *v.exponent < 0) raise(Errc::NotIntegral, "integral dvs ideals have exponent >= 0");
    return Ideal(Instance::dvs(), std::move(v));
}

Ideal Ideal::lagrassa(LaGrassaIdeal v) { return Ideal(Instance::lagrassa(), v); }

Ideal Ideal::quad(QuadIdeal q) { return Ideal(Instance::quad5(), std::move(q)); }

Ideal Ideal::principal(const Element& x) {
    const auto& inst = x.instance();
    switch (inst.id()) {
    case InstanceId::n0: return n0(NatIdeal::principal(x.natural()));
    case InstanceId::dvs: return dvs(x.dvs());
    case InstanceId::lagrassa:
        switch (x.lagrassa()) {
        case LaGrassa::zero: return lagrassa(LaGrassaIdeal::zero);
        case LaGrassa::u: return lagrassa(LaGrassaIdeal::u);
        case LaGrassa::one: return lagrassa(LaGrassaIdeal::all);
        }
        break;
    case InstanceId::quad5: return quad(x.quad());
    default: return gcd(inst, x.natural());
    }
    raise(Errc::InternalError, "unreachable");
}

Ideal Ideal::from_generators(const Instance& inst, std::span<const Element> gens) {
    if (gens.empty()) raise(Errc::InvalidArgument, "an ideal needs at least one generator");
    for (const auto& g : gens) require_same(inst, g.instance());
    if (inst.id() == InstanceId::n0) {
        std::vector<Int> values;
        for (const auto& g : gens) values.push_back(g.natural());
        return n0(NatIdeal::generated_by(values));
    }
    if (inst.id() == InstanceId::lagrassa) {
        auto top = LaGrassaIdeal::zero;
        for (const auto& g : gens) top = std::max(top, principal(g).lagrassa());
        return lagrassa(top);
    }
    // In gcd, gcd-supported, dvs and quad5 the ideal generated by x and y is (x + y).
    Element acc = gens.front();
    for (std::size_t k = 1; k < gens.size(); ++k) acc = element_add(acc, gens[k]);
    return principal(acc);
}

bool Ideal::is_zero() const { return *this == zero(inst_); }
bool Ideal::is_unit() const { return *this == unit(inst_); }

std::vector<Element> Ideal::generators() const {
    switch (inst_.id()) {
    case InstanceId::n0: {
        std::vector<Element> out;
        for (const auto& g : nat().minimal_generators()) out.push_back(Element::natural(inst_, g));
        if (out.empty()) out.push_back(Element::zero(inst_));
        return out;
    }
    case InstanceId::dvs:
        return {dvs().is_zero() ? Element::dvs_zero() : Element::dvs_power(dvs_exp(dvs()))};
    case InstanceId::lagrassa:
        switch (lagrassa()) {
        case LaGrassaIdeal::zero: return {Element::lagrassa(LaGrassa::zero)};
        case LaGrassaIdeal::u: return {Element::lagrassa(LaGrassa::u)};
        case LaGrassaIdeal::all: return {Element::lagrassa(LaGrassa::one)};
        }
        break;
    case InstanceId::quad5: return {Element::quad(quad())};
    default: return {Element::natural(inst_, generator())};
    }
    raise(Errc::InternalError, "unreachable");
}

std::string Ideal::to_string() const {
    switch (inst_.id()) {
    case InstanceId::n0: return nat().to_string();
    case InstanceId::dvs: return dvs().is_zero() ? "(0)" : "(t^" + dvs_exp(dvs()).get_str() + ")";
    case InstanceId::lagrassa:
        switch (lagrassa()) {
        case LaGrassaIdeal::zero: return "(0)";
        case LaGrassaIdeal::u: return "(u)";
        case LaGrassaIdeal::all: return "L";
        }
        break;
    case InstanceId::quad5: return quad().to_string();
    default: return "(" + generator().get_str() + ")";
    }
    return "?";
}

Ideal ideal_from_generators(const Instance& inst, std::span<const Element> gens) {
    return Ideal::from_generators(inst, gens);
}

bool ideal_membership(const Ideal& i, const Element& x) {
    require_same(i.instance(), x.instance());
    switch (i.instance().id()) {
    case InstanceId::n0: return i.nat().contains(x.natural());
    case InstanceId::dvs:
        if (x.dvs().is_zero()) return true;
        return !i.dvs().is_zero() && dvs_exp(x.dvs()) >= dvs_exp(i.dvs());
    case InstanceId::lagrassa:
        switch (x.lagrassa()) {
        case LaGrassa::zero: return true;
        case LaGrassa::u: return i.lagrassa() != LaGrassaIdeal::zero;
        case LaGrassa::one: return i.lagrassa() == LaGrassaIdeal::all;
        }
        return false;
    case InstanceId::quad5: return i.quad().contains(x.quad());
    default:
        if (x.natural() == 0) return true;
        if (i.generator() == 0) return false;
        return mod(x.natural(), i.generator()) == 0;
    }
}

bool ideal_contains(const Ideal& i, const Ideal& j) {
    require_same(i.instance(), j.instance());
    for (const auto& g : j.generators())
        if (!ideal_membership(i, g)) return false;
    return true;
}

bool ideal_equals(const Ideal& i, const Ideal& j) {
    require_same(i.instance(), j.instance());
    return i == j;
}

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
    require_same(i.instance(), j.instance());
    switch (i.instance().id()) {
    case InstanceId::n0: return Ideal::n0(nat_sum(i.nat(), j.nat()));
    case InstanceId::lagrassa: return Ideal::lagrassa(std::max(i.lagrassa(), j.lagrassa()));
    case InstanceId::quad5: return Ideal::quad(qi_add(i.quad(), j.quad()));
    default: {
        auto a = i.generators(), b = j.generators();
        std::vector<Element> gens{a.front(), b.front()};
        return Ideal::from_generators(i.instance(), gens);
    }
    }
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
    require_same(i.instance(), j.instance());
    switch (i.instance().id()) {
    case InstanceId::n0: return Ideal::n0(nat_product(i.nat(), j.nat()));
    case InstanceId::lagrassa: return Ideal::lagrassa(std::min(i.lagrassa(), j.lagrassa()));
    default:
        return Ideal::principal(element_mul(i.generators().front(), j.generators().front()));
    }
}

Ideal ideal_power(const Ideal& i, unsigned long k) {
    Ideal result = Ideal::unit(i.instance());
    Ideal base = i;
    while (k > 0) {
        if (k & 1) result = ideal_product(result, base);
        k >>= 1;
        if (k) base = ideal_product(base, base);
    }
    return result;
}

Ideal ideal_intersect(const Ideal& i, const Ideal& j) {
    require_same(i.instance(), j.instance());
    const auto& inst = i.instance();
    switch (inst.id()) {
    case InstanceId::n0: return Ideal::n0(nat_intersect(i.nat(), j.nat()));
    case InstanceId::dvs:
        if (i.is_zero() || j.is_zero()) return Ideal::zero(inst);
        return Ideal::dvs(DvsValue::power(std::max(dvs_exp(i.dvs()), dvs_exp(j.dvs()))));
    case InstanceId::lagrassa: return Ideal::lagrassa(std::min(i.lagrassa(), j.lagrassa()));
    case InstanceId::quad5: return Ideal::quad(qi_intersect(i.quad(), j.quad()));
    default: return Ideal::gcd(inst, lcm(i.generator(), j.generator()));
    }
}

Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
    require_same(a.instance(), b.instance());
    const auto& inst = a.instance();
    if (b.is_zero()) raise(Errc::ZeroDivisorIdeal, "residual by the zero ideal");
    switch (inst.id()) {
    case InstanceId::n0: return Ideal::n0(nat_quotient(a.nat(), b.nat()));
    case InstanceId::dvs: {
        if (a.is_zero()) return a;
        Int e = dvs_exp(a.dvs()) - dvs_exp(b.dvs());
        return Ideal::dvs(DvsValue::power(e < 0 ? Int(0) : e));
    }
    case InstanceId::lagrassa: {
        // s*(u) = s*L = {0, s*u}, so only (0) : (u) and (0) : L shrink.
        if (a.lagrassa() == LaGrassaIdeal::all) return a;
        if (a.lagrassa() == LaGrassaIdeal::zero) return a;
        return b.lagrassa() == LaGrassaIdeal::u ? Ideal::unit(inst) : a;
    }
    case InstanceId::quad5: return Ideal::quad(qi_quotient(a.quad(), b.quad()));
    default: {
        if (a.is_zero()) return a;
        return Ideal::gcd(inst, a.generator() / semideal::gcd(a.generator(), b.generator()));
    }
    }
}

bool is_subtractive(const Ideal& i) {
    switch (i.instance().id()) {
    case InstanceId::n0: return i.is_zero() || i.nat().multiplicity() == 1;
    case InstanceId::lagrassa: return !subtractive_violation(i, 0).has_value();
    default: return true;
    }
}

bool is_maximal(const Ideal& i) {
    const auto& inst = i.instance();
    switch (inst.id()) {
    case InstanceId::n0: {
        std::vector<Int> gens{Int(2), Int(3)};
        return i.nat() == NatIdeal::generated_by(gens);
    }
    case InstanceId::gcd:
    case InstanceId::gcd_supported: return is_prime(i.generator());
    case InstanceId::dvs: return !i.is_zero() && dvs_exp(i.dvs()) == 1;
    case InstanceId::lagrassa: return i.lagrassa() == LaGrassaIdeal::u;
    case InstanceId::quad5: {
        if (i.is_zero() || i.quad().is_unit()) return false;
        return qi_factor(i.quad()).total() == 1;
    }
    }
    return false;
}

bool is_prime(const Ideal& i) {
    if (i.is_unit()) return false;
    // none of the six instances has zero divisors
    if (i.is_zero()) return true;
    if (is_maximal(i)) return true;
    if (i.instance().id() == InstanceId::n0) {
        const auto& n = i.nat();
        return n.multiplicity() == 1 && is_prime(n.period());
    }
    return false;
}

std::optional<std::pair<Element, Element>> prime_violation(const Ideal& i, std::uint64_t bound) {
    auto elems = enumerate_elements(i.instance(), bound);
    std::vector<Element> outside;
    for (const auto& x : elems)
        if (!ideal_membership(i, x)) outside.push_back(x);
    for (std::size_t p = 0; p < outside.size(); ++p)
        for (std::size_t q = p; q < outside.size(); ++q)
            if (ideal_membership(i, element_mul(outside[p], outside[q]))) return std::pair{outside[p], outside[q]};
    return std::nullopt;
}

std::optional<std::pair<Element, Element>> subtractive_violation(const Ideal& i, std::uint64_t bound) {
    auto elems = enumerate_elements(i.instance(), bound);
    for (const auto& a : elems) {
        if (!ideal_membership(i, a)) continue;
        for (const auto& b : elems)
            if (!ideal_membership(i, b) && ideal_membership(i, element_add(a, b))) return std::pair{a, b};
    }
    return std::nullopt;
}

Element min_nonzero(const Ideal& i) {
    if (i.instance().id() != InstanceId::n0)
        raise(Errc::Unsupported, "min_nonzero uses the order of N0");
    return Element::natural(i.instance(), i.nat().min_nonzero());
}

std::optional<Ideal> divides(const Ideal& a, const Ideal& b) {
    require_same(a.instance(), b.instance());
    if (a.is_zero()) raise(Errc::ZeroDivisorIdeal, "the zero ideal divides nothing but itself");
    Ideal c = ideal_quotient(b, a);
    if (ideal_product(a, c) == b) return c;
    return std::nullopt;
}

bool is_invertible(const Ideal& i) {
    if (i.is_zero()) return false;
    if (i.instance().id() == InstanceId::lagrassa) return i.is_unit();
    return divides(i, Ideal::principal(i.generators().front())).has_value();
}

namespace {

std::vector<Element> between_candidates(const Ideal& m) {
    const auto& inst = m.instance();
    std::vector<Element> out;
    switch (inst.id()) {
    case InstanceId::n0: {
        Ideal m2 = ideal_product(m, m);
        std::uint64_t top = to_u64(m2.nat().conductor());
        for (std::uint64_t x = 1; x <= top; ++x) out.push_back(Element::natural(inst, from_u64(x)));
        break;
    }
    case InstanceId::gcd:
    case InstanceId::gcd_supported:
        for (unsigned k = 1; k <= 256; ++k) {
            Int x = m.generator() * k;
            if (inst.in_support(x)) out.push_back(Element::natural(inst, x));
        }
        break;
    case InstanceId::dvs:
        for (unsigned k = 0; k <= 4; ++k) out.push_back(Element::dvs_power(Int(k)));
        break;
    case InstanceId::lagrassa:
        for (auto x : {LaGrassa::zero, LaGrassa::u, LaGrassa::one}) out.push_back(Element::lagrassa(x));
        break;
    case InstanceId::quad5: {
        auto basis = m.quad().basis();
        for (int s = -4; s <= 4; ++s)
            for (int t = -4; t <= 4; ++t) {
                QuadNumber x{basis[0].x * s + basis[1].x * t, basis[0].y * s + basis[1].y * t};
                if (!x.is_zero()) out.push_back(Element::quad(QuadIdeal::principal(x)));
            }
        break;
    }
    }
    return out;
}

} // namespace

std::optional<Ideal> search_between(const Ideal& m) {
    if (!is_maximal(m)) raise(Errc::NotMaximal, m.to_string() + " is not a maximal ideal");
    Ideal m2 = ideal_product(m, m);
    for (const auto& x : between_candidates(m)) {
        if (!ideal_membership(m, x) || ideal_membership(m2, x)) continue;
        std::vector<Element> gens = m2.generators();
        gens.push_back(x);
        Ideal a = Ideal::from_generators(m.instance(), gens);
        if (a != m2 && a != m && ideal_contains(m, a) && ideal_contains(a, m2)) return a;
    }
    return std::nullopt;
}

} // namespace semideal
