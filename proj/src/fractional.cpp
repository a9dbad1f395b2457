#include "semideal/fractional.hpp"

#include "semideal/error.hpp"

#include <algorithm>

namespace semideal {

namespace {

Int num(const Rat& q) { return q.get_num(); }
Int den(const Rat& q) { return q.get_den(); }

// gcd and lcm of nonnegative rationals in their divisibility order
Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return b;
    if (b == 0) return a;
    Rat r(gcd(num(a), num(b)), lcm(den(a), den(b)));
    r.canonicalize();
    return r;
}

Rat rat_lcm(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0) return Rat(0);
    Rat r(lcm(num(a), num(b)), gcd(den(a), den(b)));
    r.canonicalize();
    return r;
}

void require_fractions(const Instance& inst) {
    if (!inst.has_fractions())
        raise(Errc::Unsupported, inst.name() + " is not a semidomain and has no semifield of fractions");
}

// Integral representatives over a common denominator: a = xa / l, b = xb / l.
struct CommonNat {
    Int l;
    NatIdeal xa, xb;
};

CommonNat common(const NatFraction& a, const NatFraction& b) {
    Int l = lcm(a.denominator, b.denominator);
    return {l, a.numerator.scaled(l / a.denominator), b.numerator.scaled(l / b.denominator)};
}

struct CommonQuad {
    Int l;
    QuadIdeal xa, xb;
};

QuadIdeal integral_quad(const QuadFraction& f, const Int& l) {
    Rat s = f.scale * l;
    return f.ideal.scaled_by(num(s));
}

CommonQuad common(const QuadFraction& a, const QuadFraction& b) {
    Int l = lcm(den(a.scale), den(b.scale));
    return {l, integral_quad(a, l), integral_quad(b, l)};
}

Rat ratio(const Int& p, const Int& q) {
    Rat r(p, q);
    r.canonicalize();
    return r;
}

Rat inverse_of(const Int& n) { return ratio(Int(1), n); }

} // namespace

FractionalIdeal FractionalIdeal::zero(const Instance& inst) {
    require_fractions(inst);
    switch (inst.id()) {
    case InstanceId::n0: return FractionalIdeal(inst, NatFraction{});
    case InstanceId::dvs: return FractionalIdeal(inst, DvsValue::zero());
    case InstanceId::quad5: return FractionalIdeal(inst, QuadFraction{});
    default: return FractionalIdeal(inst, Rat(0));
    }
}

FractionalIdeal FractionalIdeal::unit(const Instance& inst) {
    require_fractions(inst);
    switch (inst.id()) {
    case InstanceId::n0: return n0(Rat(1), NatIdeal::unit());
    case InstanceId::dvs: return dvs(DvsValue::power(0));
    case InstanceId::quad5: return quad(Rat(1), QuadIdeal::unit());
    default: return rational(inst, Rat(1));
    }
}

FractionalIdeal FractionalIdeal::from_ideal(const Ideal& i) {
    const auto& inst = i.instance();
    require_fractions(inst);
    switch (inst.id()) {
    case InstanceId::n0: return n0(Rat(1), i.nat());
    case InstanceId::dvs: return dvs(i.dvs());
    case InstanceId::quad5: return quad(Rat(1), i.quad());
    default: return rational(inst, Rat(i.generator()));
    }
}

FractionalIdeal FractionalIdeal::n0(const Rat& scale, const NatIdeal& numerator) {
    if (scale < 0) raise(Errc::InvalidArgument, "negative scale");
    if (scale == 0 || numerator.is_zero()) return FractionalIdeal(Instance::n0(), NatFraction{});
    Rat r = scale;
    r.canonicalize();
    NatFraction f{den(r), numerator.scaled(num(r))};
    Int k = gcd(f.denominator, f.numerator.period());
    f.denominator /= k;
    f.numerator = f.numerator.divided(k);
    return FractionalIdeal(Instance::n0(), std::move(f));
}

FractionalIdeal FractionalIdeal::rational(const Instance& inst, const Rat& q) {
    if (inst.id() != InstanceId::gcd && inst.id() != InstanceId::gcd_supported)
        raise(Errc::InvalidArgument, "rational payloads need gcd or gcd-supported");
    if (q < 0) raise(Errc::InvalidArgument, "negative generator");
    if (!inst.in_support(num(q)) || !inst.in_support(den(q)))
        raise(Errc::OutOfSupport, semideal::to_string(q) + " has a prime factor outside the support");
    Rat r = q;
    r.canonicalize();
    return FractionalIdeal(inst, r);
}

FractionalIdeal FractionalIdeal::dvs(DvsValue v) { return FractionalIdeal(Instance::dvs(), std::move(v)); }

FractionalIdeal FractionalIdeal::quad(const Rat& scale, const QuadIdeal& ideal) {
    if (scale < 0) raise(Errc::InvalidArgument, "negative scale");
    if (scale == 0 || ideal.is_zero()) return FractionalIdeal(Instance::quad5(), QuadFraction{});
    Rat r = scale;
    r.canonicalize();
    QuadFraction f{r * ideal.g(), ideal.divided_by(ideal.g())};
    f.scale.canonicalize();
    return FractionalIdeal(Instance::quad5(), std::move(f));
}

bool FractionalIdeal::is_zero() const { return *this == zero(inst_); }
bool FractionalIdeal::is_unit() const { return *this == unit(inst_); }

bool FractionalIdeal::is_integral() const {
    switch (inst_.id()) {
    case InstanceId::n0: return nat().denominator == 1;
    case InstanceId::dvs: return dvs().is_zero() || *dvs().exponent >= 0;
    case InstanceId::quad5: return den(quad().scale) == 1;
    default: return den(rational()) == 1;
    }
}

Ideal FractionalIdeal::to_ideal() const {
    if (!is_integral()) raise(Errc::NotIntegral, to_string() + " is not contained in S");
    switch (inst_.id()) {
    case InstanceId::n0: return Ideal::n0(nat().numerator);
    case InstanceId::dvs: return Ideal::dvs(dvs());
    case InstanceId::quad5: return Ideal::quad(quad().ideal.scaled_by(num(quad().scale)));
    default: return Ideal::gcd(inst_, num(rational()));
    }
}

Element FractionalIdeal::denominator() const {
    switch (inst_.id()) {
    case InstanceId::n0: return Element::natural(inst_, nat().denominator);
    case InstanceId::dvs: {
        if (dvs().is_zero()) return Element::dvs_power(0);
        const Int& n = *dvs().exponent;
        return Element::dvs_power(n < 0 ? Int(-n) : Int(0));
    }
    case InstanceId::quad5: return Element::quad(QuadIdeal::principal(den(quad().scale)));
    default: return Element::natural(inst_, den(rational()));
    }
}

std::string FractionalIdeal::to_string() const {
    if (is_zero()) return "(0)";
    switch (inst_.id()) {
    case InstanceId::n0: {
        std::string s = "(";
        bool first = true;
        for (const auto& g : nat().numerator.minimal_generators()) {
            if (!first) s += ",";
            first = false;
            s += semideal::to_string(ratio(g, nat().denominator));
        }
        return s + ")";
    }
    case InstanceId::dvs: return "(t^" + dvs().exponent->get_str() + ")";
    case InstanceId::quad5: {
        const auto& f = quad();
        if (den(f.scale) == 1) return f.ideal.scaled_by(num(f.scale)).to_string();
        return "(" + semideal::to_string(f.scale) + ")" + f.ideal.to_string();
    }
    default: return "(" + semideal::to_string(rational()) + ")";
    }
}

FractionalIdeal frac_from(const Instance& inst, std::span<const Rat> gens) {
    require_fractions(inst);
    if (gens.empty()) raise(Errc::InvalidArgument, "a fractional ideal needs at least one generator");
    for (const auto& g : gens)
        if (g < 0) raise(Errc::InvalidArgument, "negative generator " + to_string(g));
    switch (inst.id()) {
    case InstanceId::n0: {
        Int d = 1;
        for (const auto& g : gens) d = lcm(d, den(g));
        std::vector<Int> cleared;
        for (const auto& g : gens) cleared.push_back(num(Rat(g * d)));
        return FractionalIdeal::n0(Rat(Int(1), d), NatIdeal::generated_by(cleared));
    }
    case InstanceId::dvs: {
        Int e;
        bool first = true;
        for (const auto& g : gens) {
            if (den(g) != 1) raise(Errc::InvalidArgument, "dvs generators are integer exponents");
            if (first || num(g) < e) e = num(g);
            first = false;
        }
        return FractionalIdeal::dvs(DvsValue::power(e));
    }
    case InstanceId::quad5: {
        Rat s = 0;
        for (const auto& g : gens) s = rat_gcd(s, g);
        return FractionalIdeal::quad(s, QuadIdeal::unit());
    }
    default: {
        Rat s = 0;
        for (const auto& g : gens) s = rat_gcd(s, g);
        return FractionalIdeal::rational(inst, s);
    }
    }
}

FractionalIdeal frac_from_stream(const std::function<Rat(std::uint64_t)>& member, unsigned probe_bits) {
    if (probe_bits > 24) raise(Errc::ResourceLimit, "probe range above 2^24");
    const std::uint64_t horizon = 4 * std::uint64_t{probe_bits} + 64;
    std::vector<Rat> probed;
    for (std::uint64_t n = 0; n < horizon; ++n) probed.push_back(member(n));
    const std::uint64_t top = std::uint64_t{1} << probe_bits;
    for (std::uint64_t d = 1; d <= top; ++d) {
        Int dd = from_u64(d);
        bool clears = std::all_of(probed.begin(), probed.end(), [&](const Rat& q) { return den(Rat(q * dd)) == 1; });
        if (clears) return frac_from(Instance::n0(), probed);
    }
    raise(Errc::NotFractional, "no denominator d <= 2^" + std::to_string(probe_bits) + " clears the set");
}

FractionalIdeal frac_sum(const FractionalIdeal& a, const FractionalIdeal& b) {
    require_same(a.instance(), b.instance());
    const auto& inst = a.instance();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    switch (inst.id()) {
    case InstanceId::n0: {
        auto c = common(a.nat(), b.nat());
        return FractionalIdeal::n0(inverse_of(c.l), nat_sum(c.xa, c.xb));
    }
    case InstanceId::dvs:
        return FractionalIdeal::dvs(DvsValue::power(std::min(*a.dvs().exponent, *b.dvs().exponent)));
    case InstanceId::quad5: {
        auto c = common(a.quad(), b.quad());
        return FractionalIdeal::quad(inverse_of(c.l), qi_add(c.xa, c.xb));
    }
    default: return FractionalIdeal::rational(inst, rat_gcd(a.rational(), b.rational()));
    }
}

FractionalIdeal frac_product(const FractionalIdeal& a, const FractionalIdeal& b) {
    require_same(a.instance(), b.instance());
    const auto& inst = a.instance();
    if (a.is_zero() || b.is_zero()) return FractionalIdeal::zero(inst);
    switch (inst.id()) {
    case InstanceId::n0:
        return FractionalIdeal::n0(inverse_of(a.nat().denominator * b.nat().denominator),
                                   nat_product(a.nat().numerator, b.nat().numerator));
    case InstanceId::dvs: return FractionalIdeal::dvs(DvsValue::power(*a.dvs().exponent + *b.dvs().exponent));
    case InstanceId::quad5:
        return FractionalIdeal::quad(a.quad().scale * b.quad().scale, qi_mul(a.quad().ideal, b.quad().ideal));
    default: return FractionalIdeal::rational(inst, a.rational() * b.rational());
    }
}

FractionalIdeal frac_intersect(const FractionalIdeal& a, const FractionalIdeal& b) {
    require_same(a.instance(), b.instance());
    const auto& inst = a.instance();
    if (a.is_zero() || b.is_zero()) return FractionalIdeal::zero(inst);
    switch (inst.id()) {
    case InstanceId::n0: {
        auto c = common(a.nat(), b.nat());
        return FractionalIdeal::n0(inverse_of(c.l), nat_intersect(c.xa, c.xb));
    }
    case InstanceId::dvs:
        return FractionalIdeal::dvs(DvsValue::power(std::max(*a.dvs().exponent, *b.dvs().exponent)));
    case InstanceId::quad5: {
        auto c = common(a.quad(), b.quad());
        return FractionalIdeal::quad(inverse_of(c.l), qi_intersect(c.xa, c.xb));
    }
    default: return FractionalIdeal::rational(inst, rat_lcm(a.rational(), b.rational()));
    }
}

FractionalIdeal frac_quotient(const FractionalIdeal& a, const FractionalIdeal& b) {
    require_same(a.instance(), b.instance());
    const auto& inst = a.instance();
    if (b.is_zero()) raise(Errc::ZeroDivisorIdeal, "residual by the zero ideal");
    if (a.is_zero()) return a;
    switch (inst.id()) {
    case InstanceId::n0: {
        // x*(IB/DB) <= IA/DA  iff  z = x*dB*DA/DB lies in [IA : IB/dB]_S,
        // z integral because IB/dB contains two consecutive integers.
        const auto& fa = a.nat();
        const auto& fb = b.nat();
        const Int& db = fb.numerator.period();
        NatIdeal z = nat_quotient(fa.numerator, fb.numerator.divided(db));
        return FractionalIdeal::n0(ratio(fb.denominator, fa.denominator * db), z);
    }
    case InstanceId::dvs: return FractionalIdeal::dvs(DvsValue::power(*a.dvs().exponent - *b.dvs().exponent));
    case InstanceId::quad5: {
        // J^-1 = conj(J) / N(J) in Z[w], which is integrally closed
        const auto& fb = b.quad();
        Rat s = a.quad().scale / (fb.scale * Rat(fb.ideal.norm()));
        return FractionalIdeal::quad(s, qi_mul(a.quad().ideal, fb.ideal.conjugate()));
    }
    default: return FractionalIdeal::rational(inst, a.rational() / b.rational());
    }
}

FractionalIdeal frac_op(FracOp op, const FractionalIdeal& a, const FractionalIdeal& b) {
    switch (op) {
    case FracOp::sum: return frac_sum(a, b);
    case FracOp::product: return frac_product(a, b);
    case FracOp::intersect: return frac_intersect(a, b);
    case FracOp::quotient: return frac_quotient(a, b);
    }
    raise(Errc::InternalError, "unknown op");
}

FractionalIdeal frac_power(const FractionalIdeal& a, unsigned long k) {
    FractionalIdeal r = FractionalIdeal::unit(a.instance());
    for (unsigned long i = 0; i < k; ++i) r = frac_product(r, a);
    return r;
}

bool frac_contains(const FractionalIdeal& a, const FractionalIdeal& b) {
    require_same(a.instance(), b.instance());
    if (b.is_zero()) return true;
    if (a.is_zero()) return false;
    switch (a.instance().id()) {
    case InstanceId::n0: {
        auto c = common(a.nat(), b.nat());
        return c.xa.contains(c.xb);
    }
    case InstanceId::dvs: return *b.dvs().exponent >= *a.dvs().exponent;
    case InstanceId::quad5: {
        auto c = common(a.quad(), b.quad());
        return c.xa.contains(c.xb);
    }
    default: return den(Rat(b.rational() / a.rational())) == 1;
    }
}

namespace {

std::string quad_over(const QuadNumber& x, const Rat& scale) {
    if (scale == 1) return x.to_string();
    return "(" + x.to_string() + ")*" + to_string(scale);
}

std::vector<std::pair<std::string, std::string>> inverse_witness(const FractionalIdeal& a) {
    const auto& inst = a.instance();
    switch (inst.id()) {
    case InstanceId::n0: {
        const auto& f = a.nat();
        const Int& g = f.numerator.period();   // invertible means principal here
        return {{to_string(ratio(g, f.denominator)), to_string(ratio(f.denominator, g))}};
    }
    case InstanceId::dvs: {
        const Int& n = *a.dvs().exponent;
        return {{"t^" + n.get_str(), "t^" + Int(-n).get_str()}};
    }
    case InstanceId::quad5: {
        // I conj(I) = N(I): solve sum c_jk alpha_j beta_k = N(I) over the bases
        const auto& f = a.quad();
        auto alpha = f.ideal.basis();
        auto beta = f.ideal.conjugate().basis();
        std::vector<QuadNumber> rows;
        for (const auto& x : alpha)
            for (const auto& y : beta) rows.push_back(x * y);
        std::vector<Int> c;
        Int n = f.ideal.norm();
        if (!qi_lattice_solve(rows, QuadNumber{n, 0}, c)) raise(Errc::InternalError, "no inverse witness");
        std::vector<std::pair<std::string, std::string>> out;
        QuadNumber total;
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            QuadNumber y;
            for (std::size_t k = 0; k < beta.size(); ++k)
                y = y + QuadNumber{c[j * beta.size() + k] * beta[k].x, c[j * beta.size() + k] * beta[k].y};
            total = total + alpha[j] * y;
            out.emplace_back(quad_over(alpha[j], f.scale), quad_over(y, Rat(1) / (f.scale * n)));
        }
        if (total != QuadNumber{n, 0}) raise(Errc::InternalError, "inverse witness does not sum to 1");
        return out;
    }
    default: {
        const Rat& q = a.rational();
        return {{to_string(q), to_string(Rat(1 / q))}};
    }
    }
}

} // namespace

std::optional<Inversion> invert(const FractionalIdeal& a) {
    const auto& inst = a.instance();
    if (a.is_zero()) return std::nullopt;
    FractionalIdeal b = frac_quotient(FractionalIdeal::unit(inst), a);
    if (!frac_product(a, b).is_unit()) return std::nullopt;
    return Inversion{b, inverse_witness(a)};
}

std::pair<Element, Element> sandwich(const FractionalIdeal& a) {
    const auto& inst = a.instance();
    if (a.is_zero()) raise(Errc::EmptyIdeal, "the zero ideal contains no nonzero principal ideal");
    Element d = a.denominator();
    Element c = Element::zero(inst);
    switch (inst.id()) {
    case InstanceId::n0: c = Element::natural(inst, a.nat().numerator.min_nonzero()); break;
    case InstanceId::dvs: {
        const Int& n = *a.dvs().exponent;
        c = Element::dvs_power(n < 0 ? Int(0) : n);
        break;
    }
    case InstanceId::quad5: {
        const auto& f = a.quad();
        c = Element::quad(f.ideal.scaled_by(num(Rat(f.scale * den(f.scale)))));
        break;
    }
    default: c = Element::natural(inst, num(a.rational())); break;
    }
    FractionalIdeal lower = FractionalIdeal::from_ideal(Ideal::principal(c));
    FractionalIdeal upper = frac_quotient(FractionalIdeal::unit(inst), FractionalIdeal::from_ideal(Ideal::principal(d)));
    if (!frac_contains(a, lower) || !frac_contains(upper, a))
        raise(Errc::InternalError, "sandwich containment check failed for " + a.to_string());
    return {c, d};
}

} // namespace semideal
