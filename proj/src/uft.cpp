#include "semideal/uft.hpp"

#include "semideal/error.hpp"
#include "semideal/spectrum.hpp"

namespace semideal {

namespace {

void add_factorization(ExponentVector& v, InstanceId id, const Int& n, int sign) {
    for (const auto& [p, e] : factorize(n)) v.add(PrimeLabel::numeric(id, p), Int(sign) * from_u64(e));
}

bool has_uft(InstanceId id) {
    return id == InstanceId::gcd || id == InstanceId::gcd_supported || id == InstanceId::dvs || id == InstanceId::quad5;
}

} // namespace

ExponentVector uft_factor(const FractionalIdeal& a) {
    const auto& inst = a.instance();
    if (!has_uft(inst.id())) raise(Errc::Unsupported, inst.name() + " has no unique factorization of ideals");
    if (a.is_zero()) raise(Errc::EmptyIdeal, "the zero ideal has no factorization");
    ExponentVector v;
    switch (inst.id()) {
    case InstanceId::dvs: v.set(PrimeLabel::t(), *a.dvs().exponent); break;
    case InstanceId::quad5: {
        const auto& f = a.quad();
        Int p = f.scale.get_num(), q = f.scale.get_den();
        v = qi_factor(f.ideal.scaled_by(p)) + -qi_factor(QuadIdeal::principal(q));
        break;
    }
    default:
        add_factorization(v, inst.id(), a.rational().get_num(), 1);
        add_factorization(v, inst.id(), a.rational().get_den(), -1);
        break;
    }
    return v;
}

FractionalIdeal uft_compose(const ExponentVector& v, const Instance& inst) {
    if (!inst.has_fractions()) raise(Errc::Unsupported, inst.name() + " has no fractional ideals");
    for (const auto& [label, e] : v.entries()) label_ideal(inst, label);   // validates
    switch (inst.id()) {
    case InstanceId::n0: {
        Ideal out = Ideal::unit(inst);
        for (const auto& [label, e] : v.entries()) {
            if (e < 0) raise(Errc::Unsupported, "negative exponents need invertible primes");
            out = ideal_product(out, ideal_power(label_ideal(inst, label), to_u64(e)));
        }
        return FractionalIdeal::from_ideal(out);
    }
    case InstanceId::dvs: return FractionalIdeal::dvs(DvsValue::power(v.get(PrimeLabel::t())));
    case InstanceId::quad5: {
        ExponentVector pos, neg;
        for (const auto& [label, e] : v.entries()) {
            if (e > 0) pos.set(label, e);
            else neg.set(label, -e);
        }
        auto top = FractionalIdeal::from_ideal(Ideal::quad(qi_compose(pos)));
        auto bottom = FractionalIdeal::from_ideal(Ideal::quad(qi_compose(neg)));
        return frac_quotient(top, bottom);
    }
    default: {
        Rat q = 1;
        for (const auto& [label, e] : v.entries()) {
            Int pe = pow(label.p, to_u64(abs(e)));
            if (e > 0) q *= pe;
            else q /= pe;
        }
        return FractionalIdeal::rational(inst, q);
    }
    }
}

std::vector<Ideal> divisors_containing(const Ideal& a) {
    const auto& inst = a.instance();
    if (!has_uft(inst.id())) raise(Errc::Unsupported, inst.name() + " is not a Dedekind instance");
    if (a.is_zero()) raise(Errc::EmptyIdeal, "the zero ideal has no finite divisor set");
    ExponentVector v = uft_factor(FractionalIdeal::from_ideal(a));
    std::vector<PrimeLabel> labels;
    std::vector<std::uint64_t> top;
    std::vector<Ideal> primes;
    for (const auto& [label, e] : v.entries()) {
        labels.push_back(label);
        top.push_back(to_u64(e));
        primes.push_back(label_ideal(inst, label));
    }
    std::vector<std::uint64_t> r(labels.size(), 0);
    std::vector<Ideal> out;
    for (bool done = false; !done;) {
        Ideal d = Ideal::unit(inst);
        for (std::size_t k = 0; k < r.size(); ++k) d = ideal_product(d, ideal_power(primes[k], r[k]));
        if (!ideal_contains(d, a)) raise(Errc::InternalError, d.to_string() + " does not contain " + a.to_string());
        out.push_back(d);
        done = true;
        for (std::size_t k = r.size(); k-- > 0;) {
            if (++r[k] <= top[k]) {
                done = false;
                break;
            }
            r[k] = 0;
        }
    }
    return out;
}

Ideal localize(const Instance& inst, const PrimeLabel& p, const Ideal& i) {
    if (inst.id() != InstanceId::gcd && inst.id() != InstanceId::gcd_supported)
        raise(Errc::Unsupported, "localization is implemented for gcd and gcd-supported");
    require_same(inst, i.instance());
    label_ideal(inst, p);
    if (i.is_zero()) raise(Errc::EmptyIdeal, "the zero ideal has no valuation");
    return Ideal::dvs(DvsValue::power(from_u64(valuation(i.generator(), p.p))));
}

} // namespace semideal
