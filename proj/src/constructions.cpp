#include "semideal/constructions.hpp"

#include "semideal/error.hpp"

namespace semideal {

namespace {

void require_gcd_family(const Instance& inst) {
    if (inst.id() != InstanceId::gcd && inst.id() != InstanceId::gcd_supported)
        raise(Errc::Unsupported, "needs a subtractive Dedekind instance (gcd or gcd-supported)");
}

Int auxiliary_prime(const Instance& inst, const std::vector<std::pair<Int, unsigned long>>& primes) {
    auto in_supp = [&](const Int& q) {
        for (const auto& [p, e] : primes)
            if (p == q) return true;
        return false;
    };
    if (inst.id() == InstanceId::gcd_supported) {
        for (const auto& q : inst.support())
            if (!in_supp(q)) return q;
        return Int(1);
    }
    Int q = 2;
    while (in_supp(q)) q = next_prime(q);
    return q;
}

} // namespace

std::pair<Element, Element> two_generators(const Ideal& i, const Element& a) {
    const auto& inst = i.instance();
    require_gcd_family(inst);
    require_same(inst, a.instance());
    if (a.is_zero()) raise(Errc::EmptyIdeal, "a must be a nonzero member");
    if (!ideal_membership(i, a)) raise(Errc::NotAMember, a.to_string() + " is not in " + i.to_string());
    const Int& g = i.generator();
    auto primes = factorize(a.natural());
    Element b = Element::one(inst);
    if (!primes.empty()) {
        Int q = auxiliary_prime(inst, primes);
        b = Element::zero(inst);
        for (std::size_t k = 0; k < primes.size(); ++k) {
            Int bk = q;
            for (std::size_t j = 0; j < primes.size(); ++j) {
                unsigned long l = valuation(g, primes[j].first);
                bk *= pow(primes[j].first, j == k ? l : l + 1);
            }
            b = element_add(b, Element::natural(inst, bk));
        }
    }
    std::vector<Element> gens{a, b};
    if (ideal_from_generators(inst, gens) != i)
        raise(Errc::InternalError, "two-generator check failed for " + i.to_string());
    return {a, b};
}

Element finite_spec_principal_generator(const Ideal& i) {
    const auto& inst = i.instance();
    if (inst.id() != InstanceId::gcd_supported)
        raise(Errc::Unsupported, "needs a gcd-supported instance (finitely many primes)");
    if (i.is_zero()) raise(Errc::EmptyIdeal, "the zero ideal has no principal generator");
    const Int& g = i.generator();
    const auto& primes = inst.support();
    Int all = 1;
    for (const auto& p : primes) all *= p;
    Element a = Element::zero(inst);
    for (std::size_t k = 0; k < primes.size(); ++k) {
        Int qk = all / primes[k];
        Int ak = g * qk;
        if (!ideal_membership(Ideal::gcd(inst, g * qk), Element::natural(inst, ak)) ||
            ideal_membership(Ideal::gcd(inst, g * all), Element::natural(inst, ak)))
            raise(Errc::InternalError, "a_i outside I q_i \\ I b");
        a = element_add(a, Element::natural(inst, ak));
    }
    if (primes.empty()) a = Element::natural(inst, g);
    if (Ideal::principal(a) != i) raise(Errc::InternalError, "principal generator check failed for " + i.to_string());
    return a;
}

} // namespace semideal
