#include "semideal/spectrum.hpp"

#include "semideal/error.hpp"

#include <algorithm>

namespace semideal {

std::vector<PrimeLabel> spectrum(const Instance& inst, std::uint64_t bound) {
    std::vector<PrimeLabel> out;
    auto id = inst.id();
    switch (id) {
    case InstanceId::n0:
    case InstanceId::gcd:
        for (Int p = 2; p <= from_u64(bound); p = next_prime(p)) out.push_back(PrimeLabel::numeric(id, p));
        if (id == InstanceId::n0) out.push_back(PrimeLabel::max());
        break;
    case InstanceId::gcd_supported:
        for (const auto& p : inst.support()) out.push_back(PrimeLabel::numeric(id, p));
        break;
    case InstanceId::dvs: out.push_back(PrimeLabel::t()); break;
    case InstanceId::lagrassa: out.push_back(PrimeLabel::u()); break;
    case InstanceId::quad5:
        for (Int p = 2; p <= from_u64(bound); p = next_prime(p)) {
            if (qi_split_type(p) == SplitType::split) {
                out.push_back(PrimeLabel::numeric(id, p, 1));
                out.push_back(PrimeLabel::numeric(id, p, 2));
            } else {
                out.push_back(PrimeLabel::numeric(id, p));
            }
        }
        break;
    }
    return out;
}

Ideal label_ideal(const Instance& inst, const PrimeLabel& label) {
    if (label.instance != inst.id()) raise(Errc::UnknownPrime, label.to_string() + " is not a prime of " + inst.name());
    using Kind = PrimeLabel::Kind;
    switch (inst.id()) {
    case InstanceId::n0:
        if (label.kind == Kind::max) {
            std::vector<Int> gens{Int(2), Int(3)};
            return Ideal::n0(NatIdeal::generated_by(gens));
        }
        if (label.kind == Kind::numeric && label.tag == 0 && is_prime(label.p))
            return Ideal::n0(NatIdeal::principal(label.p));
        break;
    case InstanceId::gcd:
    case InstanceId::gcd_supported:
        if (label.kind == Kind::numeric && label.tag == 0 && is_prime(label.p) && inst.in_support(label.p))
            return Ideal::gcd(inst, label.p);
        break;
    case InstanceId::dvs:
        if (label.kind == Kind::t) return Ideal::dvs(DvsValue::power(1));
        break;
    case InstanceId::lagrassa:
        if (label.kind == Kind::u) return Ideal::lagrassa(LaGrassaIdeal::u);
        break;
    case InstanceId::quad5:
        if (label.kind == Kind::numeric) return Ideal::quad(qi_prime(label));
        break;
    }
    raise(Errc::UnknownPrime, label.to_string() + " is not a prime of " + inst.name());
}

unsigned krull_dimension(const Instance& inst) {
    std::vector<Ideal> primes{Ideal::zero(inst)};
    for (const auto& l : spectrum(inst, 30)) primes.push_back(label_ideal(inst, l));
    // chain[k] = longest chain ending at primes[k]; strict containment is acyclic
    std::vector<unsigned> chain(primes.size(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < primes.size(); ++k)
            for (std::size_t j = 0; j < primes.size(); ++j)
                if (primes[j] != primes[k] && ideal_contains(primes[k], primes[j]) && chain[j] + 1 > chain[k]) {
                    chain[k] = chain[j] + 1;
                    changed = true;
                }
    }
    return *std::max_element(chain.begin(), chain.end());
}

} // namespace semideal
