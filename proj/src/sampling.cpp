#include "semideal/sampling.hpp"

#include "semideal/error.hpp"
#include "semideal/spectrum.hpp"

#include <limits>

namespace semideal {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) raise(Errc::InvalidArgument, "empty range");
    // rejection sampling on the largest multiple of n
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % n;
}

std::int64_t Rng::range_signed(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

Int supported_value(const Instance& inst, Rng& rng, unsigned max_exp) {
    Int n = 1;
    for (const auto& p : inst.support()) n *= pow(p, static_cast<unsigned long>(rng.below(max_exp + 1)));
    return n;
}

QuadIdeal random_quad(Rng& rng) {
    if (rng.coin()) {
        QuadNumber x;
        do {
            x = {Int(rng.range_signed(-6, 6)), Int(rng.range_signed(-6, 6))};
        } while (x.is_zero());
        return QuadIdeal::principal(x);
    }
    static const auto labels = spectrum(Instance::quad5(), 23);
    QuadIdeal q = QuadIdeal::unit();
    auto count = rng.range(1, 3);
    for (std::uint64_t k = 0; k < count; ++k) q = qi_mul(q, qi_prime(labels[rng.below(labels.size())]));
    return q;
}

} // namespace

Ideal random_ideal(const Instance& inst, Rng& rng) {
    switch (inst.id()) {
    case InstanceId::n0: {
        std::vector<Int> gens;
        auto count = rng.range(1, 3);
        for (std::uint64_t k = 0; k < count; ++k) gens.push_back(from_u64(rng.range(1, 12)));
        return Ideal::n0(NatIdeal::generated_by(gens));
    }
    case InstanceId::gcd:
        return Ideal::gcd(inst, from_u64(rng.range(1, 1000000)));
    case InstanceId::gcd_supported:
        return Ideal::gcd(inst, supported_value(inst, rng, 6));
    case InstanceId::dvs:
        return Ideal::dvs(DvsValue::power(from_u64(rng.range(0, 20))));
    case InstanceId::lagrassa:
        return Ideal::lagrassa(rng.coin() ? LaGrassaIdeal::u : LaGrassaIdeal::all);
    case InstanceId::quad5:
        return Ideal::quad(random_quad(rng));
    }
    raise(Errc::InternalError, "unknown instance");
}

Element random_element(const Instance& inst, Rng& rng, bool nonzero) {
    switch (inst.id()) {
    case InstanceId::n0:
        return Element::natural(inst, from_u64(rng.range(nonzero ? 1 : 0, 12)));
    case InstanceId::gcd:
        return Element::natural(inst, from_u64(rng.range(nonzero ? 1 : 0, 1000000)));
    case InstanceId::gcd_supported:
        if (!nonzero && rng.below(8) == 0) return Element::zero(inst);
        return Element::natural(inst, supported_value(inst, rng, 6));
    case InstanceId::dvs:
        if (!nonzero && rng.below(8) == 0) return Element::dvs_zero();
        return Element::dvs_power(from_u64(rng.range(0, 20)));
    case InstanceId::lagrassa: {
        auto k = rng.below(nonzero ? 2 : 3);
        if (!nonzero && k == 2) return Element::lagrassa(LaGrassa::zero);
        return Element::lagrassa(k == 0 ? LaGrassa::u : LaGrassa::one);
    }
    case InstanceId::quad5:
        if (!nonzero && rng.below(8) == 0) return Element::quad(QuadIdeal::zero());
        return Element::quad(random_quad(rng));
    }
    raise(Errc::InternalError, "unknown instance");
}

Polynomial random_polynomial(const Instance& inst, Rng& rng, unsigned max_degree, std::uint64_t max_coeff) {
    auto degree = rng.below(max_degree + 1);
    std::vector<Element> coeffs;
    for (std::uint64_t k = 0; k <= degree; ++k) {
        switch (inst.id()) {
        case InstanceId::n0:
        case InstanceId::gcd:
            coeffs.push_back(Element::natural(inst, from_u64(rng.range(0, max_coeff))));
            break;
        default:
            coeffs.push_back(random_element(inst, rng, false));
        }
    }
    return Polynomial(inst, std::move(coeffs));
}

} // namespace semideal
