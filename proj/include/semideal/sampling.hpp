#pragma once

#include "semideal/ideal.hpp"
#include "semideal/polynomial.hpp"

#include <cstdint>
#include <random>

namespace semideal {

/// Seeded generator with an explicit range mapping, so sequences are
/// identical across standard libraries (std distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    std::int64_t range_signed(std::int64_t lo, std::int64_t hi);
    bool coin() { return (next() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

/// Bounds of the law-suite samplers.
///   n0: 1-3 generators in [1, 12]; gcd: generator in [1, 10^6];
///   gcd-supported: products of support primes with exponents <= 6;
///   dvs: exponent <= 20; lagrassa: (u) or L; quad5: small principal ideals
///   and products of up to three primes of norm <= 23.
Ideal random_ideal(const Instance& inst, Rng& rng);   // always nonzero
Element random_element(const Instance& inst, Rng& rng, bool nonzero);
/// Degree <= max_degree with coefficients sampled like random_element
/// (naturals in [0, max_coeff] for n0, gcd and gcd-supported).
Polynomial random_polynomial(const Instance& inst, Rng& rng, unsigned max_degree, std::uint64_t max_coeff);

} // namespace semideal
