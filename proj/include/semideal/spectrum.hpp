#pragma once

#include "semideal/ideal.hpp"
#include "semideal/prime_label.hpp"

#include <vector>

namespace semideal {

/// Classified nonzero primes with numeric payload <= bound, followed by the
/// symbolic ones. Complete for the finite-spectrum instances at any bound.
///   n0: pN0 for primes p, then MAX; gcd: (p); gcd-supported: (p), p in P;
///   dvs: T; lagrassa: U; quad5: primes above each p <= bound.
std::vector<PrimeLabel> spectrum(const Instance& inst, std::uint64_t bound);

/// The ideal a label names. Throws UnknownPrime for labels foreign to inst.
Ideal label_ideal(const Instance& inst, const PrimeLabel& label);

/// Longest strictly increasing chain of classified primes, (0) included.
unsigned krull_dimension(const Instance& inst);

} // namespace semideal
