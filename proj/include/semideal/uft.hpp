#pragma once

#include "semideal/fractional.hpp"
#include "semideal/prime_label.hpp"

#include <vector>

namespace semideal {

/// Exponents over the prime labels of gcd, gcd-supported, dvs and quad5;
/// uft_compose of the result reproduces a. n0 and lagrassa raise Unsupported,
/// the zero ideal EmptyIdeal.
ExponentVector uft_factor(const FractionalIdeal& a);

/// Product of labelled primes to their exponents. Throws UnknownPrime for
/// labels outside the instance spectrum.
FractionalIdeal uft_compose(const ExponentVector& v, const Instance& inst);

/// Every product of primes p_i^r_i with 0 <= r_i <= v(p_i, a), each checked
/// to contain a. Exponent-box order, last prime fastest.
std::vector<Ideal> divisors_containing(const Ideal& a);

/// Image of a gcd or gcd-supported ideal in the localization at p, a dvs
/// ideal of exponent v_p(generator). Zero ideal raises EmptyIdeal.
Ideal localize(const Instance& inst, const PrimeLabel& p, const Ideal& i);

} // namespace semideal
