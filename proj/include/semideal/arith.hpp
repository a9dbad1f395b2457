#pragma once

// Exact integer helpers on top of GMP.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace semideal {

using Int = mpz_class;
using Rat = mpq_class;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// Largest k with p^k | n. Requires n != 0 and p >= 2.
unsigned long valuation(const Int& n, const Int& p);

bool is_prime(const Int& n);
Int next_prime(const Int& n);   // smallest prime > n

/// Prime factorization of n >= 1, primes ascending.
std::vector<std::pair<Int, unsigned long>> factorize(const Int& n);

Int pow(const Int& base, unsigned long exp);

/// Floor-style modulus: result in [0, m) for m > 0.
Int mod(const Int& a, const Int& m);

/// Square root of a modulo an odd prime p, if one exists.
bool sqrt_mod(const Int& a, const Int& p, Int& root);

/// Reduced rational from text "p" or "p/q" (no sign). Throws InvalidArgument.
Rat parse_rational(const std::string& text);

std::string to_string(const Int& n);
std::string to_string(const Rat& q);

bool fits_u64(const Int& n);
std::uint64_t to_u64(const Int& n);
Int from_u64(std::uint64_t v);

} // namespace semideal
