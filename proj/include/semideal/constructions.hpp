#pragma once

#include "semideal/ideal.hpp"

#include <utility>

namespace semideal {

/// For I = (g) in gcd or gcd-supported and a nonzero a in I, b = b_1 + ... + b_n
/// over the primes p_i of a with l_i = v(p_i, g):
///   b_i = q * p_i^l_i * prod_{j != i} p_j^(l_j + 1)
/// where q is the smallest prime outside supp(a) (gcd-supported: the smallest
/// such prime of P, or 1 if none). Returns (a, b) after checking (a, b) = I.
std::pair<Element, Element> two_generators(const Ideal& i, const Element& a);

/// gcd-supported(P) only: a = a_1 + ... + a_n with a_i = g * prod_{j != i} p_j
/// over P, checked to satisfy a_i in I q_i \ I b and (a) = I.
Element finite_spec_principal_generator(const Ideal& i);

} // namespace semideal
