#pragma once

// Ideal arithmetic in Z[w], w = sqrt(-5).
//
// A nonzero ideal is stored as g * (aZ + (b + w)Z) with a | b^2 + 5 and
// 0 <= b < a; this is the Hermite normal form of its Z-basis, so two ideals
// are equal iff their (g, a, b) agree. g = 0 marks the zero ideal.

#include "semideal/arith.hpp"
#include "semideal/prime_label.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace semideal {

/// x + y*w in Z[w].
struct QuadNumber {
    Int x = 0;
    Int y = 0;

    friend QuadNumber operator*(const QuadNumber& a, const QuadNumber& b) {
        return {a.x * b.x - 5 * a.y * b.y, a.x * b.y + a.y * b.x};
    }
    friend QuadNumber operator+(const QuadNumber& a, const QuadNumber& b) { return {a.x + b.x, a.y + b.y}; }
    friend bool operator==(const QuadNumber&, const QuadNumber&) = default;

    QuadNumber conjugate() const { return {x, -y}; }
    Int norm() const { return x * x + 5 * y * y; }
    bool is_zero() const { return x == 0 && y == 0; }
    std::string to_string() const;
};

class QuadIdeal {
public:
    QuadIdeal() = default;   // zero ideal

    static QuadIdeal zero() { return {}; }
    static QuadIdeal unit() { return from_fields(1, 1, 0); }
    static QuadIdeal principal(const QuadNumber& x);
    static QuadIdeal principal(const Int& n) { return principal(QuadNumber{n, 0}); }
    /// Validates a | b^2 + 5, 0 <= b < a, g >= 1.
    static QuadIdeal from_fields(const Int& g, const Int& a, const Int& b);

    const Int& g() const noexcept { return g_; }
    const Int& a() const noexcept { return a_; }
    const Int& b() const noexcept { return b_; }

    bool is_zero() const noexcept { return g_ == 0; }
    bool is_unit() const noexcept { return g_ == 1 && a_ == 1; }
    Int norm() const { return g_ * g_ * a_; }

    /// Z-basis {g*a, g*(b + w)}; empty for the zero ideal.
    std::vector<QuadNumber> basis() const;

    QuadIdeal conjugate() const;
    bool contains(const QuadNumber& x) const;
    bool contains(const QuadIdeal& other) const;

    /// Divides by a rational integer n that divides every element.
    QuadIdeal divided_by(const Int& n) const;
    QuadIdeal scaled_by(const Int& n) const;

    /// "(g,a,b)" with the zero ideal printed as "(0)".
    std::string to_string() const;

    friend bool operator==(const QuadIdeal&, const QuadIdeal&) = default;

private:
    Int g_ = 0, a_ = 1, b_ = 0;
};

/// HNF of the ideal generated by gens (each generator contributes x and x*w
/// to the Z-module). All-zero input gives the zero ideal.
QuadIdeal qi_normalize(std::span<const QuadNumber> gens);

QuadIdeal qi_mul(const QuadIdeal& i, const QuadIdeal& j);
QuadIdeal qi_add(const QuadIdeal& i, const QuadIdeal& j);
QuadIdeal qi_intersect(const QuadIdeal& i, const QuadIdeal& j);
/// Integral residual {x in O : xJ <= I}; J nonzero.
QuadIdeal qi_quotient(const QuadIdeal& i, const QuadIdeal& j);
QuadIdeal qi_pow(const QuadIdeal& i, unsigned long k);

enum class SplitType { ramified, split, inert };

SplitType qi_split_type(const Int& p);

/// Prime ideals above the rational prime p: one (ramified or inert) or two
/// (split, tag order). Each is certified by norm and a product back-check.
std::vector<QuadIdeal> qi_prime_split(const Int& p);

/// The prime ideal a quad5 label names. Throws UnknownPrime.
QuadIdeal qi_prime(const PrimeLabel& label);

/// Exponents over prime labels; composes back to i exactly. i nonzero.
ExponentVector qi_factor(const QuadIdeal& i);

/// Product of labelled primes; negative exponents are rejected (NotIntegral).
QuadIdeal qi_compose(const ExponentVector& v);

/// Every nonzero ideal of norm <= max_norm, ordered by (norm, g, a, b).
std::vector<QuadIdeal> qi_enumerate(std::uint64_t max_norm);

/// Integer coefficients c with sum c_k * rows_k = target, if one exists.
/// rows and target are coordinate pairs over the basis {1, w}.
bool qi_lattice_solve(std::span<const QuadNumber> rows, const QuadNumber& target, std::vector<Int>& coeffs);

} // namespace semideal
