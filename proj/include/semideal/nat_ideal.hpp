#pragma once

// Finitely generated ideals of (N0, +, *).
//
// An ideal of N0 is an additive submonoid, so it is d * T for d the gcd of
// its members and T a numerical semigroup. T is stored through its Apery set
// with respect to its multiplicity m: apery[r] is the least element of T
// congruent to r mod m. From it:
//   x in T        iff  x >= apery[x mod m]
//   conductor(T)  =    max(apery) - m + 1   (at least 1)
// The published view (period d, conductor c, exceptionals) is derived.

#include "semideal/arith.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace semideal {

class NatIdeal {
public:
    /// Caps on the multiplicity and on reduced generator size; exceeding
    /// them raises ResourceLimit instead of exhausting memory.
    static constexpr std::uint64_t max_multiplicity = std::uint64_t{1} << 22;
    static constexpr std::uint64_t max_reduced_value = std::uint64_t{1} << 40;

    NatIdeal() = default;   // zero ideal

    static NatIdeal zero() { return {}; }
    static NatIdeal unit() { return principal(Int(1)); }
    static NatIdeal principal(const Int& g);
    static NatIdeal generated_by(std::span<const Int> gens);

    /// Members are {period * n : n >= bound or (n < bound and member(n))}.
    /// The caller guarantees this set is a submonoid with gcd 1 in reduced units.
    static NatIdeal from_predicate(const Int& period, std::uint64_t bound,
                                   const std::function<bool(std::uint64_t)>& member);

    bool is_zero() const noexcept { return period_ == 0; }
    const Int& period() const noexcept { return period_; }
    std::uint64_t multiplicity() const noexcept { return apery_.size(); }
    const std::vector<std::uint64_t>& apery() const noexcept { return apery_; }

    /// Least c (a positive multiple of the period) with every multiple of the
    /// period >= c a member. 0 for the zero ideal.
    Int conductor() const;
    std::uint64_t conductor_index() const;
    /// Nonzero members below the conductor, ascending.
    std::vector<Int> exceptionals() const;
    /// Minimal generating set, ascending.
    std::vector<Int> minimal_generators() const;
    std::vector<std::uint64_t> reduced_minimal_generators() const;

    bool contains(const Int& x) const;
    bool contains_reduced(std::uint64_t n) const;
    bool contains(const NatIdeal& other) const;

    /// Least nonzero member. Zero ideal raises EmptyIdeal.
    Int min_nonzero() const;

    NatIdeal scaled(const Int& k) const;     // k * I
    NatIdeal divided(const Int& k) const;    // I / k, k | period

    /// "(3,4,5)" by minimal generators; "(0)" for the zero ideal.
    std::string to_string() const;

    friend bool operator==(const NatIdeal&, const NatIdeal&) = default;

private:
    Int period_ = 0;
    std::vector<std::uint64_t> apery_;
};

NatIdeal nat_sum(const NatIdeal& a, const NatIdeal& b);
NatIdeal nat_product(const NatIdeal& a, const NatIdeal& b);
NatIdeal nat_intersect(const NatIdeal& a, const NatIdeal& b);
/// Integral residual [a : b] = {s in N0 : s*b <= a}; b nonzero.
NatIdeal nat_quotient(const NatIdeal& a, const NatIdeal& b);

} // namespace semideal
