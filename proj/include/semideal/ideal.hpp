#pragma once

#include "semideal/element.hpp"
#include "semideal/nat_ideal.hpp"
#include "semideal/quad.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace semideal {

/// The three ideals of lagrassa form a chain (0) < (u) < L.
enum class LaGrassaIdeal : std::uint8_t { zero, u, all };

/// Canonical finitely generated integral ideal of one instance.
///   n0             NatIdeal
///   gcd, gcd-sup.  generator g >= 0 (Int)
///   dvs            (t^n) or the zero ideal (DvsValue)
///   lagrassa       LaGrassaIdeal
///   quad5          QuadIdeal, standing for the principal ideal it generates in Id(Z[w])
class Ideal {
public:
    using Payload = std::variant<NatIdeal, Int, DvsValue, LaGrassaIdeal, QuadIdeal>;

    static Ideal zero(const Instance& inst);
    static Ideal unit(const Instance& inst);
    static Ideal principal(const Element& x);
    static Ideal from_generators(const Instance& inst, std::span<const Element> gens);

    static Ideal n0(NatIdeal i);
    static Ideal gcd(const Instance& inst, const Int& g);   // gcd or gcd-supported
    static Ideal dvs(DvsValue v);
    static Ideal lagrassa(LaGrassaIdeal v);
    static Ideal quad(QuadIdeal q);

    const Instance& instance() const noexcept { return inst_; }
    const Payload& payload() const noexcept { return payload_; }

    const NatIdeal& nat() const { return std::get<NatIdeal>(payload_); }
    const Int& generator() const { return std::get<Int>(payload_); }
    const DvsValue& dvs() const { return std::get<DvsValue>(payload_); }
    LaGrassaIdeal lagrassa() const { return std::get<LaGrassaIdeal>(payload_); }
    const QuadIdeal& quad() const { return std::get<QuadIdeal>(payload_); }

    bool is_zero() const;
    bool is_unit() const;

    /// Minimal generating set, ascending; {0} for the zero ideal.
    std::vector<Element> generators() const;

    /// "(3,4,5)", "(12)", "(t^3)", "(u)", "L", "(1,2,1)"; zero ideal "(0)".
    std::string to_string() const;

    friend bool operator==(const Ideal& a, const Ideal& b) {
        return a.inst_ == b.inst_ && a.payload_ == b.payload_;
    }

private:
    Ideal(Instance inst, Payload p) : inst_(std::move(inst)), payload_(std::move(p)) {}

    Instance inst_;
    Payload payload_;
};

Ideal ideal_from_generators(const Instance& inst, std::span<const Element> gens);
bool ideal_membership(const Ideal& i, const Element& x);
/// j is a subset of i.
bool ideal_contains(const Ideal& i, const Ideal& j);
bool ideal_equals(const Ideal& i, const Ideal& j);

Ideal ideal_sum(const Ideal& i, const Ideal& j);
Ideal ideal_product(const Ideal& i, const Ideal& j);
Ideal ideal_power(const Ideal& i, unsigned long k);
Ideal ideal_intersect(const Ideal& i, const Ideal& j);
/// Integral residual [a : b] = {s in S : s*b <= a}. b zero raises ZeroDivisorIdeal.
Ideal ideal_quotient(const Ideal& a, const Ideal& b);

bool is_subtractive(const Ideal& i);
bool is_prime(const Ideal& i);
bool is_maximal(const Ideal& i);

/// Bounded direct searches over enumerate_elements(bound), used to
/// cross-validate the classified predicates above.
/// (a, b) with a, b not in i and a*b in i.
std::optional<std::pair<Element, Element>> prime_violation(const Ideal& i, std::uint64_t bound);
/// (a, b) with a in i, b not in i and a+b in i.
std::optional<std::pair<Element, Element>> subtractive_violation(const Ideal& i, std::uint64_t bound);

/// Least nonzero member of an n0 ideal. Zero ideal raises EmptyIdeal.
Element min_nonzero(const Ideal& i);

/// c with b = a*c, if any. Exact in every instance: a divides b iff
/// a * [b : a] = b. a zero raises ZeroDivisorIdeal.
std::optional<Ideal> divides(const Ideal& a, const Ideal& b);

/// Invertible as an ideal of S (a*b = S for some fractional b): decided as
/// "a divides (x)" for a nonzero member x of a.
bool is_invertible(const Ideal& i);

/// An ideal strictly between m^2 and m of the form m^2 + (x), x in m \ m^2.
/// m must be maximal (NotMaximal otherwise).
std::optional<Ideal> search_between(const Ideal& m);

} // namespace semideal
