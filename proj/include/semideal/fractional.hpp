#pragma once

#include "semideal/ideal.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace semideal {

/// (1 / denominator) * numerator with the denominator minimal: it shares no
/// factor with the period of the numerator.
struct NatFraction {
    Int denominator = 1;
    NatIdeal numerator;

    friend bool operator==(const NatFraction&, const NatFraction&) = default;
};

/// scale * ideal with ideal primitive (content g = 1), or the zero ideal
/// with scale 0.
struct QuadFraction {
    Rat scale = 0;
    QuadIdeal ideal;

    friend bool operator==(const QuadFraction&, const QuadFraction&) = default;
};

/// Fractional ideal of one instance (lagrassa has no semifield of fractions).
///   n0              NatFraction
///   gcd, gcd-sup.   reduced rational q >= 0, the ideal qS
///   dvs             (t^n), n in Z, or zero
///   quad5           QuadFraction
class FractionalIdeal {
public:
    using Payload = std::variant<NatFraction, Rat, DvsValue, QuadFraction>;

    static FractionalIdeal zero(const Instance& inst);
    static FractionalIdeal unit(const Instance& inst);
    static FractionalIdeal from_ideal(const Ideal& i);
    static FractionalIdeal n0(const Rat& scale, const NatIdeal& numerator);   // scale * numerator
    static FractionalIdeal rational(const Instance& inst, const Rat& q);       // gcd, gcd-supported
    static FractionalIdeal dvs(DvsValue v);
    static FractionalIdeal quad(const Rat& scale, const QuadIdeal& ideal);     // scale * ideal

    const Instance& instance() const noexcept { return inst_; }
    const Payload& payload() const noexcept { return payload_; }
    const NatFraction& nat() const { return std::get<NatFraction>(payload_); }
    const Rat& rational() const { return std::get<Rat>(payload_); }
    const DvsValue& dvs() const { return std::get<DvsValue>(payload_); }
    const QuadFraction& quad() const { return std::get<QuadFraction>(payload_); }

    bool is_zero() const;
    bool is_unit() const;
    bool is_integral() const;
    /// Throws NotIntegral unless is_integral().
    Ideal to_ideal() const;

    /// Least common denominator d (an element of S) with d*A inside S.
    Element denominator() const;

    /// "(1/3)", "(3/2)", "(t^-2)", "(1,4/3,5/3)", "(1/2)(1,2,1)"; zero "(0)".
    std::string to_string() const;

    friend bool operator==(const FractionalIdeal& a, const FractionalIdeal& b) {
        return a.inst_ == b.inst_ && a.payload_ == b.payload_;
    }

private:
    FractionalIdeal(Instance inst, Payload p) : inst_(std::move(inst)), payload_(std::move(p)) {}

    Instance inst_;
    Payload payload_;
};

/// Fractional ideal generated by nonnegative rationals. dvs reads each
/// generator as an integer exponent (t^n). lagrassa raises Unsupported.
FractionalIdeal frac_from(const Instance& inst, std::span<const Rat> gens);

/// n0 only: the submodule generated by member(0), member(1), ... . Every
/// denominator d <= 2^probe_bits is tested against the first members; if
/// each is refuted by some member, NotFractional is raised, otherwise the
/// ideal generated by the probed members is returned.
FractionalIdeal frac_from_stream(const std::function<Rat(std::uint64_t)>& member, unsigned probe_bits);

enum class FracOp { sum, product, intersect, quotient };

FractionalIdeal frac_op(FracOp op, const FractionalIdeal& a, const FractionalIdeal& b);
FractionalIdeal frac_sum(const FractionalIdeal& a, const FractionalIdeal& b);
FractionalIdeal frac_product(const FractionalIdeal& a, const FractionalIdeal& b);
FractionalIdeal frac_intersect(const FractionalIdeal& a, const FractionalIdeal& b);
/// [a : b] = {x in K : x*b <= a}. b zero raises ZeroDivisorIdeal.
FractionalIdeal frac_quotient(const FractionalIdeal& a, const FractionalIdeal& b);
FractionalIdeal frac_power(const FractionalIdeal& a, unsigned long k);
/// b is a subset of a.
bool frac_contains(const FractionalIdeal& a, const FractionalIdeal& b);

struct Inversion {
    FractionalIdeal inverse;
    /// Pairs (x_k in A, y_k in A^-1) with sum x_k*y_k = 1, already checked.
    std::vector<std::pair<std::string, std::string>> witness;
};

/// [S : A] when A*[S : A] = S, else nothing (also for the zero ideal).
std::optional<Inversion> invert(const FractionalIdeal& a);

/// (c, d) with (c) <= A <= (d^-1), both containments verified. A zero
/// raises EmptyIdeal.
std::pair<Element, Element> sandwich(const FractionalIdeal& a);

} // namespace semideal
