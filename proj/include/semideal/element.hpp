#pragma once

#include "semideal/arith.hpp"
#include "semideal/instance.hpp"
#include "semideal/quad.hpp"

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace semideal {

/// dvs value: t^exponent, or the zero element when exponent is empty.
/// Integral elements have exponent >= 0; fractional ones may be negative.
struct DvsValue {
    std::optional<Int> exponent;

    static DvsValue zero() { return {}; }
    static DvsValue power(Int n) { return {std::move(n)}; }
    bool is_zero() const noexcept { return !exponent.has_value(); }

    friend bool operator==(const DvsValue&, const DvsValue&) = default;
};

enum class LaGrassa : std::uint8_t { zero, u, one };

std::string to_string(LaGrassa x);

class Element {
public:
    using Payload = std::variant<Int, DvsValue, LaGrassa, QuadIdeal>;

    /// n0, gcd, gcd-supported. Throws OutOfSupport / InvalidArgument.
    static Element natural(const Instance& inst, const Int& n);
    static Element dvs_power(const Int& n);   // n >= 0
    static Element dvs_zero();
    static Element lagrassa(LaGrassa x);
    static Element quad(QuadIdeal x);

    static Element zero(const Instance& inst);
    static Element one(const Instance& inst);

    const Instance& instance() const noexcept { return inst_; }
    const Payload& payload() const noexcept { return payload_; }

    const Int& natural() const { return std::get<Int>(payload_); }
    const DvsValue& dvs() const { return std::get<DvsValue>(payload_); }
    LaGrassa lagrassa() const { return std::get<LaGrassa>(payload_); }
    const QuadIdeal& quad() const { return std::get<QuadIdeal>(payload_); }

    bool is_zero() const;
    bool is_one() const;

    /// "12", "t^3", "0", "u", "(1,2,1)".
    std::string to_string() const;

    friend bool operator==(const Element& a, const Element& b) {
        return a.inst_ == b.inst_ && a.payload_ == b.payload_;
    }
    /// Total order within one instance (payload order), used for maps and sorting.
    friend bool operator<(const Element& a, const Element& b);

private:
    Element(Instance inst, Payload p) : inst_(std::move(inst)), payload_(std::move(p)) {}

    Instance inst_;
    Payload payload_;
};

enum class ElementOp { add, mul };

Element element_op(const Instance& inst, ElementOp op, const Element& x, const Element& y);
Element element_add(const Element& x, const Element& y);
Element element_mul(const Element& x, const Element& y);

/// A finite slice of the instance, ascending in its natural order:
///   n0, gcd: 0..bound; gcd-supported: 0 and supported n <= bound;
///   dvs: 0, t^0..t^bound; lagrassa: 0, u, 1; quad5: 0 and ideals of norm <= bound.
std::vector<Element> enumerate_elements(const Instance& inst, std::uint64_t bound);

} // namespace semideal
