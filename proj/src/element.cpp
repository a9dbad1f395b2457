#include "semideal/element.hpp"

#include "semideal/error.hpp"

#include <algorithm>
#include <tuple>

namespace semideal {

std::string to_string(LaGrassa x) {
    switch (x) {
    case LaGrassa::zero: return "0";
    case LaGrassa::u: return "u";
    case LaGrassa::one: return "1";
    }
    return "?";
}

Element Element::natural(const Instance& inst, const Int& n) {
    switch (inst.id()) {
    case InstanceId::n0:
    case InstanceId::gcd:
    case InstanceId::gcd_supported:
        break;
    default:
        raise(Errc::InvalidArgument, inst.name() + " has no natural-number elements");
    }
    if (n < 0) raise(Errc::InvalidArgument, "negative element " + n.get_str());
    if (!inst.in_support(n)) raise(Errc::OutOfSupport, n.get_str() + " has a prime factor outside the support");
    return Element(inst, n);
}

Element Element::dvs_power(const Int& n) {
    if (n < 0) raise(Errc::InvalidArgument, "dvs elements have nonnegative exponents");
    return Element(Instance::dvs(), DvsValue::power(n));
}

Element Element::dvs_zero() { return Element(Instance::dvs(), DvsValue::zero()); }

Element Element::lagrassa(LaGrassa x) { return Element(Instance::lagrassa(), x); }

Element Element::quad(QuadIdeal x) { return Element(Instance::quad5(), std::move(x)); }

Element Element::zero(const Instance& inst) {
    switch (inst.id()) {
    case InstanceId::dvs: return dvs_zero();
    case InstanceId::lagrassa: return lagrassa(LaGrassa::zero);
    case InstanceId::quad5: return quad(QuadIdeal::zero());
    default: return Element(inst, Int(0));
    }
}

Element Element::one(const Instance& inst) {
    switch (inst.id()) {
    case InstanceId::dvs: return dvs_power(0);
    case InstanceId::lagrassa: return lagrassa(LaGrassa::one);
    case InstanceId::quad5: return quad(QuadIdeal::unit());
    default: return Element(inst, Int(1));
    }
}

bool Element::is_zero() const { return *this == zero(inst_); }
bool Element::is_one() const { return *this == one(inst_); }

std::string Element::to_string() const {
    return std::visit([](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Int>) {
            return v.get_str();
        } else if constexpr (std::is_same_v<T, DvsValue>) {
            if (v.is_zero()) return "0";
            return "t^" + v.exponent->get_str();
        } else if constexpr (std::is_same_v<T, LaGrassa>) {
            return semideal::to_string(v);
        } else {
            return v.to_string();
        }
    }, payload_);
}

bool operator<(const Element& a, const Element& b) {
    if (a.payload_.index() != b.payload_.index()) return a.payload_.index() < b.payload_.index();
    return std::visit([&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.payload_);
        if constexpr (std::is_same_v<T, Int>) {
            return x < y;
        } else if constexpr (std::is_same_v<T, DvsValue>) {
            if (x.is_zero() || y.is_zero()) return x.is_zero() && !y.is_zero();
            return *x.exponent < *y.exponent;
        } else if constexpr (std::is_same_v<T, LaGrassa>) {
            return x < y;
        } else {
            return std::tie(x.g(), x.a(), x.b()) < std::tie(y.g(), y.a(), y.b());
        }
    }, a.payload_);
}

namespace {

LaGrassa lagrassa_add(LaGrassa x, LaGrassa y) {
    if (x == LaGrassa::zero) return y;
    if (y == LaGrassa::zero) return x;
    if (x == LaGrassa::one && y == LaGrassa::one) return LaGrassa::one;
    return LaGrassa::u;
}

LaGrassa lagrassa_mul(LaGrassa x, LaGrassa y) {
    if (x == LaGrassa::zero || y == LaGrassa::zero) return LaGrassa::zero;
    if (x == LaGrassa::one) return y;
    if (y == LaGrassa::one) return x;
    return LaGrassa::u;
}

} // namespace

Element element_op(const Instance& inst, ElementOp op, const Element& x, const Element& y) {
    require_same(inst, x.instance());
    require_same(inst, y.instance());
    bool add = op == ElementOp::add;
    switch (inst.id()) {
    case InstanceId::n0:
        return Element::natural(inst, add ? Int(x.natural() + y.natural()) : Int(x.natural() * y.natural()));
    case InstanceId::gcd:
    case InstanceId::gcd_supported:
        return Element::natural(inst, add ? gcd(x.natural(), y.natural()) : Int(x.natural() * y.natural()));
    case InstanceId::dvs: {
        const auto& a = x.dvs();
        const auto& b = y.dvs();
        if (add) {
            if (a.is_zero()) return y;
            if (b.is_zero()) return x;
            return Element::dvs_power(std::min(*a.exponent, *b.exponent));
        }
        if (a.is_zero() || b.is_zero()) return Element::dvs_zero();
        return Element::dvs_power(*a.exponent + *b.exponent);
    }
    case InstanceId::lagrassa:
        return Element::lagrassa(add ? lagrassa_add(x.lagrassa(), y.lagrassa())
                                     : lagrassa_mul(x.lagrassa(), y.lagrassa()));
    case InstanceId::quad5:
        return Element::quad(add ? qi_add(x.quad(), y.quad()) : qi_mul(x.quad(), y.quad()));
    }
    raise(Errc::InternalError, "unknown instance");
}

Element element_add(const Element& x, const Element& y) {
    return element_op(x.instance(), ElementOp::add, x, y);
}

Element element_mul(const Element& x, const Element& y) {
    return element_op(x.instance(), ElementOp::mul, x, y);
}

std::vector<Element> enumerate_elements(const Instance& inst, std::uint64_t bound) {
    std::vector<Element> out;
    switch (inst.id()) {
    case InstanceId::n0:
    case InstanceId::gcd:
        for (std::uint64_t n = 0; n <= bound; ++n) out.push_back(Element::natural(inst, from_u64(n)));
        break;
    case InstanceId::gcd_supported:
        out.push_back(Element::zero(inst));
        for (std::uint64_t n = 1; n <= bound; ++n)
            if (inst.in_support(from_u64(n))) out.push_back(Element::natural(inst, from_u64(n)));
        break;
    case InstanceId::dvs:
        out.push_back(Element::dvs_zero());
        for (std::uint64_t n = 0; n <= bound; ++n) out.push_back(Element::dvs_power(from_u64(n)));
        break;
    case InstanceId::lagrassa:
        for (auto x : {LaGrassa::zero, LaGrassa::u, LaGrassa::one}) out.push_back(Element::lagrassa(x));
        break;
    case InstanceId::quad5:
        out.push_back(Element::quad(QuadIdeal::zero()));
        for (auto& q : qi_enumerate(bound)) out.push_back(Element::quad(std::move(q)));
        break;
    }
    return out;
}

} // namespace semideal
