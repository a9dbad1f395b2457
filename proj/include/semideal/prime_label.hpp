#pragma once

#include "semideal/arith.hpp"
#include "semideal/instance.hpp"

#include <map>
#include <string>
#include <string_view>

namespace semideal {

/// Names a nonzero prime ideal of an instance.
///   numeric  pN0 (n0), (p) (gcd, gcd-supported), primes above p (quad5)
///   max      N0 \ {1}
///   t        the maximal ideal (t) of the dvs
///   u        the maximal ideal {0,u} of lagrassa
/// For quad5 the tag separates the two primes above a split p: tag 1 is
/// (p, r + w) with r the smaller root of x^2 + 5 mod p, tag 2 the other one.
/// Ramified and inert primes carry tag 0.
struct PrimeLabel {
    enum class Kind : std::uint8_t { numeric, max, t, u };

    InstanceId instance = InstanceId::gcd;
    Kind kind = Kind::numeric;
    Int p = 0;
    int tag = 0;

    static PrimeLabel numeric(InstanceId instance, Int p, int tag = 0) {
        return {instance, Kind::numeric, std::move(p), tag};
    }
    static PrimeLabel max() { return {InstanceId::n0, Kind::max, Int(0), 0}; }
    static PrimeLabel t() { return {InstanceId::dvs, Kind::t, Int(0), 0}; }
    static PrimeLabel u() { return {InstanceId::lagrassa, Kind::u, Int(0), 0}; }

    /// gcd: "7"; n0: "7N0" / "MAX"; dvs: "T"; lagrassa: "U"; quad5: "P2", "P3.1", "P11".
    std::string to_string() const;

    /// Inverse of to_string for the given instance; also accepts "p7" for numeric labels.
    static PrimeLabel parse(InstanceId instance, std::string_view text);

    friend bool operator==(const PrimeLabel& a, const PrimeLabel& b) {
        return a.instance == b.instance && a.kind == b.kind && a.p == b.p && a.tag == b.tag;
    }
    friend bool operator<(const PrimeLabel& a, const PrimeLabel& b) {
        if (a.instance != b.instance) return a.instance < b.instance;
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.p != b.p) return a.p < b.p;
        return a.tag < b.tag;
    }
};

/// Finitely supported map PrimeLabel -> integer exponent. Zero exponents are
/// never stored, so map equality is ideal equality.
class ExponentVector {
public:
    using Map = std::map<PrimeLabel, Int>;

    ExponentVector() = default;

    void set(const PrimeLabel& label, const Int& exponent);
    void add(const PrimeLabel& label, const Int& exponent);
    Int get(const PrimeLabel& label) const;

    const Map& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }

    /// Sum of all exponents (number of prime factors with multiplicity).
    Int total() const;
    bool all_nonnegative() const;

    ExponentVector operator+(const ExponentVector& o) const;
    ExponentVector operator-() const;

    /// "2^2 * 3 * 7"; "1" for the empty vector.
    std::string to_string() const;

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
    Map entries_;
};

} // namespace semideal
