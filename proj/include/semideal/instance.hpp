#pragma once

#include "semideal/arith.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace semideal {

enum class InstanceId { n0, gcd, gcd_supported, dvs, lagrassa, quad5 };

/// Three-valued structural fact; unknown where no decision is implemented.
enum class Truth { no, yes, unknown };

std::string_view to_string(Truth t) noexcept;

struct Flags {
    bool is_semidomain;
    bool is_subtractive;
    Truth is_dedekind;
    Truth is_noetherian;
};

/// One of the six concrete semirings:
///   n0              (N0, +, *)
///   gcd             (N0, gcd, *)            ~ Id(Z)
///   gcd-supported   {0} u {n : primes of n in P} inside the gcd semiring
///   dvs             {0} u {t^n : n >= 0},  t^m + t^n = t^min(m,n)
///   lagrassa        {0, u, 1} with 1+u = u, 1+1 = 1, u+u = u*u = u
///   quad5           Id(Z[sqrt(-5)]) under ideal sum and product
class Instance {
public:
    static Instance n0() { return Instance(InstanceId::n0); }
    static Instance gcd() { return Instance(InstanceId::gcd); }
    static Instance gcd_supported(std::vector<Int> primes);
    static Instance dvs() { return Instance(InstanceId::dvs); }
    static Instance lagrassa() { return Instance(InstanceId::lagrassa); }
    static Instance quad5() { return Instance(InstanceId::quad5); }

    /// Accepts "n0", "gcd", "gcd-supported(2,3)", "gcd-supported" (= {2,3}),
    /// "dvs", "lagrassa", "quad5". Throws InvalidArgument.
    static Instance parse(std::string_view text);

    static std::vector<Instance> all();

    InstanceId id() const noexcept { return id_; }
    /// Sorted prime support; empty unless gcd-supported.
    const std::vector<Int>& support() const noexcept { return support_; }
    Flags flags() const noexcept;
    std::string name() const;

    /// n is 0 or has all prime factors in the support.
    bool in_support(const Int& n) const;

    bool has_fractions() const noexcept { return id_ != InstanceId::lagrassa; }

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    explicit Instance(InstanceId id) : id_(id) {}

    InstanceId id_;
    std::vector<Int> support_;
};

/// Throws InstanceMismatch unless a == b.
void require_same(const Instance& a, const Instance& b);

} // namespace semideal
