#pragma once

#include "semideal/ideal.hpp"
#include "semideal/laws.hpp"
#include "semideal/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <variant>

namespace semideal {

struct ContentReport {
    std::string instance;
    Polynomial f;
    Polynomial g;
    Ideal cf;
    Ideal cg;
    Ideal cfg;
    bool gaussian;
    /// 0 when gaussian; otherwise left for dm_exponent.
    std::optional<unsigned> dm_exponent;
};

/// Ideal generated by the coefficients; the zero polynomial gives (0).
Ideal content(const Polynomial& f);

ContentReport gaussian_check(const Polynomial& f, const Polynomial& g);

/// Least n <= deg(g) + 1 with c(f)^(n+1) c(g) = c(f)^n c(fg). f nonzero.
/// Raises DMCapExceeded if no such n exists within the cap.
unsigned dm_exponent(const Polynomial& f, const Polynomial& g);

/// Random ideal pairs (P, Q) of S, viewed as subsemimodules of S.
struct IdealPairs {
    std::uint64_t trials = 500;
    std::uint64_t seed = 1;
};

/// Every subsemimodule of L^n, n <= 2 (lagrassa only).
struct LaGrassaPower {
    unsigned n = 1;
};

using ModuleSpec = std::variant<IdealPairs, LaGrassaPower>;

/// Searches P != Q with aP = aQ. Unsupported for module specs that cannot be
/// enumerated in the ideal's instance.
LawReport m_cancellation_check(const Ideal& a, const ModuleSpec& spec);

} // namespace semideal
