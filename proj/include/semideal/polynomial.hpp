#pragma once

#include "semideal/element.hpp"

#include <string>
#include <vector>

namespace semideal {

/// Polynomial over one instance; trailing zero coefficients are trimmed,
/// so the empty list is the zero polynomial.
class Polynomial {
public:
    explicit Polynomial(Instance inst) : inst_(std::move(inst)) {}
    Polynomial(Instance inst, std::vector<Element> coeffs);

    const Instance& instance() const noexcept { return inst_; }
    const std::vector<Element>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    /// "2+3X+X^2"; "0" for the zero polynomial. Zero terms are omitted.
    std::string to_string() const;

    /// Inverse of to_string for n0, gcd and gcd-supported: terms "c", "cX",
    /// "cX^k", "X^k" joined by '+'. Throws InvalidArgument / Unsupported.
    static Polynomial parse(const Instance& inst, const std::string& text);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    Instance inst_;
    std::vector<Element> coeffs_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

} // namespace semideal
