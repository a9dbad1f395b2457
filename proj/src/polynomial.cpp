#include "semideal/polynomial.hpp"

#include "semideal/error.hpp"

#include <algorithm>
#include <cctype>

namespace semideal {

Polynomial::Polynomial(Instance inst, std::vector<Element> coeffs)
    : inst_(std::move(inst)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) require_same(inst_, c.instance());
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const auto& c = coeffs_[k];
        if (c.is_zero()) continue;
        if (!s.empty()) s += "+";
        if (k == 0) {
            s += c.to_string();
            continue;
        }
        if (!c.is_one()) s += c.to_string();
        s += "X";
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

Polynomial Polynomial::parse(const Instance& inst, const std::string& text) {
    switch (inst.id()) {
    case InstanceId::n0:
    case InstanceId::gcd:
    case InstanceId::gcd_supported:
        break;
    default:
        raise(Errc::Unsupported, "polynomial literals are only available over n0, gcd and gcd-supported");
    }
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) raise(Errc::InvalidArgument, "empty polynomial");
    std::vector<Int> acc;
    std::vector<bool> seen;
    std::size_t pos = 0;
    auto digits = [&](std::string& out) {
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) out += t[pos++];
    };
    while (true) {
        std::string coef, power;
        digits(coef);
        std::size_t k = 0;
        if (pos < t.size() && (t[pos] == 'X' || t[pos] == 'x')) {
            ++pos;
            k = 1;
            if (pos < t.size() && t[pos] == '^') {
                ++pos;
                digits(power);
                if (power.empty()) raise(Errc::InvalidArgument, "expected exponent after '^' in " + text);
                k = std::stoul(power);
            }
            if (coef.empty()) coef = "1";
        }
        if (coef.empty()) raise(Errc::InvalidArgument, "malformed polynomial " + text);
        if (acc.size() <= k) {
            acc.resize(k + 1, Int(0));
            seen.resize(k + 1, false);
        }
        if (seen[k]) raise(Errc::InvalidArgument, "repeated degree in " + text);
        seen[k] = true;
        acc[k] = Int(coef);
        if (pos == t.size()) break;
        if (t[pos] != '+') raise(Errc::InvalidArgument, "unexpected '" + std::string(1, t[pos]) + "' in " + text);
        ++pos;
    }
    std::vector<Element> coeffs;
    for (auto& c : acc) coeffs.push_back(Element::natural(inst, c));
    return Polynomial(inst, std::move(coeffs));
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
    require_same(f.instance(), g.instance());
    const auto& a = f.coefficients();
    const auto& b = g.coefficients();
    std::vector<Element> out;
    for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
        if (k >= a.size()) out.push_back(b[k]);
        else if (k >= b.size()) out.push_back(a[k]);
        else out.push_back(element_add(a[k], b[k]));
    }
    return Polynomial(f.instance(), std::move(out));
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
    require_same(f.instance(), g.instance());
    if (f.is_zero() || g.is_zero()) return Polynomial(f.instance());
    const auto& a = f.coefficients();
    const auto& b = g.coefficients();
    std::vector<Element> out(a.size() + b.size() - 1, Element::zero(f.instance()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = element_add(out[i + j], element_mul(a[i], b[j]));
    return Polynomial(f.instance(), std::move(out));
}

} // namespace semideal
