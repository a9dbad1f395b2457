#include "semideal/prime_label.hpp"

#include "semideal/error.hpp"

namespace semideal {

std::string PrimeLabel::to_string() const {
    switch (kind) {
    case Kind::max: return "MAX";
    case Kind::t: return "T";
    case Kind::u: return "U";
    case Kind::numeric: break;
    }
    switch (instance) {
    case InstanceId::n0: return p.get_str() + "N0";
    case InstanceId::quad5: return "P" + p.get_str() + (tag ? "." + std::to_string(tag) : "");
    default: return p.get_str();
    }
}

PrimeLabel PrimeLabel::parse(InstanceId instance, std::string_view text) {
    auto bad = [&]() -> PrimeLabel { raise(Errc::UnknownPrime, "unknown prime label '" + std::string(text) + "'"); };
    if (text == "MAX") return instance == InstanceId::n0 ? max() : bad();
    if (text == "T") return instance == InstanceId::dvs ? t() : bad();
    if (text == "U") return instance == InstanceId::lagrassa ? u() : bad();
    if (instance == InstanceId::dvs || instance == InstanceId::lagrassa) return bad();

    std::string s(text);
    if (!s.empty() && (s.front() == 'p' || s.front() == 'P')) s.erase(0, 1);
    if (instance == InstanceId::n0 && s.size() > 2 && s.ends_with("N0")) s.resize(s.size() - 2);
    int tag = 0;
    if (auto dot = s.find('.'); dot != std::string::npos) {
        if (instance != InstanceId::quad5) return bad();
        std::string t = s.substr(dot + 1);
        if (t != "1" && t != "2") return bad();
        tag = t[0] - '0';
        s.resize(dot);
    }
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return bad();
    Int p(s);
    if (!is_prime(p)) raise(Errc::UnknownPrime, "label '" + std::string(text) + "' does not name a prime");
    return numeric(instance, p, tag);
}

void ExponentVector::set(const PrimeLabel& label, const Int& exponent) {
    if (exponent == 0)
        entries_.erase(label);
    else
        entries_[label] = exponent;
}

void ExponentVector::add(const PrimeLabel& label, const Int& exponent) { set(label, get(label) + exponent); }

Int ExponentVector::get(const PrimeLabel& label) const {
    auto it = entries_.find(label);
    return it == entries_.end() ? Int(0) : it->second;
}

Int ExponentVector::total() const {
    Int s = 0;
    for (const auto& [_, e] : entries_) s += e;
    return s;
}

bool ExponentVector::all_nonnegative() const {
    for (const auto& [_, e] : entries_)
        if (e < 0) return false;
    return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
    ExponentVector r = *this;
    for (const auto& [l, e] : o.entries_) r.add(l, e);
    return r;
}

ExponentVector ExponentVector::operator-() const {
    ExponentVector r;
    for (const auto& [l, e] : entries_) r.entries_[l] = -e;
    return r;
}

std::string ExponentVector::to_string() const {
    if (entries_.empty()) return "1";
    std::string s;
    for (const auto& [l, e] : entries_) {
        if (!s.empty()) s += " * ";
        s += l.to_string();
        if (e != 1) s += "^" + e.get_str();
    }
    return s;
}

} // namespace semideal
