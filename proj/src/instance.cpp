#include "semideal/instance.hpp"

#include "semideal/error.hpp"

#include <algorithm>

namespace semideal {

std::string_view to_string(Truth t) noexcept {
    switch (t) {
    case Truth::no: return "false";
    case Truth::yes: return "true";
    case Truth::unknown: return "unknown";
    }
    return "unknown";
}

Instance Instance::gcd_supported(std::vector<Int> primes) {
    if (primes.empty()) raise(Errc::InvalidArgument, "gcd-supported needs at least one prime");
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (const auto& p : primes)
        if (!is_prime(p)) raise(Errc::NotPrime, "support element " + p.get_str() + " is not prime");
    Instance inst(InstanceId::gcd_supported);
    inst.support_ = std::move(primes);
    return inst;
}

Instance Instance::parse(std::string_view text) {
    if (text == "n0") return n0();
    if (text == "gcd") return gcd();
    if (text == "dvs") return dvs();
    if (text == "lagrassa") return lagrassa();
    if (text == "quad5") return quad5();
    if (text == "gcd-supported") return gcd_supported({Int(2), Int(3)});
    constexpr std::string_view prefix = "gcd-supported(";
    if (text.starts_with(prefix) && text.ends_with(")")) {
        std::string body(text.substr(prefix.size(), text.size() - prefix.size() - 1));
        std::vector<Int> primes;
        std::size_t start = 0;
        while (start <= body.size()) {
            auto comma = body.find(',', start);
            std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                raise(Errc::InvalidArgument, "bad prime list in '" + std::string(text) + "'");
            primes.emplace_back(tok);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return gcd_supported(std::move(primes));
    }
    raise(Errc::InvalidArgument, "unknown instance '" + std::string(text) + "'");
}

std::vector<Instance> Instance::all() {
    return {n0(), gcd(), gcd_supported({Int(2), Int(3)}), dvs(), lagrassa(), quad5()};
}

Flags Instance::flags() const noexcept {
    switch (id_) {
    case InstanceId::n0:
        // not Dedekind: 2N0 is a non-maximal nonzero prime
        return {true, false, Truth::no, Truth::yes};
    case InstanceId::gcd:
    case InstanceId::gcd_supported:
    case InstanceId::dvs:
        return {true, true, Truth::yes, Truth::yes};
    case InstanceId::lagrassa:
        // u*u = u*1 kills cancellation; (u) is not subtractive since u + 1 = u
        return {false, false, Truth::no, Truth::yes};
    case InstanceId::quad5:
        // subtractive Prufer semidomain; Noetherianness is left open
        return {true, true, Truth::unknown, Truth::unknown};
    }
    return {};
}

std::string Instance::name() const {
    switch (id_) {
    case InstanceId::n0: return "n0";
    case InstanceId::gcd: return "gcd";
    case InstanceId::dvs: return "dvs";
    case InstanceId::lagrassa: return "lagrassa";
    case InstanceId::quad5: return "quad5";
    case InstanceId::gcd_supported: {
        std::string s = "gcd-supported(";
        for (std::size_t i = 0; i < support_.size(); ++i) {
            if (i) s += ",";
            s += support_[i].get_str();
        }
        return s + ")";
    }
    }
    return "?";
}

bool Instance::in_support(const Int& n) const {
    if (id_ != InstanceId::gcd_supported) return true;
    if (n == 0) return true;
    Int rest = n;
    for (const auto& p : support_) {
        Int q;
        mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    }
    return rest == 1;
}

void require_same(const Instance& a, const Instance& b) {
    if (!(a == b)) raise(Errc::InstanceMismatch, a.name() + " vs " + b.name());
}

} // namespace semideal
