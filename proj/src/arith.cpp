#include "semideal/arith.hpp"

#include "semideal/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace semideal {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::InstanceMismatch: return "InstanceMismatch";
    case Errc::OutOfSupport: return "OutOfSupport";
    case Errc::ZeroDivisorIdeal: return "ZeroDivisorIdeal";
    case Errc::EmptyIdeal: return "EmptyIdeal";
    case Errc::NotMaximal: return "NotMaximal";
    case Errc::UnknownLaw: return "UnknownLaw";
    case Errc::NotFractional: return "NotFractional";
    case Errc::Unsupported: return "Unsupported";
    case Errc::UnknownPrime: return "UnknownPrime";
    case Errc::NotAMember: return "NotAMember";
    case Errc::InternalError: return "InternalError";
    case Errc::NotPrime: return "NotPrime";
    case Errc::DMCapExceeded: return "DMCapExceeded";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::NotIntegral: return "NotIntegral";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotInvertible: return "NotInvertible";
    }
    return "Unknown";
}

Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

unsigned long valuation(const Int& n, const Int& p) {
    if (n == 0 || p < 2) raise(Errc::InvalidArgument, "valuation needs n != 0 and p >= 2");
    Int rest;
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Int next_prime(const Int& n) {
    Int r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Int pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

namespace {

// Brent's variant of Pollard rho; n is composite and odd.
Int pollard_rho(const Int& n) {
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1, q = 1, ys;
        unsigned long r = 1;
        auto f = [&](const Int& v) { return mod(v * v + c, n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(128ul, r - k); ++i) {
                    y = f(y);
                    Int diff = x > y ? Int(x - y) : Int(y - x);
                    q = mod(q * diff, n);
                }
                d = gcd(q, n);
                k += 128;
            } while (k < r && d == 1);
            r *= 2;
        } while (d == 1);
        if (d == n) {
            do {
                ys = f(ys);
                Int diff = x > ys ? Int(x - ys) : Int(ys - x);
                d = gcd(diff, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_into(const Int& n, std::map<Int, unsigned long>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(Int(n / d), out);
}

} // namespace

std::vector<std::pair<Int, unsigned long>> factorize(const Int& n) {
    if (n < 1) raise(Errc::InvalidArgument, "factorize needs n >= 1");
    std::map<Int, unsigned long> found;
    Int rest = n;
    for (unsigned long p = 2; p < 10000 && rest > 1; p += (p == 2 ? 1 : 2)) {
        if (Int(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            ++found[Int(p)];
            rest /= p;
        }
    }
    factor_into(rest, found);
    return {found.begin(), found.end()};
}

bool sqrt_mod(const Int& a_in, const Int& p, Int& root) {
    Int a = mod(a_in, p);
    if (a == 0) {
        root = 0;
        return true;
    }
    if (p == 2) {
        root = a;
        return true;
    }
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return false;
    // Tonelli-Shanks
    Int q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    auto powm = [&](const Int& b, const Int& e) {
        Int r;
        mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    };
    Int c = powm(z, q);
    Int r = powm(a, Int((q + 1) / 2));
    Int t = powm(a, q);
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        Int tt = t;
        while (tt != 1) {
            tt = mod(tt * tt, p);
            ++i;
        }
        Int b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = mod(b * b, p);
        r = mod(r * b, p);
        c = mod(b * b, p);
        t = mod(t * c, p);
        m = i;
    }
    root = r;
    return true;
}

Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    auto digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
    };
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!digits(num) || !digits(den)) raise(Errc::InvalidArgument, "malformed rational '" + text + "'");
    Int d(den);
    if (d == 0) raise(Errc::InvalidArgument, "zero denominator in '" + text + "'");
    Rat q(Int(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool fits_u64(const Int& n) { return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const Int& n) {
    if (!fits_u64(n)) raise(Errc::ResourceLimit, "value does not fit in 64 bits: " + n.get_str());
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
    return v;
}

Int from_u64(std::uint64_t v) {
    Int r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return r;
}

} // namespace semideal
