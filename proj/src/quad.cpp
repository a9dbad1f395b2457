#include "semideal/quad.hpp"

#include "semideal/error.hpp"

#include <algorithm>

namespace semideal {

std::string QuadNumber::to_string() const {
    if (y == 0) return x.get_str();
    std::string s = x == 0 ? "" : x.get_str();
    if (y < 0)
        s += "-";
    else if (!s.empty())
        s += "+";
    Int ay = abs(y);
    if (ay != 1) s += ay.get_str();
    return s + "w";
}

QuadIdeal QuadIdeal::from_fields(const Int& g, const Int& a, const Int& b) {
    if (g < 1 || a < 1 || b < 0 || b >= a)
        raise(Errc::InvalidArgument, "quadratic ideal fields out of range");
    if (mod(Int(b * b + 5), a) != 0)
        raise(Errc::InvalidArgument, "a must divide b^2 + 5 for an ideal of Z[w]");
    QuadIdeal q;
    q.g_ = g;
    q.a_ = a;
    q.b_ = b;
    return q;
}

QuadIdeal QuadIdeal::principal(const QuadNumber& x) {
    QuadNumber gens[] = {x};
    return qi_normalize(gens);
}

std::vector<QuadNumber> QuadIdeal::basis() const {
    if (is_zero()) return {};
    return {QuadNumber{g_ * a_, 0}, QuadNumber{g_ * b_, g_}};
}

QuadIdeal QuadIdeal::conjugate() const {
    if (is_zero()) return *this;
    QuadIdeal q = *this;
    q.b_ = mod(Int(-b_), a_);
    return q;
}

bool QuadIdeal::contains(const QuadNumber& x) const {
    if (x.is_zero()) return true;
    if (is_zero()) return false;
    if (mod(x.x, g_) != 0 || mod(x.y, g_) != 0) return false;
    Int xr = x.x / g_, yr = x.y / g_;
    return mod(Int(xr - yr * b_), a_) == 0;
}

bool QuadIdeal::contains(const QuadIdeal& other) const {
    for (const auto& v : other.basis())
        if (!contains(v)) return false;
    return true;
}

QuadIdeal QuadIdeal::divided_by(const Int& n) const {
    if (is_zero()) return *this;
    if (n <= 0 || mod(g_, n) != 0) raise(Errc::InternalError, "ideal not divisible by " + n.get_str());
    QuadIdeal q = *this;
    q.g_ = g_ / n;
    return q;
}

QuadIdeal QuadIdeal::scaled_by(const Int& n) const {
    if (n == 0) return zero();
    QuadIdeal q = *this;
    q.g_ = g_ * abs(n);
    return q;
}

std::string QuadIdeal::to_string() const {
    if (is_zero()) return "(0)";
    return "(" + g_.get_str() + "," + a_.get_str() + "," + b_.get_str() + ")";
}

namespace {

struct Row {
    Int x, y;
    std::vector<Int> coeff;
};

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void sub_multiple(Row& dst, const Row& src, const Int& q) {
    dst.x -= q * src.x;
    dst.y -= q * src.y;
    for (std::size_t k = 0; k < dst.coeff.size(); ++k) dst.coeff[k] -= q * src.coeff[k];
}

void negate(Row& r) {
    r.x = -r.x;
    r.y = -r.y;
    for (auto& c : r.coeff) c = -c;
}

// Euclid on one coordinate until at most one row has it nonzero; returns
// the index of that row or -1.
template <typename Get>
int reduce_column(std::vector<Row>& rows, std::vector<int>& active, Get get) {
    for (;;) {
        int pivot = -1;
        for (int i : active)
            if (get(rows[i]) != 0 && (pivot < 0 || abs(get(rows[i])) < abs(get(rows[pivot])))) pivot = i;
        if (pivot < 0) return -1;
        bool changed = false;
        for (int i : active) {
            if (i == pivot || get(rows[i]) == 0) continue;
            sub_multiple(rows[i], rows[pivot], floor_div(get(rows[i]), get(rows[pivot])));
            changed = true;
        }
        if (!changed) {
            if (get(rows[pivot]) < 0) negate(rows[pivot]);
            return pivot;
        }
    }
}

struct Hnf {
    // lattice = A*Z(1,0) + Z(B,C); A == 0 or C == 0 means rank < 2
    Row ax, bc;
    bool has_ax = false, has_bc = false;
};

Hnf hermite(const std::vector<QuadNumber>& gens) {
    std::vector<Row> rows;
    rows.reserve(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        Row r{gens[k].x, gens[k].y, std::vector<Int>(gens.size(), 0)};
        r.coeff[k] = 1;
        rows.push_back(std::move(r));
    }
    std::vector<int> active(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) active[i] = static_cast<int>(i);
    Hnf h;
    int py = reduce_column(rows, active, [](const Row& r) -> const Int& { return r.y; });
    if (py >= 0) {
        h.bc = rows[py];
        h.has_bc = true;
        active.erase(std::find(active.begin(), active.end(), py));
    }
    int px = reduce_column(rows, active, [](const Row& r) -> const Int& { return r.x; });
    if (px >= 0) {
        h.ax = rows[px];
        h.has_ax = true;
        if (h.has_bc) sub_multiple(h.bc, h.ax, floor_div(h.bc.x, h.ax.x));
    }
    return h;
}

} // namespace

QuadIdeal qi_normalize(std::span<const QuadNumber> gens) {
    std::vector<QuadNumber> module;
    for (const auto& x : gens) {
        if (x.is_zero()) continue;
        module.push_back(x);
        module.push_back(x * QuadNumber{0, 1});
    }
    if (module.empty()) return QuadIdeal::zero();
    Hnf h = hermite(module);
    if (!h.has_ax || !h.has_bc) raise(Errc::InternalError, "ideal lattice has rank < 2");
    const Int& A = h.ax.x;
    const Int& B = h.bc.x;
    const Int& C = h.bc.y;
    if (mod(A, C) != 0 || mod(B, C) != 0) raise(Errc::InternalError, "module is not an ideal (content)");
    Int a = A / C, b = B / C;
    if (mod(Int(b * b + 5), a) != 0) raise(Errc::InternalError, "module is not an ideal (a does not divide b^2+5)");
    return QuadIdeal::from_fields(C, a, b);
}

bool qi_lattice_solve(std::span<const QuadNumber> rows, const QuadNumber& target, std::vector<Int>& coeffs) {
    Hnf h = hermite(std::vector<QuadNumber>(rows.begin(), rows.end()));
    coeffs.assign(rows.size(), 0);
    Int tx = target.x, ty = target.y;
    if (ty != 0) {
        if (!h.has_bc || mod(ty, h.bc.y) != 0) return false;
        Int k = ty / h.bc.y;
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += k * h.bc.coeff[i];
        tx -= k * h.bc.x;
    }
    if (tx != 0) {
        if (!h.has_ax || mod(tx, h.ax.x) != 0) return false;
        Int k = tx / h.ax.x;
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += k * h.ax.coeff[i];
    }
    return true;
}

QuadIdeal qi_mul(const QuadIdeal& i, const QuadIdeal& j) {
    if (i.is_zero() || j.is_zero()) return QuadIdeal::zero();
    std::vector<QuadNumber> prods;
    for (const auto& x : i.basis())
        for (const auto& y : j.basis()) prods.push_back(x * y);
    return qi_normalize(prods);
}

QuadIdeal qi_add(const QuadIdeal& i, const QuadIdeal& j) {
    auto gens = i.basis();
    for (const auto& y : j.basis()) gens.push_back(y);
    return qi_normalize(gens);
}

QuadIdeal qi_intersect(const QuadIdeal& i, const QuadIdeal& j) {
    if (i.is_zero() || j.is_zero()) return QuadIdeal::zero();
    // I cap J = IJ / (I + J) in a Dedekind domain; (I+J)^-1 = conj(I+J) / N(I+J).
    QuadIdeal s = qi_add(i, j);
    return qi_mul(qi_mul(i, j), s.conjugate()).divided_by(s.norm());
}

QuadIdeal qi_quotient(const QuadIdeal& i, const QuadIdeal& j) {
    if (j.is_zero()) raise(Errc::ZeroDivisorIdeal, "residual by the zero ideal");
    if (i.is_zero()) return QuadIdeal::zero();
    Int n = j.norm();
    QuadIdeal k = qi_mul(i, j.conjugate());   // = n * (I J^-1)
    return qi_intersect(k, QuadIdeal::principal(n)).divided_by(n);
}

QuadIdeal qi_pow(const QuadIdeal& i, unsigned long k) {
    QuadIdeal result = QuadIdeal::unit(), base = i;
    while (k) {
        if (k & 1) result = qi_mul(result, base);
        k >>= 1;
        if (k) base = qi_mul(base, base);
    }
    return result;
}

SplitType qi_split_type(const Int& p) {
    if (!is_prime(p)) raise(Errc::NotPrime, p.get_str() + " is not prime");
    if (p == 2 || p == 5) return SplitType::ramified;
    Int m5 = mod(Int(-5), p);
    return mpz_legendre(m5.get_mpz_t(), p.get_mpz_t()) == 1 ? SplitType::split : SplitType::inert;
}

namespace {

Int smaller_root(const Int& p) {
    Int r;
    if (!sqrt_mod(Int(-5), p, r)) raise(Errc::InternalError, "no square root of -5 mod " + p.get_str());
    Int other = p - r;
    return r < other ? r : other;
}

} // namespace

std::vector<QuadIdeal> qi_prime_split(const Int& p) {
    std::vector<QuadIdeal> out;
    switch (qi_split_type(p)) {
    case SplitType::ramified: {
        QuadIdeal q = QuadIdeal::from_fields(1, p, mod(Int(-5), p) == 0 ? Int(0) : Int(1));
        if (q.norm() != p || qi_mul(q, q) != QuadIdeal::principal(p))
            raise(Errc::InternalError, "ramified certificate failed at " + p.get_str());
        out.push_back(q);
        break;
    }
    case SplitType::split: {
        Int r = smaller_root(p);
        QuadIdeal q1 = QuadIdeal::from_fields(1, p, r), q2 = QuadIdeal::from_fields(1, p, p - r);
        if (q1 == q2 || qi_mul(q1, q2) != QuadIdeal::principal(p))
            raise(Errc::InternalError, "split certificate failed at " + p.get_str());
        out.push_back(q1);
        out.push_back(q2);
        break;
    }
    case SplitType::inert: {
        Int r;
        if (sqrt_mod(Int(-5), p, r)) raise(Errc::InternalError, "inert certificate failed at " + p.get_str());
        out.push_back(QuadIdeal::principal(p));
        break;
    }
    }
    return out;
}

QuadIdeal qi_prime(const PrimeLabel& label) {
    if (label.instance != InstanceId::quad5 || label.kind != PrimeLabel::Kind::numeric)
        raise(Errc::UnknownPrime, "not a quad5 label: " + label.to_string());
    if (!is_prime(label.p)) raise(Errc::UnknownPrime, label.to_string() + " does not name a prime");
    auto primes = qi_prime_split(label.p);
    if (primes.size() == 2) {
        if (label.tag != 1 && label.tag != 2) raise(Errc::UnknownPrime, label.to_string() + " needs tag .1 or .2");
        return primes[label.tag - 1];
    }
    if (label.tag != 0) raise(Errc::UnknownPrime, label.to_string() + ": prime above p is unique");
    return primes.front();
}

ExponentVector qi_factor(const QuadIdeal& i) {
    if (i.is_zero()) raise(Errc::EmptyIdeal, "cannot factor the zero ideal");
    ExponentVector v;
    for (const auto& [p, e] : factorize(i.g())) {
        Int ee = from_u64(e);
        switch (qi_split_type(p)) {
        case SplitType::ramified: v.add(PrimeLabel::numeric(InstanceId::quad5, p), 2 * ee); break;
        case SplitType::inert: v.add(PrimeLabel::numeric(InstanceId::quad5, p), ee); break;
        case SplitType::split:
            v.add(PrimeLabel::numeric(InstanceId::quad5, p, 1), ee);
            v.add(PrimeLabel::numeric(InstanceId::quad5, p, 2), ee);
            break;
        }
    }
    for (const auto& [p, f] : factorize(i.a())) {
        Int ff = from_u64(f);
        switch (qi_split_type(p)) {
        case SplitType::ramified: v.add(PrimeLabel::numeric(InstanceId::quad5, p), ff); break;
        case SplitType::inert: raise(Errc::InternalError, "inert prime divides a primitive ideal");
        case SplitType::split: {
            int tag = mod(i.b(), p) == smaller_root(p) ? 1 : 2;
            v.add(PrimeLabel::numeric(InstanceId::quad5, p, tag), ff);
            break;
        }
        }
    }
    if (qi_compose(v) != i) raise(Errc::InternalError, "factorization does not compose back to " + i.to_string());
    return v;
}

QuadIdeal qi_compose(const ExponentVector& v) {
    QuadIdeal r = QuadIdeal::unit();
    for (const auto& [label, e] : v.entries()) {
        if (e < 0) raise(Errc::NotIntegral, "negative exponent in integral composition");
        r = qi_mul(r, qi_pow(qi_prime(label), to_u64(e)));
    }
    return r;
}

} // namespace semideal

namespace semideal {

std::vector<QuadIdeal> qi_enumerate(std::uint64_t max_norm) {
    std::vector<QuadIdeal> out;
    for (std::uint64_t g = 1; g * g <= max_norm; ++g) {
        for (std::uint64_t a = 1; g * g * a <= max_norm; ++a) {
            for (std::uint64_t b = 0; b < a; ++b)
                if ((b * b + 5) % a == 0) out.push_back(QuadIdeal::from_fields(from_u64(g), from_u64(a), from_u64(b)));
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const QuadIdeal& x, const QuadIdeal& y) {
        return x.norm() < y.norm();
    });
    return out;
}

} // namespace semideal
