#include "semideal/content.hpp"

#include "semideal/error.hpp"
#include "semideal/sampling.hpp"

#include <algorithm>

namespace semideal {

Ideal content(const Polynomial& f) {
    if (f.is_zero()) return Ideal::zero(f.instance());
    return ideal_from_generators(f.instance(), f.coefficients());
}

ContentReport gaussian_check(const Polynomial& f, const Polynomial& g) {
    require_same(f.instance(), g.instance());
    Ideal cf = content(f), cg = content(g), cfg = content(poly_mul(f, g));
    bool gaussian = cfg == ideal_product(cf, cg);
    ContentReport r{f.instance().name(), f, g, cf, cg, cfg, gaussian, std::nullopt};
    if (gaussian) r.dm_exponent = 0;
    return r;
}

unsigned dm_exponent(const Polynomial& f, const Polynomial& g) {
    require_same(f.instance(), g.instance());
    if (f.is_zero()) raise(Errc::InvalidArgument, "f must be nonzero");
    Ideal cf = content(f), cg = content(g), cfg = content(poly_mul(f, g));
    long cap = std::max(g.degree(), 0L) + 1;
    Ideal power = Ideal::unit(f.instance());   // c(f)^n
    for (long n = 0; n <= cap; ++n) {
        if (ideal_product(ideal_product(power, cf), cg) == ideal_product(power, cfg)) return static_cast<unsigned>(n);
        power = ideal_product(power, cf);
    }
    raise(Errc::DMCapExceeded, "no exponent <= " + std::to_string(cap) + " for f = " + f.to_string() +
                                   ", g = " + g.to_string());
}

namespace {

using Vec = std::vector<LaGrassa>;

LaGrassa add(LaGrassa x, LaGrassa y) { return element_add(Element::lagrassa(x), Element::lagrassa(y)).lagrassa(); }
LaGrassa mul(LaGrassa x, LaGrassa y) { return element_mul(Element::lagrassa(x), Element::lagrassa(y)).lagrassa(); }

// Elements of L^n indexed in base 3 with digit order 0, u, 1.
std::vector<Vec> lagrassa_vectors(unsigned n) {
    std::vector<Vec> out;
    std::size_t total = 1;
    for (unsigned k = 0; k < n; ++k) total *= 3;
    const LaGrassa digits[] = {LaGrassa::zero, LaGrassa::u, LaGrassa::one};
    for (std::size_t code = 0; code < total; ++code) {
        Vec v;
        for (std::size_t c = code, k = 0; k < n; ++k, c /= 3) v.push_back(digits[c % 3]);
        out.push_back(v);
    }
    return out;
}

std::size_t index_of(const std::vector<Vec>& all, const Vec& v) {
    return static_cast<std::size_t>(std::find(all.begin(), all.end(), v) - all.begin());
}

using Mask = std::uint32_t;

// Smallest subsemimodule containing the vectors in mask.
Mask closure(const std::vector<Vec>& all, Mask mask) {
    mask |= 1;   // zero vector
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (!(mask >> i & 1)) continue;
            for (auto s : {LaGrassa::u, LaGrassa::one}) {
                Vec sv;
                for (auto x : all[i]) sv.push_back(mul(s, x));
                Mask bit = Mask{1} << index_of(all, sv);
                if (!(mask & bit)) mask |= bit, grew = true;
            }
            for (std::size_t j = 0; j < all.size(); ++j) {
                if (!(mask >> j & 1)) continue;
                Vec w;
                for (std::size_t k = 0; k < all[i].size(); ++k) w.push_back(add(all[i][k], all[j][k]));
                Mask bit = Mask{1} << index_of(all, w);
                if (!(mask & bit)) mask |= bit, grew = true;
            }
        }
    }
    return mask;
}

std::string render(const std::vector<Vec>& all, Mask mask, unsigned n) {
    if (n == 1) {
        if (mask == 1) return "(0)";
        if (mask == 3) return "(u)";
        if (mask == 7) return "L";
    }
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        if (!first) s += ",";
        first = false;
        s += "(";
        for (std::size_t k = 0; k < all[i].size(); ++k) s += (k ? "," : "") + to_string(all[i][k]);
        s += ")";
    }
    return s + "}";
}

LawReport lagrassa_cancellation(const Ideal& a, unsigned n, LawReport report) {
    auto all = lagrassa_vectors(n);
    std::vector<Mask> modules;
    for (Mask m = 0; m < (Mask{1} << all.size()); ++m)
        if ((m & 1) && closure(all, m) == m) modules.push_back(m);
    std::vector<LaGrassa> scalars;
    for (const auto& e : enumerate_elements(a.instance(), 0))
        if (ideal_membership(a, e)) scalars.push_back(e.lagrassa());
    auto times = [&](Mask p) {
        Mask out = 1;
        for (auto s : scalars)
            for (std::size_t i = 0; i < all.size(); ++i) {
                if (!(p >> i & 1)) continue;
                Vec sv;
                for (auto x : all[i]) sv.push_back(mul(s, x));
                out |= Mask{1} << index_of(all, sv);
            }
        return closure(all, out);
    };
    for (std::size_t i = 0; i < modules.size(); ++i)
        for (std::size_t j = i + 1; j < modules.size(); ++j) {
            ++report.trials;
            Mask ap = times(modules[i]), aq = times(modules[j]);
            if (ap != aq) continue;
            LawWitness w;
            w.inputs = {"a = " + a.to_string(), "P = " + render(all, modules[i], n), "Q = " + render(all, modules[j], n)};
            w.lhs = render(all, ap, n);
            w.rhs = render(all, aq, n);
            w.clause = "aP = aQ with P != Q";
            w.ideals = {a};
            report.status = LawStatus::fail;
            report.witness = std::move(w);
            return report;
        }
    return report;
}

} // namespace

LawReport m_cancellation_check(const Ideal& a, const ModuleSpec& spec) {
    LawReport report;
    report.law = "m-cancellation";
    report.instance = a.instance().name();
    if (const auto* power = std::get_if<LaGrassaPower>(&spec)) {
        if (a.instance().id() != InstanceId::lagrassa || power->n < 1 || power->n > 2)
            raise(Errc::Unsupported, "subsemimodules of L^n are enumerated for lagrassa with n <= 2");
        return lagrassa_cancellation(a, power->n, std::move(report));
    }
    const auto& pairs = std::get<IdealPairs>(spec);
    report.seed = pairs.seed;
    Rng rng(pairs.seed);
    for (std::uint64_t t = 0; t < pairs.trials; ++t) {
        ++report.trials;
        Ideal p = random_ideal(a.instance(), rng), q = random_ideal(a.instance(), rng);
        if (p == q) continue;
        Ideal ap = ideal_product(a, p), aq = ideal_product(a, q);
        if (ap != aq) continue;
        LawWitness w;
        w.inputs = {"a = " + a.to_string(), "P = " + p.to_string(), "Q = " + q.to_string()};
        w.lhs = ap.to_string();
        w.rhs = aq.to_string();
        w.clause = "aP = aQ with P != Q";
        w.ideals = {a, p, q};
        report.status = LawStatus::fail;
        report.witness = std::move(w);
        return report;
    }
    return report;
}

} // namespace semideal
