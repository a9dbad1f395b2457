#include "semideal/laws.hpp"

#include "semideal/error.hpp"
#include "semideal/sampling.hpp"
#include "semideal/spectrum.hpp"

#include <array>
#include <map>

namespace semideal {

namespace {

struct LawName {
    LawId id;
    std::string_view name;
};

constexpr std::array<LawName, 12> law_names{{
    {LawId::dedekind_identity, "dedekind-identity"},
    {LawId::dedekind2_law_1, "dedekind2-law-1"},
    {LawId::dedekind2_law_2, "dedekind2-law-2"},
    {LawId::dedekind2_law_3, "dedekind2-law-3"},
    {LawId::dedekind2_law_4, "dedekind2-law-4"},
    {LawId::dedekind2_law_5, "dedekind2-law-5"},
    {LawId::dedekind2_law_6, "dedekind2-law-6"},
    {LawId::distributive_lattice, "distributive-lattice"},
    {LawId::coprime_identities, "coprime-identities"},
    {LawId::reyes, "reyes"},
    {LawId::quotient_absorb, "quotient-absorb"},
    {LawId::contains_iff_divides, "contains-iff-divides"},
}};

const char* const names3[] = {"a", "b", "c"};

Ideal sum(const Ideal& a, const Ideal& b) { return ideal_sum(a, b); }
Ideal mul(const Ideal& a, const Ideal& b) { return ideal_product(a, b); }
Ideal meet(const Ideal& a, const Ideal& b) { return ideal_intersect(a, b); }
Ideal quo(const Ideal& a, const Ideal& b) { return ideal_quotient(a, b); }

LawWitness make_witness(std::span<const Ideal> inputs, const Ideal& lhs, const Ideal& rhs, std::string clause) {
    LawWitness w;
    for (std::size_t k = 0; k < inputs.size(); ++k) {
        w.inputs.push_back(std::string(names3[k]) + " = " + inputs[k].to_string());
        w.ideals.push_back(inputs[k]);
    }
    w.lhs = lhs.to_string();
    w.rhs = rhs.to_string();
    w.clause = std::move(clause);
    return w;
}

LawOutcome compare(std::span<const Ideal> in, const Ideal& lhs, const Ideal& rhs, std::string clause) {
    LawOutcome out;
    if (lhs != rhs) out.violation = make_witness(in, lhs, rhs, std::move(clause));
    return out;
}

std::vector<Ideal> small_pool(const Instance& inst) {
    std::vector<Ideal> pool;
    auto nat = [&](std::initializer_list<int> gens) {
        std::vector<Int> v;
        for (int g : gens) v.push_back(Int(g));
        pool.push_back(Ideal::n0(NatIdeal::generated_by(v)));
    };
    switch (inst.id()) {
    case InstanceId::n0:
        for (int g = 1; g <= 6; ++g) nat({g});
        nat({2, 3});
        nat({3, 4, 5});
        nat({2, 5});
        break;
    case InstanceId::gcd:
        for (int g : {1, 2, 3, 4, 6, 12, 5, 30}) pool.push_back(Ideal::gcd(inst, Int(g)));
        break;
    case InstanceId::gcd_supported:
        for (const auto& l : spectrum(inst, 0)) pool.push_back(label_ideal(inst, l));
        pool.insert(pool.begin(), Ideal::unit(inst));
        {
            std::size_t primes = pool.size();
            for (std::size_t i = 1; i < primes; ++i)
                for (std::size_t j = i; j < primes; ++j) pool.push_back(mul(pool[i], pool[j]));
        }
        break;
    case InstanceId::dvs:
        for (int n = 0; n <= 4; ++n) pool.push_back(Ideal::dvs(DvsValue::power(n)));
        break;
    case InstanceId::lagrassa:
        pool.push_back(Ideal::lagrassa(LaGrassaIdeal::u));
        pool.push_back(Ideal::lagrassa(LaGrassaIdeal::all));
        break;
    case InstanceId::quad5: {
        pool.push_back(Ideal::unit(inst));
        for (const auto& l : spectrum(inst, 5)) pool.push_back(label_ideal(inst, l));
        pool.push_back(Ideal::quad(QuadIdeal::principal(Int(2))));
        pool.push_back(Ideal::quad(QuadIdeal::principal(QuadNumber{Int(1), Int(1)})));
        break;
    }
    }
    return pool;
}

// Shrink candidates for one ideal, most aggressive first.
std::vector<Ideal> shrink_candidates(const Ideal& i) {
    std::vector<Ideal> out;
    const auto& inst = i.instance();
    switch (inst.id()) {
    case InstanceId::n0: {
        auto gens = i.nat().minimal_generators();
        if (gens.size() > 1) {
            std::vector<Int> rest(gens.begin(), gens.end() - 1);
            out.push_back(Ideal::n0(NatIdeal::generated_by(rest)));
        }
        for (std::size_t k = gens.size(); k-- > 0;) {
            if (gens[k] <= 1) continue;
            auto v = gens;
            v[k] -= 1;
            out.push_back(Ideal::n0(NatIdeal::generated_by(v)));
        }
        break;
    }
    case InstanceId::gcd:
    case InstanceId::gcd_supported:
        if (i.generator() > 1) {
            auto factors = factorize(i.generator());
            for (auto it = factors.rbegin(); it != factors.rend(); ++it)
                out.push_back(Ideal::gcd(inst, i.generator() / it->first));
        }
        break;
    case InstanceId::dvs:
        if (*i.dvs().exponent > 0) out.push_back(Ideal::dvs(DvsValue::power(*i.dvs().exponent - 1)));
        break;
    default:
        break;
    }
    return out;
}

std::vector<Ideal> shrink(LawId law, std::vector<Ideal> tuple, LawWitness& witness) {
    for (int round = 0; round < 500; ++round) {
        bool improved = false;
        for (std::size_t k = 0; k < tuple.size() && !improved; ++k) {
            for (const auto& cand : shrink_candidates(tuple[k])) {
                auto trial = tuple;
                trial[k] = cand;
                LawOutcome o;
                try {
                    o = evaluate_law(law, trial);
                } catch (const Error& e) {
                    if (e.code() == Errc::ResourceLimit) continue;
                    throw;
                }
                if (!o.skipped && o.violation) {
                    tuple = std::move(trial);
                    witness = *o.violation;
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) break;
    }
    return tuple;
}

} // namespace

std::string_view to_string(LawId law) noexcept {
    for (const auto& n : law_names)
        if (n.id == law) return n.name;
    return "?";
}

LawId parse_law(std::string_view text) {
    for (const auto& n : law_names)
        if (n.name == text) return n.id;
    raise(Errc::UnknownLaw, "unknown law '" + std::string(text) + "'");
}

const std::vector<LawId>& all_laws() {
    static const std::vector<LawId> laws = [] {
        std::vector<LawId> v;
        for (const auto& n : law_names) v.push_back(n.id);
        return v;
    }();
    return laws;
}

bool law_is_universal(LawId law) noexcept {
    switch (law) {
    case LawId::dedekind_identity:
    case LawId::coprime_identities:
    case LawId::reyes:
    case LawId::quotient_absorb:
        return true;
    default:
        return false;
    }
}

std::size_t law_arity(LawId law) noexcept {
    switch (law) {
    case LawId::dedekind2_law_1: return 1;
    case LawId::dedekind2_law_3:
    case LawId::dedekind2_law_5:
    case LawId::reyes:
    case LawId::quotient_absorb:
    case LawId::contains_iff_divides:
    case LawId::coprime_identities:
        return 2;
    default: return 3;
    }
}

LawOutcome evaluate_law(LawId law, std::span<const Ideal> in) {
    if (in.size() != law_arity(law) || law == LawId::coprime_identities)
        raise(Errc::InvalidArgument, "wrong input tuple for " + std::string(to_string(law)));
    const Ideal& a = in[0];
    switch (law) {
    case LawId::dedekind_identity: {
        const Ideal &b = in[1], &c = in[2];
        Ideal lhs = mul(sum(sum(a, b), c), sum(sum(mul(b, c), mul(c, a)), mul(a, b)));
        Ideal rhs = mul(mul(sum(b, c), sum(c, a)), sum(a, b));
        return compare(in, lhs, rhs, "(a+b+c)(bc+ca+ab) = (b+c)(c+a)(a+b)");
    }
    case LawId::dedekind2_law_1: {
        if (a.is_zero()) return {true, std::nullopt};
        Ideal x = Ideal::principal(a.generators().front());
        return compare(in, mul(a, quo(x, a)), x, "a[(x):a] = (x), x = " + a.generators().front().to_string());
    }
    case LawId::dedekind2_law_2: {
        const Ideal &b = in[1], &c = in[2];
        return compare(in, mul(a, meet(b, c)), meet(mul(a, b), mul(a, c)), "a(b&c) = ab&ac");
    }
    case LawId::dedekind2_law_3: {
        const Ideal& b = in[1];
        return compare(in, mul(sum(a, b), meet(a, b)), mul(a, b), "(a+b)(a&b) = ab");
    }
    case LawId::dedekind2_law_4: {
        const Ideal &b = in[1], &c = in[2];
        if (c.is_zero()) return {true, std::nullopt};
        return compare(in, quo(sum(a, b), c), sum(quo(a, c), quo(b, c)), "[(a+b):c] = [a:c]+[b:c]");
    }
    case LawId::dedekind2_law_5: {
        const Ideal& b = in[1];
        if (a.is_zero() || b.is_zero()) return {true, std::nullopt};
        return compare(in, sum(quo(a, b), quo(b, a)), Ideal::unit(a.instance()), "[a:b]+[b:a] = S");
    }
    case LawId::dedekind2_law_6: {
        const Ideal &b = in[1], &c = in[2];
        Ideal ab = meet(a, b);
        if (ab.is_zero()) return {true, std::nullopt};
        return compare(in, quo(c, ab), sum(quo(c, a), quo(c, b)), "[c:a&b] = [c:a]+[c:b]");
    }
    case LawId::distributive_lattice: {
        const Ideal &b = in[1], &c = in[2];
        auto first = compare(in, meet(a, sum(b, c)), sum(meet(a, b), meet(a, c)), "a&(b+c) = a&b + a&c");
        if (first.violation) return first;
        return compare(in, sum(a, meet(b, c)), meet(sum(a, b), sum(a, c)), "a+(b&c) = (a+b)&(a+c)");
    }
    case LawId::reyes: {
        const Ideal& b = in[1];
        if (b.is_zero() || !is_invertible(b)) return {true, std::nullopt};
        Ideal inner = meet(a, b);
        auto out = compare(in, inner, mul(b, quo(inner, b)), "a&b = b[(a&b):b] for invertible b");
        return out;
    }
    case LawId::quotient_absorb: {
        const Ideal& b = in[1];
        if (a.is_zero()) return {true, std::nullopt};
        Ideal ab = mul(a, b);
        return compare(in, mul(quo(ab, a), a), ab, "[ab:a]a = ab");
    }
    case LawId::contains_iff_divides: {
        const Ideal& b = in[1];
        if (a.is_zero()) return {true, std::nullopt};
        Ideal inner = meet(a, b);
        LawOutcome out;
        if (!divides(a, inner)) {
            out.violation = make_witness(in, mul(a, quo(inner, a)), inner,
                                         "a contains a&b = " + inner.to_string() + " but does not divide it");
            out.violation->ideals.push_back(inner);
        }
        return out;
    }
    case LawId::coprime_identities:
        break;
    }
    raise(Errc::InternalError, "unhandled law");
}

std::optional<LawWitness> coprime_check(std::span<const Ideal> maximals, std::span<const unsigned> e,
                                        std::span<const unsigned> f) {
    if (maximals.empty() || maximals.size() != e.size() || e.size() != f.size())
        raise(Errc::InvalidArgument, "coprime check needs matching exponent vectors");
    const auto& inst = maximals.front().instance();
    auto compose = [&](auto exponent) {
        Ideal out = Ideal::unit(inst);
        for (std::size_t k = 0; k < maximals.size(); ++k) out = mul(out, ideal_power(maximals[k], exponent(k)));
        return out;
    };
    Ideal a = compose([&](std::size_t k) { return e[k]; });
    Ideal b = compose([&](std::size_t k) { return f[k]; });
    std::array<std::pair<Ideal, Ideal>, 3> clauses{{
        {sum(a, b), compose([&](std::size_t k) { return std::min(e[k], f[k]); })},
        {meet(a, b), compose([&](std::size_t k) { return std::max(e[k], f[k]); })},
        {mul(a, b), compose([&](std::size_t k) { return e[k] + f[k]; })},
    }};
    const char* names[] = {"sum exponents are min", "intersection exponents are max", "product exponents add"};
    for (std::size_t c = 0; c < clauses.size(); ++c) {
        if (clauses[c].first == clauses[c].second) continue;
        std::array<Ideal, 2> in{a, b};
        auto w = make_witness(in, clauses[c].first, clauses[c].second, names[c]);
        std::string ev = "e = (", fv = "f = (";
        for (std::size_t k = 0; k < e.size(); ++k) {
            ev += (k ? "," : "") + std::to_string(e[k]);
            fv += (k ? "," : "") + std::to_string(f[k]);
        }
        w.inputs.push_back(ev + ")");
        w.inputs.push_back(fv + ")");
        return w;
    }
    return std::nullopt;
}

namespace {

LawReport check_coprime(const Instance& inst, const LawBudget& budget, LawReport report) {
    std::vector<Ideal> maximals;
    for (const auto& l : spectrum(inst, 7)) {
        Ideal m = label_ideal(inst, l);
        if (is_maximal(m)) maximals.push_back(m);
        if (maximals.size() == 4) break;
    }
    std::size_t n = maximals.size();
    auto run = [&](const std::vector<unsigned>& e, const std::vector<unsigned>& f) {
        ++report.trials;
        auto w = coprime_check(maximals, e, f);
        if (w) {
            report.status = LawStatus::fail;
            report.witness = std::move(w);
        }
        return !report.witness.has_value();
    };
    for (std::size_t k = 0; k < n; ++k)
        for (unsigned x = 0; x <= 2; ++x)
            for (unsigned y = 0; y <= 2; ++y) {
                std::vector<unsigned> e(n, 0), f(n, 0);
                e[k] = x;
                f[k] = y;
                if (!run(e, f)) return report;
            }
    Rng rng(budget.seed);
    for (std::uint64_t t = 0; t < budget.trials; ++t) {
        std::vector<unsigned> e(n), f(n);
        for (std::size_t k = 0; k < n; ++k) {
            e[k] = static_cast<unsigned>(rng.below(5));
            f[k] = static_cast<unsigned>(rng.below(5));
        }
        if (!run(e, f)) return report;
    }
    return report;
}

} // namespace

LawReport check_law(const Instance& inst, LawId law, const LawBudget& budget) {
    LawReport report;
    report.law = std::string(to_string(law));
    report.instance = inst.name();
    report.seed = budget.seed;
    if (law == LawId::coprime_identities) return check_coprime(inst, budget, std::move(report));

    std::size_t arity = law_arity(law);
    auto fail_with = [&](std::vector<Ideal> tuple, LawWitness w) {
        shrink(law, std::move(tuple), w);
        report.status = LawStatus::fail;
        report.witness = std::move(w);
    };
    auto run = [&](std::vector<Ideal> tuple) {
        ++report.trials;
        LawOutcome o = evaluate_law(law, tuple);
        if (o.skipped) {
            ++report.skipped;
            return true;
        }
        if (o.violation) {
            fail_with(std::move(tuple), std::move(*o.violation));
            return false;
        }
        return true;
    };

    auto pool = small_pool(inst);
    std::vector<std::size_t> idx(arity, 0);
    for (bool done = pool.empty(); !done;) {
        std::vector<Ideal> tuple;
        for (auto k : idx) tuple.push_back(pool[k]);
        if (!run(std::move(tuple))) return report;
        // odometer with the last position fastest
        done = true;
        for (std::size_t pos = arity; pos-- > 0;) {
            if (++idx[pos] < pool.size()) {
                done = false;
                break;
            }
            idx[pos] = 0;
        }
    }

    Rng rng(budget.seed);
    for (std::uint64_t t = 0; t < budget.trials; ++t) {
        std::vector<Ideal> tuple;
        for (std::size_t k = 0; k < arity; ++k) tuple.push_back(random_ideal(inst, rng));
        if (!run(std::move(tuple))) return report;
    }
    return report;
}

LawReport check_semidomain(const Instance& inst, std::uint64_t bound) {
    LawReport report;
    report.law = "semidomain";
    report.instance = inst.name();
    auto elems = enumerate_elements(inst, bound);
    for (const auto& a : elems) {
        if (a.is_zero()) continue;
        std::map<Element, Element> seen;
        for (const auto& b : elems) {
            ++report.trials;
            Element ab = element_mul(a, b);
            auto [it, fresh] = seen.emplace(ab, b);
            if (fresh) continue;
            LawWitness w;
            w.inputs = {"a = " + a.to_string(), "b = " + it->second.to_string(), "c = " + b.to_string()};
            w.lhs = "ab = " + ab.to_string();
            w.rhs = "ac = " + ab.to_string();
            w.clause = "ab = ac with a != 0 and b != c";
            w.elements = {a, it->second, b};
            report.status = LawStatus::fail;
            report.witness = std::move(w);
            return report;
        }
    }
    return report;
}

} // namespace semideal
