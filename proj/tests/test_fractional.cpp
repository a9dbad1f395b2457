#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "semideal/error.hpp"
#include "semideal/fractional.hpp"
#include "semideal/spectrum.hpp"
#include "semideal/uft.hpp"

#include <random>

using namespace semideal;
using oracle::u64;

namespace {

struct Frac {
    u64 n, d;
};

Frac reduce(u64 n, u64 d) {
    u64 g = oracle::gcd(n, d);
    return {n / g, d / g};
}

Rat rat(Frac f) { return Rat(from_u64(f.n), from_u64(f.d)); }

FractionalIdeal gcd_frac(Frac f) { return FractionalIdeal::rational(Instance::gcd(), rat(f)); }

FractionalIdeal n0_frac(std::initializer_list<Rat> gens) {
    std::vector<Rat> g(gens.begin(), gens.end());
    for (auto& q : g) q.canonicalize();
    return frac_from(Instance::n0(), g);
}

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InternalError;
}

} // namespace

TEST_CASE("gcd fractional ideals against rational gcd and lcm") {
    std::mt19937_64 gen(17);
    std::uniform_int_distribution<u64> dist(1, 200);
    for (int k = 0; k < 500; ++k) {
        Frac a = reduce(dist(gen), dist(gen)), b = reduce(dist(gen), dist(gen));
        Frac s = reduce(oracle::gcd(a.n * b.d, b.n * a.d), a.d * b.d);
        Frac i = reduce(oracle::lcm(a.n * b.d, b.n * a.d), a.d * b.d);
        Frac p = reduce(a.n * b.n, a.d * b.d);
        Frac q = reduce(a.n * b.d, a.d * b.n);
        CHECK(frac_sum(gcd_frac(a), gcd_frac(b)) == gcd_frac(s));
        CHECK(frac_intersect(gcd_frac(a), gcd_frac(b)) == gcd_frac(i));
        CHECK(frac_product(gcd_frac(a), gcd_frac(b)) == gcd_frac(p));
        CHECK(frac_quotient(gcd_frac(a), gcd_frac(b)) == gcd_frac(q));
        Frac ratio = reduce(b.n * a.d, b.d * a.n);
        CHECK(frac_contains(gcd_frac(a), gcd_frac(b)) == (ratio.d == 1));
        auto inv = invert(gcd_frac(a));
        REQUIRE(inv.has_value());
        CHECK(inv->inverse == gcd_frac({a.d, a.n}));
        CHECK_FALSE(inv->witness.empty());
    }
}

TEST_CASE("gcd fractional printing and integrality") {
    auto f = gcd_frac({3, 2});
    CHECK(f.to_string() == "(3/2)");
    CHECK_FALSE(f.is_integral());
    CHECK(f.denominator().natural() == 2);
    CHECK(code_of([&] { f.to_ideal(); }) == Errc::NotIntegral);
    CHECK(gcd_frac({6, 1}).to_ideal() == Ideal::gcd(Instance::gcd(), Int(6)));
    std::vector<Rat> g{Rat(4, 3), Rat(2, 1)};
    CHECK(frac_from(Instance::gcd(), g) == gcd_frac({2, 3}));
    CHECK(frac_power(gcd_frac({2, 3}), 3) == gcd_frac({8, 27}));
}

TEST_CASE("gcd-supported fractions stay in the support") {
    auto sup = Instance::gcd_supported({Int(2), Int(3)});
    auto f = FractionalIdeal::rational(sup, Rat(4, 9));
    CHECK(invert(f)->inverse == FractionalIdeal::rational(sup, Rat(9, 4)));
    CHECK_THROWS_AS(FractionalIdeal::rational(sup, Rat(5, 2)), Error);
}

TEST_CASE("dvs fractional ideals are t^n, n in Z") {
    auto t = [](long n) { return FractionalIdeal::dvs(DvsValue::power(Int(n))); };
    CHECK(frac_product(t(-2), t(5)) == t(3));
    CHECK(frac_sum(t(-2), t(5)) == t(-2));
    CHECK(frac_intersect(t(-2), t(5)) == t(5));
    CHECK(frac_quotient(t(1), t(4)) == t(-3));
    CHECK(invert(t(-7))->inverse == t(7));
    CHECK(t(-2).to_string() == "(t^-2)");
    CHECK_FALSE(t(-1).is_integral());
    CHECK(t(0).is_unit());
    std::vector<Rat> g{Rat(3), Rat(1)};
    CHECK(frac_from(Instance::dvs(), g) == t(1));
}

TEST_CASE("n0 fractional ideals") {
    auto f = n0_frac({Rat(1), Rat(4, 3), Rat(5, 3)});
    CHECK(f.to_string() == "(1,4/3,5/3)");
    CHECK(f.nat().denominator == 3);
    CHECK(f.nat().numerator.to_string() == "(3,4,5)");
    CHECK(f.denominator().natural() == 3);
    CHECK_FALSE(f.is_integral());
    auto g = n0_frac({Rat(1, 2)});
    CHECK(frac_product(f, g) == n0_frac({Rat(1, 2), Rat(2, 3), Rat(5, 6)}));
    CHECK(frac_contains(n0_frac({Rat(1, 3)}), n0_frac({Rat(1)})));
    CHECK_FALSE(frac_contains(n0_frac({Rat(1)}), n0_frac({Rat(1, 3)})));
    auto image = FractionalIdeal::from_ideal(Ideal::n0(NatIdeal::generated_by(std::vector<Int>{3, 4, 5})));
    CHECK_FALSE(invert(image).has_value());
    auto principal = FractionalIdeal::from_ideal(Ideal::n0(NatIdeal::principal(Int(6))));
    auto inv = invert(principal);
    REQUIRE(inv.has_value());
    CHECK(inv->inverse == n0_frac({Rat(1, 6)}));
}

TEST_CASE("n0 fractional operations against scaled integral ones") {
    std::mt19937_64 gen(23);
    std::uniform_int_distribution<u64> value(1, 12), den(1, 6);
    for (int k = 0; k < 200; ++k) {
        u64 da = den(gen), db = den(gen);
        std::vector<Int> ga{from_u64(value(gen)), from_u64(value(gen))}, gb{from_u64(value(gen))};
        NatIdeal na = NatIdeal::generated_by(ga), nb = NatIdeal::generated_by(gb);
        Rat sa(1, from_u64(da)), sb(1, from_u64(db));
        sa.canonicalize();
        sb.canonicalize();
        auto a = FractionalIdeal::n0(sa, na), b = FractionalIdeal::n0(sb, nb);
        u64 l = oracle::lcm(da, db);
        Rat scale(1, from_u64(l));
        NatIdeal xa = na.scaled(from_u64(l / da)), xb = nb.scaled(from_u64(l / db));
        CHECK(frac_sum(a, b) == FractionalIdeal::n0(scale, nat_sum(xa, xb)));
        CHECK(frac_intersect(a, b) == FractionalIdeal::n0(scale, nat_intersect(xa, xb)));
        Rat sq(1, from_u64(l * l));
        CHECK(frac_product(a, b) == FractionalIdeal::n0(sq, nat_product(xa, xb)));
        auto q = frac_quotient(a, b);
        CHECK(frac_contains(a, frac_product(q, b)));
    }
}

TEST_CASE("frac_from_stream") {
    auto ok = frac_from_stream([](std::uint64_t n) { return Rat(from_u64(n + 1), 4); }, 4);
    CHECK(ok.nat().denominator == 4);
    CHECK(code_of([] {
              frac_from_stream([](std::uint64_t n) { return Rat(1, from_u64(oracle::lcm(1, n + 1) + n)); }, 3);
          }) == Errc::NotFractional);
    CHECK(code_of([] {
              frac_from_stream(
                  [](std::uint64_t n) {
                      Rat q(1, Int(1) << static_cast<unsigned>(n));
                      return q;
                  },
                  8);
          }) == Errc::NotFractional);
}

TEST_CASE("sandwich bounds") {
    for (const auto& f : {n0_frac({Rat(1), Rat(4, 3), Rat(5, 3)}), gcd_frac({3, 10}),
                          FractionalIdeal::dvs(DvsValue::power(Int(-4)))}) {
        auto [c, d] = sandwich(f);
        auto pc = FractionalIdeal::from_ideal(Ideal::principal(c));
        auto pd = FractionalIdeal::from_ideal(Ideal::principal(d));
        CHECK(frac_contains(f, pc));
        CHECK(frac_product(pd, f).is_integral());
    }
    CHECK(code_of([] { sandwich(FractionalIdeal::zero(Instance::gcd())); }) == Errc::EmptyIdeal);
}

TEST_CASE("quad5 fractional ideals") {
    auto p2 = qi_prime(PrimeLabel::numeric(InstanceId::quad5, Int(2)));
    auto a = FractionalIdeal::quad(Rat(1), p2);
    auto inv = invert(a);
    REQUIRE(inv.has_value());
    CHECK(frac_product(a, inv->inverse).is_unit());
    CHECK(inv->inverse.to_string() == "(1/2)(1,2,1)");
    CHECK(frac_product(FractionalIdeal::quad(Rat(1, 3), QuadIdeal::unit()), FractionalIdeal::quad(Rat(3), p2)) == a);
}

TEST_CASE("uft round trip on gcd and dvs") {
    std::mt19937_64 gen(29);
    std::uniform_int_distribution<u64> dist(1, 100000);
    for (int k = 0; k < 300; ++k) {
        Frac f = reduce(dist(gen), dist(gen));
        auto v = uft_factor(gcd_frac(f));
        CHECK(uft_compose(v, Instance::gcd()) == gcd_frac(f));
        for (const auto& [p, e] : oracle::factor(f.n))
            CHECK(v.get(PrimeLabel::numeric(InstanceId::gcd, from_u64(p))) == e);
        for (const auto& [p, e] : oracle::factor(f.d))
            CHECK(v.get(PrimeLabel::numeric(InstanceId::gcd, from_u64(p))) == -static_cast<long>(e));
    }
    auto v = uft_factor(FractionalIdeal::dvs(DvsValue::power(Int(-3))));
    CHECK(v.get(PrimeLabel::t()) == -3);
    CHECK(code_of([] { uft_factor(FractionalIdeal::unit(Instance::n0())); }) == Errc::Unsupported);
    CHECK(code_of([] { uft_factor(FractionalIdeal::zero(Instance::gcd())); }) == Errc::EmptyIdeal);
    ExponentVector bad;
    bad.set(PrimeLabel::numeric(InstanceId::gcd_supported, Int(5)), Int(1));
    CHECK(code_of([&] { uft_compose(bad, Instance::gcd_supported({Int(2), Int(3)})); }) == Errc::UnknownPrime);
}

TEST_CASE("divisors_containing and localize") {
    auto inst = Instance::gcd();
    auto divs = divisors_containing(Ideal::gcd(inst, Int(12)));
    std::vector<long> gens;
    for (const auto& d : divs) gens.push_back(d.generator().get_si());
    CHECK(gens == std::vector<long>{1, 3, 2, 6, 4, 12});
    for (long m = 1; m <= 300; ++m)
        for (long p : {2L, 3L, 5L}) {
            Ideal l = localize(inst, PrimeLabel::numeric(InstanceId::gcd, Int(p)), Ideal::gcd(inst, Int(m)));
            CHECK(*l.dvs().exponent == oracle::valuation(static_cast<u64>(m), static_cast<u64>(p)));
        }
    CHECK(code_of([&] { localize(inst, PrimeLabel::numeric(InstanceId::gcd, Int(2)), Ideal::zero(inst)); }) ==
          Errc::EmptyIdeal);
}
