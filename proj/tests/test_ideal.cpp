#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "semideal/error.hpp"
#include "semideal/ideal.hpp"
#include "semideal/sampling.hpp"
#include "semideal/spectrum.hpp"

#include <random>

using namespace semideal;
using oracle::u64;

namespace {

NatIdeal nat_ideal(const std::vector<u64>& gens) {
    std::vector<Int> g;
    for (u64 x : gens) g.push_back(from_u64(x));
    return NatIdeal::generated_by(g);
}

Ideal n0(std::initializer_list<long> gens) {
    std::vector<Int> g(gens.begin(), gens.end());
    return Ideal::n0(NatIdeal::generated_by(g));
}

std::vector<u64> random_gens(std::mt19937_64& gen) {
    std::uniform_int_distribution<u64> count(1, 3), value(1, 15);
    std::vector<u64> out(count(gen));
    for (auto& x : out) x = value(gen);
    return out;
}

void check_members(const NatIdeal& i, const std::vector<bool>& expect) {
    for (u64 n = 0; n < expect.size(); ++n) {
        CAPTURE(n);
        CHECK(i.contains(from_u64(n)) == expect[n]);
    }
}

Ideal gcd_ideal(long g) { return Ideal::gcd(Instance::gcd(), Int(g)); }

} // namespace

TEST_CASE("n0 ideals: canonical data") {
    NatIdeal i = nat_ideal({3, 4, 5});
    CHECK(i.period() == 1);
    CHECK(i.multiplicity() == 3);
    CHECK(i.conductor() == 3);
    CHECK(i.exceptionals().empty());
    CHECK(i.to_string() == "(3,4,5)");
    NatIdeal j = nat_ideal({6, 4});
    CHECK(j.period() == 2);
    CHECK(j.conductor() == 4);
    CHECK(j.to_string() == "(4,6)");
    NatIdeal k = nat_ideal({6, 9, 15});
    CHECK(k.to_string() == "(6,9)");
    CHECK(k.conductor() == 6);
    CHECK(k.exceptionals().empty());
    NatIdeal h = nat_ideal({5, 7});
    CHECK(h.conductor() == 24);
    CHECK(h.exceptionals() == std::vector<Int>{5, 7, 10, 12, 14, 15, 17, 19, 20, 21, 22});
    CHECK(nat_ideal({1, 7}) == NatIdeal::unit());
    CHECK(NatIdeal::zero().to_string() == "(0)");
    CHECK(nat_ideal({0, 0}).is_zero());
    CHECK(nat_ideal({2, 3}).min_nonzero() == 2);
    CHECK_THROWS_AS(NatIdeal::zero().min_nonzero(), Error);
}

TEST_CASE("n0 ideals: membership and minimal generators against the DP oracle") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = random_gens(gen);
        NatIdeal i = nat_ideal(g);
        CAPTURE(i.to_string());
        check_members(i, oracle::n0_members(g, 250));
        std::vector<u64> mg;
        for (const auto& x : i.minimal_generators()) mg.push_back(to_u64(x));
        CHECK(oracle::n0_members(mg, 250) == oracle::n0_members(g, 250));
        for (std::size_t k = 0; k < mg.size(); ++k) {
            auto rest = mg;
            rest.erase(rest.begin() + static_cast<long>(k));
            CHECK_FALSE(oracle::n0_members(rest, mg[k])[mg[k]]);
        }
        Int c = i.conductor();
        auto members = oracle::n0_members(g, 250);
        for (u64 n = to_u64(c); n <= 250; n += to_u64(i.period())) CHECK(members[n]);
        if (c > i.period()) CHECK_FALSE(members[to_u64(c - i.period())]);
    }
}

TEST_CASE("n0 ideals: operations against the DP oracle") {
    std::mt19937_64 gen(11);
    const u64 limit = 200;
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_gens(gen), b = random_gens(gen);
        NatIdeal ia = nat_ideal(a), ib = nat_ideal(b);
        CAPTURE(ia.to_string());
        CAPTURE(ib.to_string());
        auto joined = a;
        joined.insert(joined.end(), b.begin(), b.end());
        check_members(nat_sum(ia, ib), oracle::n0_members(joined, limit));
        check_members(nat_product(ia, ib), oracle::n0_members(oracle::pairwise_products(a, b), limit));
        auto ma = oracle::n0_members(a, limit), mb = oracle::n0_members(b, limit);
        std::vector<bool> both(limit + 1);
        for (u64 n = 0; n <= limit; ++n) both[n] = ma[n] && mb[n];
        check_members(nat_intersect(ia, ib), both);
        check_members(nat_quotient(ia, ib), oracle::n0_residual(a, b, 60));
        CHECK(ia.contains(ib) == [&] {
            auto m = oracle::n0_members(a, limit);
            for (u64 x : b)
                if (!m[x]) return false;
            return true;
        }());
    }
}

TEST_CASE("n0 quotient examples") {
    Ideal max = n0({2, 3});
    Ideal max2 = ideal_product(max, max);
    CHECK(max2 == n0({4, 6, 9}));
    CHECK(ideal_quotient(max2, max) == max);
    CHECK(ideal_quotient(n0({3, 4, 5}), max) == n0({2, 3}));
    CHECK(ideal_quotient(n0({2}), n0({3})) == n0({2}));
    CHECK_THROWS_AS(ideal_quotient(max, Ideal::zero(Instance::n0())), Error);
}

TEST_CASE("gcd ideals: operations are gcd, product, lcm, residual") {
    for (long a = 1; a <= 40; ++a)
        for (long b = 1; b <= 40; ++b) {
            Ideal ia = gcd_ideal(a), ib = gcd_ideal(b);
            CHECK(ideal_sum(ia, ib).generator() == oracle::gcd(a, b));
            CHECK(ideal_product(ia, ib).generator() == a * b);
            CHECK(ideal_intersect(ia, ib).generator() == oracle::lcm(a, b));
            CHECK(ideal_quotient(ia, ib).generator() == a / oracle::gcd(a, b));
            CHECK(ideal_contains(ia, ib) == (b % a == 0));
            auto d = divides(ia, ib);
            CHECK(d.has_value() == (b % a == 0));
            if (d) CHECK(d->generator() == b / a);
        }
    CHECK(ideal_sum(gcd_ideal(4), Ideal::zero(Instance::gcd())) == gcd_ideal(4));
}

TEST_CASE("gcd-supported membership respects the support") {
    auto sup = Instance::gcd_supported({Int(2), Int(3)});
    CHECK_THROWS_AS(Element::natural(sup, Int(5)), Error);
    Ideal i = Ideal::gcd(sup, Int(6));
    CHECK(ideal_membership(i, Element::natural(sup, Int(12))));
    CHECK_FALSE(ideal_membership(i, Element::natural(sup, Int(8))));
    CHECK(ideal_intersect(Ideal::gcd(sup, Int(4)), Ideal::gcd(sup, Int(6))).generator() == 12);
}

TEST_CASE("dvs ideals") {
    auto t = [](long n) { return Ideal::dvs(DvsValue::power(Int(n))); };
    CHECK(ideal_sum(t(3), t(5)) == t(3));
    CHECK(ideal_product(t(3), t(5)) == t(8));
    CHECK(ideal_intersect(t(3), t(5)) == t(5));
    CHECK(ideal_quotient(t(3), t(5)) == t(0));
    CHECK(ideal_quotient(t(5), t(3)) == t(2));
    CHECK(t(2).to_string() == "(t^2)");
    CHECK(is_maximal(t(1)));
    CHECK_FALSE(is_prime(t(2)));
}

TEST_CASE("lagrassa ideals form the chain (0) < (u) < L") {
    auto inst = Instance::lagrassa();
    Ideal zero = Ideal::zero(inst), u = Ideal::lagrassa(LaGrassaIdeal::u), all = Ideal::unit(inst);
    CHECK(u.to_string() == "(u)");
    CHECK(all.to_string() == "L");
    CHECK(Ideal::principal(Element::lagrassa(LaGrassa::u)) == u);
    CHECK(ideal_product(u, u) == u);
    CHECK(ideal_sum(u, all) == all);
    CHECK(ideal_contains(all, u));
    CHECK(ideal_contains(u, zero));
    CHECK(is_prime(u));
    CHECK(is_maximal(u));
    CHECK(ideal_quotient(u, all) == u);
    CHECK(ideal_quotient(u, u) == all);
    std::vector<Element> gens{Element::lagrassa(LaGrassa::u), Element::lagrassa(LaGrassa::one)};
    CHECK(ideal_from_generators(inst, gens) == all);
}

TEST_CASE("generic membership agrees with bounded element search") {
    for (const auto& inst : Instance::all()) {
        Rng rng(3);
        std::uint64_t bound = inst.id() == InstanceId::quad5 ? 10 : 30;
        auto elems = enumerate_elements(inst, bound);
        for (int k = 0; k < 20; ++k) {
            Ideal i = random_ideal(inst, rng);
            CAPTURE(i.to_string());
            for (const auto& g : i.generators()) CHECK(ideal_membership(i, g));
            for (const auto& x : elems) {
                Ideal px = Ideal::principal(x);
                CHECK(ideal_membership(i, x) == ideal_contains(i, px));
            }
            CHECK(ideal_from_generators(inst, i.generators()) == i);
        }
    }
}

TEST_CASE("divides is exact: a divides b iff a[b:a] = b") {
    for (const auto& inst : Instance::all()) {
        if (inst.id() == InstanceId::lagrassa) continue;
        Rng rng(5);
        for (int k = 0; k < 60; ++k) {
            Ideal a = random_ideal(inst, rng), b = random_ideal(inst, rng);
            Ideal ab = ideal_product(a, b);
            auto c = divides(a, ab);
            REQUIRE(c.has_value());
            CHECK(ideal_product(a, *c) == ab);
            auto d = divides(a, b);
            if (d) CHECK(ideal_product(a, *d) == b);
            else CHECK(ideal_product(a, ideal_quotient(b, a)) != b);
        }
    }
    CHECK_FALSE(divides(n0({2, 3}), n0({3, 4, 5})).has_value());
    CHECK(ideal_contains(n0({2, 3}), n0({3, 4, 5})));
}

TEST_CASE("invertibility") {
    CHECK(is_invertible(gcd_ideal(12)));
    CHECK(is_invertible(n0({6})));
    CHECK_FALSE(is_invertible(n0({2, 3})));
    CHECK_FALSE(is_invertible(n0({3, 4, 5})));
    CHECK(is_invertible(Ideal::unit(Instance::lagrassa())));
    CHECK_FALSE(is_invertible(Ideal::lagrassa(LaGrassaIdeal::u)));
    CHECK(is_invertible(Ideal::quad(qi_prime(PrimeLabel::numeric(InstanceId::quad5, Int(2))))));
}

TEST_CASE("prime and maximal classification agrees with bounded search") {
    auto inst = Instance::n0();
    for (long a = 1; a <= 6; ++a)
        for (long b = a; b <= 9; ++b) {
            Ideal i = n0({a, b});
            CAPTURE(i.to_string());
            if (!i.is_unit()) CHECK(is_prime(i) == !prime_violation(i, 40).has_value());
        }
    for (long g = 2; g <= 60; ++g) {
        CHECK(is_prime(gcd_ideal(g)) == oracle::is_prime(static_cast<u64>(g)));
        CHECK(is_maximal(gcd_ideal(g)) == oracle::is_prime(static_cast<u64>(g)));
    }
    CHECK(is_prime(Ideal::zero(Instance::gcd())));
    CHECK_FALSE(is_maximal(Ideal::zero(Instance::gcd())));
    CHECK(is_maximal(n0({2, 3})));
    CHECK_FALSE(is_maximal(n0({2})));
    CHECK(is_subtractive(gcd_ideal(6)));
    CHECK_FALSE(is_subtractive(n0({2, 3})));
    CHECK(is_subtractive(n0({1})));
}

TEST_CASE("min_nonzero") {
    CHECK(min_nonzero(n0({3, 4, 5})).natural() == 3);
    CHECK(min_nonzero(n0({7, 5})).natural() == 5);
    CHECK_THROWS_AS(min_nonzero(Ideal::zero(Instance::n0())), Error);
    CHECK_THROWS_AS(min_nonzero(gcd_ideal(3)), Error);
}

TEST_CASE("search_between") {
    auto r = search_between(n0({2, 3}));
    REQUIRE(r.has_value());
    Ideal max = n0({2, 3}), max2 = ideal_product(max, max);
    CHECK(ideal_contains(max, *r));
    CHECK(ideal_contains(*r, max2));
    CHECK(*r != max);
    CHECK(*r != max2);
    CHECK_FALSE(search_between(gcd_ideal(7)).has_value());
    CHECK_FALSE(search_between(Ideal::dvs(DvsValue::power(Int(1)))).has_value());
    CHECK_THROWS_AS(search_between(gcd_ideal(6)), Error);
}

TEST_CASE("ideal powers") {
    CHECK(ideal_power(gcd_ideal(3), 4).generator() == 81);
    CHECK(ideal_power(n0({2, 3}), 0) == Ideal::unit(Instance::n0()));
    CHECK(ideal_power(n0({2, 3}), 2) == n0({4, 6, 9}));
}
