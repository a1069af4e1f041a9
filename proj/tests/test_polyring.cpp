#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pd3c/construct.hpp"

using namespace pd3c;
using namespace pd3c::test;

TEST_CASE("prime field arithmetic") {
    PrimeField F3(3);
    CHECK(F3.add(2, 2) == 1);
    CHECK(F3.inv(2) == 2);
    CHECK(F3.neg(1) == 2);
    CHECK(F3.from_int(-1) == 2);
    CHECK(F3.from_int(-7) == 2);

    PrimeField F(32003);
    uint32_t v = F.inv(12345);
    CHECK(F.mul(12345, v) == 1);
    CHECK(v == ext_euclid_inv(32003, 12345));

    CHECK_THROWS_AS(F.inv(0), DivisionByZero);
    CHECK_THROWS_AS(PrimeField(2), ContractViolation);
    CHECK_THROWS_AS(PrimeField(15), ContractViolation);
    CHECK_THROWS_AS(PrimeField(1), ContractViolation);
    CHECK_NOTHROW(PrimeField(2147483647)); // 2^31 - 1 is prime
}

TEST_CASE("ring axioms on random samples") {
    for (uint32_t p : {3u, 101u, 32003u}) {
        PrimeField F(p);
        SeededRng rng(p);
        for (int k = 0; k < 1000; ++k) {
            uint32_t a = rng.field_element(F), b = rng.field_element(F), c = rng.field_element(F);
            CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
        }
    }
}

TEST_CASE("monomial order examples") {
    auto R = make_ring(32003, {"x", "y"});
    Monomial x2 = P(R, "x^2").leading_monomial();
    Monomial xy = P(R, "x*y").leading_monomial();
    CHECK(MonomialOrder::grevlex().compare(x2, xy) == Cmp::GT);

    Monomial y5 = P(R, "y^5").leading_monomial();
    Monomial x = P(R, "x").leading_monomial();
    CHECK(MonomialOrder::lex().compare(y5, x) == Cmp::LT);

    Monomial one(2);
    for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::grlex()})
        CHECK(ord.compare(one, x) == Cmp::LT);

    Monomial bad(3);
    CHECK_THROWS_AS(MonomialOrder::grevlex().compare(bad, x), ArityError);
}

TEST_CASE("orders agree with the textbook comparators up to degree 4") {
    auto R = make_ring(3, {"x", "y", "z"});
    std::vector<Monomial> all;
    for (uint32_t d = 0; d <= 4; ++d)
        for (Monomial& m : monomials_of_degree(R, d)) all.push_back(m);
    CHECK(all.size() == 35);
    auto as_ints = [](const Monomial& m) {
        std::vector<int> v;
        for (size_t i = 0; i < m.nvars(); ++i) v.push_back(m.exponent(i));
        return v;
    };
    for (const Monomial& a : all)
        for (const Monomial& b : all) {
            CHECK(static_cast<int>(MonomialOrder::grevlex().compare(a, b)) ==
                  bf_grevlex(as_ints(a), as_ints(b)));
            CHECK(static_cast<int>(MonomialOrder::lex().compare(a, b)) ==
                  bf_lex(as_ints(a), as_ints(b)));
            CHECK(static_cast<int>(MonomialOrder::grlex().compare(a, b)) ==
                  bf_grlex(as_ints(a), as_ints(b)));
        }
}

TEST_CASE("orders are multiplicative on random triples") {
    auto R = make_ring(32003, {"x", "y", "z"});
    SeededRng rng(7);
    auto random_monomial = [&] {
        std::vector<uint16_t> e(3);
        for (auto& v : e) v = static_cast<uint16_t>(rng.uniform_below(5));
        return Monomial::from_exponents(std::move(e));
    };
    for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::grlex()}) {
        for (int k = 0; k < 500; ++k) {
            Monomial a = random_monomial(), b = random_monomial(), c = random_monomial();
            Cmp ab = ord.compare(a, b);
            CHECK(ord.compare(a * c, b * c) == ab);
        }
    }
}

TEST_CASE("block order eliminates its leading block") {
    MonomialOrder blk = MonomialOrder::block(3, {2}, MonomialOrder::grevlex(),
                                             MonomialOrder::grevlex());
    auto R = make_ring(32003, {"x", "y", "t"}, blk);
    // anything with t beats anything without
    CHECK(blk.compare(P(R, "t").leading_monomial(), P(R, "x^5*y^5").leading_monomial()) == Cmp::GT);
    CHECK(blk.compare(P(R, "x*t").leading_monomial(), P(R, "t").leading_monomial()) == Cmp::GT);
    // and multiplicativity
    SeededRng rng(11);
    for (int k = 0; k < 300; ++k) {
        std::vector<uint16_t> ea(3), eb(3), ec(3);
        for (auto* e : {&ea, &eb, &ec})
            for (auto& v : *e) v = static_cast<uint16_t>(rng.uniform_below(4));
        Monomial a = Monomial::from_exponents(ea), b = Monomial::from_exponents(eb),
                 c = Monomial::from_exponents(ec);
        CHECK(blk.compare(a * c, b * c) == blk.compare(a, b));
    }
}

TEST_CASE("polynomial arithmetic examples") {
    auto R = make_ring(32003, {"x", "y"});
    CHECK(P(R, "x + y") + (-P(R, "x")) == P(R, "y"));
    CHECK(P(R, "x + y") * P(R, "x - y") == P(R, "x^2 - y^2"));

    auto R3 = make_ring(3, {"x", "y"});
    Polynomial s = P(R3, "x + y");
    Polynomial cube = s * s * s;
    CHECK(cube == P(R3, "x^3 + y^3")); // Frobenius in characteristic 3

    CHECK(P(R, "x").scaled(0).is_zero());

    auto other = make_ring(32003, {"u", "v"});
    CHECK_THROWS_AS(P(R, "x") + P(other, "u"), RingMismatch);
}

TEST_CASE("canonical form: f + (-f) vanishes") {
    auto R = make_ring(101, {"x", "y", "z"});
    SeededRng rng(5);
    for (int k = 0; k < 200; ++k) {
        Polynomial f = random_form(R, 1 + rng.uniform_below(4), rng);
        CHECK((f + (-f)).is_zero());
        CHECK((f - f).is_zero());
        CHECK((f + (-f)).terms().empty());
    }
}

TEST_CASE("exponent overflow is a hard error") {
    Monomial big = Monomial::from_exponents({65535});
    Monomial one_var = Monomial::from_exponents({1});
    CHECK_THROWS_AS(big * one_var, OverflowError);
}

TEST_CASE("homogeneity recognition") {
    auto R = make_ring(32003, {"x", "y"});
    CHECK(P(R, "x^2 + x*y").is_homogeneous());
    CHECK(*P(R, "x^2 + x*y").homogeneous_degree() == 2);
    CHECK_FALSE(P(R, "x^2 + x").is_homogeneous());
    CHECK_FALSE(P(R, "x^2 + x").homogeneous_degree().has_value());
    Polynomial z = Polynomial::zero(R);
    CHECK(z.is_homogeneous());
    CHECK_FALSE(z.homogeneous_degree().has_value());

    // the built-in example cubics are homogeneous of degree 3
    Ideal ex = example_cubics_f3();
    for (const Polynomial& g : ex.gens()) {
        CHECK(g.is_homogeneous());
        CHECK(*g.homogeneous_degree() == 3);
    }
}

TEST_CASE("random_combinations") {
    auto R = make_ring(32003, {"x", "y"});
    SeededRng rng(42);
    auto gens = polys(R, {"x", "y"});
    auto combos = random_combinations(gens, 1, rng);
    REQUIRE(combos.size() == 1);
    if (!combos[0].is_zero()) {
        CHECK(*combos[0].homogeneous_degree() == 1);
        CHECK(combos[0].term_count() <= 2);
    }

    // determinism for a fixed seed
    SeededRng r1(9), r2(9);
    auto a = random_combinations(gens, 3, r1);
    auto b = random_combinations(gens, 3, r2);
    for (size_t i = 0; i < 3; ++i) CHECK(a[i] == b[i]);

    // single generator: multiples of it
    SeededRng r3(1);
    auto single = polys(R, {"x"});
    auto two = random_combinations(single, 2, r3);
    REQUIRE(two.size() == 2);
    for (const Polynomial& c : two)
        if (!c.is_zero()) CHECK(c.term_count() == 1);

    auto mixed = polys(R, {"x", "x^2"});
    CHECK_THROWS_AS(random_combinations(mixed, 1, rng), DegreeMismatch);
}

TEST_CASE("ring construction rejects bad names") {
    CHECK_THROWS_AS(make_ring(3, {"x", "x"}), ContractViolation);
    CHECK_THROWS_AS(make_ring(3, {""}), ContractViolation);
}

TEST_CASE("polynomial text round trip") {
    auto R = make_ring(32003, {"x", "y", "z"});
    SeededRng rng(3);
    for (int k = 0; k < 50; ++k) {
        Polynomial f = random_form(R, 1 + rng.uniform_below(3), rng);
        if (f.is_zero()) continue;
        CHECK(P(R, polynomial_to_string(f)) == f);
    }
    CHECK(polynomial_to_string(Polynomial::zero(R)) == "0");
}
