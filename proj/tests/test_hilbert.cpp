#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pd3c/construct.hpp"
#include "pd3c/hilbert.hpp"
#include "pd3c/ideal_ops.hpp"

using namespace pd3c;
using namespace pd3c::test;

TEST_CASE("leading term ideal") {
    auto R = make_ring(32003, {"x", "y"});
    auto lm1 = leading_monomials(ideal_of(R, {"x + y"}));
    REQUIRE(lm1.size() == 1);
    CHECK(lm1[0] == P(R, "x").leading_monomial());

    Ideal M = ideal_of(R, {"x^2", "x*y", "y^2"});
    CHECK(leading_monomials(M).size() == 3);
    CHECK(ideals_equal(leading_term_ideal(M), M));

    // veronese: six quadratic leading monomials
    Ideal V = veronese_ideal(32003);
    auto lmv = leading_monomials(V);
    CHECK(lmv.size() == 6);
    for (const Monomial& m : lmv) CHECK(m.degree() == 2);
}

TEST_CASE("hilbert series examples") {
    auto R2 = make_ring(32003, {"x", "y"});
    HilbertSeries h = hilbert_series(ideal_of(R2, {"x^2", "x*y", "y^2"}));
    CHECK(h.numerator == std::vector<long long>{1, 0, -3, 2});
    CHECK(h.reduced == std::vector<long long>{1, 2});
    CHECK(h.dim == 0);
    CHECK(h.degree() == 3);
    // Hilbert function 1, 2, 0, 0, ...
    CHECK(h.hilbert_function(0) == 1);
    CHECK(h.hilbert_function(1) == 2);
    CHECK(h.hilbert_function(2) == 0);
    CHECK(h.hilbert_function(5) == 0);

    auto R5 = make_ring(32003, {"a", "b", "c", "d", "e"});
    HilbertSeries zero_ideal = hilbert_series(Ideal(R5, {}));
    CHECK(zero_ideal.numerator == std::vector<long long>{1});
    CHECK(zero_ideal.dim == 5);
    CHECK(zero_ideal.degree() == 1);

    // the built-in example: dim 3, degree 5
    Ideal ex = example_cubics_f3();
    HilbertSeries hex = hilbert_series(ex);
    CHECK(hex.dim == 3);
    CHECK(hex.degree() == 5);
}

TEST_CASE("dimension, codimension, degree") {
    auto R5 = make_ring(32003, {"a", "b", "c", "d", "e"});
    SeededRng rng(2);
    // complete intersection of two cubics in five variables
    Polynomial f = random_form(R5, 3, rng), g = random_form(R5, 3, rng);
    Ideal ci(R5, {f, g});
    REQUIRE(codimension(ci) == 2);
    CHECK(degree(ci) == 9);

    auto R2 = make_ring(32003, {"x", "y"});
    Ideal m2 = ideal_of(R2, {"x^2", "x*y", "y^2"});
    CHECK(codimension(m2) == 2);
    CHECK(degree(m2) == 3);
    // same in more variables
    auto R4 = make_ring(32003, {"x", "y", "u", "v"});
    Ideal m24 = ideal_of(R4, {"x^2", "x*y", "y^2"});
    CHECK(codimension(m24) == 2);
    CHECK(degree(m24) == 3);

    // unit ideal convention
    Ideal unit = ideal_of(R2, {"1"});
    CHECK(dimension(unit) == -1);
}

TEST_CASE("numerator vanishes at 1 iff positive dimension") {
    auto R = make_ring(101, {"x", "y", "z"});
    SeededRng rng(3);
    for (int k = 0; k < 20; ++k) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 2; ++i) {
            Polynomial g = random_form(R, 1 + rng.uniform_below(3), rng);
            if (!g.is_zero()) gens.push_back(g);
        }
        Ideal I(R, gens);
        HilbertSeries h = hilbert_series(I);
        long long at1 = 0;
        for (long long c : h.numerator) at1 += c;
        if (h.dim > 0) CHECK(at1 == 0);
        if (!h.reduced.empty()) {
            long long q1 = 0;
            for (long long c : h.reduced) q1 += c;
            CHECK(q1 >= 1);
        }
    }
}

TEST_CASE("complete intersections have product numerators") {
    auto R = make_ring(32003, {"x", "y", "z", "w"});
    SeededRng rng(11);
    int done = 0;
    for (int trial = 0; done < 12 && trial < 60; ++trial) {
        size_t c = 1 + rng.uniform_below(3);
        std::vector<Polynomial> gens;
        std::vector<uint32_t> degs;
        for (size_t i = 0; i < c; ++i) {
            uint32_t d = 1 + rng.uniform_below(3);
            Polynomial g = random_form(R, d, rng);
            if (g.is_zero()) continue;
            gens.push_back(g);
            degs.push_back(d);
        }
        if (gens.size() != c) continue;
        Ideal I(R, gens);
        if (codimension(I) != static_cast<int>(c)) continue; // not a regular sequence
        ++done;
        HilbertSeries h = hilbert_series(I);
        std::vector<long long> expect{1};
        for (uint32_t d : degs) {
            std::vector<long long> factor(d + 1, 0);
            factor[0] = 1;
            factor[d] -= 1;
            std::vector<long long> next(expect.size() + factor.size() - 1, 0);
            for (size_t i = 0; i < expect.size(); ++i)
                for (size_t j = 0; j < factor.size(); ++j) next[i + j] += expect[i] * factor[j];
            expect = std::move(next);
        }
        while (!expect.empty() && expect.back() == 0) expect.pop_back();
        CHECK(h.numerator == expect);
        long long prod = 1;
        for (uint32_t d : degs) prod *= d;
        CHECK(h.degree() == prod);
    }
    CHECK(done == 12);
}

TEST_CASE("series matches the standard monomial count") {
    auto R = make_ring(101, {"x", "y", "z"});
    SeededRng rng(19);
    for (int k = 0; k < 10; ++k) {
        std::vector<Polynomial> gens;
        for (int i = 0; i < 2; ++i) {
            Polynomial g = random_form(R, 1 + rng.uniform_below(3), rng);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        Ideal I(R, gens);
        HilbertSeries h = hilbert_series(I);
        auto lms = leading_monomials(I);
        for (uint32_t d = 0; d <= 6; ++d)
            CHECK(h.hilbert_function(d) == standard_monomial_count(lms, R, d));
    }
}

TEST_CASE("series does not depend on the order used for the initial ideal") {
    auto Rg = make_ring(101, {"x", "y", "z"});
    auto Rl = make_ring(101, {"x", "y", "z"}, MonomialOrder::lex());
    SeededRng rng(29);
    for (int k = 0; k < 10; ++k) {
        uint32_t d1 = 1 + rng.uniform_below(2), d2 = 1 + rng.uniform_below(2);
        Polynomial f = random_form(Rg, d1, rng), g = random_form(Rg, d2, rng);
        if (f.is_zero() || g.is_zero()) continue;
        Ideal Ig(Rg, {f, g});
        std::vector<Term> ft(f.terms().begin(), f.terms().end());
        std::vector<Term> gt(g.terms().begin(), g.terms().end());
        Ideal Il(Rl, {Polynomial::from_terms(Rl, std::move(ft)), Polynomial::from_terms(Rl, std::move(gt))});
        HilbertSeries hg = hilbert_series(Ig), hl = hilbert_series(Il);
        CHECK(hg.numerator == hl.numerator);
        CHECK(hg.dim == hl.dim);
    }
}

TEST_CASE("degree is preserved by the unmixed part") {
    auto R = make_ring(32003, {"a", "b", "c", "d", "e"});
    SeededRng rng(37);
    int done = 0;
    for (int trial = 0; done < 25 && trial < 120; ++trial) {
        // random height-two three-generated ideals inside (x,y)^2-style frames
        Polynomial x = P(R, "a"), y = P(R, "b");
        std::vector<Polynomial> gens;
        for (int i = 0; i < 3; ++i) {
            Polynomial l1 = random_form(R, 1, rng), l2 = random_form(R, 1, rng),
                       l3 = random_form(R, 1, rng);
            gens.push_back(l1 * x * x + l2 * x * y + l3 * y * y);
        }
        Ideal J(R, gens);
        if (J.gens().size() != 3 || codimension(J) != 2) continue;
        ++done;
        Ideal unm = unmixed_part(J, rng);
        CHECK(degree(J) == degree(unm));
    }
    CHECK(done == 25);
}
