#pragma once

// Brute-force reference implementations, kept independent of the kernel
// code paths they are used to check.

#include <algorithm>
#include <deque>
#include <numeric>
#include <vector>

#include "pd3c/groebner.hpp"
#include "pd3c/rng.hpp"

namespace pd3c::test {

// ---- extended Euclid inverse (reference for PrimeField::inv, which uses
// Fermat exponentiation)
inline uint32_t ext_euclid_inv(uint32_t p, uint32_t a) {
    long long r0 = p, r1 = a % p, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    long long inv = s0 % p;
    if (inv < 0) inv += p;
    return static_cast<uint32_t>(inv);
}

// ---- textbook order comparators on raw exponent vectors
inline int bf_deg(const std::vector<int>& a) { return std::accumulate(a.begin(), a.end(), 0); }

inline int bf_lex(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

inline int bf_grlex(const std::vector<int>& a, const std::vector<int>& b) {
    if (bf_deg(a) != bf_deg(b)) return bf_deg(a) > bf_deg(b) ? 1 : -1;
    return bf_lex(a, b);
}

inline int bf_grevlex(const std::vector<int>& a, const std::vector<int>& b) {
    if (bf_deg(a) != bf_deg(b)) return bf_deg(a) > bf_deg(b) ? 1 : -1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
}

// ---- plain Buchberger: every pair in FIFO order, no criteria, full
// reduction of each S-polynomial
inline std::vector<Polynomial> buchberger_plain(std::vector<Polynomial> gens) {
    std::vector<Polynomial> B;
    for (Polynomial& g : gens)
        if (!g.is_zero()) B.push_back(g.monic());
    if (B.empty()) return B;
    RingPtr r = B.front().ring();
    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t j = 0; j < B.size(); ++j)
        for (size_t i = 0; i < j; ++i) pairs.push_back({i, j});
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        Monomial lcm = Monomial::lcm(B[i].leading_monomial(), B[j].leading_monomial());
        Polynomial s = B[i].times_monomial(lcm.divided_by(B[i].leading_monomial())) -
                       B[j].times_monomial(lcm.divided_by(B[j].leading_monomial()));
        Polynomial h = normal_form(s, B);
        if (h.is_zero()) continue;
        for (size_t k = 0; k < B.size(); ++k) pairs.push_back({k, B.size()});
        B.push_back(h.monic());
    }
    // interreduce (remove redundant leads, tail-reduce, sort ascending)
    const MonomialOrder& O = r->order();
    std::stable_sort(B.begin(), B.end(), [&](const Polynomial& a, const Polynomial& b) {
        return O.compare(a.leading_monomial(), b.leading_monomial()) == Cmp::LT;
    });
    std::vector<Polynomial> kept;
    for (Polynomial& g : B) {
        bool red = false;
        for (const Polynomial& k : kept)
            if (k.leading_monomial().divides(g.leading_monomial())) {
                red = true;
                break;
            }
        if (!red) kept.push_back(std::move(g));
    }
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        kept[i] = normal_form(kept[i], others).monic();
    }
    std::stable_sort(kept.begin(), kept.end(), [&](const Polynomial& a, const Polynomial& b) {
        return O.compare(a.leading_monomial(), b.leading_monomial()) == Cmp::LT;
    });
    return kept;
}

// ---- dimension of the degree-d piece of an ideal via Gaussian elimination
// over F_p on the span of {m * g : deg(m * g) = d}
inline long long graded_piece_dim(const std::vector<Polynomial>& gens, const RingPtr& r,
                                  uint32_t d) {
    std::vector<Monomial> basis = monomials_of_degree(r, d);
    auto index_of = [&](const Monomial& m) -> size_t {
        for (size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == m) return i;
        throw InternalError("monomial missing from the graded basis");
    };
    const PrimeField& F = r->field();
    std::vector<std::vector<uint32_t>> rows;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        uint32_t dg = *g.homogeneous_degree();
        if (dg > d) continue;
        for (const Monomial& m : monomials_of_degree(r, d - dg)) {
            Polynomial h = g.times_monomial(m);
            std::vector<uint32_t> row(basis.size(), 0);
            for (const Term& t : h.terms()) row[index_of(t.mono)] = t.coeff;
            rows.push_back(std::move(row));
        }
    }
    // row echelon
    size_t rank = 0;
    for (size_t col = 0; col < basis.size() && rank < rows.size(); ++col) {
        size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        uint32_t inv = F.inv(rows[rank][col]);
        for (size_t c = col; c < basis.size(); ++c) rows[rank][c] = F.mul(rows[rank][c], inv);
        for (size_t rr = 0; rr < rows.size(); ++rr) {
            if (rr == rank || rows[rr][col] == 0) continue;
            uint32_t f = rows[rr][col];
            for (size_t c = col; c < basis.size(); ++c)
                rows[rr][c] = F.sub(rows[rr][c], F.mul(f, rows[rank][c]));
        }
        ++rank;
    }
    return static_cast<long long>(rank);
}

// ---- Hilbert function by counting standard monomials (not divisible by
// any leading monomial)
inline long long standard_monomial_count(const std::vector<Monomial>& lms, const RingPtr& r,
                                         uint32_t d) {
    long long count = 0;
    for (const Monomial& m : monomials_of_degree(r, d)) {
        bool divisible = false;
        for (const Monomial& l : lms)
            if (l.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) ++count;
    }
    return count;
}

} // namespace pd3c::test
