#include "pd3c/rng.hpp"

#include <algorithm>

namespace pd3c {

uint32_t SeededRng::uniform_below(uint32_t n) {
    if (n == 0) throw ContractViolation("uniform_below(0)");
    // rejection sampling over the largest multiple of n below 2^64
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return static_cast<uint32_t>(v % n);
}

uint32_t SeededRng::nonzero_field_element(const PrimeField& F) {
    return 1 + uniform_below(F.p() - 1);
}

std::vector<Polynomial> random_combinations(std::span<const Polynomial> gens, size_t count,
                                            SeededRng& rng) {
    if (gens.empty()) throw ContractViolation("random_combinations of an empty list");
    if (count < 1) throw ContractViolation("random_combinations needs count >= 1");
    const RingPtr& r = gens.front().ring();
    std::optional<uint32_t> deg;
    for (const Polynomial& g : gens) {
        Polynomial::check_same_ring(gens.front(), g);
        auto d = g.homogeneous_degree();
        if (!d) throw DegreeMismatch("random_combinations needs nonzero homogeneous forms");
        if (!deg) deg = d;
        if (*deg != *d) throw DegreeMismatch("random_combinations needs forms of equal degree");
    }
    const PrimeField& F = r->field();
    std::vector<Polynomial> out;
    out.reserve(count);
    for (size_t k = 0; k < count; ++k) {
        Polynomial acc = Polynomial::zero(r);
        for (const Polynomial& g : gens) {
            uint32_t c = rng.field_element(F);
            if (c != 0) acc = acc + g.scaled(c);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

namespace {

void enumerate_monomials(size_t nvars, size_t i, uint32_t left, std::vector<uint16_t>& cur,
                         std::vector<Monomial>& out) {
    if (i + 1 == nvars) {
        cur[i] = static_cast<uint16_t>(left);
        out.push_back(Monomial::from_exponents(cur));
        return;
    }
    for (uint32_t e = 0; e <= left; ++e) {
        cur[i] = static_cast<uint16_t>(e);
        enumerate_monomials(nvars, i + 1, left - e, cur, out);
    }
}

} // namespace

std::vector<Monomial> monomials_of_degree(const RingPtr& r, uint32_t degree) {
    if (degree > 0xffff) throw OverflowError("monomial degree too large");
    std::vector<Monomial> out;
    if (r->nvars() == 0) {
        if (degree == 0) out.push_back(Monomial(0));
        return out;
    }
    std::vector<uint16_t> cur(r->nvars(), 0);
    enumerate_monomials(r->nvars(), 0, degree, cur, out);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return r->order().compare(a, b) == Cmp::GT;
    });
    return out;
}

Polynomial random_form(const RingPtr& r, uint32_t degree, SeededRng& rng) {
    std::vector<Term> terms;
    const PrimeField& F = r->field();
    for (Monomial& m : monomials_of_degree(r, degree)) {
        uint32_t c = rng.field_element(F);
        if (c != 0) terms.push_back({c, std::move(m)});
    }
    return Polynomial::from_terms(r, std::move(terms));
}

} // namespace pd3c
