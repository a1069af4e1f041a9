#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "pd3c/polynomial.hpp"

namespace pd3c {

/// Deterministic 64-bit random stream. The generator is std::mt19937_64,
/// whose recurrence is fixed by the C++ standard, so a given seed yields the
/// same sequence on every platform. Field elements are drawn by rejection
/// sampling; std::uniform_int_distribution is implementation-defined and is
/// not used.
class SeededRng {
public:
    explicit SeededRng(uint64_t seed) : seed_(seed), eng_(seed) {}

    uint64_t seed() const { return seed_; }
    uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, n), n >= 1.
    uint32_t uniform_below(uint32_t n);

    uint32_t field_element(const PrimeField& F) { return uniform_below(F.p()); }
    uint32_t nonzero_field_element(const PrimeField& F);

private:
    uint64_t seed_;
    std::mt19937_64 eng_;
};

/// `count` random field-coefficient linear combinations of equal-degree
/// homogeneous forms. Coefficients are drawn generator-by-generator for each
/// combination in turn, so the output is reproducible for a fixed seed.
std::vector<Polynomial> random_combinations(std::span<const Polynomial> gens, size_t count,
                                            SeededRng& rng);

/// Dense random homogeneous form of the given degree (all monomials, random
/// coefficients, possibly zero).
Polynomial random_form(const RingPtr& r, uint32_t degree, SeededRng& rng);

/// All monomials of the given total degree, in descending ring order.
std::vector<Monomial> monomials_of_degree(const RingPtr& r, uint32_t degree);

} // namespace pd3c
