#pragma once

#include "pd3c/ideal.hpp"

namespace pd3c {

/// Hilbert series of R/I: numerator/(1-t)^n together with the reduced form
/// Q(t)/(1-t)^d where Q(1) != 0. The reduced denominator exponent d is the
/// Krull dimension of R/I and Q(1) its degree (multiplicity). Coefficients
/// are 64-bit with overflow checks.
struct HilbertSeries {
    std::vector<long long> numerator; // index = power of t
    size_t nvars = 0;
    std::vector<long long> reduced;   // Q(t); empty iff the series is 0
    int dim = 0;                      // -1 for the unit ideal

    long long degree() const;                      // Q(1)
    long long hilbert_function(long long j) const; // dim_k (R/I)_j
};

/// Minimal monomial generators of the leading term ideal in(I), from the
/// reduced Groebner basis under the ring's order.
std::vector<Monomial> leading_monomials(const Ideal& I);
Ideal leading_term_ideal(const Ideal& I);

HilbertSeries hilbert_series(const Ideal& I);
HilbertSeries hilbert_series_of_monomials(std::vector<Monomial> gens, size_t nvars);

int dimension(const Ideal& I);   // dim R/I; -1 for the unit ideal
int codimension(const Ideal& I); // n - dim
long long degree(const Ideal& I);

} // namespace pd3c
