#pragma once

#include <optional>
#include <vector>

#include "pd3c/polyring.hpp"

namespace pd3c {

struct Term {
    uint32_t coeff; // in [1, p)
    Monomial mono;
};

/// Sparse polynomial in canonical form: terms strictly descending in the
/// ring's monomial order, no zero coefficients, no repeated monomials.
/// Equal polynomials have identical term sequences.
class Polynomial {
public:
    Polynomial() = default; // detached zero; ring() == nullptr

    static Polynomial zero(RingPtr r);
    static Polynomial constant(const RingPtr& r, long long c);
    static Polynomial variable(const RingPtr& r, size_t i);
    static Polynomial term(const RingPtr& r, long long c, Monomial m);
    static Polynomial from_terms(RingPtr r, std::vector<Term> raw);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    const Term& leading() const;
    const Monomial& leading_monomial() const { return leading().mono; }
    uint32_t leading_coeff() const { return leading().coeff; }

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    Polynomial scaled(uint32_t c) const;
    Polynomial times_term(uint32_t c, const Monomial& m) const;
    Polynomial times_monomial(const Monomial& m) const { return times_term(1, m); }
    Polynomial monic() const;

    /// this - c * m * g in one merge pass.
    Polynomial sub_scaled_shifted(const Polynomial& g, uint32_t c, const Monomial& m) const;

    /// Polynomial with the leading term removed.
    Polynomial tail() const;

    bool is_homogeneous() const;
    /// Common total degree of all terms, or nullopt if inhomogeneous or zero.
    std::optional<uint32_t> homogeneous_degree() const;
    /// Maximum total degree over the terms (nonzero polynomials only).
    uint32_t total_degree() const;

    static void check_same_ring(const Polynomial& a, const Polynomial& b);

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

} // namespace pd3c
