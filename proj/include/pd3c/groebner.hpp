#pragma once

#include <span>

#include "pd3c/ideal.hpp"

namespace pd3c {

/// Remainder of f on division by G: no term of the result is divisible by
/// the leading term of any element of G. Deterministic: always reduces the
/// largest reducible term, using the first eligible divisor in G's stored
/// sequence.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

/// Top reduction only: rewrites the leading term until it is irreducible (or
/// the polynomial vanishes); the tail is left untouched.
Polynomial top_normal_form(const Polynomial& f, std::span<const Polynomial> G);

/// The unique reduced Groebner basis of the span of `gens` under their
/// ring's order. Buchberger with sugar-degree pair selection and both
/// classical criteria (coprime leading terms, chain criterion). Handles
/// inhomogeneous input as well; termination needs only a global order.
std::vector<Polynomial> reduced_groebner_basis(std::vector<Polynomial> gens);

bool ideal_membership(const Polynomial& f, const Ideal& I);

/// Minimal homogeneous generating set: generators are processed by ascending
/// degree and dropped when they lie in the ideal of the ones already kept.
std::vector<Polynomial> minimal_generators(const Ideal& I);

/// Reduced-GB equality under the (common) ring order.
bool ideals_equal(const Ideal& I, const Ideal& J);

/// Exact division f / g; throws InternalError if g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

} // namespace pd3c
