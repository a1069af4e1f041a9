#pragma once

#include <optional>

#include "pd3c/ideal_ops.hpp"
#include "pd3c/resolution.hpp"

namespace pd3c {

/// Defining ideal of the quadratic Veronese surface in P^5 over F_p: the
/// six 2x2 minors of the symmetric matrix [[y0,y1,y2],[y1,y3,y4],[y2,y4,y5]],
/// trimmed to minimal generators. Codimension 3, degree 4.
Ideal veronese_ideal(uint32_t p);

/// Ideal of a generic projection of the Veronese surface to P^4: kernel of
/// x_i -> (random linear form) into the Veronese quotient, retried until it
/// is generated by seven cubics with the expected Betti table.
Ideal generic_projection_link(uint32_t p, SeededRng& rng, int max_retries = 20);

/// Outcome of one construction run. Identical (prime, seed) give a
/// byte-identical report.
struct PipelineReport {
    uint32_t prime = 0;
    uint64_t seed = 0;
    int retries_used = 0;
    std::optional<std::vector<int>> link_gen_degrees;
    std::optional<bool> p1p2_degree_check; // degree(R/(p1,p2)) == 9
    std::optional<std::vector<int>> unmix_gen_degrees;
    std::optional<bool> top_check;         // unmixed_part((f,g,h)) == link quotient
    BettiTable betti;
    int pd = 0;

    std::string render_text() const;
    std::string render_kv() const;
};

/// Full construction: link ideal, two generic cubics p1,p2 inside it, the
/// linked 5-cubic ideal I, three generic combinations f,g,h, the check
/// unmixed_part((f,g,h)) == I, and the Betti table of R/(f,g,h). Failed
/// genericity checks retry with fresh randomness from the same stream.
PipelineReport pd5_pipeline(uint32_t p, uint64_t seed, int max_retries = 20);

/// The built-in example: three explicit cubics over F_3 in five variables.
Ideal example_cubics_f3();

/// Recomputes the invariants of the built-in example and checks them against
/// the pinned values: codimension 2, degree 5, projective dimension 5 and
/// the exact Betti table. Mismatch raises VerificationFailure with a diff.
PipelineReport verify_paper_example();

/// Pinned Betti table of R/(f,g,h): totals 1 3 8 10 5 1.
BettiTable expected_example_betti();

/// Pinned Betti table of the projection link: totals 1 7 10 5 1.
BettiTable expected_link_betti();

} // namespace pd3c
