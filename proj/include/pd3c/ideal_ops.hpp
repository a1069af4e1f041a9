#pragma once

#include "pd3c/groebner.hpp"
#include "pd3c/rng.hpp"

namespace pd3c {

/// I ∩ J, computed as (t·I + (1-t)·J) ∩ R with an auxiliary variable in the
/// leading block of an elimination order. Returns minimal generators.
Ideal intersect(const Ideal& I, const Ideal& J);

/// Colon ideal I : J = ∩_g I : g over the generators g of J, each I : g
/// obtained from intersect(I, (g)) by exact division.
Ideal quotient(const Ideal& I, const Ideal& J);

/// Saturation I : J^∞ as the stabilized iterated quotient.
Ideal saturate(const Ideal& I, const Ideal& J);

/// Generators of I ∩ k[kept variables], from a reduced basis under a block
/// order with the dropped variables leading. The result lives in the same
/// ring but involves no dropped variable.
Ideal eliminate(const Ideal& I, const std::vector<uint32_t>& drop_vars);

/// Engine-level elimination on raw generators (no grading requirements).
std::vector<Polynomial> eliminate_raw(const RingPtr& ring, std::vector<Polynomial> gens,
                                      const std::vector<uint32_t>& drop_vars);

/// Ring map source -> target/target_relations given by one homogeneous image
/// per source variable, all of one positive degree.
struct RingMapSpec {
    RingPtr source;
    RingPtr target;
    std::vector<Polynomial> target_relations;
    std::vector<Polynomial> images;
};

/// Kernel of the map: eliminate the target variables from
/// target_relations + (x_i - image_i) in source ⊗ target. Returns minimal
/// generators in the source ring.
Ideal ring_map_kernel(const RingMapSpec& spec);

/// `length` random combinations of the top-degree generators of I whose
/// ideal has codimension `length` (a homogeneous regular sequence). Lower
/// degree generators are mixed in, raised by random linear forms, if the
/// top-degree generators alone keep failing.
std::vector<Polynomial> regular_sequence_in(const Ideal& I, size_t length, SeededRng& rng,
                                            int max_retries = 20);

/// Unmixed part I^unm = (z) : ((z) : I) for a maximal regular sequence z in
/// I of length codim(I) (double linkage).
Ideal unmixed_part(const Ideal& I, SeededRng& rng, int max_retries = 20);

} // namespace pd3c
