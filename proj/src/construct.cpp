#include "pd3c/construct.hpp"

#include <sstream>

#include "pd3c/hilbert.hpp"
#include "pd3c/io.hpp"

namespace pd3c {

namespace {

RingPtr veronese_ring(uint32_t p) {
    return PolyRing::make(PrimeField(p), {"y0", "y1", "y2", "y3", "y4", "y5"},
                          MonomialOrder::grevlex());
}

RingPtr projection_ring(uint32_t p) {
    return PolyRing::make(PrimeField(p), {"x0", "x1", "x2", "x3", "x4"},
                          MonomialOrder::grevlex());
}

std::vector<int> generator_degrees(const Ideal& I) {
    std::vector<int> d;
    for (const Polynomial& g : I.gens()) d.push_back(static_cast<int>(*g.homogeneous_degree()));
    return d;
}

bool all_equal_to(const std::vector<int>& v, size_t count, int value) {
    if (v.size() != count) return false;
    for (int d : v)
        if (d != value) return false;
    return true;
}

Polynomial nonzero_random_form(const RingPtr& r, uint32_t degree, SeededRng& rng) {
    Polynomial f = random_form(r, degree, rng);
    while (f.is_zero()) f = random_form(r, degree, rng);
    return f;
}

// single attempt at the projection link; GenericityFailure when any of the
// pinned genericity checks fails
Ideal projection_link_attempt(const Ideal& veronese, const RingPtr& target_ring,
                              const RingPtr& source_ring, SeededRng& rng) {
    std::vector<Polynomial> images;
    images.reserve(source_ring->nvars());
    for (size_t i = 0; i < source_ring->nvars(); ++i)
        images.push_back(nonzero_random_form(target_ring, 1, rng));
    RingMapSpec spec{source_ring, target_ring, veronese.gens(), std::move(images)};
    Ideal link = ring_map_kernel(spec);
    if (!all_equal_to(generator_degrees(link), 7, 3))
        throw GenericityFailure("projection is not generic: expected seven cubic generators");
    if (codimension(link) != 2 || degree(link) != 4)
        throw GenericityFailure("projection link does not have codimension 2 and degree 4");
    if (betti_table(minimize(free_resolution(link))) != expected_link_betti())
        throw GenericityFailure("projection link has an unexpected Betti table");
    return link;
}

} // namespace

Ideal veronese_ideal(uint32_t p) {
    RingPtr S = veronese_ring(p);
    auto y = [&](size_t i) { return Polynomial::variable(S, i); };
    // symmetric matrix [[y0,y1,y2],[y1,y3,y4],[y2,y4,y5]]
    Polynomial m[3][3] = {{y(0), y(1), y(2)}, {y(1), y(3), y(4)}, {y(2), y(4), y(5)}};
    std::vector<Polynomial> minors;
    for (int r1 = 0; r1 < 3; ++r1)
        for (int r2 = r1 + 1; r2 < 3; ++r2)
            for (int c1 = 0; c1 < 3; ++c1)
                for (int c2 = c1 + 1; c2 < 3; ++c2)
                    minors.push_back(m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]);
    Ideal raw(S, std::move(minors));
    return Ideal(S, minimal_generators(raw));
}

Ideal generic_projection_link(uint32_t p, SeededRng& rng, int max_retries) {
    Ideal V = veronese_ideal(p);
    RingPtr S = V.ring();
    RingPtr R = projection_ring(p);
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        try {
            return projection_link_attempt(V, S, R, rng);
        } catch (const GenericityFailure&) {
            if (attempt == max_retries) throw;
        }
    }
    throw GenericityFailure("no generic projection found");
}

BettiTable expected_example_betti() {
    BettiTable b;
    b.set(0, 0, 1);
    b.set(1, 3, 3);
    b.set(2, 6, 8);
    b.set(3, 7, 10);
    b.set(4, 8, 5);
    b.set(5, 9, 1);
    return b;
}

BettiTable expected_link_betti() {
    BettiTable b;
    b.set(0, 0, 1);
    b.set(1, 3, 7);
    b.set(2, 4, 10);
    b.set(3, 5, 5);
    b.set(4, 6, 1);
    return b;
}

PipelineReport pd5_pipeline(uint32_t p, uint64_t seed, int max_retries) {
    PrimeField F(p); // validates the prime
    SeededRng rng(seed);
    Ideal V = veronese_ideal(p);
    RingPtr S = V.ring();
    RingPtr R = projection_ring(p);

    PipelineReport rep;
    rep.prime = p;
    rep.seed = seed;

    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        rep.retries_used = attempt;
        try {
            Ideal link = projection_link_attempt(V, S, R, rng);
            rep.link_gen_degrees = generator_degrees(link);

            std::vector<Polynomial> p1p2 = regular_sequence_in(link, 2, rng, max_retries);
            Ideal Z(R, p1p2);
            bool ci_ok = degree(Z) == 9 && codimension(Z) == 2;
            rep.p1p2_degree_check = ci_ok;
            if (!ci_ok) throw GenericityFailure("p1,p2 are not a complete intersection of degree 9");

            Ideal unmix = quotient(Z, link);
            rep.unmix_gen_degrees = generator_degrees(unmix);
            if (!all_equal_to(*rep.unmix_gen_degrees, 5, 3))
                throw GenericityFailure("linked ideal is not generated by five cubics");
            if (degree(unmix) != 5 || codimension(unmix) != 2)
                throw GenericityFailure("linked ideal does not have degree 5 in codimension 2");

            std::vector<Polynomial> fgh = random_combinations(unmix.gens(), 3, rng);
            Ideal FGH(R, fgh);
            if (codimension(FGH) != 2)
                throw GenericityFailure("f,g,h do not generate a height-two ideal");

            Ideal top = unmixed_part(FGH, rng, max_retries);
            bool top_ok = ideals_equal(top, unmix);
            rep.top_check = top_ok;
            if (!top_ok) throw GenericityFailure("unmixed part of (f,g,h) differs from the link quotient");

            Resolution res = minimize(free_resolution(FGH));
            rep.betti = betti_table(res);
            rep.pd = static_cast<int>(res.length());
            if (rep.betti != expected_example_betti())
                throw GenericityFailure("Betti table of (f,g,h) is not the generic one");
            return rep;
        } catch (const GenericityFailure&) {
            if (attempt == max_retries) {
                throw GenericityFailure(
                    "construction failed after " + std::to_string(max_retries) +
                    " retries over F_" + std::to_string(p) + "; a larger --prime should succeed");
            }
        }
    }
    throw GenericityFailure("unreachable retry state");
}

Ideal example_cubics_f3() {
    RingPtr R = PolyRing::make(PrimeField(3), {"X0", "X1", "X2", "X3", "X4"},
                               MonomialOrder::grevlex());
    const char* f =
        "X0^3 - X0^2*X2 + X0*X1*X2 + X0*X2^2 + X1*X2^2 - X0^2*X3 - X1*X2*X3 - X2^2*X3 "
        "- X1*X3^2 - X2*X3^2 - X3^3 + X0^2*X4 - X0*X1*X4 - X1^2*X4 - X1*X2*X4 "
        "- X0*X3*X4 + X1*X3*X4 + X2*X3*X4 - X3^2*X4 + X2*X4^2 + X3*X4^2 + X4^3";
    const char* g =
        "X0*X1^2 - X1^3 + X0^2*X2 - X0*X1*X2 - X0*X2^2 - X1*X2^2 + X0^2*X3 "
        "- X0*X1*X3 - X1*X2*X3 + X2^2*X3 + X0*X3^2 - X3^3 - X0*X1*X4 "
        "- X1^2*X4 + X0*X2*X4 + X1*X2*X4 + X0*X3*X4 + X2*X3*X4 + X3^2*X4";
    const char* h =
        "X0^2*X1 - X1^3 - X0^2*X2 + X0*X1*X2 - X1^2*X2 - X0^2*X3 - X1*X2*X3 + X1*X3^2 "
        "+ X0*X1*X4 + X1^2*X4 + X0*X2*X4 - X1*X2*X4 + X0*X3*X4 + X1*X3*X4 + X1*X4^2";
    return Ideal(R, {polynomial_from_string(R, f), polynomial_from_string(R, g),
                     polynomial_from_string(R, h)});
}

PipelineReport verify_paper_example() {
    Ideal I = example_cubics_f3();
    PipelineReport rep;
    rep.prime = 3;
    rep.seed = 0;
    rep.retries_used = 0;

    int cod = codimension(I);
    long long deg = degree(I);
    Resolution res = minimize(free_resolution(I));
    rep.betti = betti_table(res);
    rep.pd = static_cast<int>(res.length());

    BettiTable want = expected_example_betti();
    if (cod != 2 || deg != 5 || rep.pd != 5 || rep.betti != want) {
        std::ostringstream diff;
        diff << "example verification failed:\n";
        diff << "codimension " << cod << " (expected 2), degree " << deg << " (expected 5), pd "
             << rep.pd << " (expected 5)\n";
        diff << "expected Betti table:\n" << want.render_text();
        diff << "computed Betti table:\n" << rep.betti.render_text();
        throw VerificationFailure(diff.str());
    }
    return rep;
}

// ------------------------------------------------------------- rendering

namespace {

std::string degree_list(const std::vector<int>& d) {
    std::string out = "{";
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) out += ", ";
        out += "{" + std::to_string(d[i]) + "}";
    }
    out += "}";
    return out;
}

std::string csv(const std::vector<int>& d) {
    std::string out;
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(d[i]);
    }
    return out;
}

} // namespace

std::string PipelineReport::render_text() const {
    std::ostringstream out;
    out << "prime: " << prime << "\n";
    out << "seed: " << seed << "\n";
    out << "retries_used: " << retries_used << "\n";
    if (link_gen_degrees) out << "link_gen_degrees: " << degree_list(*link_gen_degrees) << "\n";
    if (p1p2_degree_check)
        out << "p1p2_degree_check: " << (*p1p2_degree_check ? "true" : "false") << "\n";
    if (unmix_gen_degrees) out << "unmix_gen_degrees: " << degree_list(*unmix_gen_degrees) << "\n";
    if (top_check) out << "top_check: " << (*top_check ? "true" : "false") << "\n";
    out << "betti:\n" << betti.render_text();
    out << "pd: " << pd << "\n";
    return out.str();
}

std::string PipelineReport::render_kv() const {
    std::ostringstream out;
    out << "prime=" << prime << "\n";
    out << "seed=" << seed << "\n";
    out << "retries_used=" << retries_used << "\n";
    if (link_gen_degrees) out << "link_gen_degrees=" << csv(*link_gen_degrees) << "\n";
    if (p1p2_degree_check) out << "p1p2_degree_check=" << (*p1p2_degree_check ? "true" : "false") << "\n";
    if (unmix_gen_degrees) out << "unmix_gen_degrees=" << csv(*unmix_gen_degrees) << "\n";
    if (top_check) out << "top_check=" << (*top_check ? "true" : "false") << "\n";
    std::string kv = betti.render_kv();
    for (char& c : kv)
        if (c == '\n') c = ';';
    if (!kv.empty() && kv.back() == ';') kv.pop_back();
    out << "betti=" << kv << "\n";
    out << "pd=" << pd << "\n";
    return out.str();
}

} // namespace pd3c
