#include "pd3c/ideal_ops.hpp"

#include <algorithm>

#include "pd3c/hilbert.hpp"

namespace pd3c {

namespace {

void check_rings(const Ideal& I, const Ideal& J) {
    if (!I.ring()->same_ring(*J.ring())) throw RingMismatch("ideals live in different rings");
}

// lift a polynomial into an extension ring (original variables first),
// optionally multiplied by extra^e for one extension variable
Polynomial lift(const RingPtr& big, const Polynomial& f, size_t nsmall) {
    std::vector<Term> terms;
    terms.reserve(f.term_count());
    for (const Term& t : f.terms()) {
        std::vector<uint16_t> e(big->nvars(), 0);
        for (size_t i = 0; i < nsmall; ++i) e[i] = t.mono.exponent(i);
        terms.push_back({t.coeff, Monomial::from_exponents(std::move(e))});
    }
    return Polynomial::from_terms(big, std::move(terms));
}

// project a polynomial supported on the first nsmall variables back down
Polynomial project(const RingPtr& small, const Polynomial& f) {
    std::vector<Term> terms;
    terms.reserve(f.term_count());
    for (const Term& t : f.terms()) {
        std::vector<uint16_t> e(small->nvars());
        for (size_t i = 0; i < small->nvars(); ++i) e[i] = t.mono.exponent(i);
        terms.push_back({t.coeff, Monomial::from_exponents(std::move(e))});
    }
    return Polynomial::from_terms(small, std::move(terms));
}

bool uses_vars(const Polynomial& f, size_t from, size_t to) {
    for (const Term& t : f.terms())
        for (size_t i = from; i < to; ++i)
            if (t.mono.exponent(i) > 0) return true;
    return false;
}

} // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
    check_rings(I, J);
    const RingPtr& r = I.ring();
    if (I.is_zero()) return I;
    if (J.is_zero()) return J;
    size_t n = r->nvars();
    MonomialOrder block = MonomialOrder::block(n + 1, {static_cast<uint32_t>(n)},
                                               MonomialOrder::grevlex(), r->order());
    RingPtr big = PolyRing::extended(r, {"@t"}, block);
    Polynomial t = Polynomial::variable(big, n);
    Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
    std::vector<Polynomial> gens;
    for (const Polynomial& f : I.gens()) gens.push_back(t * lift(big, f, n));
    for (const Polynomial& g : J.gens()) gens.push_back(one_minus_t * lift(big, g, n));
    std::vector<Polynomial> kept;
    for (const Polynomial& h : reduced_groebner_basis(std::move(gens)))
        if (!uses_vars(h, n, n + 1)) kept.push_back(project(r, h));
    Ideal K(r, std::move(kept));
    return Ideal(r, minimal_generators(K));
}

Ideal quotient(const Ideal& I, const Ideal& J) {
    check_rings(I, J);
    const RingPtr& r = I.ring();
    if (J.is_zero()) throw ContractViolation("colon ideal by the zero ideal");
    if (I.is_zero()) return I;
    std::optional<Ideal> result;
    for (const Polynomial& g : J.gens()) {
        Ideal K = intersect(I, Ideal(r, {g}));
        std::vector<Polynomial> qgens;
        qgens.reserve(K.gens().size());
        for (const Polynomial& w : K.gens()) qgens.push_back(exact_divide(w, g));
        Ideal Qg(r, std::move(qgens));
        result = result ? intersect(*result, Qg) : Qg;
        if (result->is_zero()) break;
    }
    return *result;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    check_rings(I, J);
    Ideal K = I;
    for (;;) {
        Ideal next = quotient(K, J);
        if (ideals_equal(next, K)) return K;
        K = std::move(next);
    }
}

std::vector<Polynomial> eliminate_raw(const RingPtr& ring, std::vector<Polynomial> gens,
                                      const std::vector<uint32_t>& drop_vars) {
    if (drop_vars.empty()) return reduced_groebner_basis(std::move(gens));
    for (uint32_t v : drop_vars)
        if (v >= ring->nvars()) throw ArityError("eliminated variable index out of range");
    MonomialOrder block =
        MonomialOrder::block(ring->nvars(), drop_vars, MonomialOrder::grevlex(), ring->order());
    RingPtr reordered = PolyRing::with_order(ring, block);
    std::vector<Polynomial> moved;
    moved.reserve(gens.size());
    for (const Polynomial& g : gens) {
        std::vector<Term> ts(g.terms().begin(), g.terms().end());
        moved.push_back(Polynomial::from_terms(reordered, std::move(ts)));
    }
    std::vector<bool> dropped(ring->nvars(), false);
    for (uint32_t v : drop_vars) dropped[v] = true;
    std::vector<Polynomial> kept;
    for (const Polynomial& h : reduced_groebner_basis(std::move(moved))) {
        bool pure = true;
        for (const Term& t : h.terms())
            for (size_t i = 0; i < ring->nvars() && pure; ++i)
                if (dropped[i] && t.mono.exponent(i) > 0) pure = false;
        if (!pure) continue;
        std::vector<Term> ts(h.terms().begin(), h.terms().end());
        kept.push_back(Polynomial::from_terms(ring, std::move(ts)));
    }
    return kept;
}

Ideal eliminate(const Ideal& I, const std::vector<uint32_t>& drop_vars) {
    return Ideal(I.ring(), eliminate_raw(I.ring(), I.gens(), drop_vars));
}

Ideal ring_map_kernel(const RingMapSpec& spec) {
    const RingPtr& src = spec.source;
    const RingPtr& tgt = spec.target;
    if (src->field() != tgt->field()) throw RingMismatch("ring map across different fields");
    if (spec.images.size() != src->nvars())
        throw ContractViolation("ring map needs one image per source variable");
    std::optional<uint32_t> d;
    for (const Polynomial& im : spec.images) {
        if (!im.ring()->same_ring(*tgt)) throw RingMismatch("image outside the target ring");
        auto hd = im.homogeneous_degree();
        if (!hd || *hd == 0)
            throw DegreeMismatch("images must be homogeneous of positive degree");
        if (!d) d = hd;
        if (*d != *hd) throw DegreeMismatch("images must share one degree");
    }
    for (const Polynomial& rel : spec.target_relations)
        if (!rel.ring()->same_ring(*tgt)) throw RingMismatch("relation outside the target ring");

    size_t n = src->nvars(), m = tgt->nvars();
    std::vector<std::string> extra;
    extra.reserve(m);
    for (const auto& nm : tgt->names()) extra.push_back("@" + nm);
    std::vector<uint32_t> tvars;
    for (size_t i = 0; i < m; ++i) tvars.push_back(static_cast<uint32_t>(n + i));
    MonomialOrder block =
        MonomialOrder::block(n + m, tvars, MonomialOrder::grevlex(), src->order());
    RingPtr big = PolyRing::extended(src, extra, block);

    // embed a target polynomial into the combined ring
    auto embed_target = [&](const Polynomial& f) {
        std::vector<Term> terms;
        terms.reserve(f.term_count());
        for (const Term& t : f.terms()) {
            std::vector<uint16_t> e(n + m, 0);
            for (size_t i = 0; i < m; ++i) e[n + i] = t.mono.exponent(i);
            terms.push_back({t.coeff, Monomial::from_exponents(std::move(e))});
        }
        return Polynomial::from_terms(big, std::move(terms));
    };

    std::vector<Polynomial> gens;
    for (const Polynomial& rel : spec.target_relations) gens.push_back(embed_target(rel));
    for (size_t i = 0; i < n; ++i)
        gens.push_back(Polynomial::variable(big, i) - embed_target(spec.images[i]));

    std::vector<Polynomial> kept;
    for (const Polynomial& h : reduced_groebner_basis(std::move(gens)))
        if (!uses_vars(h, n, n + m)) kept.push_back(project(src, h));
    Ideal K(src, std::move(kept));
    return Ideal(src, minimal_generators(K));
}

std::vector<Polynomial> regular_sequence_in(const Ideal& I, size_t length, SeededRng& rng,
                                            int max_retries) {
    if (I.is_zero()) throw GenericityFailure("no regular sequence in the zero ideal");
    if (length == 0) return {};
    int cod = codimension(I);
    if (static_cast<int>(length) > cod)
        throw GenericityFailure("requested length " + std::to_string(length) +
                                " exceeds the codimension " + std::to_string(cod));
    const RingPtr& r = I.ring();
    uint32_t top = 0;
    for (const Polynomial& g : I.gens()) top = std::max(top, *g.homogeneous_degree());
    std::vector<Polynomial> top_gens;
    for (const Polynomial& g : I.gens())
        if (*g.homogeneous_degree() == top) top_gens.push_back(g);

    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        std::vector<Polynomial> pool = top_gens;
        if (attempt > max_retries / 2) {
            // fallback: raise lower-degree generators to the top degree
            for (const Polynomial& g : I.gens()) {
                uint32_t dg = *g.homogeneous_degree();
                if (dg == top) continue;
                Polynomial h = g;
                for (uint32_t k = dg; k < top; ++k) {
                    Polynomial l = random_form(r, 1, rng);
                    while (l.is_zero()) l = random_form(r, 1, rng);
                    h = h * l;
                }
                pool.push_back(std::move(h));
            }
        }
        std::vector<Polynomial> z = random_combinations(pool, length, rng);
        Ideal Z(r, z);
        if (Z.gens().size() == length && codimension(Z) == static_cast<int>(length)) return z;
    }
    throw GenericityFailure("no regular sequence of length " + std::to_string(length) +
                            " found after " + std::to_string(max_retries) +
                            " retries; a larger prime may help");
}

Ideal unmixed_part(const Ideal& I, SeededRng& rng, int max_retries) {
    if (I.is_zero()) throw ContractViolation("unmixed part of the zero ideal");
    for (const Polynomial& g : I.gens())
        if (*g.homogeneous_degree() == 0) throw ContractViolation("unmixed part of the unit ideal");
    size_t c = static_cast<size_t>(codimension(I));
    std::vector<Polynomial> z = regular_sequence_in(I, c, rng, max_retries);
    Ideal Z(I.ring(), std::move(z));
    Ideal link = quotient(Z, I);
    return quotient(Z, link);
}

} // namespace pd3c
