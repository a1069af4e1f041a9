#include "pd3c/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pd3c {

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    gens_.reserve(gens.size());
    for (Polynomial& g : gens) {
        if (g.is_zero()) continue;
        Polynomial::check_same_ring(g, Polynomial::zero(ring_));
        if (!g.is_homogeneous())
            throw ContractViolation("inhomogeneous generator in a graded-only ideal");
        gens_.push_back(std::move(g));
    }
}

const GroebnerBasis& Ideal::groebner() const {
    std::lock_guard<std::mutex> lock(cache_->m);
    if (!cache_->gb)
        cache_->gb = GroebnerBasis(ring_->order(), reduced_groebner_basis(gens_));
    return *cache_->gb;
}

// ------------------------------------------------------------- division

namespace {

// first element of G whose leading monomial divides m, or -1
int find_divisor(std::span<const Polynomial> G, const Monomial& m) {
    for (size_t k = 0; k < G.size(); ++k) {
        if (G[k].is_zero()) continue;
        if (G[k].leading_monomial().divides(m)) return static_cast<int>(k);
    }
    return -1;
}

} // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G) {
    if (f.is_zero()) return f;
    const RingPtr& r = f.ring();
    const PrimeField& F = r->field();
    std::vector<Term> head;
    Polynomial work = f;
    while (!work.is_zero()) {
        const Term& lt = work.terms().front();
        int k = find_divisor(G, lt.mono);
        if (k < 0) {
            head.push_back(lt);
            work = work.tail();
            continue;
        }
        const Polynomial& g = G[k];
        uint32_t c = F.div(lt.coeff, g.leading_coeff());
        Monomial m = lt.mono.divided_by(g.leading_monomial());
        work = work.sub_scaled_shifted(g, c, m);
    }
    // head was appended in strictly descending order
    return Polynomial::from_terms(r, std::move(head));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    return normal_form(f, G.elements());
}

Polynomial top_normal_form(const Polynomial& f, std::span<const Polynomial> G) {
    const PrimeField& F = f.ring()->field();
    Polynomial work = f;
    while (!work.is_zero()) {
        const Term& lt = work.terms().front();
        int k = find_divisor(G, lt.mono);
        if (k < 0) break;
        const Polynomial& g = G[k];
        uint32_t c = F.div(lt.coeff, g.leading_coeff());
        Monomial m = lt.mono.divided_by(g.leading_monomial());
        work = work.sub_scaled_shifted(g, c, m);
    }
    return work;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    Polynomial::check_same_ring(f, g);
    if (g.is_zero()) throw DivisionByZero("exact division by zero polynomial");
    const RingPtr& r = f.ring();
    const PrimeField& F = r->field();
    std::vector<Term> quot;
    Polynomial work = f;
    while (!work.is_zero()) {
        const Term& lt = work.terms().front();
        if (!g.leading_monomial().divides(lt.mono))
            throw InternalError("inexact polynomial division");
        uint32_t c = F.div(lt.coeff, g.leading_coeff());
        Monomial m = lt.mono.divided_by(g.leading_monomial());
        quot.push_back({c, m});
        work = work.sub_scaled_shifted(g, c, m);
    }
    return Polynomial::from_terms(r, std::move(quot));
}

// ------------------------------------------------------------ Buchberger

namespace {

struct SPair {
    uint32_t sugar;
    uint32_t lcm_degree;
    uint64_t index; // creation order, final tie-break
    uint32_t i, j;  // i < j
};

struct SPairLess {
    bool operator()(const SPair& a, const SPair& b) const {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
        return a.index < b.index;
    }
};

// top-reduction with sugar bookkeeping
std::pair<Polynomial, uint32_t> top_reduce_sugar(Polynomial work, uint32_t sugar,
                                                 const std::vector<Polynomial>& B,
                                                 const std::vector<uint32_t>& sugars) {
    const PrimeField& F = work.ring()->field();
    while (!work.is_zero()) {
        const Term& lt = work.terms().front();
        int k = find_divisor(B, lt.mono);
        if (k < 0) break;
        const Polynomial& g = B[k];
        uint32_t c = F.div(lt.coeff, g.leading_coeff());
        Monomial m = lt.mono.divided_by(g.leading_monomial());
        sugar = std::max(sugar, m.degree() + sugars[k]);
        work = work.sub_scaled_shifted(g, c, m);
    }
    return {std::move(work), sugar};
}

struct Engine {
    const RingPtr ring;
    std::vector<Polynomial> B;
    std::vector<uint32_t> sugars;
    std::set<SPair, SPairLess> queue;
    std::set<std::pair<uint32_t, uint32_t>> handled;
    uint64_t next_index = 0;

    explicit Engine(RingPtr r) : ring(std::move(r)) {}

    void add_element(Polynomial g, uint32_t sugar) {
        uint32_t k = static_cast<uint32_t>(B.size());
        for (uint32_t i = 0; i < k; ++i) {
            Monomial lcm = Monomial::lcm(B[i].leading_monomial(), g.leading_monomial());
            uint32_t s = std::max(sugars[i] + lcm.degree() - B[i].leading_monomial().degree(),
                                  sugar + lcm.degree() - g.leading_monomial().degree());
            queue.insert({s, lcm.degree(), next_index++, i, k});
        }
        B.push_back(std::move(g));
        sugars.push_back(sugar);
    }

    bool chain_criterion(const SPair& p, const Monomial& lcm) const {
        for (uint32_t k = 0; k < B.size(); ++k) {
            if (k == p.i || k == p.j) continue;
            if (!B[k].leading_monomial().divides(lcm)) continue;
            auto ik = std::minmax(p.i, k);
            auto jk = std::minmax(p.j, k);
            if (handled.count({ik.first, ik.second}) && handled.count({jk.first, jk.second}))
                return true;
        }
        return false;
    }

    void run() {
        while (!queue.empty()) {
            SPair p = *queue.begin();
            queue.erase(queue.begin());
            handled.insert({p.i, p.j});
            const Monomial& li = B[p.i].leading_monomial();
            const Monomial& lj = B[p.j].leading_monomial();
            if (li.coprime_with(lj)) continue;
            Monomial lcm = Monomial::lcm(li, lj);
            if (chain_criterion(p, lcm)) continue;
            Polynomial s = B[p.i].times_monomial(lcm.divided_by(li)) -
                           B[p.j].times_monomial(lcm.divided_by(lj));
            auto [h, sug] = top_reduce_sugar(std::move(s), p.sugar, B, sugars);
            if (!h.is_zero()) add_element(h.monic(), sug);
        }
    }
};

} // namespace

static std::vector<Polynomial> interreduce(std::vector<Polynomial> B) {
    if (B.empty()) return B;
    RingPtr r = B.front().ring();
    const MonomialOrder& O = r->order();
    std::sort(B.begin(), B.end(), [&](const Polynomial& a, const Polynomial& b) {
        return O.compare(a.leading_monomial(), b.leading_monomial()) == Cmp::LT;
    });
    // ascending leading terms: anything divisible by an earlier lead is redundant
    std::vector<Polynomial> kept;
    for (Polynomial& g : B) {
        bool redundant = false;
        for (const Polynomial& k : kept)
            if (k.leading_monomial().divides(g.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(g));
    }
    // tail reduction; leading terms are pairwise indivisible so they survive
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(kept.size() - 1);
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        kept[i] = normal_form(kept[i], others).monic();
    }
    std::sort(kept.begin(), kept.end(), [&](const Polynomial& a, const Polynomial& b) {
        return O.compare(a.leading_monomial(), b.leading_monomial()) == Cmp::LT;
    });
    return kept;
}

std::vector<Polynomial> reduced_groebner_basis(std::vector<Polynomial> gens) {
    std::vector<Polynomial> nonzero;
    for (Polynomial& g : gens)
        if (!g.is_zero()) nonzero.push_back(std::move(g));
    if (nonzero.empty()) return {};
    Engine e(nonzero.front().ring());
    for (Polynomial& g : nonzero) {
        uint32_t sugar = g.total_degree();
        e.add_element(g.monic(), sugar);
    }
    e.run();
    return interreduce(std::move(e.B));
}

bool ideal_membership(const Polynomial& f, const Ideal& I) {
    Polynomial::check_same_ring(f, Polynomial::zero(I.ring()));
    if (f.is_zero()) return true;
    return normal_form(f, I.groebner()).is_zero();
}

std::vector<Polynomial> minimal_generators(const Ideal& I) {
    std::vector<Polynomial> sorted = I.gens();
    std::stable_sort(sorted.begin(), sorted.end(), [](const Polynomial& a, const Polynomial& b) {
        return *a.homogeneous_degree() < *b.homogeneous_degree();
    });
    std::vector<Polynomial> kept;
    std::vector<Polynomial> kept_gb;
    for (Polynomial& g : sorted) {
        if (!kept.empty() && normal_form(g, kept_gb).is_zero()) continue;
        kept.push_back(g);
        kept_gb = reduced_groebner_basis(kept);
    }
    return kept;
}

bool ideals_equal(const Ideal& I, const Ideal& J) {
    if (!I.ring()->same_ring(*J.ring())) throw RingMismatch("comparing ideals across rings");
    const auto& a = I.groebner().elements();
    const auto& b = J.groebner().elements();
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

} // namespace pd3c
