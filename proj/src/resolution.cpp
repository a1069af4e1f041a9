#include "pd3c/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "pd3c/hilbert.hpp"

namespace pd3c {

// ------------------------------------------------------------ GradedMatrix

GradedMatrix::GradedMatrix(RingPtr ring, FreeModule target, FreeModule source,
                           std::vector<std::vector<Polynomial>> entries)
    : ring_(std::move(ring)), target_(std::move(target)), source_(std::move(source)),
      e_(std::move(entries)) {
    if (e_.size() != target_.rank()) throw ContractViolation("matrix row count mismatch");
    for (size_t r = 0; r < e_.size(); ++r) {
        if (e_[r].size() != source_.rank()) throw ContractViolation("matrix column count mismatch");
        for (size_t c = 0; c < e_[r].size(); ++c) {
            Polynomial& p = e_[r][c];
            if (!p.ring()) p = Polynomial::zero(ring_);
            if (p.is_zero()) continue;
            auto d = p.homogeneous_degree();
            if (!d || static_cast<int>(*d) != source_.twist(c) - target_.twist(r))
                throw ContractViolation("matrix entry is not homogeneous of the twist difference");
        }
    }
}

GradedMatrix GradedMatrix::times(const GradedMatrix& g) const {
    if (source_ != g.target_) throw ContractViolation("matrix shapes do not compose");
    std::vector<std::vector<Polynomial>> out(rows(), std::vector<Polynomial>(g.cols()));
    for (size_t r = 0; r < rows(); ++r)
        for (size_t c = 0; c < g.cols(); ++c) {
            Polynomial acc = Polynomial::zero(ring_);
            for (size_t k = 0; k < cols(); ++k) {
                if (e_[r][k].is_zero() || g.e_[k][c].is_zero()) continue;
                acc = acc + e_[r][k] * g.e_[k][c];
            }
            out[r][c] = std::move(acc);
        }
    return GradedMatrix(ring_, target_, g.source_, std::move(out));
}

bool GradedMatrix::is_zero() const {
    for (const auto& row : e_)
        for (const Polynomial& p : row)
            if (!p.is_zero()) return false;
    return true;
}

const FreeModule& Resolution::module(size_t i) const {
    if (i == 0) {
        if (!steps.empty()) return steps[0].target();
        return f0;
    }
    if (i > steps.size()) throw ContractViolation("module index beyond resolution length");
    return steps[i - 1].source();
}

// ------------------------------------------------------------- BettiTable

void BettiTable::set(int i, int j, long long v) {
    if (v == 0)
        entries_.erase({i, j});
    else
        entries_[{i, j}] = v;
}

long long BettiTable::get(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

int BettiTable::max_homological() const {
    int m = 0;
    for (const auto& [ij, v] : entries_) m = std::max(m, ij.first);
    return m;
}

std::vector<long long> BettiTable::totals() const {
    std::vector<long long> t(static_cast<size_t>(max_homological()) + 1, 0);
    for (const auto& [ij, v] : entries_) t[static_cast<size_t>(ij.first)] += v;
    return t;
}

std::string BettiTable::render_text() const {
    std::vector<long long> tot = totals();
    int imax = max_homological();
    int rmin = 0, rmax = 0;
    for (const auto& [ij, v] : entries_) {
        rmin = std::min(rmin, ij.second - ij.first);
        rmax = std::max(rmax, ij.second - ij.first);
    }
    std::vector<size_t> width(static_cast<size_t>(imax) + 1, 1);
    for (int i = 0; i <= imax; ++i)
        width[static_cast<size_t>(i)] = std::to_string(tot[static_cast<size_t>(i)]).size();
    size_t label = 5; // "total"
    label = std::max(label, std::to_string(rmin).size());
    label = std::max(label, std::to_string(rmax).size());

    auto rjust = [](const std::string& s, size_t w) {
        return s.size() >= w ? s : std::string(w - s.size(), ' ') + s;
    };
    std::ostringstream out;
    out << std::string(label + 1, ' ');
    for (int i = 0; i <= imax; ++i)
        out << ' ' << rjust(std::to_string(i), width[static_cast<size_t>(i)]);
    out << '\n';
    out << rjust("total", label) << ':';
    for (int i = 0; i <= imax; ++i)
        out << ' ' << rjust(std::to_string(tot[static_cast<size_t>(i)]), width[static_cast<size_t>(i)]);
    out << '\n';
    for (int r = rmin; r <= rmax; ++r) {
        out << rjust(std::to_string(r), label) << ':';
        for (int i = 0; i <= imax; ++i) {
            long long v = get(i, r + i);
            out << ' '
                << rjust(v == 0 ? "." : std::to_string(v), width[static_cast<size_t>(i)]);
        }
        out << '\n';
    }
    return out.str();
}

std::string BettiTable::render_kv() const {
    std::ostringstream out;
    for (const auto& [ij, v] : entries_)
        out << ij.first << ',' << ij.second << ',' << v << '\n';
    return out.str();
}

// ----------------------------------------------------- Schreyer machinery

namespace {

// Description of the free module the current columns live in: per basis
// column, the flattened ring monomial of its leading term chain, the chain
// of column indices down to the ring, and the twist.
struct LevelData {
    std::vector<Monomial> flat;
    std::vector<std::vector<uint32_t>> chain;
    std::vector<int> twist;
    size_t rank() const { return flat.size(); }
};

struct MTerm {
    uint32_t coeff;
    Monomial mono;
    uint32_t col;
    Monomial flat; // mono * level.flat[col], cached for comparisons
};

using MVec = std::vector<MTerm>; // strictly descending

struct ModCtx {
    const PolyRing* ring;
    const LevelData* level;
};

// Induced (Schreyer) order: flattened ring monomials first, then the column
// chains bottom-up, then the column index; smaller column sorts higher.
Cmp mcompare(const ModCtx& ctx, const MTerm& a, const MTerm& b) {
    Cmp c = ctx.ring->order().compare(a.flat, b.flat);
    if (c != Cmp::EQ) return c;
    if (a.col == b.col) return Cmp::EQ;
    const auto& ca = ctx.level->chain[a.col];
    const auto& cb = ctx.level->chain[b.col];
    for (size_t i = 0; i < std::min(ca.size(), cb.size()); ++i)
        if (ca[i] != cb[i]) return ca[i] < cb[i] ? Cmp::GT : Cmp::LT;
    return a.col < b.col ? Cmp::GT : Cmp::LT;
}

MTerm shifted_term(const ModCtx&, const MTerm& t, uint32_t c, const Monomial& m,
                   const PrimeField& F, bool negate) {
    uint32_t cc = c == 1 ? t.coeff : F.mul(t.coeff, c);
    if (negate) cc = F.neg(cc);
    return {cc, t.mono * m, t.col, t.flat * m};
}

MVec mv_normalize(const ModCtx& ctx, std::vector<MTerm> raw) {
    const PrimeField& F = ctx.ring->field();
    std::stable_sort(raw.begin(), raw.end(),
                     [&](const MTerm& a, const MTerm& b) { return mcompare(ctx, a, b) == Cmp::GT; });
    MVec out;
    out.reserve(raw.size());
    for (MTerm& t : raw) {
        if (t.coeff % F.p() == 0) continue;
        if (!out.empty() && out.back().col == t.col && out.back().mono == t.mono) {
            uint32_t s = F.add(out.back().coeff, t.coeff);
            if (s == 0)
                out.pop_back();
            else
                out.back().coeff = s;
        } else {
            out.push_back(std::move(t));
        }
    }
    return out;
}

// a - c * m * b
MVec mv_sub_scaled_shifted(const ModCtx& ctx, const MVec& a, uint32_t c, const Monomial& m,
                           const MVec& b) {
    const PrimeField& F = ctx.ring->field();
    MVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        MTerm tb = shifted_term(ctx, b[j], c, m, F, true);
        Cmp cmp = mcompare(ctx, a[i], tb);
        if (cmp == Cmp::GT) {
            out.push_back(a[i++]);
        } else if (cmp == Cmp::LT) {
            out.push_back(std::move(tb));
            ++j;
        } else {
            uint32_t s = F.add(a[i].coeff, tb.coeff);
            if (s != 0) {
                MTerm t = a[i];
                t.coeff = s;
                out.push_back(std::move(t));
            }
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(shifted_term(ctx, b[j], c, m, F, true));
    return out;
}

MVec mv_monic(const ModCtx& ctx, MVec v) {
    if (v.empty() || v.front().coeff == 1) return v;
    const PrimeField& F = ctx.ring->field();
    uint32_t inv = F.inv(v.front().coeff);
    for (MTerm& t : v) t.coeff = F.mul(t.coeff, inv);
    return v;
}

bool mterm_divides(const MTerm& a, const MTerm& b) {
    return a.col == b.col && a.mono.divides(b.mono);
}

// full module normal form of f against the given columns
MVec mv_normal_form(const ModCtx& ctx, MVec f, const std::vector<const MVec*>& cols) {
    const PrimeField& F = ctx.ring->field();
    std::vector<MTerm> head;
    while (!f.empty()) {
        const MTerm& lt = f.front();
        const MVec* red = nullptr;
        for (const MVec* g : cols)
            if (!g->empty() && mterm_divides(g->front(), lt)) {
                red = g;
                break;
            }
        if (!red) {
            head.push_back(lt);
            f.erase(f.begin());
            continue;
        }
        uint32_t c = F.div(lt.coeff, red->front().coeff);
        Monomial m = lt.mono.divided_by(red->front().mono);
        f = mv_sub_scaled_shifted(ctx, f, c, m, *red);
    }
    return head; // strictly descending by construction
}

struct Cofactor {
    uint32_t col;
    uint32_t coeff;
    Monomial mono;
};

// reduce a module element to zero against a Groebner set of monic columns,
// recording the quotients
std::vector<Cofactor> mv_reduce_to_zero(const ModCtx& ctx, MVec f, const std::vector<MVec>& cols) {
    const PrimeField& F = ctx.ring->field();
    std::vector<Cofactor> cof;
    while (!f.empty()) {
        const MTerm& lt = f.front();
        int hit = -1;
        for (size_t t = 0; t < cols.size(); ++t)
            if (!cols[t].empty() && mterm_divides(cols[t].front(), lt)) {
                hit = static_cast<int>(t);
                break;
            }
        if (hit < 0) throw ContractViolation("columns do not form a module Groebner basis");
        uint32_t c = F.div(lt.coeff, cols[static_cast<size_t>(hit)].front().coeff);
        Monomial m = lt.mono.divided_by(cols[static_cast<size_t>(hit)].front().mono);
        cof.push_back({static_cast<uint32_t>(hit), c, m});
        f = mv_sub_scaled_shifted(ctx, f, c, m, cols[static_cast<size_t>(hit)]);
    }
    return cof;
}

// pure lexicographic comparison of exponent vectors (sorting key only,
// independent of the ring order)
bool lex_less(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.nvars(); ++i)
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i);
    return false;
}

// Schreyer data of the free module covering the given columns.
LevelData level_data_from(const LevelData& prev, const std::vector<MVec>& cols) {
    LevelData L;
    L.flat.reserve(cols.size());
    for (const MVec& c : cols) {
        if (c.empty()) throw ContractViolation("zero column in a module basis");
        const MTerm& lt = c.front();
        L.flat.push_back(lt.flat);
        std::vector<uint32_t> chain = prev.chain[lt.col];
        chain.push_back(lt.col);
        L.chain.push_back(std::move(chain));
        L.twist.push_back(static_cast<int>(lt.mono.degree()) + prev.twist[lt.col]);
    }
    return L;
}

// interreduce a module Groebner set: minimalize leading terms, tail-reduce,
// make monic, and sort columns by (bottom column, leading monomial lex
// descending) - the sort the termination argument needs.
std::vector<MVec> interreduce_module(const ModCtx& ctx, std::vector<MVec> S) {
    for (MVec& v : S) v = mv_monic(ctx, std::move(v));
    std::stable_sort(S.begin(), S.end(), [&](const MVec& a, const MVec& b) {
        return mcompare(ctx, a.front(), b.front()) == Cmp::LT;
    });
    std::vector<MVec> kept;
    for (MVec& v : S) {
        bool redundant = false;
        for (const MVec& k : kept)
            if (mterm_divides(k.front(), v.front())) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(v));
    }
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<const MVec*> others;
        others.reserve(kept.size() - 1);
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(&kept[j]);
        kept[i] = mv_monic(ctx, mv_normal_form(ctx, kept[i], others));
    }
    std::stable_sort(kept.begin(), kept.end(), [&](const MVec& a, const MVec& b) {
        if (a.front().col != b.front().col) return a.front().col < b.front().col;
        return lex_less(b.front().mono, a.front().mono); // lex descending
    });
    return kept;
}

// one Schreyer step: syzygies of monic columns (a module GB over `level`),
// interreduced, as vectors over the covering module described by `next`.
std::vector<MVec> schreyer_step(const PolyRing& R, const LevelData& level,
                                const std::vector<MVec>& cols, const LevelData& next) {
    ModCtx ctx{&R, &level};
    ModCtx nctx{&R, &next};
    const PrimeField& F = R.field();
    std::vector<MVec> syz;
    for (size_t j = 0; j < cols.size(); ++j) {
        for (size_t i = 0; i < j; ++i) {
            const MTerm& li = cols[i].front();
            const MTerm& lj = cols[j].front();
            if (li.col != lj.col) continue;
            Monomial lcm = Monomial::lcm(li.mono, lj.mono);
            Monomial ui = lcm.divided_by(li.mono);
            Monomial uj = lcm.divided_by(lj.mono);
            MVec spair = mv_sub_scaled_shifted(
                ctx, mv_normalize(ctx, [&] {
                    std::vector<MTerm> ts;
                    ts.reserve(cols[i].size());
                    for (const MTerm& t : cols[i]) ts.push_back(shifted_term(ctx, t, 1, ui, F, false));
                    return ts;
                }()),
                1, uj, cols[j]);
            std::vector<Cofactor> cof = mv_reduce_to_zero(ctx, std::move(spair), cols);
            std::vector<MTerm> raw;
            raw.reserve(cof.size() + 2);
            raw.push_back({1, ui, static_cast<uint32_t>(i), ui * next.flat[i]});
            raw.push_back({F.neg(1), uj, static_cast<uint32_t>(j), uj * next.flat[j]});
            for (const Cofactor& q : cof)
                raw.push_back({F.neg(q.coeff), q.mono, q.col, q.mono * next.flat[q.col]});
            MVec tau = mv_normalize(nctx, std::move(raw));
            if (!tau.empty()) syz.push_back(std::move(tau));
        }
    }
    return interreduce_module(nctx, std::move(syz));
}

GradedMatrix matrix_from_columns(const RingPtr& r, const LevelData& target,
                                 const std::vector<MVec>& cols, const LevelData& source) {
    std::vector<std::vector<Polynomial>> entries(
        target.rank(), std::vector<Polynomial>(cols.size(), Polynomial::zero(r)));
    std::vector<std::vector<std::vector<Term>>> buckets(
        target.rank(), std::vector<std::vector<Term>>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c)
        for (const MTerm& t : cols[c]) buckets[t.col][c].push_back({t.coeff, t.mono});
    for (size_t rr = 0; rr < target.rank(); ++rr)
        for (size_t c = 0; c < cols.size(); ++c)
            if (!buckets[rr][c].empty())
                entries[rr][c] = Polynomial::from_terms(r, std::move(buckets[rr][c]));
    return GradedMatrix(r, FreeModule(target.twist), FreeModule(source.twist), std::move(entries));
}

LevelData trivial_level(const FreeModule& f, size_t nvars) {
    LevelData L;
    for (size_t i = 0; i < f.rank(); ++i) {
        L.flat.push_back(Monomial(nvars));
        L.chain.push_back({});
        L.twist.push_back(f.twist(i));
    }
    return L;
}

MVec column_from_polynomial(const Polynomial& g) {
    MVec v;
    v.reserve(g.term_count());
    for (const Term& t : g.terms()) v.push_back({t.coeff, t.mono, 0, t.mono});
    return v;
}

} // namespace

GradedMatrix syzygies(const GradedMatrix& m) {
    const RingPtr& r = m.ring();
    LevelData L = trivial_level(m.target(), r->nvars());
    ModCtx ctx{r.get(), &L};
    std::vector<MVec> cols;
    std::vector<uint32_t> lead_coeffs;
    for (size_t c = 0; c < m.cols(); ++c) {
        std::vector<MTerm> raw;
        for (size_t rr = 0; rr < m.rows(); ++rr)
            for (const Term& t : m.entry(rr, c).terms())
                raw.push_back({t.coeff, t.mono, static_cast<uint32_t>(rr), t.mono});
        MVec v = mv_normalize(ctx, std::move(raw));
        if (v.empty()) throw ContractViolation("zero column has no Schreyer data");
        lead_coeffs.push_back(v.front().coeff);
        cols.push_back(mv_monic(ctx, std::move(v)));
    }
    LevelData next = level_data_from(L, cols);
    // twists of the Schreyer cover must agree with the declared source
    for (size_t c = 0; c < cols.size(); ++c) next.twist[c] = m.source().twist(c);
    std::vector<MVec> syz = schreyer_step(*r, L, cols, next);
    // undo the internal monic scaling: a syzygy of the scaled columns turns
    // into one of the originals by scaling each coordinate
    const PrimeField& F = r->field();
    for (MVec& v : syz)
        for (MTerm& t : v) t.coeff = F.mul(t.coeff, F.inv(lead_coeffs[t.col]));
    LevelData syz_level = syz.empty() ? LevelData{} : level_data_from(next, syz);
    return matrix_from_columns(r, next, syz, syz_level);
}

Resolution free_resolution(const Ideal& I, int max_length) {
    const RingPtr& r = I.ring();
    int n = static_cast<int>(r->nvars());
    if (max_length < 0) max_length = std::max(n, 1);
    if (max_length < 1) throw ContractViolation("resolution length bound must be >= 1");
    Resolution res;
    res.ring = r;
    res.f0 = FreeModule({0});
    std::vector<Polynomial> G = I.groebner().elements();
    if (G.empty()) {
        res.minimal = true;
        return res;
    }
    std::stable_sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
        return lex_less(b.leading_monomial(), a.leading_monomial());
    });
    LevelData cur = trivial_level(res.f0, r->nvars());
    std::vector<MVec> cols;
    cols.reserve(G.size());
    for (const Polynomial& g : G) cols.push_back(column_from_polynomial(g));
    for (int k = 1; k <= max_length; ++k) {
        LevelData next = level_data_from(cur, cols);
        res.steps.push_back(matrix_from_columns(r, cur, cols, next));
        if (k == max_length) break;
        std::vector<MVec> syz = schreyer_step(*r, cur, cols, next);
        if (syz.empty()) break;
        cols = std::move(syz);
        cur = std::move(next);
    }
    return res;
}

// ---------------------------------------------------------- minimization

namespace {

bool constant_entry(const Polynomial& p) {
    return !p.is_zero() && p.leading_monomial().is_one();
}

} // namespace

Resolution minimize(Resolution res) {
    if (res.steps.empty()) {
        res.minimal = true;
        return res;
    }
    const RingPtr& r = res.ring;
    const PrimeField& F = r->field();
    size_t L = res.steps.size();
    // modules F_0..F_L and dense entry arrays
    std::vector<std::vector<int>> tw(L + 1);
    tw[0] = res.steps[0].target().twists();
    for (size_t k = 0; k < L; ++k) tw[k + 1] = res.steps[k].source().twists();
    std::vector<std::vector<std::vector<Polynomial>>> mats(L);
    for (size_t k = 0; k < L; ++k) {
        mats[k].assign(res.steps[k].rows(), std::vector<Polynomial>(res.steps[k].cols()));
        for (size_t rr = 0; rr < res.steps[k].rows(); ++rr)
            for (size_t c = 0; c < res.steps[k].cols(); ++c) mats[k][rr][c] = res.steps[k].entry(rr, c);
    }

    for (size_t k = 0; k < L; ++k) {
        for (;;) {
            // deterministic pivot: least (twist, row, column) unit entry
            int pr = -1, pc = -1;
            int best_twist = 0;
            for (size_t rr = 0; rr < mats[k].size(); ++rr)
                for (size_t c = 0; c < (mats[k].empty() ? 0 : mats[k][rr].size()); ++c) {
                    if (!constant_entry(mats[k][rr][c])) continue;
                    int twc = tw[k + 1][c];
                    if (pr < 0 || twc < best_twist) {
                        pr = static_cast<int>(rr);
                        pc = static_cast<int>(c);
                        best_twist = twc;
                    }
                }
            if (pr < 0) break;
            size_t R0 = static_cast<size_t>(pr), C0 = static_cast<size_t>(pc);
            uint32_t uinv = F.inv(mats[k][R0][C0].leading_coeff());
            for (size_t rr = 0; rr < mats[k].size(); ++rr) {
                if (rr == R0 || mats[k][rr][C0].is_zero()) continue;
                Polynomial factor = mats[k][rr][C0].scaled(uinv);
                for (size_t c = 0; c < mats[k][rr].size(); ++c) {
                    if (c == C0 || mats[k][R0][c].is_zero()) continue;
                    mats[k][rr][c] = mats[k][rr][c] - factor * mats[k][R0][c];
                }
            }
            // remove row R0 (basis element of F_k) and column C0 (of F_{k+1})
            mats[k].erase(mats[k].begin() + static_cast<long>(R0));
            for (auto& row : mats[k]) row.erase(row.begin() + static_cast<long>(C0));
            tw[k].erase(tw[k].begin() + static_cast<long>(R0));
            tw[k + 1].erase(tw[k + 1].begin() + static_cast<long>(C0));
            if (k > 0)
                for (auto& row : mats[k - 1]) row.erase(row.begin() + static_cast<long>(R0));
            if (k + 1 < L) mats[k + 1].erase(mats[k + 1].begin() + static_cast<long>(C0));
        }
    }

    Resolution out;
    out.ring = r;
    out.minimal = true;
    out.f0 = FreeModule(tw[0]);
    for (size_t k = 0; k < L; ++k) {
        if (tw[k + 1].empty()) break;
        out.steps.emplace_back(r, FreeModule(tw[k]), FreeModule(tw[k + 1]), mats[k]);
    }
    return out;
}

BettiTable betti_table(const Resolution& res) {
    if (!res.minimal) throw ContractViolation("Betti table of a non-minimal resolution");
    BettiTable b;
    for (int t : res.module(0).twists()) b.set(0, t, b.get(0, t) + 1);
    for (size_t i = 1; i <= res.length(); ++i)
        for (int t : res.module(i).twists())
            b.set(static_cast<int>(i), t, b.get(static_cast<int>(i), t) + 1);
    return b;
}

int projective_dimension(const Ideal& I) {
    if (I.is_zero()) return 0;
    Resolution res = minimize(free_resolution(I));
    int pd = static_cast<int>(res.length());
    int n = static_cast<int>(I.ring()->nvars());
    if (pd > n) throw InternalError("projective dimension exceeds the variable count");
    if (pd < codimension(I)) throw InternalError("projective dimension below the codimension");
    return pd;
}

} // namespace pd3c
