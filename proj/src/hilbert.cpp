#include "pd3c/hilbert.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace pd3c {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("Hilbert numerator overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("Hilbert numerator overflow");
    return r;
}

using ZPoly = std::vector<long long>; // dense in t

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = checked_add(r[i], b[i]);
    return r;
}

ZPoly zp_shift(const ZPoly& a, size_t k) {
    if (a.empty()) return a;
    ZPoly r(a.size() + k, 0);
    for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
    return r;
}

void zp_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long long zp_eval1(const ZPoly& a) {
    long long s = 0;
    for (long long c : a) s = checked_add(s, c);
    return s;
}

// 1 - t^d
ZPoly one_minus_power(uint32_t d) {
    ZPoly r(d + 1, 0);
    r[0] = 1;
    r[d] = checked_add(r[d], -1);
    return r;
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        auto ea = a.exponents(), eb = b.exponents();
        return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (Monomial& m : gens) {
        bool redundant = false;
        for (const Monomial& k : kept)
            if (k.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(m));
    }
    return kept;
}

struct MonomialSetHash {
    size_t operator()(const std::vector<Monomial>& v) const {
        size_t h = 1469598103934665603ull;
        for (const Monomial& m : v) h = (h ^ m.hash()) * 1099511628211ull;
        return h;
    }
};

struct MonomialSetEq {
    bool operator()(const std::vector<Monomial>& a, const std::vector<Monomial>& b) const {
        return a == b;
    }
};

using Memo = std::unordered_map<std::vector<Monomial>, ZPoly, MonomialSetHash, MonomialSetEq>;

// numerator of the Hilbert series of R/(M) over (1-t)^n, with M minimal.
// Pivot recursion: N(M) = N(M + (x)) + t * N(M : x) on the most frequent
// variable; base case is a set of pairwise coprime monomials.
ZPoly numerator_rec(const std::vector<Monomial>& M, size_t nvars, Memo& memo) {
    if (M.empty()) return {1};
    if (M.front().is_one()) return {0};
    auto it = memo.find(M);
    if (it != memo.end()) return it->second;

    std::vector<uint32_t> freq(nvars, 0);
    for (const Monomial& m : M)
        for (size_t i = 0; i < nvars; ++i)
            if (m.exponent(i) > 0) ++freq[i];
    uint32_t best = 0;
    size_t pivot = 0;
    for (size_t i = 0; i < nvars; ++i)
        if (freq[i] > best) {
            best = freq[i];
            pivot = i;
        }

    ZPoly result;
    if (best <= 1) {
        // pairwise coprime: complete intersection of monomials
        result = {1};
        for (const Monomial& m : M) result = zp_mul(result, one_minus_power(m.degree()));
    } else {
        Monomial x = Monomial::variable(nvars, pivot);
        std::vector<Monomial> plus; // M + (x), already minimal
        plus.push_back(x);
        for (const Monomial& m : M)
            if (m.exponent(pivot) == 0) plus.push_back(m);
        std::vector<Monomial> colon; // M : x, needs re-minimalization
        colon.reserve(M.size());
        for (const Monomial& m : M)
            colon.push_back(m.exponent(pivot) > 0 ? m.divided_by(x) : m);
        colon = minimalize_monomials(std::move(colon));
        plus = minimalize_monomials(std::move(plus));
        result = zp_add(numerator_rec(plus, nvars, memo), zp_shift(numerator_rec(colon, nvars, memo), 1));
    }
    zp_trim(result);
    memo.emplace(M, result);
    return result;
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

} // namespace

long long HilbertSeries::degree() const { return zp_eval1(reduced); }

long long HilbertSeries::hilbert_function(long long j) const {
    if (j < 0) return 0;
    long long n = static_cast<long long>(nvars);
    long long s = 0;
    for (size_t k = 0; k < numerator.size() && static_cast<long long>(k) <= j; ++k)
        s = checked_add(s, checked_mul(numerator[k], binomial(j - static_cast<long long>(k) + n - 1, n - 1)));
    return s;
}

std::vector<Monomial> leading_monomials(const Ideal& I) {
    std::vector<Monomial> lm;
    for (const Polynomial& g : I.groebner().elements()) lm.push_back(g.leading_monomial());
    return minimalize_monomials(std::move(lm));
}

Ideal leading_term_ideal(const Ideal& I) {
    std::vector<Polynomial> gens;
    for (Monomial& m : leading_monomials(I))
        gens.push_back(Polynomial::term(I.ring(), 1, std::move(m)));
    return Ideal(I.ring(), std::move(gens));
}

HilbertSeries hilbert_series_of_monomials(std::vector<Monomial> gens, size_t nvars) {
    HilbertSeries h;
    h.nvars = nvars;
    Memo memo;
    ZPoly num = numerator_rec(minimalize_monomials(std::move(gens)), nvars, memo);
    zp_trim(num);
    h.numerator = num;
    if (num.empty()) {
        // series of the zero module
        h.reduced = {};
        h.dim = -1;
        return h;
    }
    size_t cancelled = 0;
    ZPoly q = num;
    while (zp_eval1(q) == 0) {
        // divide by (1 - t): q_k = N_k + q_{k-1}
        ZPoly next(q.size() >= 1 ? q.size() - 1 : 0, 0);
        long long carry = 0;
        for (size_t k = 0; k + 1 < q.size(); ++k) {
            carry = checked_add(q[k], carry);
            next[k] = carry;
        }
        q = std::move(next);
        zp_trim(q);
        ++cancelled;
        if (q.empty()) break;
    }
    if (q.empty()) {
        h.reduced = {};
        h.dim = -1;
        return h;
    }
    h.reduced = q;
    h.dim = static_cast<int>(nvars) - static_cast<int>(cancelled);
    return h;
}

HilbertSeries hilbert_series(const Ideal& I) {
    return hilbert_series_of_monomials(leading_monomials(I), I.ring()->nvars());
}

int dimension(const Ideal& I) { return hilbert_series(I).dim; }

int codimension(const Ideal& I) {
    return static_cast<int>(I.ring()->nvars()) - dimension(I);
}

long long degree(const Ideal& I) { return hilbert_series(I).degree(); }

} // namespace pd3c
