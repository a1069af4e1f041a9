#include "pd3c/polynomial.hpp"

#include <algorithm>

namespace pd3c {

Polynomial Polynomial::zero(RingPtr r) {
    Polynomial f;
    f.ring_ = std::move(r);
    return f;
}

Polynomial Polynomial::constant(const RingPtr& r, long long c) {
    uint32_t cc = r->field().from_int(c);
    Polynomial f = zero(r);
    if (cc != 0) f.terms_.push_back({cc, Monomial(r->nvars())});
    return f;
}

Polynomial Polynomial::variable(const RingPtr& r, size_t i) {
    Polynomial f = zero(r);
    f.terms_.push_back({1, Monomial::variable(r->nvars(), i)});
    return f;
}

Polynomial Polynomial::term(const RingPtr& r, long long c, Monomial m) {
    if (m.nvars() != r->nvars()) throw ArityError("monomial arity does not match ring");
    uint32_t cc = r->field().from_int(c);
    Polynomial f = zero(r);
    if (cc != 0) f.terms_.push_back({cc, std::move(m)});
    return f;
}

Polynomial Polynomial::from_terms(RingPtr r, std::vector<Term> raw) {
    const MonomialOrder& O = r->order();
    const PrimeField& F = r->field();
    for (const Term& t : raw)
        if (t.mono.nvars() != r->nvars()) throw ArityError("monomial arity does not match ring");
    std::sort(raw.begin(), raw.end(),
              [&](const Term& a, const Term& b) { return O.compare(a.mono, b.mono) == Cmp::GT; });
    Polynomial f = zero(std::move(r));
    f.terms_.reserve(raw.size());
    for (Term& t : raw) {
        if (t.coeff % F.p() == 0) continue;
        uint32_t c = t.coeff % F.p();
        if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
            uint32_t s = F.add(f.terms_.back().coeff, c);
            if (s == 0)
                f.terms_.pop_back();
            else
                f.terms_.back().coeff = s;
        } else {
            f.terms_.push_back({c, std::move(t.mono)});
        }
    }
    return f;
}

const Term& Polynomial::leading() const {
    if (terms_.empty()) throw ContractViolation("leading term of the zero polynomial");
    return terms_.front();
}

void Polynomial::check_same_ring(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_ || !b.ring_) throw RingMismatch("operation on a detached polynomial");
    if (a.ring_ == b.ring_) return;
    if (!a.ring_->same_ring(*b.ring_)) throw RingMismatch("operands live in different rings");
}

namespace {

// merge a + sign*(c*m)*b over descending term arrays
std::vector<Term> merge(const PolyRing& R, const std::vector<Term>& a, const std::vector<Term>& b,
                        bool negate_b, uint32_t cb = 1, const Monomial* mb = nullptr) {
    const MonomialOrder& O = R.order();
    const PrimeField& F = R.field();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    Monomial scratch(0);
    auto bterm = [&](size_t k) -> Term {
        uint32_t c = cb == 1 ? b[k].coeff : F.mul(b[k].coeff, cb);
        if (negate_b) c = F.neg(c);
        return {c, mb ? b[k].mono * *mb : b[k].mono};
    };
    while (i < a.size() && j < b.size()) {
        Term tb = bterm(j);
        Cmp c = O.compare(a[i].mono, tb.mono);
        if (c == Cmp::GT) {
            out.push_back(a[i++]);
        } else if (c == Cmp::LT) {
            out.push_back(std::move(tb));
            ++j;
        } else {
            uint32_t s = F.add(a[i].coeff, tb.coeff);
            if (s != 0) out.push_back({s, a[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(bterm(j));
    return out;
}

} // namespace

Polynomial Polynomial::operator+(const Polynomial& g) const {
    check_same_ring(*this, g);
    Polynomial r = zero(ring_);
    r.terms_ = merge(*ring_, terms_, g.terms_, false);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
    check_same_ring(*this, g);
    Polynomial r = zero(ring_);
    r.terms_ = merge(*ring_, terms_, g.terms_, true);
    return r;
}

Polynomial Polynomial::sub_scaled_shifted(const Polynomial& g, uint32_t c, const Monomial& m) const {
    check_same_ring(*this, g);
    Polynomial r = zero(ring_);
    r.terms_ = merge(*ring_, terms_, g.terms_, true, c, &m);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    check_same_ring(*this, g);
    if (is_zero() || g.is_zero()) return zero(ring_);
    const PrimeField& F = ring_->field();
    std::vector<Term> prod;
    prod.reserve(terms_.size() * g.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : g.terms_) prod.push_back({F.mul(a.coeff, b.coeff), a.mono * b.mono});
    return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::operator-() const {
    Polynomial r = zero(ring_);
    r.terms_.reserve(terms_.size());
    const PrimeField& F = ring_->field();
    for (const Term& t : terms_) r.terms_.push_back({F.neg(t.coeff), t.mono});
    return r;
}

bool Polynomial::operator==(const Polynomial& g) const {
    check_same_ring(*this, g);
    if (terms_.size() != g.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != g.terms_[i].coeff || terms_[i].mono != g.terms_[i].mono)
            return false;
    return true;
}

Polynomial Polynomial::scaled(uint32_t c) const {
    const PrimeField& F = ring_->field();
    c %= F.p();
    if (c == 0) return zero(ring_);
    Polynomial r = zero(ring_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({F.mul(t.coeff, c), t.mono});
    return r;
}

Polynomial Polynomial::times_term(uint32_t c, const Monomial& m) const {
    const PrimeField& F = ring_->field();
    c %= F.p();
    if (c == 0) return zero(ring_);
    Polynomial r = zero(ring_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({F.mul(t.coeff, c), t.mono * m});
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    if (leading_coeff() == 1) return *this;
    return scaled(ring_->field().inv(leading_coeff()));
}

Polynomial Polynomial::tail() const {
    Polynomial r = zero(ring_);
    if (terms_.size() > 1) r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    uint32_t d = terms_.front().mono.degree();
    for (const Term& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

std::optional<uint32_t> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    uint32_t d = terms_.front().mono.degree();
    for (const Term& t : terms_)
        if (t.mono.degree() != d) return std::nullopt;
    return d;
}

uint32_t Polynomial::total_degree() const {
    if (terms_.empty()) throw ContractViolation("degree of the zero polynomial");
    uint32_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

} // namespace pd3c
