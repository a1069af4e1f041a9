#include "pd3c/monomial.hpp"

#include <algorithm>

namespace pd3c {

Monomial Monomial::variable(size_t nvars, size_t i, uint16_t e) {
    Monomial m(nvars);
    if (i >= nvars) throw ArityError("variable index out of range");
    m.e_[i] = e;
    m.deg_ = e;
    return m;
}

Monomial Monomial::from_exponents(std::vector<uint16_t> exps) {
    Monomial m(exps.size());
    m.e_ = std::move(exps);
    m.recompute_degree();
    return m;
}

void Monomial::recompute_degree() {
    uint64_t d = 0;
    for (uint16_t e : e_) d += e;
    if (d >= (1u << 31)) throw OverflowError("total degree overflow");
    deg_ = static_cast<uint32_t>(d);
}

Monomial Monomial::operator*(const Monomial& o) const {
    check_arity(o);
    Monomial r(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) {
        uint32_t s = uint32_t(e_[i]) + o.e_[i];
        if (s > 0xffff) throw OverflowError("exponent overflow in monomial product");
        r.e_[i] = static_cast<uint16_t>(s);
    }
    uint64_t d = uint64_t(deg_) + o.deg_;
    if (d >= (1u << 31)) throw OverflowError("total degree overflow");
    r.deg_ = static_cast<uint32_t>(d);
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    check_arity(o);
    if (deg_ > o.deg_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    check_arity(o);
    Monomial r(e_.size());
    for (size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] < o.e_[i]) throw InternalError("inexact monomial division");
        r.e_[i] = static_cast<uint16_t>(e_[i] - o.e_[i]);
    }
    r.deg_ = deg_ - o.deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    a.check_arity(b);
    Monomial r(a.e_.size());
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.recompute_degree();
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    a.check_arity(b);
    Monomial r(a.e_.size());
    for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    r.recompute_degree();
    return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
    check_arity(o);
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

size_t Monomial::hash() const {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (uint16_t e : e_) h = h * 1315423911u + e + 0x9e3779b9u;
    return h;
}

} // namespace pd3c
