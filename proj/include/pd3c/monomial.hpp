#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pd3c/errors.hpp"

namespace pd3c {

/// Exponent vector with a cached total degree. Per-variable exponents are
/// capped at 2^16-1 with checked arithmetic; overflow is a hard error.
class Monomial {
public:
    explicit Monomial(size_t nvars) : e_(nvars, 0), deg_(0) {}

    static Monomial variable(size_t nvars, size_t i, uint16_t e = 1);
    static Monomial from_exponents(std::vector<uint16_t> exps);

    size_t nvars() const { return e_.size(); }
    uint32_t degree() const { return deg_; }
    uint16_t exponent(size_t i) const { return e_[i]; }
    std::span<const uint16_t> exponents() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    size_t hash() const;

private:
    std::vector<uint16_t> e_;
    uint32_t deg_;

    void check_arity(const Monomial& o) const {
        if (e_.size() != o.e_.size())
            throw ArityError("exponent vectors have different lengths");
    }
    void recompute_degree();
};

} // namespace pd3c
