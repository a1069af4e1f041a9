#include "pd3c/prime_field.hpp"

#include <string>

namespace pd3c {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

} // namespace

PrimeField::PrimeField(uint32_t p) : p_(p) {
    if (p <= 2 || p >= (1u << 31))
        throw ContractViolation("field modulus must be an odd prime in (2, 2^31): " + std::to_string(p));
    if (!is_prime(p))
        throw ContractViolation("field modulus is not prime: " + std::to_string(p));
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    uint32_t base = a % p_;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

uint32_t PrimeField::inv(uint32_t a) const {
    if (a % p_ == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

uint32_t PrimeField::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
}

} // namespace pd3c
