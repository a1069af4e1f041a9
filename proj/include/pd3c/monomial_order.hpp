#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pd3c/monomial.hpp"

namespace pd3c {

enum class Cmp : int { LT = -1, EQ = 0, GT = 1 };

/// Global monomial orders: grevlex, lex, grlex, and block (elimination)
/// orders composed from them. All are total, multiplicative well-orders
/// with 1 minimal.
class MonomialOrder {
public:
    enum class Kind { Grevlex, Lex, Grlex, Block };

    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
    static MonomialOrder grlex() { return MonomialOrder(Kind::Grlex); }

    /// Block order on `nvars` variables: `leading_vars` are compared first
    /// under `leading`, the remaining variables under `trailing`. Any
    /// monomial involving a leading variable sorts above every monomial in
    /// the trailing variables only, so a reduced basis under this order
    /// eliminates the leading block.
    static MonomialOrder block(size_t nvars, std::vector<uint32_t> leading_vars,
                               const MonomialOrder& leading, const MonomialOrder& trailing);

    Kind kind() const { return kind_; }
    Cmp compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::LT; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::GT; }

    std::string name() const;
    bool operator==(const MonomialOrder& o) const;
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

private:
    explicit MonomialOrder(Kind k) : kind_(k) {}

    Kind kind_;
    // Block data: explicit index lists for both blocks and the suborders.
    std::vector<uint32_t> lead_vars_;
    std::vector<uint32_t> trail_vars_;
    std::shared_ptr<const MonomialOrder> lead_;
    std::shared_ptr<const MonomialOrder> trail_;

    static Cmp simple_compare(Kind k, std::span<const uint16_t> a, std::span<const uint16_t> b,
                              const std::vector<uint32_t>* subset);
};

} // namespace pd3c
