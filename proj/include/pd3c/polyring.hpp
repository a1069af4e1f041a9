#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pd3c/monomial_order.hpp"
#include "pd3c/prime_field.hpp"

namespace pd3c {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Graded polynomial ring F_p[x_1..x_n] with a fixed global monomial order.
/// Immutable and shared by reference.
class PolyRing {
public:
    static RingPtr make(PrimeField field, std::vector<std::string> names, MonomialOrder order);

    /// Same field and variables, different order.
    static RingPtr with_order(const RingPtr& r, MonomialOrder order);

    /// `r` extended by extra variables appended after the existing ones.
    static RingPtr extended(const RingPtr& r, const std::vector<std::string>& extra,
                            MonomialOrder order);

    const PrimeField& field() const { return field_; }
    size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(size_t i) const { return names_[i]; }
    const MonomialOrder& order() const { return order_; }
    int var_index(std::string_view name) const;

    bool same_ring(const PolyRing& o) const;
    bool same_vars(const PolyRing& o) const;

private:
    PolyRing(PrimeField f, std::vector<std::string> n, MonomialOrder o)
        : field_(f), names_(std::move(n)), order_(std::move(o)) {}

    PrimeField field_;
    std::vector<std::string> names_;
    MonomialOrder order_;
};

} // namespace pd3c
