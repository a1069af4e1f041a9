#include "pd3c/polyring.hpp"

#include <set>

namespace pd3c {

RingPtr PolyRing::make(PrimeField field, std::vector<std::string> names, MonomialOrder order) {
    std::set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw ContractViolation("empty variable name");
        if (!seen.insert(n).second) throw ContractViolation("duplicate variable name: " + n);
    }
    return RingPtr(new PolyRing(field, std::move(names), std::move(order)));
}

RingPtr PolyRing::with_order(const RingPtr& r, MonomialOrder order) {
    return RingPtr(new PolyRing(r->field_, r->names_, std::move(order)));
}

RingPtr PolyRing::extended(const RingPtr& r, const std::vector<std::string>& extra,
                           MonomialOrder order) {
    std::vector<std::string> names = r->names_;
    names.insert(names.end(), extra.begin(), extra.end());
    return make(r->field_, std::move(names), std::move(order));
}

int PolyRing::var_index(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

bool PolyRing::same_ring(const PolyRing& o) const {
    return field_ == o.field_ && names_ == o.names_ && order_ == o.order_;
}

bool PolyRing::same_vars(const PolyRing& o) const {
    return field_ == o.field_ && names_ == o.names_;
}

} // namespace pd3c
