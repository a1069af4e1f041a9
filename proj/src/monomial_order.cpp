#include "pd3c/monomial_order.hpp"

#include <algorithm>

namespace pd3c {

namespace {

uint64_t subset_degree(std::span<const uint16_t> a, const std::vector<uint32_t>* subset) {
    uint64_t d = 0;
    if (subset) {
        for (uint32_t i : *subset) d += a[i];
    } else {
        for (uint16_t e : a) d += e;
    }
    return d;
}

// index of the k-th position, under an optional subset view
inline size_t pos(const std::vector<uint32_t>* subset, size_t k) {
    return subset ? (*subset)[k] : k;
}

inline size_t extent(std::span<const uint16_t> a, const std::vector<uint32_t>* subset) {
    return subset ? subset->size() : a.size();
}

} // namespace

Cmp MonomialOrder::simple_compare(Kind k, std::span<const uint16_t> a, std::span<const uint16_t> b,
                                  const std::vector<uint32_t>* subset) {
    size_t m = extent(a, subset);
    if (k == Kind::Grevlex || k == Kind::Grlex) {
        uint64_t da = subset_degree(a, subset), db = subset_degree(b, subset);
        if (da != db) return da < db ? Cmp::LT : Cmp::GT;
    }
    if (k == Kind::Grevlex) {
        // ties: the last position where the exponents differ decides,
        // smaller exponent wins
        for (size_t t = m; t-- > 0;) {
            size_t i = pos(subset, t);
            if (a[i] != b[i]) return a[i] < b[i] ? Cmp::GT : Cmp::LT;
        }
        return Cmp::EQ;
    }
    // lex tie-break (Lex directly, Grlex after degree)
    for (size_t t = 0; t < m; ++t) {
        size_t i = pos(subset, t);
        if (a[i] != b[i]) return a[i] > b[i] ? Cmp::GT : Cmp::LT;
    }
    return Cmp::EQ;
}

MonomialOrder MonomialOrder::block(size_t nvars, std::vector<uint32_t> leading_vars,
                                   const MonomialOrder& leading, const MonomialOrder& trailing) {
    if (leading.kind_ == Kind::Block || trailing.kind_ == Kind::Block)
        throw ContractViolation("nested block orders are not supported");
    MonomialOrder o(Kind::Block);
    std::sort(leading_vars.begin(), leading_vars.end());
    for (uint32_t v : leading_vars)
        if (v >= nvars) throw ArityError("block variable index out of range");
    std::vector<bool> in_lead(nvars, false);
    for (uint32_t v : leading_vars) in_lead[v] = true;
    for (uint32_t v = 0; v < nvars; ++v)
        if (!in_lead[v]) o.trail_vars_.push_back(v);
    o.lead_vars_ = std::move(leading_vars);
    o.lead_ = std::make_shared<MonomialOrder>(leading);
    o.trail_ = std::make_shared<MonomialOrder>(trailing);
    return o;
}

Cmp MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars())
        throw ArityError("monomial order applied to vectors of different lengths");
    if (kind_ != Kind::Block) {
        if (kind_ == Kind::Grevlex && a.degree() != b.degree())
            return a.degree() < b.degree() ? Cmp::LT : Cmp::GT;
        return simple_compare(kind_, a.exponents(), b.exponents(), nullptr);
    }
    size_t n = lead_vars_.size() + trail_vars_.size();
    if (a.nvars() != n) throw ArityError("block order arity mismatch");
    Cmp c = simple_compare(lead_->kind_, a.exponents(), b.exponents(), &lead_vars_);
    if (c != Cmp::EQ) return c;
    return simple_compare(trail_->kind_, a.exponents(), b.exponents(), &trail_vars_);
}

std::string MonomialOrder::name() const {
    switch (kind_) {
        case Kind::Grevlex: return "grevlex";
        case Kind::Lex: return "lex";
        case Kind::Grlex: return "grlex";
        case Kind::Block: {
            std::string s = "block(";
            for (size_t i = 0; i < lead_vars_.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(lead_vars_[i]);
            }
            s += "|" + lead_->name() + "," + trail_->name() + ")";
            return s;
        }
    }
    return "?";
}

bool MonomialOrder::operator==(const MonomialOrder& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ != Kind::Block) return true;
    return lead_vars_ == o.lead_vars_ && trail_vars_ == o.trail_vars_ &&
           *lead_ == *o.lead_ && *trail_ == *o.trail_;
}

} // namespace pd3c
