#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "pd3c/polynomial.hpp"

namespace pd3c {

/// Reduced Groebner basis: monic elements, no term of any element divisible
/// by the leading term of another, sorted by leading term ascending.
class GroebnerBasis {
public:
    GroebnerBasis(MonomialOrder order, std::vector<Polynomial> elements)
        : order_(std::move(order)), elements_(std::move(elements)) {}

    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    size_t size() const { return elements_.size(); }

private:
    MonomialOrder order_;
    std::vector<Polynomial> elements_;
};

/// Homogeneous ideal given by a finite generator list, with a lazily cached
/// reduced Groebner basis under the ring's order. Zero generators are
/// dropped; an inhomogeneous generator is a construction error (the kernel
/// is graded-only). Copies share the basis cache.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    const GroebnerBasis& groebner() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;

    struct Cache {
        std::mutex m;
        std::optional<GroebnerBasis> gb;
    };
    std::shared_ptr<Cache> cache_;
};

} // namespace pd3c
