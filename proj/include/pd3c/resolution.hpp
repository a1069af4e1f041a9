#pragma once

#include <map>

#include "pd3c/ideal.hpp"

namespace pd3c {

/// Graded free module, described by the twists (degrees) of its basis.
class FreeModule {
public:
    FreeModule() = default;
    explicit FreeModule(std::vector<int> twists) : twists_(std::move(twists)) {}

    size_t rank() const { return twists_.size(); }
    int twist(size_t i) const { return twists_[i]; }
    const std::vector<int>& twists() const { return twists_; }

    bool operator==(const FreeModule& o) const { return twists_ == o.twists_; }
    bool operator!=(const FreeModule& o) const { return twists_ != o.twists_; }

private:
    std::vector<int> twists_;
};

/// Homogeneous matrix between graded free modules: entry (r,c) is zero or
/// homogeneous of degree source.twist(c) - target.twist(r); validated at
/// construction.
class GradedMatrix {
public:
    GradedMatrix(RingPtr ring, FreeModule target, FreeModule source,
                 std::vector<std::vector<Polynomial>> entries);

    const RingPtr& ring() const { return ring_; }
    const FreeModule& target() const { return target_; }
    const FreeModule& source() const { return source_; }
    size_t rows() const { return target_.rank(); }
    size_t cols() const { return source_.rank(); }
    const Polynomial& entry(size_t r, size_t c) const { return e_[r][c]; }

    /// Composition this ∘ g (this applied after g).
    GradedMatrix times(const GradedMatrix& g) const;
    bool is_zero() const;

private:
    RingPtr ring_;
    FreeModule target_, source_;
    std::vector<std::vector<Polynomial>> e_;
};

/// Chain of composable graded matrices resolving R/I:
/// F_len -> ... -> F_1 -> F_0 = R, steps[i]: F_{i+1} -> F_i.
/// In a minimal resolution no entry is a nonzero constant.
struct Resolution {
    RingPtr ring;
    FreeModule f0 = FreeModule({0}); // cover of the quotient
    std::vector<GradedMatrix> steps;
    bool minimal = false;

    size_t length() const { return steps.size(); }
    const FreeModule& module(size_t i) const;
};

/// Graded Betti numbers beta_{i,j} of a minimal resolution.
class BettiTable {
public:
    void set(int i, int j, long long v);
    long long get(int i, int j) const;
    const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }

    std::vector<long long> totals() const;
    int max_homological() const;

    /// Classic tally layout: columns are homological degrees, rows are j-i,
    /// dots for zeros, column widths set by the totals row.
    std::string render_text() const;
    /// One "i,j,beta" line per entry.
    std::string render_kv() const;

    bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }
    bool operator!=(const BettiTable& o) const { return entries_ != o.entries_; }

private:
    std::map<std::pair<int, int>, long long> entries_;
};

/// Kernel of the map given by the columns of `m`, which must form a module
/// Groebner basis; columns of the result generate ker(m) and form a basis
/// under the induced Schreyer order. Throws ContractViolation when the
/// columns are not a Groebner basis.
GradedMatrix syzygies(const GradedMatrix& m);

/// Free resolution of R/I via iterated Schreyer syzygies starting from the
/// reduced Groebner basis; stops at a zero kernel or after max_length steps
/// (default: the variable count, which the syzygy iteration never needs to
/// exceed).
Resolution free_resolution(const Ideal& I, int max_length = -1);

/// Remove all unit pivots by Gaussian cancellation; ranks of the result are
/// the graded Betti numbers.
Resolution minimize(Resolution res);

/// Betti table of a minimal resolution; ContractViolation otherwise.
BettiTable betti_table(const Resolution& res);

/// Length of the minimal free resolution of R/I.
int projective_dimension(const Ideal& I);

} // namespace pd3c
