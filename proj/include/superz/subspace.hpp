#pragma once

#include "superz/matrix.hpp"

#include <vector>

namespace superz {

// A subspace of Q^n held in reduced row echelon form. The RREF basis is
// canonical, so equal subspaces compare equal componentwise.
class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace fromVectors(std::size_t ambient, std::vector<RatVec> vectors);
    static Subspace full(std::size_t ambient);

    std::size_t ambientDim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<RatVec>& basis() const { return basis_; }

    bool contains(const RatVec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

    Subspace intersect(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;

    // Reduce v against the basis; returns the residual (zero iff contained).
    RatVec reduce(const RatVec& v) const;

private:
    std::size_t ambient_;
    std::vector<RatVec> basis_;          // RREF rows
    std::vector<std::size_t> pivots_;
};

} // namespace superz
