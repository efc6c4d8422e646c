#include "superz/subspace.hpp"

#include <stdexcept>

namespace superz {

Subspace Subspace::fromVectors(std::size_t ambient, std::vector<RatVec> vectors) {
    for (const auto& v : vectors)
        if (v.size() != ambient) throw std::invalid_argument("subspace: vector length mismatch");
    Subspace s(ambient);
    s.basis_ = std::move(vectors);
    s.pivots_ = rrefInPlace(s.basis_);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    std::vector<RatVec> rows;
    for (std::size_t i = 0; i < ambient; ++i) {
        RatVec v(ambient);
        v[i] = 1;
        rows.push_back(std::move(v));
    }
    return fromVectors(ambient, std::move(rows));
}

RatVec Subspace::reduce(const RatVec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("subspace: reduce length mismatch");
    RatVec r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rat& f = r[pivots_[i]];
        if (f == 0) continue;
        const Rat c = f;
        for (std::size_t j = pivots_[i]; j < ambient_; ++j)
            if (basis_[i][j] != 0) r[j] -= c * basis_[i][j];
    }
    return r;
}

bool Subspace::contains(const RatVec& v) const {
    RatVec r = reduce(v);
    for (const auto& x : r)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("subspace: ambient mismatch");
    std::vector<RatVec> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return fromVectors(ambient_, std::move(rows));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("subspace: ambient mismatch");
    const std::size_t ka = basis_.size(), kb = other.basis_.size();
    // Solutions of A^T a - B^T b = 0 parametrize the intersection.
    RatMatrix m(ambient_, ka + kb);
    for (std::size_t j = 0; j < ka; ++j)
        for (std::size_t i = 0; i < ambient_; ++i) m.at(i, j) = basis_[j][i];
    for (std::size_t j = 0; j < kb; ++j)
        for (std::size_t i = 0; i < ambient_; ++i) m.at(i, ka + j) = -other.basis_[j][i];
    std::vector<RatVec> vecs;
    for (const auto& sol : nullspace(m)) {
        RatVec v(ambient_);
        for (std::size_t j = 0; j < ka; ++j)
            if (sol[j] != 0)
                for (std::size_t i = 0; i < ambient_; ++i)
                    if (basis_[j][i] != 0) v[i] += sol[j] * basis_[j][i];
        vecs.push_back(std::move(v));
    }
    return fromVectors(ambient_, std::move(vecs));
}

} // namespace superz
