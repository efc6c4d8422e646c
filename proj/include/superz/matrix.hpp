#pragma once

#include "superz/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace superz {

using RatVec = std::vector<Rat>;

// Dense exact-rational matrix, row-major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool isZero() const;
    bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator*(const Rat& s) const;
    RatMatrix transpose() const;

    RatVec flatten() const { return a_; }
    RatVec row(std::size_t i) const { return RatVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
    RatVec mulVec(const RatVec& v) const;

    std::size_t nonZeroCount() const;

private:
    std::size_t rows_, cols_;
    RatVec a_;
};

// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rrefInPlace(std::vector<RatVec>& rows);

std::size_t rank(const RatMatrix& m);

// Exact nullspace basis of {v : Mv = 0}; vectors of length cols().
std::vector<RatVec> nullspace(const RatMatrix& m);

// Some x with Mx = b (free variables zero), or nullopt when inconsistent.
std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b);

} // namespace superz
