#include "superz/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace superz {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RatMatrix::isZero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    assert(cols_ == o.rows_);
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rat& y = o.at(k, j);
                if (y != 0) r.at(i, j) += x * y;
            }
        }
    return r;
}

RatMatrix RatMatrix::operator*(const Rat& s) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RatVec RatMatrix::mulVec(const RatVec& v) const {
    assert(v.size() == cols_);
    RatVec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
    return r;
}

std::size_t RatMatrix::nonZeroCount() const {
    std::size_t n = 0;
    for (const auto& x : a_)
        if (x != 0) ++n;
    return n;
}

std::vector<std::size_t> rrefInPlace(std::vector<RatVec>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const Rat inv = Rat(1) / rows[r][c];
        for (std::size_t j = c; j < ncols; ++j)
            if (rows[r][j] != 0) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rat f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j)
                if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

std::size_t rank(const RatMatrix& m) {
    std::vector<RatVec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rrefInPlace(rows).size();
}

std::vector<RatVec> nullspace(const RatMatrix& m) {
    std::vector<RatVec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    const auto pivots = rrefInPlace(rows);
    std::vector<bool> isPivot(m.cols(), false);
    for (auto p : pivots) isPivot[p] = true;

    std::vector<RatVec> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (isPivot[c]) continue;
        RatVec v(m.cols());
        v[c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -rows[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    std::vector<RatVec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        RatVec r = m.row(i);
        r.push_back(b[i]);
        rows.push_back(std::move(r));
    }
    const auto pivots = rrefInPlace(rows);
    // A pivot in the appended column means the system is inconsistent.
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    RatVec x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][m.cols()];
    return x;
}

} // namespace superz
