#include "superz/centralizer.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace superz {

Coordinatizer::Coordinatizer(const std::vector<RatVec>& basisRows) {
    count_ = basisRows.size();
    ambient_ = basisRows.empty() ? 0 : basisRows[0].size();
    rows_.reserve(count_);
    for (std::size_t i = 0; i < count_; ++i) {
        RatVec r = basisRows[i];
        r.resize(ambient_ + count_);
        r[ambient_ + i] = 1;
        rows_.push_back(std::move(r));
    }
    // RREF with pivots restricted to the first `ambient_` columns.
    std::size_t r = 0;
    for (std::size_t c = 0; c < ambient_ && r < rows_.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows_.size() && rows_[sel][c] == 0) ++sel;
        if (sel == rows_.size()) continue;
        std::swap(rows_[r], rows_[sel]);
        const Rat inv = Rat(1) / rows_[r][c];
        for (auto& x : rows_[r])
            if (x != 0) x *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || rows_[i][c] == 0) continue;
            const Rat f = rows_[i][c];
            for (std::size_t j = 0; j < rows_[r].size(); ++j)
                if (rows_[r][j] != 0) rows_[i][j] -= f * rows_[r][j];
        }
        pivots_.push_back(c);
        ++r;
    }
    if (pivots_.size() != count_)
        throw std::logic_error("coordinatizer: spanning list is linearly dependent");
}

std::optional<RatVec> Coordinatizer::coords(const RatVec& v) const {
    assert(v.size() == ambient_);
    RatVec work = v;
    work.resize(ambient_ + count_);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Rat f = work[pivots_[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < work.size(); ++j)
            if (rows_[i][j] != 0) work[j] -= f * rows_[i][j];
    }
    for (std::size_t j = 0; j < ambient_; ++j)
        if (work[j] != 0) return std::nullopt;
    RatVec c(count_);
    for (std::size_t j = 0; j < count_; ++j) c[j] = -work[ambient_ + j];
    return c;
}

CentralizerResult centralizerOracle(const Algebra& alg, const RatMatrix& e) {
    const std::size_t d = alg.basis.size();
    const int N = alg.space.dim();
    RatMatrix sys(N * N, d);
    for (std::size_t i = 0; i < d; ++i) {
        const auto fx = superCommutator(alg.space, e, alg.basis[i]).flatten();
        for (std::size_t r = 0; r < fx.size(); ++r) sys.at(r, i) = fx[r];
    }
    CentralizerResult res{Subspace::fromVectors(d, nullspace(sys)), {}};
    for (const auto& c : res.coords.basis()) res.basis.push_back(alg.combine(c));
    return res;
}

std::map<int, ColumnCount> partitionColumnCounts(const Partition& part) {
    std::map<int, ColumnCount> counts;
    for (const auto& pt : part.interleaved())
        for (int c = 1 - pt.size; c <= pt.size - 1; c += 2)
            (pt.par == Parity::Even ? counts[c].even : counts[c].odd)++;
    return counts;
}

int dimGlFormula(const Partition& part) {
    const auto counts = partitionColumnCounts(part);
    int total = 0;
    for (const auto& [col, c] : counts) {
        total += c.total() * c.total();
        auto next = counts.find(col + 1);
        if (next != counts.end()) total += c.total() * next->second.total();
    }
    return total;
}

int dimSlFormula(const Partition& part) { return dimGlFormula(part) - 1; }

int dimOspFormula(const Partition& part) {
    const auto counts = partitionColumnCounts(part);
    int sumSq = 0, sumAdj = 0, r0 = 0, s0 = 0;
    for (const auto& [col, c] : counts) {
        sumSq += c.total() * c.total();
        auto next = counts.find(col + 1);
        if (next != counts.end()) sumAdj += c.total() * next->second.total();
        if (col == 0) {
            r0 = c.even;
            s0 = c.odd;
        }
    }
    assert((sumSq + sumAdj - r0 + s0) % 2 == 0);
    const int viaColumns = (sumSq + sumAdj - r0 + s0) / 2;

    // Second route: half the gl dimension corrected by the odd-part counts.
    int oddEven = 0, oddOdd = 0;
    for (const auto& pt : part.interleaved())
        if (pt.size % 2 == 1) (pt.par == Parity::Even ? oddEven : oddOdd)++;
    const int viaGl = (dimGlFormula(part) - oddEven + oddOdd) / 2;
    assert((dimGlFormula(part) - oddEven + oddOdd) % 2 == 0);
    if (viaColumns != viaGl) throw std::logic_error("osp dimension formulas disagree");
    return viaColumns;
}

namespace {

struct SlStrings {
    // string index (1-based row) -> length and the position of e^p u_i
    std::vector<int> lengths;
    std::vector<std::vector<int>> pos;  // pos[i-1][p]
    std::vector<Parity> par;
};

SlStrings slStrings(const SlContext& ctx) {
    SlStrings s;
    const auto parts = ctx.pyramid.partition.interleaved();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const int y = static_cast<int>(i) + 1;
        const int lam = parts[i].size;
        s.lengths.push_back(lam);
        s.par.push_back(parts[i].par);
        std::vector<int> positions;
        for (int p = 0; p < lam; ++p) {
            const Box* b = ctx.pyramid.boxAt(y, lam - 1 - 2 * p);
            assert(b);
            positions.push_back(b->num - 1);
        }
        s.pos.push_back(std::move(positions));
    }
    return s;
}

} // namespace

RatMatrix xiMatrixSl(const SlContext& ctx, int i, int j, int power) {
    const auto s = slStrings(ctx);
    const int li = s.lengths[i - 1], lj = s.lengths[j - 1];
    if (power < std::max(lj - li, 0) || power > lj - 1)
        throw std::out_of_range("xi power outside the admissible range");
    const int N = ctx.space.dim();
    RatMatrix x(N, N);
    for (int p = 0; p < li; ++p)
        if (p + power < lj) x.at(s.pos[j - 1][p + power], s.pos[i - 1][p]) = 1;
    return x;
}

RatMatrix xiMatrixAlt(const OspAltContext& ctx, int i, int j, int power) {
    const AltString& si = ctx.stringByIdx(i);
    const AltString& sj = ctx.stringByIdx(j);
    if (power < std::max(sj.size - si.size, 0) || power > sj.size - 1)
        throw std::out_of_range("xi power outside the admissible range");
    const int N = ctx.space.dim();
    RatMatrix x(N, N);
    for (int p = 0; p < si.size; ++p)
        if (p + power < sj.size) x.at(sj.firstPos + p + power, si.firstPos + p) = 1;
    return x;
}

std::vector<NamedMatrix> closedFormGlCentralizer(const SlContext& ctx) {
    const auto s = slStrings(ctx);
    const int r = static_cast<int>(s.lengths.size());
    std::vector<NamedMatrix> out;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            for (int k = std::max(s.lengths[j - 1] - s.lengths[i - 1], 0); k <= s.lengths[j - 1] - 1;
                 ++k)
                out.push_back({"xi(" + std::to_string(i) + "->" + std::to_string(j) +
                                   ",k=" + std::to_string(k) + ")",
                               xiMatrixSl(ctx, i, j, k)});
    return out;
}

std::vector<NamedMatrix> closedFormSlCentralizer(const SlContext& ctx) {
    const auto s = slStrings(ctx);
    const int r = static_cast<int>(s.lengths.size());
    std::vector<NamedMatrix> out;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            for (int k = std::max(s.lengths[j - 1] - s.lengths[i - 1], 0); k <= s.lengths[j - 1] - 1;
                 ++k) {
                if (i == j && k == 0) continue;
                out.push_back({"xi(" + std::to_string(i) + "->" + std::to_string(j) +
                                   ",k=" + std::to_string(k) + ")",
                               xiMatrixSl(ctx, i, j, k)});
            }
    // Supertrace-free combinations of the string projections.
    for (int i = 1; i < r; ++i) {
        const Rat a = (parityBit(s.par[i]) ? -1 : 1) * Rat(s.lengths[i]);
        const Rat b = (parityBit(s.par[i - 1]) ? 1 : -1) * Rat(s.lengths[i - 1]);
        RatMatrix x = xiMatrixSl(ctx, i, i, 0) * a + xiMatrixSl(ctx, i + 1, i + 1, 0) * b;
        out.push_back({"proj(" + std::to_string(i) + ")-proj(" + std::to_string(i + 1) + ")",
                       std::move(x)});
    }
    return out;
}

Rat ospPairEpsilonFormula(const OspAltContext& ctx, int i, int j, int k) {
    const AltString& si = ctx.stringByIdx(i);
    const AltString& sj = ctx.stringByIdx(j);
    const int sign = (sj.size - k) % 2 == 0 ? 1 : -1;
    return Rat(sign) * sj.theta * si.theta;
}

std::vector<NamedMatrix> closedFormOspCentralizer(const OspAltContext& ctx) {
    std::vector<NamedMatrix> out;
    std::vector<int> indices;
    for (const auto& s : ctx.strings) indices.push_back(s.idx);

    auto slotName = [](int i, int j, int power) {
        return "xi(" + std::to_string(i) + "->" + std::to_string(j) +
               ",e^" + std::to_string(power) + ")";
    };

    for (int i : indices)
        for (int j : indices) {
            const AltString& si = ctx.stringByIdx(i);
            const AltString& sj = ctx.stringByIdx(j);
            const int istar = ctx.istar(i), jstar = ctx.istar(j);
            const bool fixedSlot = (jstar == i && istar == j);
            const int kmax = std::min(si.size, sj.size) - 1;
            for (int k = 0; k <= kmax; ++k) {
                const int powIJ = sj.size - 1 - k;
                if (fixedSlot) {
                    // xi_i^{i*, lambda_i-1-k}, k odd for even strings and even
                    // for odd strings.
                    const bool keep =
                        si.par == Parity::Even ? (k % 2 == 1) : (k % 2 == 0);
                    if (keep)
                        out.push_back({slotName(i, j, powIJ), xiMatrixAlt(ctx, i, j, powIJ)});
                    continue;
                }
                // One representative per mirror orbit {(i,j),(j*,i*)}.
                if (std::make_pair(i, j) > std::make_pair(jstar, istar)) continue;
                const int powJI = si.size - 1 - k;
                const RatMatrix t1 = xiMatrixAlt(ctx, i, j, powIJ);
                const RatMatrix t2 = xiMatrixAlt(ctx, jstar, istar, powJI);
                RatMatrix plus = t1 + t2;
                RatMatrix minus = t1 - t2;
                const bool okPlus = satisfiesFormIdentity(ctx.space, plus);
                const bool okMinus = satisfiesFormIdentity(ctx.space, minus);
                if (okPlus == okMinus)
                    throw std::logic_error("pair sign not pinned by the form identity");
                const std::string name = slotName(i, j, powIJ) + (okPlus ? "+" : "-") +
                                         slotName(jstar, istar, powJI);
                out.push_back({name, okPlus ? std::move(plus) : std::move(minus)});
            }
        }
    return out;
}

} // namespace superz
