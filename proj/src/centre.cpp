#include "superz/centre.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace superz {

std::vector<RatMatrix> centreOracle(const Algebra& alg, const std::vector<RatMatrix>& subBasis) {
    const std::size_t c = subBasis.size();
    if (c == 0) return {};
    std::vector<RatVec> flat;
    for (const auto& b : subBasis) flat.push_back(b.flatten());
    Coordinatizer coord(flat);

    // For x = sum a_i b_i require [x, b_j] = 0 for all j; the brackets stay in
    // the span, so the constraints live in sub-basis coordinates.
    RatMatrix sys(c * c, c);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            const auto w = superCommutator(alg.space, subBasis[i], subBasis[j]).flatten();
            const auto wc = coord.coords(w);
            if (!wc) throw std::logic_error("centre oracle: span is not bracket-closed");
            for (std::size_t r = 0; r < c; ++r) sys.at(j * c + r, i) = (*wc)[r];
        }
    std::vector<RatMatrix> out;
    for (const auto& sol : nullspace(sys)) {
        RatMatrix x(alg.space.dim(), alg.space.dim());
        for (std::size_t i = 0; i < c; ++i)
            if (sol[i] != 0) x = x + subBasis[i] * sol[i];
        out.push_back(std::move(x));
    }
    return out;
}

CentreResult centreClosedFormSl(const SlContext& ctx, const RatMatrix& e) {
    const Partition& part = ctx.pyramid.partition;
    const int m = part.m(), n = part.n();
    if (m == 1 && n == 1)
        throw std::logic_error("closed form not stated for (1|1); use the oracle");
    CentreResult res;
    const int lam1 = part.largestPart();
    if (m == n) {
        res.caseTag = "sl(n|n)";
        res.generators.push_back({"I", RatMatrix::identity(ctx.space.dim())});
    } else {
        res.caseTag = "sl(m|n), m!=n";
    }
    RatMatrix power = e;
    for (int k = 1; k <= lam1 - 1; ++k) {
        res.generators.push_back({"e^" + std::to_string(k), power});
        power = power * e;
    }
    return res;
}

CentreResult centreClosedFormOsp(const OspAltContext& ctx, const RatMatrix& e) {
    const auto grouped = ctx.pyramid.partition.grouped();
    const int a = static_cast<int>(grouped.singles.size());
    const bool hasPairs = !grouped.pairs.empty();
    const int lamSingle = a > 0 ? grouped.singles[0].size : 0;
    const int lamPair = hasPairs ? grouped.pairs[0].size : 0;
    const int maxPart = std::max(lamSingle, lamPair);

    CentreResult res;
    res.caseTag = "S";
    RatMatrix power = e;
    for (int k = 1; k <= maxPart - 1; ++k) {
        if (k % 2 == 1) res.generators.push_back({"e^" + std::to_string(k), power});
        power = power * e;
    }

    // The extra generator, when present, is the membership-signed combination
    // t1 + c*t2 with c = +-1; exactly one sign lies in the algebra.
    auto signedCombination = [&](const RatMatrix& t1, const RatMatrix& t2) {
        const RatMatrix plus = t1 + t2;
        if (satisfiesFormIdentity(ctx.space, plus)) return plus;
        const RatMatrix minus = t1 - t2;
        if (!satisfiesFormIdentity(ctx.space, minus))
            throw std::logic_error("extra centre generator is not in the algebra");
        return minus;
    };

    // Extra generator from the two largest multiplicity-one strings. In the
    // mixed-parity case the generator is odd and its self-bracket 2x^2 only
    // vanishes when the second string has length at least two.
    if (a >= 2) {
        const Part& s1 = grouped.singles[0];
        const Part& s2 = grouped.singles[1];
        const bool parityOk = (s1.par == Parity::Even && s2.par == Parity::Even) ||
                              (a == 2 && s1.par != s2.par && s2.size >= 2);
        const bool pairsOk = !hasPairs || s2.size > lamPair;
        if (parityOk && pairsOk) {
            res.generators.push_back({"xi(1->2)-/+xi(2->1)",
                                      signedCombination(xiMatrixAlt(ctx, 1, 2, s2.size - 1),
                                                        xiMatrixAlt(ctx, 2, 1, s1.size - 1))});
            res.caseTag = "S+top-singles";
            return res;
        }
    }
    // Extra generator from a strictly largest odd paired string of even parity.
    if (hasPairs) {
        const Part& p1 = grouped.pairs[0];
        const bool strictlyLargestPair = grouped.pairs.size() < 2 || grouped.pairs[1].size < p1.size;
        const bool aboveSingles = a == 0 || lamSingle < p1.size;
        if (aboveSingles && strictlyLargestPair && p1.par == Parity::Even && p1.size % 2 == 1) {
            const int i = a + 1;
            res.generators.push_back(
                {"xi(+pair)-xi(-pair)",
                 signedCombination(xiMatrixAlt(ctx, i, i, p1.size - 1),
                                   xiMatrixAlt(ctx, -i, -i, p1.size - 1))});
            res.caseTag = "S+top-pair";
        }
    }
    return res;
}

std::vector<GroupInvolution> stringInvolutions(const OspAltContext& ctx, const RatMatrix& e) {
    const int N = ctx.space.dim();
    const RatMatrix& B = ctx.space.form;
    std::vector<GroupInvolution> out;

    auto detEven = [&](const RatMatrix& q) {
        std::vector<int> evenPos;
        for (int i = 0; i < N; ++i)
            if (ctx.space.par[i] == Parity::Even) evenPos.push_back(i);
        std::vector<RatVec> rows;
        for (int i : evenPos) {
            RatVec r;
            for (int j : evenPos) r.push_back(q.at(i, j));
            rows.push_back(std::move(r));
        }
        // Exact determinant by elimination; result is always +-1 here.
        Rat det = 1;
        for (std::size_t c = 0; c < rows.size(); ++c) {
            std::size_t sel = c;
            while (sel < rows.size() && rows[sel][c] == 0) ++sel;
            if (sel == rows.size()) return 0;
            if (sel != c) {
                std::swap(rows[c], rows[sel]);
                det = -det;
            }
            det *= rows[c][c];
            const Rat inv = Rat(1) / rows[c][c];
            for (std::size_t i = c + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                const Rat f = rows[i][c] * inv;
                for (std::size_t j = c; j < rows[c].size(); ++j)
                    if (rows[c][j] != 0) rows[i][j] -= f * rows[c][j];
            }
        }
        assert(det == 1 || det == -1);
        return det == 1 ? 1 : -1;
    };

    auto verifyAndPush = [&](std::string name, RatMatrix q) {
        if (!(q.transpose() * B * q == B))
            throw std::logic_error("involution does not preserve the form: " + name);
        const auto qe = q * e;
        const auto eq = e * q;
        if (!(qe == eq)) throw std::logic_error("involution does not centralize e: " + name);
        out.push_back({std::move(name), q, detEven(q)});
    };

    for (const auto& s : ctx.strings) {
        if (s.idx >= 1 && s.idx <= ctx.numSingles) {
            RatMatrix q = RatMatrix::identity(N);
            for (int k = 0; k < s.size; ++k) q.at(s.firstPos + k, s.firstPos + k) = -1;
            verifyAndPush("flip(" + std::to_string(s.idx) + ")", std::move(q));
        } else if (s.idx > ctx.numSingles) {
            const AltString& neg = ctx.stringByIdx(-s.idx);
            RatMatrix q = RatMatrix::identity(N);
            const Rat sigma = s.theta * neg.theta;  // B-compatible return sign
            for (int k = 0; k < s.size; ++k) {
                q.at(s.firstPos + k, s.firstPos + k) = 0;
                q.at(neg.firstPos + k, neg.firstPos + k) = 0;
                q.at(neg.firstPos + k, s.firstPos + k) = 1;
                q.at(s.firstPos + k, neg.firstPos + k) = sigma;
            }
            verifyAndPush("swap(" + std::to_string(s.idx) + ")", std::move(q));
        }
    }
    return out;
}

FixedSpaceResult fixedUnderGroup(const OspAltContext& ctx, const RatMatrix& e,
                                 const std::vector<RatMatrix>& centreBasis, GroupVariant variant) {
    FixedSpaceResult res;
    const std::size_t c = centreBasis.size();
    if (c == 0) return res;

    const auto candidates = stringInvolutions(ctx, e);
    std::vector<std::pair<std::string, RatMatrix>> group;
    if (variant == GroupVariant::Orthogonal) {
        for (const auto& q : candidates) group.emplace_back(q.name, q.q);
    } else {
        std::vector<const GroupInvolution*> detMinus;
        for (const auto& q : candidates) {
            if (q.detEvenPart == 1)
                group.emplace_back(q.name, q.q);
            else
                detMinus.push_back(&q);
        }
        for (std::size_t i = 0; i < detMinus.size(); ++i)
            for (std::size_t j = i + 1; j < detMinus.size(); ++j)
                group.emplace_back(detMinus[i]->name + "*" + detMinus[j]->name,
                                   detMinus[i]->q * detMinus[j]->q);
    }

    std::vector<RatVec> flat;
    for (const auto& z : centreBasis) flat.push_back(z.flatten());
    Coordinatizer coord(flat);

    for (const auto& [name, q] : group) res.involutionsUsed.push_back(name);

    // Build (Ad(Q) - id) constraints in centre coordinates.
    RatMatrix sys(group.size() * c, c);
    for (std::size_t g = 0; g < group.size(); ++g) {
        const RatMatrix& q = group[g].second;
        // Q is a signed permutation; invert by solving Q X = I columnwise.
        RatMatrix qinv(q.rows(), q.cols());
        for (std::size_t col = 0; col < q.cols(); ++col) {
            RatVec rhs(q.rows());
            rhs[col] = 1;
            const auto x = solve(q, rhs);
            if (!x) throw std::logic_error("involution is singular");
            for (std::size_t r = 0; r < q.rows(); ++r) qinv.at(r, col) = (*x)[r];
        }
        for (std::size_t i = 0; i < c; ++i) {
            const RatMatrix conj = q * centreBasis[i] * qinv;
            const auto wc = coord.coords((conj - centreBasis[i]).flatten());
            if (!wc) throw std::logic_error("centre is not stable under the involution");
            for (std::size_t r = 0; r < c; ++r) sys.at(g * c + r, i) = (*wc)[r];
        }
    }
    for (const auto& sol : nullspace(sys)) {
        RatMatrix x(ctx.space.dim(), ctx.space.dim());
        for (std::size_t i = 0; i < c; ++i)
            if (sol[i] != 0) x = x + centreBasis[i] * sol[i];
        res.basis.push_back(std::move(x));
    }
    return res;
}

} // namespace superz
