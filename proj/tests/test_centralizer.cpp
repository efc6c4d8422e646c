#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superz/centralizer.hpp"

using namespace superz;

namespace {

Subspace spanOf(const std::vector<RatMatrix>& mats, int n) {
    std::vector<RatVec> rows;
    for (const auto& m : mats) rows.push_back(m.flatten());
    return Subspace::fromVectors(static_cast<std::size_t>(n) * n, rows);
}

} // namespace

TEST_CASE("centralizer of zero is the whole algebra") {
    const auto ctx = makeSlContext(Partition::parse("1,1|1", AlgKind::SL));
    const Algebra gl = makeGl(ctx.space);
    CHECK(centralizerOracle(gl, RatMatrix(3, 3)).dim() == gl.dim());
}

TEST_CASE("dimension formulas") {
    CHECK(dimGlFormula(Partition::parse("5,1|3", AlgKind::SL)) == 19);
    CHECK(dimSlFormula(Partition::parse("5,1|3", AlgKind::SL)) == 18);
    CHECK(dimGlFormula(Partition::parse("3,2|2,1", AlgKind::SL)) == 26);
    CHECK(dimGlFormula(Partition::parse("1|", AlgKind::SL)) == 1);
    CHECK(dimSlFormula(Partition::parse("1|", AlgKind::SL)) == 0);
    CHECK(dimSlFormula(Partition::parse("1|1", AlgKind::SL)) == 3);

    CHECK(dimOspFormula(Partition::parse("2,2|1,1", AlgKind::OSP)) == 11);
    CHECK(dimOspFormula(Partition::parse("3|2", AlgKind::OSP)) == 4);
    CHECK(dimOspFormula(Partition::parse("1|", AlgKind::OSP)) == 0);
    CHECK(dimOspFormula(Partition::parse("5,3,1|3,3", AlgKind::OSP)) == 29);
}

TEST_CASE("gl and sl oracle dimensions for (5,1|3)") {
    const auto part = Partition::parse("5,1|3", AlgKind::SL);
    const auto ctx = makeSlContext(part);
    const auto e = eFromSlPyramid(ctx);
    CHECK(centralizerOracle(makeGl(ctx.space), e).dim() == 19);
    CHECK(centralizerOracle(makeSl(ctx.space), e).dim() == 18);
}

TEST_CASE("xi matrices") {
    const auto part = Partition::parse("5,1|3", AlgKind::SL);
    const auto ctx = makeSlContext(part);
    const auto e = eFromSlPyramid(ctx);
    // Sum of the string projections is the identity; with a power k they sum to e^k.
    const int N = ctx.space.dim();
    RatMatrix projSum(N, N);
    for (int i = 1; i <= 3; ++i) projSum = projSum + xiMatrixSl(ctx, i, i, 0);
    CHECK(projSum == RatMatrix::identity(N));
    // Only strings long enough admit power 2.
    const RatMatrix ek = xiMatrixSl(ctx, 1, 1, 2) + xiMatrixSl(ctx, 2, 2, 2);
    CHECK(ek == e * e);
    CHECK_THROWS_AS(xiMatrixSl(ctx, 3, 3, 1), std::out_of_range);
    // Every xi element commutes with e.
    for (const auto& nm : closedFormGlCentralizer(ctx))
        CHECK(superCommutator(ctx.space, e, nm.mat).isZero());
}

TEST_CASE("closed form spans the oracle for gl and sl") {
    for (const char* text : {"5,1|3", "3,2|2,1", "2|2", "1|1", "2,1|1"}) {
        CAPTURE(text);
        const auto part = Partition::parse(text, AlgKind::SL);
        const auto ctx = makeSlContext(part);
        const auto e = eFromSlPyramid(ctx);
        const int N = ctx.space.dim();

        const Algebra gl = makeGl(ctx.space);
        const auto oracle = centralizerOracle(gl, e);
        std::vector<RatMatrix> closed;
        for (const auto& nm : closedFormGlCentralizer(ctx)) closed.push_back(nm.mat);
        CHECK(closed.size() == static_cast<std::size_t>(dimGlFormula(part)));
        CHECK(spanOf(closed, N) == spanOf(oracle.basis, N));

        const Algebra sl = makeSl(ctx.space);
        const auto slOracle = centralizerOracle(sl, e);
        std::vector<RatMatrix> slClosed;
        for (const auto& nm : closedFormSlCentralizer(ctx)) {
            CHECK(superTrace(ctx.space, nm.mat) == 0);
            slClosed.push_back(nm.mat);
        }
        CHECK(spanOf(slClosed, N) == spanOf(slOracle.basis, N));
    }
}

TEST_CASE("osp closed form for (3|2) has 4 elements and spans the oracle") {
    const auto part = Partition::parse("3|2", AlgKind::OSP);
    const auto ctx = makeOspAltContext(part);
    const auto e = eFromAltPyramid(ctx);
    const Algebra osp = makeOspAlt(ctx);
    const auto oracle = centralizerOracle(osp, e);
    CHECK(oracle.dim() == 4);
    const auto closed = closedFormOspCentralizer(ctx);
    CHECK(closed.size() == 4);
    std::vector<RatMatrix> mats;
    for (const auto& nm : closed) {
        CHECK(satisfiesFormIdentity(ctx.space, nm.mat));
        mats.push_back(nm.mat);
    }
    CHECK(spanOf(mats, ctx.space.dim()) == spanOf(oracle.basis, ctx.space.dim()));
}

TEST_CASE("osp closed form matches the oracle on assorted partitions") {
    for (const char* text : {"2,2|1,1", "3,3|4", "3,1|", "|2,2", "5,3,1|3,3", "1,1|2"}) {
        CAPTURE(text);
        const auto part = Partition::parse(text, AlgKind::OSP);
        const auto ctx = makeOspAltContext(part);
        const auto e = eFromAltPyramid(ctx);
        const Algebra osp = makeOspAlt(ctx);
        const auto oracle = centralizerOracle(osp, e);
        CHECK(oracle.dim() == dimOspFormula(part));
        std::vector<RatMatrix> mats;
        for (const auto& nm : closedFormOspCentralizer(ctx)) mats.push_back(nm.mat);
        CHECK(mats.size() == static_cast<std::size_t>(oracle.dim()));
        CHECK(spanOf(mats, ctx.space.dim()) == spanOf(oracle.basis, ctx.space.dim()));
    }
}

TEST_CASE("published epsilon sign matches the solved one for even pairs") {
    for (const char* text : {"2,2|1,1", "3,3|", "5,3,1|3,3", "3,3,1,1|"}) {
        CAPTURE(text);
        const auto part = Partition::parse(text, AlgKind::OSP);
        const auto ctx = makeOspAltContext(part);
        for (const auto& s : ctx.strings)
            for (const auto& t : ctx.strings) {
                if (s.par != t.par) continue;
                if (ctx.istar(t.idx) == s.idx && ctx.istar(s.idx) == t.idx) continue;
                for (int k = 0; k <= std::min(s.size, t.size) - 1; ++k) {
                    const RatMatrix t1 = xiMatrixAlt(ctx, s.idx, t.idx, t.size - 1 - k);
                    const RatMatrix t2 =
                        xiMatrixAlt(ctx, ctx.istar(t.idx), ctx.istar(s.idx), s.size - 1 - k);
                    const Rat eps = ospPairEpsilonFormula(ctx, s.idx, t.idx, k);
                    CAPTURE(s.idx);
                    CAPTURE(t.idx);
                    CAPTURE(k);
                    CHECK(satisfiesFormIdentity(ctx.space, t1 + t2 * eps));
                    CHECK_FALSE(satisfiesFormIdentity(ctx.space, t1 - t2 * eps));
                }
            }
    }
}
