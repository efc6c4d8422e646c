#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superz/algebra.hpp"

using namespace superz;

TEST_CASE("supertrace") {
    const Space sp = makeGlSpace(2, 1);
    RatMatrix id = RatMatrix::identity(3);
    CHECK(superTrace(sp, id) == 1);  // 2 - 1

    RatMatrix im0(3, 3);  // identity on the even block only
    im0.at(0, 0) = im0.at(1, 1) = 1;
    CHECK(superTrace(sp, im0) == 2);

    RatMatrix odd(3, 3);
    odd.at(0, 2) = 5;
    odd.at(2, 1) = -3;
    CHECK(superTrace(sp, odd) == 0);

    const Space nn = makeGlSpace(2, 2);
    CHECK(superTrace(nn, RatMatrix::identity(4)) == 0);
}

TEST_CASE("supercommutator sign rule") {
    const Space sp = makeGlSpace(1, 1);
    RatMatrix u(2, 2), v(2, 2);
    u.at(0, 1) = 1;  // odd
    v.at(1, 0) = 1;  // odd
    // [u,v] = uv + vu for odd elements.
    const RatMatrix br = superCommutator(sp, u, v);
    CHECK(br == RatMatrix::identity(2));
    // [x,x] = 2x^2 for odd x.
    CHECK(superCommutator(sp, u, u) == (u * u) * Rat(2));

    const Space even = makeGlSpace(2, 0);
    RatMatrix e12(2, 2), e21(2, 2);
    e12.at(0, 1) = 1;
    e21.at(1, 0) = 1;
    const RatMatrix c = superCommutator(even, e12, e21);
    RatMatrix expect(2, 2);
    expect.at(0, 0) = 1;
    expect.at(1, 1) = -1;
    CHECK(c == expect);
}

TEST_CASE("gl and sl bases") {
    CHECK(makeGl(makeGlSpace(1, 1)).dim() == 4);
    CHECK(makeSl(makeGlSpace(2, 1)).dim() == 8);
    // I has supertrace zero on (n|n), so it belongs to sl(n|n).
    const Space nn = makeGlSpace(1, 1);
    const Algebra sl11 = makeSl(nn);
    CHECK(sl11.contains(RatMatrix::identity(2)));
    // Supertrace vanishes on every sl basis element.
    for (const auto& b : sl11.basis) CHECK(superTrace(nn, b) == 0);
}

TEST_CASE("osp(3|2) standard realization") {
    const auto part = Partition::parse("3|2", AlgKind::OSP);
    const auto ctx = makeOspStdContext(part);
    REQUIRE(ctx.space.dim() == 5);
    CHECK(ctx.lPlusN == 2);
    CHECK(ctx.mOdd);

    const Algebra osp = makeOspStandard(ctx);
    CHECK(osp.dim() == 12);
    CHECK(osp.dim() == ospDimension(3, 2));
    for (const auto& b : osp.basis) CHECK(satisfiesFormIdentity(osp.space, b));

    // Same span as the generic solution of the defining identity.
    const Algebra generic = makeOspFromForm(ctx.space, "osp-generic");
    CHECK(generic.dim() == osp.dim());
    for (const auto& b : osp.basis) CHECK(generic.contains(b));

    // The identity matrix is not B-skew.
    CHECK_FALSE(osp.contains(RatMatrix::identity(5)));
    CHECK_FALSE(satisfiesFormIdentity(osp.space, RatMatrix::identity(5)));
}

TEST_CASE("osp dimensions for small cases") {
    CHECK(ospDimension(2, 2) == 8);
    CHECK(ospDimension(1, 0) == 0);
    CHECK(ospDimension(0, 2) == 3);
    CHECK(ospDimension(4, 2) == 6 + 3 + 8);
    for (const char* text : {"2,2|1,1", "1,1,1|2", "3,3|", "|2,2"}) {
        const auto part = Partition::parse(text, AlgKind::OSP);
        const auto ctx = makeOspStdContext(part);
        const Algebra osp = makeOspStandard(ctx);
        CHECK(osp.dim() == ospDimension(part.m(), part.n()));
        for (const auto& b : osp.basis) CHECK(satisfiesFormIdentity(osp.space, b));
    }
}

TEST_CASE("osp bracket closure and supertrace of brackets") {
    const auto ctx = makeOspStdContext(Partition::parse("3|2", AlgKind::OSP));
    const Algebra osp = makeOspStandard(ctx);
    for (const auto& x : osp.basis)
        for (const auto& y : osp.basis) {
            const RatMatrix br = superCommutator(osp.space, x, y);
            CHECK(satisfiesFormIdentity(osp.space, br));
            CHECK(superTrace(osp.space, br) == 0);
        }
}

TEST_CASE("alternative-basis realization matches the standard dimension") {
    for (const char* text : {"3|2", "2,2|1,1", "5,3,1|3,3", "3,3|4"}) {
        const auto part = Partition::parse(text, AlgKind::OSP);
        const auto alt = makeOspAltContext(part);
        const Algebra a = makeOspAlt(alt);
        CHECK(a.dim() == ospDimension(part.m(), part.n()));
        // The form is even, supersymmetric and non-degenerate.
        const RatMatrix& B = alt.space.form;
        const int N = alt.space.dim();
        CHECK(rank(B) == static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                if (alt.space.par[i] != alt.space.par[j]) CHECK(B.at(i, j) == 0);
                const Rat sym = (alt.space.par[i] == Parity::Odd &&
                                 alt.space.par[j] == Parity::Odd)
                                    ? -B.at(j, i)
                                    : B.at(j, i);
                CHECK(B.at(i, j) == sym);
            }
    }
}

TEST_CASE("membership by span agrees with the defining identity") {
    const auto ctx = makeOspStdContext(Partition::parse("2,2|1,1", AlgKind::OSP));
    const Algebra osp = makeOspStandard(ctx);
    for (const auto& b : osp.basis) {
        CHECK(osp.contains(b));
        CHECK(satisfiesFormIdentity(osp.space, b));
    }
    RatMatrix x(6, 6);
    x.at(0, 0) = 1;
    CHECK_FALSE(osp.contains(x));
    CHECK_FALSE(satisfiesFormIdentity(osp.space, x));
}
