#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superz/centre.hpp"

using namespace superz;

namespace {

Subspace spanOf(const std::vector<RatMatrix>& mats, int n) {
    std::vector<RatVec> rows;
    for (const auto& m : mats) rows.push_back(m.flatten());
    return Subspace::fromVectors(static_cast<std::size_t>(n) * n, rows);
}

struct OspSetup {
    OspAltContext ctx;
    Algebra alg;
    RatMatrix e;
    std::vector<RatMatrix> centralizer;
    std::vector<RatMatrix> centre;
};

OspSetup ospSetup(const char* text) {
    const auto part = Partition::parse(text, AlgKind::OSP);
    OspAltContext ctx = makeOspAltContext(part);
    Algebra alg = makeOspAlt(ctx);
    RatMatrix e = eFromAltPyramid(ctx);
    auto cent = centralizerOracle(alg, e);
    auto centre = centreOracle(alg, cent.basis);
    return {std::move(ctx), std::move(alg), std::move(e), std::move(cent.basis),
            std::move(centre)};
}

} // namespace

TEST_CASE("centre of a simple algebra at e = 0 is zero") {
    const auto ctx = makeSlContext(Partition::parse("1,1|1", AlgKind::SL));
    const Algebra sl = makeSl(ctx.space);
    const auto cent = centralizerOracle(sl, RatMatrix(3, 3));
    CHECK(centreOracle(sl, cent.basis).empty());
}

TEST_CASE("sl centre for (5,1|3) is spanned by e..e^4") {
    const auto ctx = makeSlContext(Partition::parse("5,1|3", AlgKind::SL));
    const Algebra sl = makeSl(ctx.space);
    const auto e = eFromSlPyramid(ctx);
    const auto cent = centralizerOracle(sl, e);
    const auto centre = centreOracle(sl, cent.basis);
    CHECK(centre.size() == 4);
    const auto closed = centreClosedFormSl(ctx, e);
    CHECK(closed.caseTag == "sl(m|n), m!=n");
    std::vector<RatMatrix> gens;
    for (const auto& nm : closed.generators) gens.push_back(nm.mat);
    CHECK(spanOf(gens, 9) == spanOf(centre, 9));
}

TEST_CASE("sl centre for (2|2) contains the identity") {
    const auto ctx = makeSlContext(Partition::parse("2|2", AlgKind::SL));
    const Algebra sl = makeSl(ctx.space);
    const auto e = eFromSlPyramid(ctx);
    const auto centre = centreOracle(sl, centralizerOracle(sl, e).basis);
    CHECK(centre.size() == 2);  // <I, e>
    const auto closed = centreClosedFormSl(ctx, e);
    CHECK(closed.caseTag == "sl(n|n)");
    std::vector<RatMatrix> gens;
    for (const auto& nm : closed.generators) gens.push_back(nm.mat);
    CHECK(spanOf(gens, 4) == spanOf(centre, 4));
}

TEST_CASE("sl (1|1) closed form refuses; the oracle answers <I>") {
    const auto ctx = makeSlContext(Partition::parse("1|1", AlgKind::SL));
    const Algebra sl = makeSl(ctx.space);
    CHECK_THROWS_AS(centreClosedFormSl(ctx, RatMatrix(2, 2)), std::logic_error);
    const auto centre = centreOracle(sl, centralizerOracle(sl, RatMatrix(2, 2)).basis);
    REQUIRE(centre.size() == 1);
    CHECK(spanOf(centre, 2).contains(RatMatrix::identity(2).flatten()));
}

TEST_CASE("osp centres for the representative partitions") {
    SUBCASE("(2,2|1,1): pairs only, even top part") {
        const auto s = ospSetup("2,2|1,1");
        CHECK(s.centre.size() == 1);
        const auto closed = centreClosedFormOsp(s.ctx, s.e);
        CHECK(closed.caseTag == "S");
        CHECK(closed.dim() == 1);
    }
    SUBCASE("(3|2): two singles of different parity") {
        const auto s = ospSetup("3|2");
        CHECK(s.centre.size() == 2);
        const auto closed = centreClosedFormOsp(s.ctx, s.e);
        CHECK(closed.caseTag == "S+top-singles");
        std::vector<RatMatrix> gens;
        for (const auto& nm : closed.generators) gens.push_back(nm.mat);
        CHECK(spanOf(gens, s.ctx.space.dim()) == spanOf(s.centre, s.ctx.space.dim()));
    }
    SUBCASE("(3,3|): an odd pair strictly on top") {
        const auto s = ospSetup("3,3|");
        CHECK(s.centre.size() == 2);
        const auto closed = centreClosedFormOsp(s.ctx, s.e);
        CHECK(closed.caseTag == "S+top-pair");
        std::vector<RatMatrix> gens;
        for (const auto& nm : closed.generators) gens.push_back(nm.mat);
        CHECK(spanOf(gens, s.ctx.space.dim()) == spanOf(s.centre, s.ctx.space.dim()));
    }
}

TEST_CASE("string involutions preserve the form and centralize e") {
    for (const char* text : {"3|2", "3,3|", "2,2|1,1", "5,3,1|3,3"}) {
        CAPTURE(text);
        const auto s = ospSetup(text);
        for (const auto& q : stringInvolutions(s.ctx, s.e)) {
            CHECK(q.q.transpose() * s.ctx.space.form * q.q == s.ctx.space.form);
            CHECK(q.q * s.e == s.e * q.q);
            CHECK((q.detEvenPart == 1 || q.detEvenPart == -1));
        }
    }
}

TEST_CASE("fixed space under the full orthogonal group is the odd-power span") {
    for (const char* text : {"3|2", "3,3|", "2,2|1,1", "3,1|", "5,3,1|3,3", "3,3,1,1|"}) {
        CAPTURE(text);
        const auto s = ospSetup(text);
        const auto fixed = fixedUnderGroup(s.ctx, s.e, s.centre, GroupVariant::Orthogonal);
        std::vector<RatMatrix> sGens;
        RatMatrix power = s.e;
        for (int k = 1; k < s.ctx.pyramid.partition.largestPart(); ++k) {
            if (k % 2 == 1) sGens.push_back(power);
            power = power * s.e;
        }
        CHECK(spanOf(fixed.basis, s.ctx.space.dim()) == spanOf(sGens, s.ctx.space.dim()));
    }
}

TEST_CASE("(3|2): the extra centre element dies under the full group") {
    const auto s = ospSetup("3|2");
    const auto fixed = fixedUnderGroup(s.ctx, s.e, s.centre, GroupVariant::Orthogonal);
    CHECK(s.centre.size() == 2);
    CHECK(fixed.basis.size() == 1);  // ceil((3-1)/2)
}

TEST_CASE("determinant-one variant keeps the extra element when no even product kills it") {
    SUBCASE("(3,3|): lone odd pair keeps its extra element") {
        const auto s = ospSetup("3,3|");
        const auto fixed = fixedUnderGroup(s.ctx, s.e, s.centre, GroupVariant::SpecialOrthogonal);
        CHECK(fixed.basis.size() == 2);
    }
    SUBCASE("(3,3,1,1|): the product of the two swaps kills it again") {
        const auto s = ospSetup("3,3,1,1|");
        CHECK(s.centre.size() == 2);
        const auto fixed = fixedUnderGroup(s.ctx, s.e, s.centre, GroupVariant::SpecialOrthogonal);
        CHECK(fixed.basis.size() == 1);
    }
    SUBCASE("(5,3|): product of two flips fixes the singles element") {
        const auto s = ospSetup("5,3|");
        CHECK(s.centre.size() == 3);
        const auto fixedO = fixedUnderGroup(s.ctx, s.e, s.centre, GroupVariant::Orthogonal);
        CHECK(fixedO.basis.size() == 2);
        const auto fixedSO = fixedUnderGroup(s.ctx, s.e, s.centre, GroupVariant::SpecialOrthogonal);
        CHECK(fixedSO.basis.size() == 3);
    }
    SUBCASE("(3|2): the odd-string flip has determinant one and still kills it") {
        const auto s = ospSetup("3|2");
        const auto fixed = fixedUnderGroup(s.ctx, s.e, s.centre, GroupVariant::SpecialOrthogonal);
        CHECK(fixed.basis.size() == 1);
    }
}

TEST_CASE("osp centre powers are even; the mixed-singles extra element is odd") {
    // Unlike the gl case, an osp centre may contain an odd element: for (3|2)
    // the extra generator exchanges an even string with an odd one.
    const auto s = ospSetup("3|2");
    int oddCount = 0;
    for (const auto& z : s.centre)
        if (!oddComponent(s.ctx.space, z).isZero()) ++oddCount;
    CHECK(oddCount == 1);

    for (const char* text : {"3,3|", "5,3,1|3,3", "2,2|1,1"}) {
        const auto t = ospSetup(text);
        for (const auto& z : t.centre) CHECK(oddComponent(t.ctx.space, z).isZero());
    }
}
