#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superz/partition.hpp"

using namespace superz;

TEST_CASE("parse the basic forms") {
    const auto p = Partition::parse("5,1|3", AlgKind::SL);
    CHECK(p.p() == std::vector<int>{5, 1});
    CHECK(p.q() == std::vector<int>{3});
    CHECK(p.m() == 6);
    CHECK(p.n() == 3);

    const auto o = Partition::parse("5,3,1|3,3", AlgKind::OSP);
    CHECK(o.m() == 9);
    CHECK(o.n() == 6);

    CHECK(Partition::parse(" 2 , 2 | 1 ,1 ", AlgKind::OSP).m() == 4);
    CHECK(Partition::parse("3,3|", AlgKind::OSP).n() == 0);
    CHECK(Partition::parse("|2", AlgKind::OSP).m() == 0);
}

TEST_CASE("parse rejections name the violated rule") {
    CHECK_THROWS_WITH_AS(Partition::parse("2|3", AlgKind::OSP), "q must sum to an even number",
                         PartitionError);
    CHECK_THROWS_AS(Partition::parse("2|2", AlgKind::OSP), PartitionError);  // even p-part, mult 1
    CHECK_THROWS_AS(Partition::parse("|3,1", AlgKind::OSP), PartitionError); // odd q-parts, mult 1
    CHECK_THROWS_AS(Partition::parse("1,2|", AlgKind::SL), PartitionError);  // not decreasing
    CHECK_THROWS_AS(Partition::parse("3,0|", AlgKind::SL), PartitionError);
    CHECK_THROWS_AS(Partition::parse("3", AlgKind::SL), PartitionError);     // missing bar
    CHECK_THROWS_AS(Partition::parse("a|b", AlgKind::SL), PartitionError);
    CHECK_THROWS_AS(Partition::parse("|", AlgKind::SL), PartitionError);     // empty
}

TEST_CASE("interleaved order breaks ties with even parity first") {
    const auto p = Partition::parse("5,1|3", AlgKind::SL);
    const auto parts = p.interleaved();
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == Part{5, Parity::Even});
    CHECK(parts[1] == Part{3, Parity::Odd});
    CHECK(parts[2] == Part{1, Parity::Even});

    const auto t = Partition::parse("3,2|2,1", AlgKind::SL).interleaved();
    REQUIRE(t.size() == 4);
    CHECK(t[0] == Part{3, Parity::Even});
    CHECK(t[1] == Part{2, Parity::Even});
    CHECK(t[2] == Part{2, Parity::Odd});
    CHECK(t[3] == Part{1, Parity::Odd});

    const auto u = Partition::parse("1|1", AlgKind::SL).interleaved();
    CHECK(u[0].par == Parity::Even);
    CHECK(u[1].par == Parity::Odd);
}

TEST_CASE("grouped notation splits odd multiplicities into a single plus pairs") {
    const auto g = Partition::parse("5,3,1|3,3", AlgKind::OSP).grouped();
    REQUIRE(g.singles.size() == 3);
    CHECK(g.singles[0] == Part{5, Parity::Even});
    CHECK(g.singles[1] == Part{3, Parity::Even});
    CHECK(g.singles[2] == Part{1, Parity::Even});
    REQUIRE(g.pairs.size() == 1);
    CHECK(g.pairs[0] == Part{3, Parity::Odd});

    const auto h = Partition::parse("2,2|1,1", AlgKind::OSP).grouped();
    CHECK(h.singles.empty());
    REQUIRE(h.pairs.size() == 2);
    CHECK(h.pairs[0] == Part{2, Parity::Even});
    CHECK(h.pairs[1] == Part{1, Parity::Odd});

    const auto k = Partition::parse("3|2", AlgKind::OSP).grouped();
    REQUIRE(k.singles.size() == 2);
    CHECK(k.singles[0] == Part{3, Parity::Even});
    CHECK(k.singles[1] == Part{2, Parity::Odd});
    CHECK(k.pairs.empty());

    CHECK_THROWS_AS(Partition::parse("1|1", AlgKind::SL).grouped(), PartitionError);
}

TEST_CASE("notations all recover the same part multiset") {
    const auto p = Partition::parse("5,3,3,1|4,2,2", AlgKind::OSP);
    std::map<std::pair<int, int>, int> fromInterleaved, fromGrouped, fromMult;
    for (const auto& pt : p.interleaved()) fromInterleaved[{pt.size, parityBit(pt.par)}]++;
    const auto g = p.grouped();
    for (const auto& pt : g.singles) fromGrouped[{pt.size, parityBit(pt.par)}]++;
    for (const auto& pt : g.pairs) fromGrouped[{pt.size, parityBit(pt.par)}] += 2;
    for (const auto& [size, mn] : p.multiplicities()) {
        if (mn.first) fromMult[{size, 0}] += mn.first;
        if (mn.second) fromMult[{size, 1}] += mn.second;
    }
    CHECK(fromInterleaved == fromGrouped);
    CHECK(fromInterleaved == fromMult);
}

TEST_CASE("text round-trips") {
    const auto p = Partition::parse("5,1|3", AlgKind::SL);
    CHECK(p.text() == "5,1|3");
    CHECK(Partition::parse(p.text(), AlgKind::SL) == p);
}
