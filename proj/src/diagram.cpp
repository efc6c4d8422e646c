#include "superz/diagram.hpp"

#include "superz/centralizer.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace superz {

int LabelledDiagram::countLabel(int v) const {
    int c = 0;
    for (const auto& n : nodes)
        if (n.label == v) ++c;
    return c;
}

int LabelledDiagram::labelSum() const {
    int s = 0;
    for (const auto& n : nodes) s += n.label;
    return s;
}

std::string LabelledDiagram::render() const {
    if (nodes.empty()) return "(empty diagram)\n";
    auto glyph = [](NodeKind k) {
        switch (k) {
            case NodeKind::White: return 'O';
            case NodeKind::Grey: return 'X';
            default: return '*';
        }
    };
    auto chainEdge = [&](std::size_t i) -> const DiagEdge* {
        for (const auto& e : edges)
            if (e.from == static_cast<int>(i) && e.to == static_cast<int>(i) + 1) return &e;
        return nullptr;
    };
    std::ostringstream top, bottom;
    for (std::size_t i = 1; i <= nodes.size(); ++i) {
        top << glyph(nodes[i - 1].kind);
        bottom << nodes[i - 1].label;
        if (i < nodes.size()) {
            std::string link = "---";
            if (const DiagEdge* e = chainEdge(i)) {
                if (e->multiplicity == 2)
                    link = e->arrow == ArrowDir::TowardsFrom ? "<==" :
                           e->arrow == ArrowDir::TowardsTo   ? "==>" : "===";
            } else {
                link = "   ";
            }
            top << link;
            bottom << std::string(link.size(), ' ');
        }
    }
    std::ostringstream os;
    os << top.str() << '\n' << bottom.str() << '\n';
    for (const auto& e : edges)
        if (e.to != e.from + 1)
            os << "(edge " << e.from << "-" << e.to << " x" << e.multiplicity << ")\n";
    return os.str();
}

LabelledDiagram diagramSl(const SlContext& ctx) {
    const Pyramid& py = ctx.pyramid;
    const int N = ctx.space.dim();
    LabelledDiagram d;
    for (int i = 1; i < N; ++i) {
        const Box* a = py.boxByNum(i);
        const Box* b = py.boxByNum(i + 1);
        d.nodes.push_back({a->par == b->par ? NodeKind::White : NodeKind::Grey, b->col - a->col});
        if (i < N - 1) d.edges.push_back({i, i + 1, 1});
    }
    return d;
}

LabelledDiagram diagramOsp(const OspStdContext& ctx) {
    const Pyramid& py = ctx.pyramid;
    const Partition& part = py.partition;
    const int L = ctx.lPlusN;
    LabelledDiagram d;
    if (L == 0) return d;
    if (part.m() == 2 && part.n() == 0) return d;  // so(2) is a torus: no roots

    auto par = [&](int i) { return py.boxByNum(i)->par; };
    auto col = [&](int i) { return py.boxByNum(i)->col; };

    for (int i = 1; i < L; ++i) {
        d.nodes.push_back({par(i) == par(i + 1) ? NodeKind::White : NodeKind::Grey,
                           col(i + 1) - col(i)});
        if (i < L - 1) d.edges.push_back({i, i + 1, 1});
    }

    if (ctx.mOdd) {
        const NodeKind kind = par(L) == par(0) ? NodeKind::White : NodeKind::Black;
        d.nodes.push_back({kind, col(0) - col(L)});
        if (L >= 2) d.edges.push_back({L - 1, L, 2, ArrowDir::TowardsTo});
        return d;
    }
    if (par(L) == Parity::Odd) {
        d.nodes.push_back({NodeKind::White, -2 * col(L)});
        if (L >= 2) d.edges.push_back({L - 1, L, 2, ArrowDir::TowardsFrom});
        return d;
    }
    // par(L) even, m even: the label pairs the last two columns either way.
    d.nodes.push_back({par(L - 1) == Parity::Even ? NodeKind::White : NodeKind::Grey,
                       -col(L) - col(L - 1)});
    if (par(L - 1) == Parity::Odd && L >= 2) d.edges.push_back({L - 1, L, 2});
    if (L >= 3) d.edges.push_back({L - 2, L, 1});
    return d;
}

CoreData coreData(const LabelledDiagram& diagram, const Partition& part) {
    CoreData core;
    core.n2 = diagram.countLabel(2);
    core.labelSum = diagram.labelSum();

    const auto counts = partitionColumnCounts(part);
    auto colCount = [&](int c) -> ColumnCount {
        auto it = counts.find(c);
        return it == counts.end() ? ColumnCount{} : it->second;
    };
    int k = 0;
    while (colCount(k).total() > 0) ++k;
    core.k = k;

    for (const auto& [c, cc] : counts) {
        const bool beyond = part.kind() == AlgKind::SL ? (c > k || c < -k) : c > k;
        if (beyond && cc.even == cc.odd && cc.even > 0) core.tau++;
    }
    if (part.kind() == AlgKind::SL && k >= 1) {
        int evenSum = 0, oddSum = 0;
        for (const auto& [c, cc] : counts)
            if (c > -k && c < k) {
                evenSum += cc.even;
                oddSum += cc.odd;
            }
        if (evenSum == oddSum) core.nu0 = 1;
    }
    return core;
}

G0Data buildG0(const Partition& part, const CoreData& core) {
    G0Data g0;
    const auto counts = partitionColumnCounts(part);
    for (const auto& [c, cc] : counts) {
        const bool beyond = part.kind() == AlgKind::SL ? (c > core.k || c < -core.k) : c > core.k;
        if (beyond && cc.total() > 0) g0.outerBlocks.emplace_back(cc.even, cc.odd);
    }
    if (core.k >= 1) {
        std::vector<int> p, q;
        for (const auto& pt : part.interleaved()) {
            const int clipped = std::min(pt.size, core.k);
            (pt.par == Parity::Even ? p : q).push_back(clipped);
        }
        std::sort(p.rbegin(), p.rend());
        std::sort(q.rbegin(), q.rend());
        Partition middle(part.kind(), p, q);
        if (part.kind() == AlgKind::OSP && middle.m() == 2 && middle.n() == 0) {
            g0.middleIsTorus = true;
        } else {
            g0.middle = std::move(middle);
        }
    }
    return g0;
}

} // namespace superz
