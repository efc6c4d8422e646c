#include "superz/json_io.hpp"

namespace superz {

namespace {

std::string parityName(Parity p) { return p == Parity::Even ? "0" : "1"; }

std::string kindName(NodeKind k) {
    switch (k) {
        case NodeKind::White: return "white";
        case NodeKind::Grey: return "grey";
        default: return "black";
    }
}

std::string arrowName(ArrowDir a) {
    switch (a) {
        case ArrowDir::None: return "none";
        case ArrowDir::TowardsFrom: return "towards-from";
        default: return "towards-to";
    }
}

} // namespace

Json toJson(const Pyramid& py) {
    Json boxes = Json::array();
    for (const auto& b : py.boxes) {
        Json jb{{"row", b.y}, {"col", b.col}, {"parity", parityName(b.par)}, {"crossed", b.crossed}};
        if (py.flavor == PyramidFlavor::ALT) {
            if (!b.crossed)
                jb["label"] = std::to_string(b.altI) + "_" + std::to_string(b.altJ);
        } else {
            jb["label"] = b.num;
        }
        boxes.push_back(std::move(jb));
    }
    const char* flavor = py.flavor == PyramidFlavor::SL    ? "sl"
                         : py.flavor == PyramidFlavor::OSP ? "osp"
                                                           : "alt";
    return Json{{"flavor", flavor}, {"partition", py.partition.text()}, {"boxes", std::move(boxes)}};
}

Json toJson(const LabelledDiagram& d) {
    Json nodes = Json::array();
    for (const auto& n : d.nodes) nodes.push_back({{"kind", kindName(n.kind)}, {"label", n.label}});
    Json edges = Json::array();
    for (const auto& e : d.edges) {
        Json je{{"from", e.from}, {"to", e.to}, {"multiplicity", e.multiplicity},
                {"arrow", arrowName(e.arrow)}};
        je["fractional_label"] =
            e.fractionalLabel ? Json(to_string(*e.fractionalLabel)) : Json(nullptr);
        edges.push_back(std::move(je));
    }
    return Json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

Json toJson(const CheckOutcome& c) {
    return Json{{"check", c.name},
                {"applicable", c.applicable},
                {"pass", c.pass},
                {"detail", c.detail}};
}

Json toJson(const SweepReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json checks = Json::array();
        for (const auto& c : e.checks) checks.push_back(toJson(c));
        entries.push_back(Json{{"partition", e.part.text()}, {"checks", std::move(checks)}});
    }
    return Json{{"partitions", r.partitionCount()},
                {"checks_run", r.checksRun()},
                {"failures", r.failures()},
                {"entries", std::move(entries)}};
}

Json sparseTriples(const RatMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) out.push_back({i, j, to_string(m.at(i, j))});
    return out;
}

Json matrixJson(const NamedMatrix& nm) {
    return Json{{"name", nm.name}, {"triples", sparseTriples(nm.mat)}};
}

} // namespace superz
