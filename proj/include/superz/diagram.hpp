#pragma once

#include "superz/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace superz {

enum class NodeKind { White, Grey, Black };
enum class ArrowDir { None, TowardsFrom, TowardsTo };

struct DiagNode {
    NodeKind kind;
    int label;
};

struct DiagEdge {
    int from = 0, to = 0;  // 1-based node indices
    int multiplicity = 1;
    ArrowDir arrow = ArrowDir::None;
    std::optional<Rat> fractionalLabel = std::nullopt;  // never arises here; kept for the schema
};

struct LabelledDiagram {
    std::vector<DiagNode> nodes;
    std::vector<DiagEdge> edges;

    int countLabel(int v) const;
    int labelSum() const;
    bool hasLabel(int v) const { return countLabel(v) > 0; }
    std::string render() const;
};

LabelledDiagram diagramSl(const SlContext& ctx);
LabelledDiagram diagramOsp(const OspStdContext& ctx);

// Column statistics entering the reduction identities: k is minimal with
// column k empty; tau counts balanced nonempty columns beyond k (both signs
// for SL, positive only for OSP); nu0 flags an SL middle block with equal
// even and odd content.
struct CoreData {
    int k = 0;
    int tau = 0;
    int nu0 = 0;
    int n2 = 0;
    int labelSum = 0;
};

CoreData coreData(const LabelledDiagram& diagram, const Partition& part);

// The subalgebra attached to the 2-free core: one sl block per occupied
// column beyond k plus a middle block on the columns inside k (for OSP a
// middle osp block; an so(2) middle carries no roots and is dropped).
struct G0Data {
    std::vector<std::pair<int, int>> outerBlocks;  // (r_i, s_i)
    std::optional<Partition> middle;               // clipped partition
    bool middleIsTorus = false;                    // osp middle was so(2)
};

G0Data buildG0(const Partition& part, const CoreData& core);

} // namespace superz
