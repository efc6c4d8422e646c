#pragma once

#include "superz/algebra.hpp"
#include "superz/nilpotent.hpp"

#include <string>
#include <vector>

namespace superz {

// Coordinates of vectors with respect to a fixed (independent) spanning list.
class Coordinatizer {
public:
    Coordinatizer() = default;
    explicit Coordinatizer(const std::vector<RatVec>& basisRows);
    std::optional<RatVec> coords(const RatVec& v) const;

private:
    std::size_t ambient_ = 0, count_ = 0;
    std::vector<RatVec> rows_;           // RREF rows augmented with the transform
    std::vector<std::size_t> pivots_;
};

struct CentralizerResult {
    Subspace coords;               // in algebra coordinates
    std::vector<RatMatrix> basis;  // materialized matrices
    int dim() const { return static_cast<int>(basis.size()); }
};

// Exact kernel of ad e on the algebra span.
CentralizerResult centralizerOracle(const Algebra& alg, const RatMatrix& e);

// Column counts of the (any-flavor) pyramid of the partition: each part of
// size s contributes one box to columns s-1, s-3, ..., 1-s.
std::map<int, ColumnCount> partitionColumnCounts(const Partition& part);

int dimGlFormula(const Partition& part);
int dimSlFormula(const Partition& part);
int dimOspFormula(const Partition& part);  // the two published routes, asserted equal

struct NamedMatrix {
    std::string name;
    RatMatrix mat;
};

// xi_i^{j,power}: sends e^p u_i to e^{p+power} u_j, all other strings to zero.
RatMatrix xiMatrixSl(const SlContext& ctx, int i, int j, int power);
RatMatrix xiMatrixAlt(const OspAltContext& ctx, int i, int j, int power);

std::vector<NamedMatrix> closedFormGlCentralizer(const SlContext& ctx);
std::vector<NamedMatrix> closedFormSlCentralizer(const SlContext& ctx);
std::vector<NamedMatrix> closedFormOspCentralizer(const OspAltContext& ctx);

// The sign in front of the mirrored term of an even centralizer pair.
Rat ospPairEpsilonFormula(const OspAltContext& ctx, int i, int j, int k);

} // namespace superz
