#pragma once

#include "superz/centralizer.hpp"

#include <string>
#include <vector>

namespace superz {

struct CentreResult {
    std::string caseTag;
    std::vector<NamedMatrix> generators;
    int dim() const { return static_cast<int>(generators.size()); }
};

// Exact joint kernel of ad x over the given bracket-closed basis, inside its
// own span. Returns materialized basis matrices.
std::vector<RatMatrix> centreOracle(const Algebra& alg, const std::vector<RatMatrix>& subBasis);

// Closed-form centre of the centralizer. For SL the generators are
// e, ..., e^{lambda_1 - 1} plus the identity when m = n > 1; the (1|1) case is
// refused (see the oracle for its answer).
CentreResult centreClosedFormSl(const SlContext& ctx, const RatMatrix& e);

// Closed-form centre for OSP: odd powers of e plus up to one extra generator.
CentreResult centreClosedFormOsp(const OspAltContext& ctx, const RatMatrix& e);

enum class GroupVariant { Orthogonal, SpecialOrthogonal };

struct GroupInvolution {
    std::string name;
    RatMatrix q;
    int detEvenPart;  // determinant of the restriction to the even part
};

// The explicit string involutions: a sign flip per multiplicity-one string and
// a (sign-corrected) swap per paired string. Every returned Q preserves the
// form and commutes with e.
std::vector<GroupInvolution> stringInvolutions(const OspAltContext& ctx, const RatMatrix& e);

struct FixedSpaceResult {
    std::vector<RatMatrix> basis;
    std::vector<std::string> involutionsUsed;
};

// Subspace of the centre fixed by the adjoint action of the chosen group of
// involutions: all of them for the full orthogonal variant, the products of
// evenly many determinant -1 ones for the special variant.
FixedSpaceResult fixedUnderGroup(const OspAltContext& ctx, const RatMatrix& e,
                                 const std::vector<RatMatrix>& centreBasis, GroupVariant variant);

} // namespace superz
