#pragma once

#include "superz/algebra.hpp"

#include <optional>

namespace superz {

struct Sl2Triple {
    RatMatrix e, h, f;
};

RatMatrix eFromSlPyramid(const SlContext& ctx);
RatMatrix hFromSlPyramid(const SlContext& ctx);

// e for the ortho-symplectic pyramid: hop pattern from the row geometry,
// coefficients pinned by the form identity plus a per-orbit normalization,
// then checked against the expected Jordan type.
RatMatrix eFromOspPyramid(const OspStdContext& ctx);
RatMatrix hFromOspPyramid(const OspStdContext& ctx);

RatMatrix eFromAltPyramid(const OspAltContext& ctx);
RatMatrix hFromAltPyramid(const OspAltContext& ctx);

// Jordan type check: rank(e^k) == sum_i max(lambda_i - k, 0).
bool hasJordanType(const RatMatrix& e, const std::vector<Part>& parts);

// Completes {e,h} to an sl(2)-triple inside the even part of the algebra.
std::optional<RatMatrix> completeTriple(const Algebra& alg, const RatMatrix& e, const RatMatrix& h);

// Eigenspace of ad h on the algebra for eigenvalue j, in algebra coordinates.
Subspace adHGrading(const Algebra& alg, const RatMatrix& h, const Rat& j);

} // namespace superz
