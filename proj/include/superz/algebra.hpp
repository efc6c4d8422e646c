#pragma once

#include "superz/matrix.hpp"
#include "superz/partition.hpp"
#include "superz/pyramid.hpp"
#include "superz/subspace.hpp"

#include <map>
#include <string>
#include <vector>

namespace superz {

enum class BasisTag { SlStandard, OspStandard, OspAlt };

// An ordered basis of the natural module: parities per position and, for the
// orthosymplectic realizations, the bilinear form matrix.
struct Space {
    BasisTag tag = BasisTag::SlStandard;
    std::vector<Parity> par;
    RatMatrix form;  // 0x0 when the realization carries no form

    int dim() const { return static_cast<int>(par.size()); }
    int evenDim() const;
    int oddDim() const;
    bool hasForm() const { return form.rows() > 0; }
};

struct SuperMatrix {
    BasisTag tag = BasisTag::SlStandard;
    int m = 0, n = 0;
    RatMatrix mat;
};

RatMatrix evenComponent(const Space& sp, const RatMatrix& x);
RatMatrix oddComponent(const Space& sp, const RatMatrix& x);
bool isHomogeneous(const Space& sp, const RatMatrix& x, Parity p);

Rat superTrace(const Space& sp, const RatMatrix& x);

// [x,y] = xy - (-1)^{|x||y|} yx, extended bilinearly over parity components.
RatMatrix superCommutator(const Space& sp, const RatMatrix& x, const RatMatrix& y);

// Defining identity of osp(V,B): B(xv,w) = -(-1)^{|x||v|} B(v,xw).
bool satisfiesFormIdentity(const Space& sp, const RatMatrix& x);

struct Algebra {
    std::string name;
    Space space;
    std::vector<RatMatrix> basis;
    Subspace span;  // of flattened matrices

    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(const RatMatrix& x) const { return span.contains(x.flatten()); }
    RatMatrix combine(const RatVec& coords) const;
};

Algebra makeAlgebra(std::string name, Space space, std::vector<RatMatrix> basis);

// --- gl / sl realization over an SL pyramid ------------------------------

struct SlContext {
    Pyramid pyramid;
    Space space;  // position = box number - 1
};

SlContext makeSlContext(const Partition& part);
Space makeGlSpace(int m, int n);  // m even positions followed by n odd ones

Algebra makeGl(const Space& sp);
Algebra makeSl(const Space& sp);

// --- osp standard realization over an ortho-symplectic pyramid -----------

struct OspStdContext {
    Pyramid pyramid;
    Space space;
    std::vector<int> idxAtPos;   // signed box number per matrix position
    std::map<int, int> posOfIdx;
    int lPlusN = 0;
    bool mOdd = false;

    int pos(int idx) const { return posOfIdx.at(idx); }
    Parity eta(int idx) const { return space.par[posOfIdx.at(idx)]; }
};

OspStdContext makeOspStdContext(const Partition& part);

// Explicit spanning set with the mirrored-entry signs.
Algebra makeOspStandard(const OspStdContext& ctx);

// Generic construction from the defining identity (used as a cross-check).
Algebra makeOspFromForm(const Space& sp, const std::string& name);

int ospDimension(int m, int n2);

// --- osp realization over the alternative pyramid ------------------------

struct AltString {
    int idx;   // 1..a for singles, then (a+1), -(a+1), ..., b, -b for pairs
    int size;
    Parity par;
    Rat theta;
    int firstPos;  // position of u_i = e^0 u_i; e^k u_i sits at firstPos + k
};

struct OspAltContext {
    Pyramid pyramid;
    Space space;
    std::vector<AltString> strings;
    int numSingles = 0;  // a
    int numStrings = 0;  // b

    const AltString& stringByIdx(int idx) const;
    int posOf(int idx, int k) const;  // position of e^k u_idx
    int istar(int idx) const { return std::abs(idx) <= numSingles ? idx : -idx; }
};

OspAltContext makeOspAltContext(const Partition& part);
Algebra makeOspAlt(const OspAltContext& ctx);

} // namespace superz
