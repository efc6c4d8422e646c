#include "superz/nilpotent.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace superz {

RatMatrix eFromSlPyramid(const SlContext& ctx) {
    const int N = ctx.space.dim();
    RatMatrix e(N, N);
    for (const auto& b : ctx.pyramid.boxes) {
        const Box* left = ctx.pyramid.boxAt(b.y, b.col - 2);
        if (left) e.at(left->num - 1, b.num - 1) = 1;
    }
    return e;
}

RatMatrix hFromSlPyramid(const SlContext& ctx) {
    const int N = ctx.space.dim();
    RatMatrix h(N, N);
    for (int i = 1; i <= N; ++i) h.at(i - 1, i - 1) = -ctx.pyramid.boxByNum(i)->col;
    return h;
}

RatMatrix hFromOspPyramid(const OspStdContext& ctx) {
    const int N = ctx.space.dim();
    RatMatrix h(N, N);
    for (int p = 0; p < N; ++p) h.at(p, p) = -ctx.pyramid.boxByNum(ctx.idxAtPos[p])->col;
    return h;
}

bool hasJordanType(const RatMatrix& e, const std::vector<Part>& parts) {
    int maxPart = 0;
    for (const auto& p : parts) maxPart = std::max(maxPart, p.size);
    RatMatrix power = e;
    for (int k = 1; k <= maxPart; ++k) {
        std::size_t expected = 0;
        for (const auto& p : parts) expected += static_cast<std::size_t>(std::max(p.size - k, 0));
        if (rank(power) != expected) return false;
        power = power * e;
    }
    return power.isZero();
}

namespace {

struct Hop {
    int targetPos, sourcePos;
};

// Mirror of a matrix slot (t,s) under the central symmetry: (-s,-t).
std::pair<int, int> mirrorSlot(const OspStdContext& ctx, int t, int s) {
    return {ctx.pos(-ctx.idxAtPos[s]), ctx.pos(-ctx.idxAtPos[t])};
}

} // namespace

RatMatrix eFromOspPyramid(const OspStdContext& ctx) {
    const Pyramid& py = ctx.pyramid;
    const int N = ctx.space.dim();

    std::vector<Hop> hops;
    for (const auto& b : py.boxes) {
        if (b.crossed) continue;
        if (const Box* left = py.boxAt(b.y, b.col - 2))
            hops.push_back({ctx.pos(left->num), ctx.pos(b.num)});
        const PyramidRow* row = py.rowAt(b.y);
        if (b.y > 0 && row->kind == RowKind::EvenSkew && (b.col == 2 || b.col == 0)) {
            if (const Box* t = py.boxAt(-b.y, b.col - 2))
                hops.push_back({ctx.pos(t->num), ctx.pos(b.num)});
        }
        if (b.y > 0 && row->kind == RowKind::OddSkew && b.col == 1) {
            if (const Box* t = py.boxAt(-b.y, -1))
                hops.push_back({ctx.pos(t->num), ctx.pos(b.num)});
        }
    }

    // Group hops into mirror orbits; the form identity ties the two slots of
    // an orbit together, leaving one sign per orbit free.
    std::vector<std::pair<Hop, std::optional<Hop>>> orbits;
    std::vector<bool> used(hops.size(), false);
    for (std::size_t i = 0; i < hops.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        const auto mir = mirrorSlot(ctx, hops[i].targetPos, hops[i].sourcePos);
        std::optional<Hop> partner;
        for (std::size_t j = i + 1; j < hops.size(); ++j) {
            if (used[j]) continue;
            if (hops[j].targetPos == mir.first && hops[j].sourcePos == mir.second) {
                used[j] = true;
                partner = hops[j];
                break;
            }
        }
        orbits.emplace_back(hops[i], partner);
    }

    const RatMatrix& B = ctx.space.form;
    auto sigma = [&](int p) { return B.at(p, ctx.pos(-ctx.idxAtPos[p])); };

    auto build = [&](unsigned mask) {
        RatMatrix e(N, N);
        for (std::size_t k = 0; k < orbits.size(); ++k) {
            const Rat lead = (mask >> k) & 1u ? -1 : 1;
            const auto& [rep, partner] = orbits[k];
            e.at(rep.targetPos, rep.sourcePos) += lead;
            if (partner) {
                // sigma_t x_{t,s} + sigma_s x_{mirror} = 0
                const Rat linked = -lead * sigma(rep.targetPos) / sigma(rep.sourcePos);
                e.at(partner->targetPos, partner->sourcePos) += linked;
            }
        }
        return e;
    };

    const auto parts = py.partition.interleaved();
    if (orbits.size() > 20) throw std::logic_error("unexpected hop orbit count");
    for (unsigned mask = 0; mask < (1u << orbits.size()); ++mask) {
        RatMatrix e = build(mask);
        if (!satisfiesFormIdentity(ctx.space, e)) continue;
        if (hasJordanType(e, parts)) return e;
    }
    throw std::logic_error("no sign assignment produced the required Jordan type");
}

RatMatrix eFromAltPyramid(const OspAltContext& ctx) {
    const int N = ctx.space.dim();
    RatMatrix e(N, N);
    for (const auto& s : ctx.strings)
        for (int k = 0; k + 1 < s.size; ++k) e.at(s.firstPos + k + 1, s.firstPos + k) = 1;
    return e;
}

RatMatrix hFromAltPyramid(const OspAltContext& ctx) {
    const int N = ctx.space.dim();
    RatMatrix h(N, N);
    for (const auto& s : ctx.strings)
        for (int k = 0; k < s.size; ++k) h.at(s.firstPos + k, s.firstPos + k) = -(s.size - 1 - 2 * k);
    return h;
}

std::optional<RatMatrix> completeTriple(const Algebra& alg, const RatMatrix& e, const RatMatrix& h) {
    const int N = alg.space.dim();
    const std::size_t d = alg.basis.size();
    // Unknown f = sum c_i b_i with [h,f] = -2f and [e,f] = h.
    RatMatrix sys(2 * N * N, d);
    for (std::size_t i = 0; i < d; ++i) {
        const RatMatrix hb = superCommutator(alg.space, h, alg.basis[i]) + alg.basis[i] * Rat(2);
        const RatMatrix eb = superCommutator(alg.space, e, alg.basis[i]);
        const auto fh = hb.flatten();
        const auto fe = eb.flatten();
        for (std::size_t r = 0; r < fh.size(); ++r) {
            sys.at(r, i) = fh[r];
            sys.at(N * N + r, i) = fe[r];
        }
    }
    RatVec rhs(2 * N * N);
    const auto hf = h.flatten();
    for (std::size_t r = 0; r < hf.size(); ++r) rhs[N * N + r] = hf[r];
    const auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    return alg.combine(*sol);
}

Subspace adHGrading(const Algebra& alg, const RatMatrix& h, const Rat& j) {
    const std::size_t d = alg.basis.size();
    const int N = alg.space.dim();
    RatMatrix sys(N * N, d);
    for (std::size_t i = 0; i < d; ++i) {
        const RatMatrix x = superCommutator(alg.space, h, alg.basis[i]) - alg.basis[i] * j;
        const auto fx = x.flatten();
        for (std::size_t r = 0; r < fx.size(); ++r) sys.at(r, i) = fx[r];
    }
    return Subspace::fromVectors(d, nullspace(sys));
}

} // namespace superz
