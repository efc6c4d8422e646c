#include "superz/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace superz {

int Space::evenDim() const {
    int c = 0;
    for (auto p : par)
        if (p == Parity::Even) ++c;
    return c;
}

int Space::oddDim() const { return dim() - evenDim(); }

RatMatrix evenComponent(const Space& sp, const RatMatrix& x) {
    RatMatrix r(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (sp.par[i] == sp.par[j]) r.at(i, j) = x.at(i, j);
    return r;
}

RatMatrix oddComponent(const Space& sp, const RatMatrix& x) {
    RatMatrix r(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (sp.par[i] != sp.par[j]) r.at(i, j) = x.at(i, j);
    return r;
}

bool isHomogeneous(const Space& sp, const RatMatrix& x, Parity p) {
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (x.at(i, j) != 0 && (sp.par[i] != sp.par[j]) != (p == Parity::Odd)) return false;
    return true;
}

Rat superTrace(const Space& sp, const RatMatrix& x) {
    Rat t = 0;
    for (std::size_t i = 0; i < x.rows(); ++i)
        t += sp.par[i] == Parity::Even ? x.at(i, i) : -x.at(i, i);
    return t;
}

RatMatrix superCommutator(const Space& sp, const RatMatrix& x, const RatMatrix& y) {
    // [x,y] = xy - yx + 2 y1 x1 over the parity components.
    const RatMatrix x1 = oddComponent(sp, x);
    const RatMatrix y1 = oddComponent(sp, y);
    return x * y - y * x + (y1 * x1) * Rat(2);
}

bool satisfiesFormIdentity(const Space& sp, const RatMatrix& x) {
    if (!sp.hasForm()) throw std::logic_error("space carries no bilinear form");
    const RatMatrix& B = sp.form;
    auto holds = [&](const RatMatrix& part, bool odd) {
        RatMatrix lhs = part.transpose() * B;
        RatMatrix rhs = B * part;
        if (odd)
            for (std::size_t i = 0; i < rhs.rows(); ++i)
                if (sp.par[i] == Parity::Odd)
                    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs.at(i, j) = -rhs.at(i, j);
        return (lhs + rhs).isZero();
    };
    return holds(evenComponent(sp, x), false) && holds(oddComponent(sp, x), true);
}

RatMatrix Algebra::combine(const RatVec& coords) const {
    assert(coords.size() == basis.size());
    RatMatrix r(space.dim(), space.dim());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coords[i] != 0) r = r + basis[i] * coords[i];
    return r;
}

Algebra makeAlgebra(std::string name, Space space, std::vector<RatMatrix> basis) {
    std::vector<RatVec> flat;
    flat.reserve(basis.size());
    for (const auto& b : basis) flat.push_back(b.flatten());
    const std::size_t amb = static_cast<std::size_t>(space.dim()) * space.dim();
    Algebra a{std::move(name), std::move(space), std::move(basis),
              Subspace::fromVectors(amb, std::move(flat))};
    if (a.span.dim() != a.basis.size())
        throw std::logic_error("algebra basis is linearly dependent: " + a.name);
    return a;
}

// --- gl / sl --------------------------------------------------------------

SlContext makeSlContext(const Partition& part) {
    SlContext ctx{buildSl(part), {}};
    const int N = part.m() + part.n();
    ctx.space.tag = BasisTag::SlStandard;
    ctx.space.par.resize(N);
    for (int i = 1; i <= N; ++i) ctx.space.par[i - 1] = ctx.pyramid.boxByNum(i)->par;
    return ctx;
}

Space makeGlSpace(int m, int n) {
    Space sp;
    sp.tag = BasisTag::SlStandard;
    for (int i = 0; i < m; ++i) sp.par.push_back(Parity::Even);
    for (int i = 0; i < n; ++i) sp.par.push_back(Parity::Odd);
    return sp;
}

Algebra makeGl(const Space& sp) {
    const int N = sp.dim();
    std::vector<RatMatrix> basis;
    basis.reserve(static_cast<std::size_t>(N) * N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            RatMatrix u(N, N);
            u.at(i, j) = 1;
            basis.push_back(std::move(u));
        }
    return makeAlgebra("gl", sp, std::move(basis));
}

Algebra makeSl(const Space& sp) {
    const int N = sp.dim();
    std::vector<RatMatrix> basis;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            RatMatrix u(N, N);
            u.at(i, j) = 1;
            basis.push_back(std::move(u));
        }
    // Supertrace-free diagonal combinations E_ii - (-1)^{p_i + p_{i+1}} E_{i+1,i+1}.
    for (int i = 0; i + 1 < N; ++i) {
        RatMatrix u(N, N);
        u.at(i, i) = 1;
        u.at(i + 1, i + 1) = parityBit(sp.par[i]) == parityBit(sp.par[i + 1]) ? -1 : 1;
        basis.push_back(std::move(u));
    }
    return makeAlgebra("sl", sp, std::move(basis));
}

// --- osp standard ---------------------------------------------------------

OspStdContext makeOspStdContext(const Partition& part) {
    OspStdContext ctx{buildOsp(part), {}, {}, {}, 0, part.m() % 2 == 1};
    const int N = part.m() + part.n();
    ctx.lPlusN = part.m() / 2 + part.n() / 2;
    ctx.space.tag = BasisTag::OspStandard;
    ctx.space.par.resize(N);
    ctx.idxAtPos.resize(N);

    int pos = 0;
    auto place = [&](int idx) {
        ctx.idxAtPos[pos] = idx;
        ctx.posOfIdx[idx] = pos;
        ctx.space.par[pos] = ctx.pyramid.boxByNum(idx)->par;
        ++pos;
    };
    for (int i = 1; i <= ctx.lPlusN; ++i) place(i);
    if (ctx.mOdd) place(0);
    for (int i = ctx.lPlusN; i >= 1; --i) place(-i);

    RatMatrix B(N, N);
    for (int i = -ctx.lPlusN; i <= ctx.lPlusN; ++i) {
        if (i == 0) continue;
        const Parity eta = ctx.space.par[ctx.posOfIdx.at(i)];
        Rat v = 1;
        if (eta == Parity::Odd && i < 0) v = -1;
        B.at(ctx.posOfIdx.at(i), ctx.posOfIdx.at(-i)) = v;
    }
    if (ctx.mOdd) B.at(ctx.posOfIdx.at(0), ctx.posOfIdx.at(0)) = 1;
    ctx.space.form = std::move(B);
    return ctx;
}

int ospDimension(int m, int n2) {
    const int n = n2 / 2;
    return (m * m - m) / 2 + (2 * n * n + n) + m * n2;
}

Algebra makeOspStandard(const OspStdContext& ctx) {
    const int N = ctx.space.dim();
    const int L = ctx.lPlusN;
    std::vector<RatMatrix> basis;

    auto unit = [&](int j, int k) {
        RatMatrix u(N, N);
        u.at(ctx.pos(j), ctx.pos(k)) = 1;
        return u;
    };
    auto etaBit = [&](int i) { return parityBit(ctx.eta(i)); };
    auto sign = [](int i) { return i > 0 ? 1 : -1; };

    auto gammaFor = [&](int j, int k) -> Rat {
        if (j == 0) return ctx.eta(k) == Parity::Even ? -1 : 1;  // E_{0,k} + gamma E_{-k,0}
        if (k == 0) return -1;                                   // E_{j,0} + gamma E_{0,-j}
        if (ctx.eta(j) == ctx.eta(k)) {
            if (ctx.eta(j) == Parity::Odd && j * k < 0) return 1;
            return -1;
        }
        return -etaBit(j) * sign(j) + etaBit(k) * sign(k);
    };
    auto pairElement = [&](int j, int k) {
        RatMatrix x = unit(j, k);
        const Rat g = gammaFor(j, k);
        RatMatrix y = unit(-k, -j);
        return x + y * g;
    };

    for (int i = -L; i <= L; ++i)
        if (i != 0 && ctx.eta(i) == Parity::Odd) basis.push_back(unit(i, -i));
    for (int j = 1; j <= L; ++j)
        for (int k = 1; k <= L; ++k) basis.push_back(pairElement(j, k));
    if (ctx.mOdd) {
        for (int k = 1; k <= L; ++k) basis.push_back(pairElement(0, k));
        for (int j = 1; j <= L; ++j) basis.push_back(pairElement(j, 0));
    }
    for (int j = -L; j <= L; ++j)
        for (int k = -L; k <= L; ++k)
            if (j != 0 && k != 0 && j * k < 0 && j + k < 0) basis.push_back(pairElement(j, k));

    return makeAlgebra("osp", ctx.space, std::move(basis));
}

Algebra makeOspFromForm(const Space& sp, const std::string& name) {
    const int N = sp.dim();
    const RatMatrix& B = sp.form;
    std::vector<RatMatrix> basis;
    // Solve x^T B + S B x = 0 on each parity-homogeneous block, where S is the
    // identity for even maps and diag((-1)^{p_r}) for odd ones.
    for (Parity xpar : {Parity::Even, Parity::Odd}) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                if ((sp.par[i] != sp.par[j]) == (xpar == Parity::Odd)) slots.emplace_back(i, j);
        RatMatrix cond(N * N, slots.size());
        for (std::size_t s = 0; s < slots.size(); ++s) {
            const auto [a, b] = slots[s];
            // d/dx_{ab} of (x^T B + S B x)_{uv}: contributes B_{av} at u=b
            // and S_u B_{ua} at v=b.
            for (int v = 0; v < N; ++v)
                if (B.at(a, v) != 0) cond.at(b * N + v, s) += B.at(a, v);
            for (int u = 0; u < N; ++u)
                if (B.at(u, a) != 0) {
                    Rat f = B.at(u, a);
                    if (xpar == Parity::Odd && sp.par[u] == Parity::Odd) f = -f;
                    cond.at(u * N + b, s) += f;
                }
        }
        for (const auto& v : nullspace(cond)) {
            RatMatrix x(N, N);
            for (std::size_t s = 0; s < slots.size(); ++s)
                if (v[s] != 0) x.at(slots[s].first, slots[s].second) = v[s];
            basis.push_back(std::move(x));
        }
    }
    return makeAlgebra(name, sp, std::move(basis));
}

// --- osp over the alternative pyramid --------------------------------------

const AltString& OspAltContext::stringByIdx(int idx) const {
    for (const auto& s : strings)
        if (s.idx == idx) return s;
    throw std::out_of_range("no such string index");
}

int OspAltContext::posOf(int idx, int k) const {
    const AltString& s = stringByIdx(idx);
    if (k < 0 || k >= s.size) throw std::out_of_range("power outside string");
    return s.firstPos + k;
}

OspAltContext makeOspAltContext(const Partition& part) {
    OspAltContext ctx{buildAlt(part), {}, {}, 0, 0};
    const auto g = part.grouped();
    ctx.numSingles = static_cast<int>(g.singles.size());
    ctx.numStrings = ctx.numSingles + static_cast<int>(g.pairs.size());
    ctx.space.tag = BasisTag::OspAlt;

    int pos = 0;
    auto addString = [&](int idx, const Part& pt, const Rat& theta) {
        ctx.strings.push_back({idx, pt.size, pt.par, theta, pos});
        for (int k = 0; k < pt.size; ++k) ctx.space.par.push_back(pt.par);
        pos += pt.size;
    };
    for (int i = 1; i <= ctx.numSingles; ++i) addString(i, g.singles[i - 1], 1);
    for (std::size_t k = 0; k < g.pairs.size(); ++k) {
        const int i = ctx.numSingles + 1 + static_cast<int>(k);
        const Part& pt = g.pairs[k];
        const Rat thetaNeg = (parityBit(pt.par) + pt.size - 1) % 2 == 0 ? 1 : -1;
        addString(i, pt, 1);
        addString(-i, pt, thetaNeg);
    }

    const int N = ctx.space.dim();
    RatMatrix B(N, N);
    for (const auto& s : ctx.strings) {
        const int other = ctx.istar(s.idx);
        const AltString& t = ctx.stringByIdx(other);
        for (int k = 0; k < s.size; ++k) {
            const int h = s.size - 1 - k;
            B.at(s.firstPos + k, t.firstPos + h) = (k % 2 == 0 ? s.theta : -s.theta);
        }
    }
    ctx.space.form = std::move(B);
    return ctx;
}

Algebra makeOspAlt(const OspAltContext& ctx) { return makeOspFromForm(ctx.space, "osp-alt"); }

} // namespace superz
