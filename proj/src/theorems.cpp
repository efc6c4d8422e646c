#include "superz/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <functional>
#include <sstream>
#include <thread>

namespace superz {

namespace {

Subspace spanOf(const std::vector<RatMatrix>& mats, int n) {
    std::vector<RatVec> rows;
    rows.reserve(mats.size());
    for (const auto& m : mats) rows.push_back(m.flatten());
    return Subspace::fromVectors(static_cast<std::size_t>(n) * n, std::move(rows));
}

std::vector<RatMatrix> oddPowers(const RatMatrix& e, int below) {
    std::vector<RatMatrix> out;
    RatMatrix power = e;
    for (int k = 1; k < below; ++k) {
        if (k % 2 == 1) out.push_back(power);
        power = power * e;
    }
    return out;
}

int ceilHalf(int v) { return (v + 1) / 2; }

bool allEvenParts(const Partition& part) {
    for (const auto& pt : part.interleaved())
        if (pt.size % 2 == 1) return false;
    return true;
}

bool mixedSizeParities(const Partition& part) {
    bool odd = false, even = false;
    for (const auto& pt : part.interleaved()) (pt.size % 2 ? odd : even) = true;
    return odd && even;
}

struct Check {
    std::vector<CheckOutcome> out;
    void add(const std::string& name, bool pass, const std::string& detail = "") {
        out.push_back({name, true, pass, detail});
    }
    void addNA(const std::string& name, const std::string& detail) {
        out.push_back({name, false, true, detail});
    }
};

std::string eq3(int a, int b, int c) {
    std::ostringstream os;
    os << a << "=" << b << "=" << c;
    return os.str();
}

bool checkSl2Triple(const Algebra& alg, const RatMatrix& e, const RatMatrix& h, std::string& detail) {
    if (!(superCommutator(alg.space, h, e) == e * Rat(2))) {
        detail = "[h,e] != 2e";
        return false;
    }
    const auto f = completeTriple(alg, e, h);
    if (!f) {
        detail = "no f with [e,f]=h";
        return false;
    }
    if (!(superCommutator(alg.space, h, *f) == *f * Rat(-2))) {
        detail = "[h,f] != -2f";
        return false;
    }
    if (!(superCommutator(alg.space, e, *f) == h)) {
        detail = "[e,f] != h";
        return false;
    }
    return true;
}

bool checkClosure(const Algebra& alg, const RatMatrix& e, const std::vector<RatMatrix>& basis,
                  std::string& detail) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            const RatMatrix br = superCommutator(alg.space, basis[i], basis[j]);
            if (!superCommutator(alg.space, e, br).isZero()) {
                detail = "bracket left the centralizer";
                return false;
            }
            if (alg.space.hasForm()) {
                if (!satisfiesFormIdentity(alg.space, br)) {
                    detail = "bracket left the algebra";
                    return false;
                }
            } else if (alg.name == "sl" && superTrace(alg.space, br) != 0) {
                detail = "bracket has nonzero supertrace";
                return false;
            }
        }
    return true;
}

bool checkCentrality(const Algebra& alg, const std::vector<RatMatrix>& centre,
                     const std::vector<RatMatrix>& centralizer, std::string& detail) {
    for (const auto& z : centre)
        for (const auto& y : centralizer)
            if (!superCommutator(alg.space, z, y).isZero()) {
                detail = "centre element fails to commute";
                return false;
            }
    return true;
}

bool evenPartOnly(const Space& sp, const std::vector<RatMatrix>& mats) {
    for (const auto& m : mats)
        if (!oddComponent(sp, m).isZero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Reduction data shared by the identity checks.

struct ReductionDims {
    int dimAlgE = 0;    // dim of the centralizer in the full algebra
    int dimG0E0 = 0;    // same for the 2-free core subalgebra
    int fixedTop = 0;   // group-fixed centre dimension (SO convention for osp)
    int fixedG0 = 0;
};

int slMiddleFixedDim(const Partition& middle) {
    const SlContext ctx = makeSlContext(middle);
    const Algebra alg = makeSl(ctx.space);
    const RatMatrix e0 = eFromSlPyramid(ctx);
    const auto cent = centralizerOracle(alg, e0);
    return static_cast<int>(centreOracle(alg, cent.basis).size());
}

int ospMiddleFixedDim(const Partition& middle) {
    const OspAltContext ctx = makeOspAltContext(middle);
    const Algebra alg = makeOspAlt(ctx);
    const RatMatrix e0 = eFromAltPyramid(ctx);
    const auto cent = centralizerOracle(alg, e0);
    const auto centre = centreOracle(alg, cent.basis);
    return static_cast<int>(
        fixedUnderGroup(ctx, e0, centre, GroupVariant::SpecialOrthogonal).basis.size());
}

ReductionDims reductionDims(const Partition& part, const CoreData& core, int fixedTopDim) {
    ReductionDims rd;
    rd.fixedTop = fixedTopDim;
    rd.dimAlgE = part.kind() == AlgKind::SL ? dimSlFormula(part) : dimOspFormula(part);

    const G0Data g0 = buildG0(part, core);
    for (const auto& [r, s] : g0.outerBlocks) {
        const int c = r + s;
        rd.dimG0E0 += c * c - 1;
        if (r == s && r > 0) rd.fixedG0 += 1;
    }
    if (g0.middle) {
        if (part.kind() == AlgKind::SL) {
            rd.dimG0E0 += dimSlFormula(*g0.middle);
            rd.fixedG0 += slMiddleFixedDim(*g0.middle);
        } else {
            rd.dimG0E0 += dimOspFormula(*g0.middle);
            rd.fixedG0 += ospMiddleFixedDim(*g0.middle);
        }
    }
    return rd;
}

void addTheoremChecks(Check& ck, const Partition& part, const LabelledDiagram& diagram,
                      const CoreData& core, int fixedTopDim, int zHDim, bool slEqualMN) {
    const bool torus = part.kind() == AlgKind::OSP && part.m() == 2 && part.n() == 0;
    if (torus) {
        ck.addNA("theorem1", "so(2) is a torus, outside the identity's scope");
        ck.addNA("theorem2", "so(2) is a torus, outside the identity's scope");
        ck.addNA("theorem3", "so(2) is a torus, outside the identity's scope");
        return;
    }

    const int shift = slEqualMN ? 1 : 0;
    if (diagram.hasLabel(1)) {
        ck.addNA("theorem1", "diagram has a label 1");
    } else {
        const int a = fixedTopDim - shift, b = core.n2, c = zHDim - shift;
        ck.add("theorem1", a == b && b == c, eq3(a, b, c));
    }
    {
        const int rhs = ceilHalf(diagram.labelSum()) + shift;
        std::ostringstream os;
        os << fixedTopDim << "=ceil(" << diagram.labelSum() << "/2)"
           << (shift ? "+1" : "") << "=" << rhs;
        ck.add("theorem2", fixedTopDim == rhs, os.str());
    }
    {
        const ReductionDims rd = reductionDims(part, core, fixedTopDim);
        const bool id1 = rd.dimAlgE - rd.dimG0E0 == core.n2;
        const int rhs = core.n2 + shift - core.tau - core.nu0;
        const bool id2 = rd.fixedTop - rd.fixedG0 == rhs;
        std::ostringstream os;
        os << rd.dimAlgE << "-" << rd.dimG0E0 << "=" << core.n2 << "; " << rd.fixedTop << "-"
           << rd.fixedG0 << "=" << rhs;
        ck.add("theorem3", id1 && id2, os.str());
    }
}

// ---------------------------------------------------------------------------

std::vector<CheckOutcome> verifySl(const Partition& part) {
    Check ck;
    const SlContext ctx = makeSlContext(part);
    const Algebra gl = makeGl(ctx.space);
    const Algebra sl = makeSl(ctx.space);
    const RatMatrix e = eFromSlPyramid(ctx);
    const RatMatrix h = hFromSlPyramid(ctx);
    const int N = ctx.space.dim();
    const bool slnn = part.m() == part.n();
    const bool is11 = part.m() == 1 && part.n() == 1;

    const auto glCent = centralizerOracle(gl, e);
    const auto slCent = centralizerOracle(sl, e);
    ck.add("dim-gl-oracle", glCent.dim() == dimGlFormula(part),
           std::to_string(glCent.dim()) + " vs " + std::to_string(dimGlFormula(part)));
    ck.add("dim-sl-oracle", slCent.dim() == dimSlFormula(part),
           std::to_string(slCent.dim()) + " vs " + std::to_string(dimSlFormula(part)));

    {
        std::vector<RatMatrix> mats;
        for (const auto& nm : closedFormGlCentralizer(ctx)) mats.push_back(nm.mat);
        ck.add("span-gl-closed-form", spanOf(mats, N) == spanOf(glCent.basis, N));
        mats.clear();
        for (const auto& nm : closedFormSlCentralizer(ctx)) mats.push_back(nm.mat);
        ck.add("span-sl-closed-form", spanOf(mats, N) == spanOf(slCent.basis, N));
    }

    const auto glCentre = centreOracle(gl, glCent.basis);
    const auto slCentre = centreOracle(sl, slCent.basis);
    {
        // gl centre: I and the powers of e.
        std::vector<RatMatrix> expected{RatMatrix::identity(N)};
        RatMatrix power = e;
        for (int k = 1; k <= part.largestPart() - 1; ++k) {
            expected.push_back(power);
            power = power * e;
        }
        bool pass = spanOf(expected, N) == spanOf(glCentre, N);
        std::string detail = "gl centre dim " + std::to_string(glCentre.size());
        if (is11) {
            pass = pass && slCentre.size() == 1 &&
                   spanOf(slCentre, N).contains(RatMatrix::identity(N).flatten());
            detail += "; (1|1) oracle centre = <I>";
        } else {
            std::vector<RatMatrix> gens;
            for (const auto& nm : centreClosedFormSl(ctx, e).generators) gens.push_back(nm.mat);
            pass = pass && spanOf(gens, N) == spanOf(slCentre, N);
            detail += "; sl centre dim " + std::to_string(slCentre.size());
        }
        ck.add("centre-closed-form", pass, detail);
    }
    ck.add("centre-even-part",
           evenPartOnly(ctx.space, glCentre) && evenPartOnly(ctx.space, slCentre));

    {
        std::string detail;
        ck.add("sl2-triple", checkSl2Triple(sl, e, h, detail), detail);
    }
    {
        std::string detail;
        ck.add("bracket-closure", checkClosure(sl, e, slCent.basis, detail), detail);
        ck.add("centre-commutes", checkCentrality(sl, slCentre, slCent.basis, detail), detail);
    }

    {
        // ad e maps the grades >= -1 onto the grades >= 1 (rank-nullity route:
        // the kernel is the centralizer and must sit inside grades >= -1).
        auto grade = [&](int a, int b) {
            return ctx.pyramid.boxByNum(b + 1)->col - ctx.pyramid.boxByNum(a + 1)->col;
        };
        bool kernelInside = true;
        for (const auto& x : glCent.basis)
            for (int a = 0; a < N && kernelInside; ++a)
                for (int b = 0; b < N; ++b)
                    if (x.at(a, b) != 0 && grade(a, b) < -1) {
                        kernelInside = false;
                        break;
                    }
        int dimGeMinus1 = 0, dimGe1 = 0;
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                if (grade(a, b) >= -1) dimGeMinus1++;
                if (grade(a, b) >= 1) dimGe1++;
            }
        const bool pass = kernelInside && dimGeMinus1 - glCent.dim() == dimGe1;
        ck.add("ad-e-surjective", pass,
               "rank " + std::to_string(dimGeMinus1 - glCent.dim()) + " vs " +
                   std::to_string(dimGe1));
    }

    const LabelledDiagram diagram = diagramSl(ctx);
    const CoreData core = coreData(diagram, part);
    {
        bool range = true;
        for (const auto& n : diagram.nodes) range = range && n.label >= 0 && n.label <= 2;
        ck.add("labels-range", range);
        ck.add("label-sum", diagram.labelSum() == 2 * part.largestPart() - 2,
               std::to_string(diagram.labelSum()));
        ck.add("one-labels-parity", diagram.hasLabel(1) == mixedSizeParities(part));
    }

    const int zHDim = [&] {
        const auto hCent = centralizerOracle(sl, h);
        return static_cast<int>(centreOracle(sl, hCent.basis).size());
    }();
    addTheoremChecks(ck, part, diagram, core, static_cast<int>(slCentre.size()), zHDim, slnn);
    return ck.out;
}

std::vector<CheckOutcome> verifyOsp(const Partition& part) {
    Check ck;
    const OspStdContext stdCtx = makeOspStdContext(part);
    const OspAltContext altCtx = makeOspAltContext(part);
    const Algebra stdAlg = makeOspStandard(stdCtx);
    const Algebra altAlg = makeOspAlt(altCtx);
    const RatMatrix eStd = eFromOspPyramid(stdCtx);
    const RatMatrix hStd = hFromOspPyramid(stdCtx);
    const RatMatrix eAlt = eFromAltPyramid(altCtx);
    const RatMatrix hAlt = hFromAltPyramid(altCtx);

    const auto stdCent = centralizerOracle(stdAlg, eStd);
    const auto altCent = centralizerOracle(altAlg, eAlt);
    {
        const int formula = dimOspFormula(part);
        ck.add("dim-osp-oracle", stdCent.dim() == formula && altCent.dim() == formula,
               std::to_string(stdCent.dim()) + "/" + std::to_string(altCent.dim()) + " vs " +
                   std::to_string(formula));
    }
    {
        bool ok = stdAlg.dim() == ospDimension(part.m(), part.n());
        for (const auto& b : stdAlg.basis) ok = ok && satisfiesFormIdentity(stdAlg.space, b);
        for (const auto& b : altAlg.basis) ok = ok && satisfiesFormIdentity(altAlg.space, b);
        ck.add("osp-basis-identity", ok, "dim " + std::to_string(stdAlg.dim()));
    }
    {
        const auto parts = part.interleaved();
        bool ok = satisfiesFormIdentity(stdAlg.space, eStd) && hasJordanType(eStd, parts) &&
                  superCommutator(stdAlg.space, hStd, eStd) == eStd * Rat(2);
        ok = ok && satisfiesFormIdentity(altAlg.space, eAlt) && hasJordanType(eAlt, parts) &&
             superCommutator(altAlg.space, hAlt, eAlt) == eAlt * Rat(2);
        ck.add("e-properties", ok);
    }
    {
        std::vector<RatMatrix> mats;
        bool epsOk = true;
        for (const auto& nm : closedFormOspCentralizer(altCtx)) mats.push_back(nm.mat);
        // The published sign for the even pairs must match the solved one.
        for (const auto& s : altCtx.strings)
            for (const auto& t : altCtx.strings) {
                if (altCtx.istar(t.idx) == s.idx && altCtx.istar(s.idx) == t.idx) continue;
                if (s.par != t.par) continue;
                if (std::make_pair(s.idx, t.idx) >
                    std::make_pair(altCtx.istar(t.idx), altCtx.istar(s.idx)))
                    continue;
                for (int k = 0; k <= std::min(s.size, t.size) - 1; ++k) {
                    const RatMatrix t1 = xiMatrixAlt(altCtx, s.idx, t.idx, t.size - 1 - k);
                    const RatMatrix t2 = xiMatrixAlt(altCtx, altCtx.istar(t.idx),
                                                     altCtx.istar(s.idx), s.size - 1 - k);
                    const Rat eps = ospPairEpsilonFormula(altCtx, s.idx, t.idx, k);
                    epsOk = epsOk && satisfiesFormIdentity(altCtx.space, t1 + t2 * eps);
                }
            }
        ck.add("span-osp-closed-form",
               spanOf(mats, altAlg.space.dim()) == spanOf(altCent.basis, altAlg.space.dim()),
               std::to_string(mats.size()) + " elements");
        ck.add("pair-epsilon-formula", epsOk);
    }

    const auto centre = centreOracle(altAlg, altCent.basis);
    const CentreResult closed = centreClosedFormOsp(altCtx, eAlt);
    {
        std::vector<RatMatrix> gens;
        for (const auto& nm : closed.generators) gens.push_back(nm.mat);
        ck.add("centre-closed-form",
               spanOf(gens, altAlg.space.dim()) == spanOf(centre, altAlg.space.dim()),
               closed.caseTag + ", dim " + std::to_string(centre.size()));
    }
    {
        // Odd content can only come from a mixed-parity top-singles generator.
        std::vector<RatMatrix> oddParts;
        for (const auto& z : centre) {
            RatMatrix o = oddComponent(altAlg.space, z);
            if (!o.isZero()) oddParts.push_back(std::move(o));
        }
        bool ok = true;
        if (!oddParts.empty()) {
            std::vector<RatMatrix> allowed;
            for (const auto& nm : closed.generators)
                if (!oddComponent(altAlg.space, nm.mat).isZero()) allowed.push_back(nm.mat);
            ok = closed.caseTag == "S+top-singles" &&
                 spanOf(allowed, altAlg.space.dim())
                     .contains(spanOf(oddParts, altAlg.space.dim()));
        }
        ck.add("centre-odd-content", ok);
    }

    const auto fixedO = fixedUnderGroup(altCtx, eAlt, centre, GroupVariant::Orthogonal);
    const auto fixedSO = fixedUnderGroup(altCtx, eAlt, centre, GroupVariant::SpecialOrthogonal);
    const auto sSpan = spanOf(oddPowers(eAlt, part.largestPart()), altAlg.space.dim());
    ck.add("fixed-O-equals-S", spanOf(fixedO.basis, altAlg.space.dim()) == sSpan,
           "dim " + std::to_string(fixedO.basis.size()));
    {
        const auto fixedSpan = spanOf(fixedSO.basis, altAlg.space.dim());
        ck.add("fixed-SO-contains-S", fixedSpan.contains(sSpan),
               "dim " + std::to_string(fixedSO.basis.size()));
    }

    {
        std::string detail;
        ck.add("sl2-triple",
               checkSl2Triple(altAlg, eAlt, hAlt, detail) && checkSl2Triple(stdAlg, eStd, hStd, detail),
               detail);
    }
    {
        std::string detail;
        ck.add("bracket-closure", checkClosure(altAlg, eAlt, altCent.basis, detail), detail);
        ck.add("centre-commutes", checkCentrality(altAlg, centre, altCent.basis, detail), detail);
    }

    const LabelledDiagram diagram = diagramOsp(stdCtx);
    const CoreData core = coreData(diagram, part);
    {
        bool range = true;
        for (const auto& n : diagram.nodes) range = range && n.label >= 0 && n.label <= 2;
        ck.add("labels-range", range);
        const int lam1 = part.largestPart();
        const int sum = diagram.labelSum();
        const bool inSet = sum == lam1 - 1 || sum == lam1;
        const bool evenCriterion = (sum == lam1) == allEvenParts(part);
        ck.add("label-sum", inSet && evenCriterion,
               "sum " + std::to_string(sum) + ", largest part " + std::to_string(lam1));
        ck.add("one-labels-parity", diagram.hasLabel(1) == mixedSizeParities(part));
    }

    const int zHDim = [&] {
        const auto hCent = centralizerOracle(stdAlg, hStd);
        return static_cast<int>(centreOracle(stdAlg, hCent.basis).size());
    }();
    addTheoremChecks(ck, part, diagram, core, static_cast<int>(fixedSO.basis.size()), zHDim,
                     false);
    return ck.out;
}

} // namespace

std::vector<CheckOutcome> verifyPartition(const Partition& part) {
    return part.kind() == AlgKind::SL ? verifySl(part) : verifyOsp(part);
}

namespace {

void descendingPartitions(int total, int maxPart, std::vector<int>& cur,
                          const std::function<void(const std::vector<int>&)>& fn) {
    if (total == 0) {
        fn(cur);
        return;
    }
    for (int next = std::min(total, maxPart); next >= 1; --next) {
        cur.push_back(next);
        descendingPartitions(total - next, next, cur, fn);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitionsOf(int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    descendingPartitions(total, total == 0 ? 1 : total, cur,
                         [&](const std::vector<int>& p) { out.push_back(p); });
    return out;
}

} // namespace

std::vector<Partition> enumeratePartitions(AlgKind kind, int maxSize) {
    std::vector<Partition> out;
    for (int total = 1; total <= maxSize; ++total) {
        for (int m = 0; m <= total; ++m) {
            const int n = total - m;
            for (const auto& p : partitionsOf(m))
                for (const auto& q : partitionsOf(n)) {
                    try {
                        out.emplace_back(kind, p, q);
                    } catch (const PartitionError&) {
                        // invalid for this kind; skip
                    }
                }
        }
    }
    return out;
}

int SweepReport::checksRun() const {
    int n = 0;
    for (const auto& e : entries) n += static_cast<int>(e.checks.size());
    return n;
}

std::vector<std::string> SweepReport::failures() const {
    std::vector<std::string> out;
    for (const auto& e : entries)
        for (const auto& c : e.checks)
            if (c.applicable && !c.pass)
                out.push_back("(" + e.part.text() + "): " + c.name +
                              (c.detail.empty() ? "" : ": " + c.detail));
    return out;
}

SweepReport sweep(AlgKind kind, int maxSize, int jobs) {
    const auto parts = enumeratePartitions(kind, maxSize);
    SweepReport report;
    report.entries.reserve(parts.size());
    for (const auto& p : parts) report.entries.push_back({p, {}});

    if (jobs <= 1) {
        for (std::size_t i = 0; i < parts.size(); ++i)
            report.entries[i].checks = verifyPartition(parts[i]);
        return report;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= parts.size()) return;
            report.entries[i].checks = verifyPartition(parts[i]);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return report;
}

} // namespace superz
