#include "superz/pyramid.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace superz {

std::map<int, ColumnCount> Pyramid::columnCounts() const {
    std::map<int, ColumnCount> counts;
    for (const auto& b : boxes) {
        if (b.crossed) continue;
        auto& c = counts[b.col];
        (b.par == Parity::Even ? c.even : c.odd)++;
    }
    return counts;
}

const Box* Pyramid::boxAt(int y, int col) const {
    for (const auto& b : boxes)
        if (!b.crossed && b.y == y && b.col == col) return &b;
    return nullptr;
}

const Box* Pyramid::boxByNum(int num) const {
    for (const auto& b : boxes)
        if (!b.crossed && b.num == num) return &b;
    return nullptr;
}

const Box* Pyramid::boxByAlt(int i, int j) const {
    for (const auto& b : boxes)
        if (!b.crossed && b.altI == i && b.altJ == j) return &b;
    return nullptr;
}

const PyramidRow* Pyramid::rowAt(int y) const {
    for (const auto& r : rows)
        if (r.y == y) return &r;
    return nullptr;
}

int Pyramid::boxCount() const {
    int n = 0;
    for (const auto& b : boxes)
        if (!b.crossed) ++n;
    return n;
}

std::string Pyramid::render() const {
    if (boxes.empty()) return "";
    int minCol = boxes[0].col, maxCol = boxes[0].col, minY = boxes[0].y, maxY = boxes[0].y;
    for (const auto& b : boxes) {
        minCol = std::min(minCol, b.col);
        maxCol = std::max(maxCol, b.col);
        minY = std::min(minY, b.y);
        maxY = std::max(maxY, b.y);
    }
    std::ostringstream os;
    for (int y = maxY; y >= minY; --y) {
        bool rowHasBox = false;
        for (const auto& b : boxes)
            if (b.y == y) rowHasBox = true;
        if (!rowHasBox) continue;
        std::string line((maxCol - minCol) * 2 + 4, ' ');
        for (const auto& b : boxes) {
            if (b.y != y) continue;
            const std::size_t x = static_cast<std::size_t>(b.col - minCol) * 2;
            const char fill = b.crossed ? 'X' : (b.par == Parity::Even ? '.' : '*');
            line[x] = '[';
            line[x + 1] = fill;
            line[x + 2] = fill;
            line[x + 3] = ']';
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

namespace {

void numberStandardBoxes(Pyramid& py, int positiveCount) {
    std::vector<Box*> scan;
    for (auto& b : py.boxes)
        if (!b.crossed) scan.push_back(&b);
    std::sort(scan.begin(), scan.end(), [](const Box* a, const Box* b) {
        if (a->col != b->col) return a->col < b->col;
        return a->y > b->y;
    });
    if (py.flavor == PyramidFlavor::SL) {
        int num = 1;
        for (auto* b : scan) b->num = num++;
        return;
    }
    int num = 1;
    for (auto* b : scan) {
        if (num <= positiveCount) {
            b->num = num++;
            continue;
        }
        if (b->y == 0 && b->col == 0) {
            b->num = 0;
            continue;
        }
        const Box* mirror = py.boxAt(-b->y, -b->col);
        assert(mirror && mirror->num > 0);
        b->num = -mirror->num;
    }
}

} // namespace

Pyramid buildSl(const Partition& part) {
    if (part.kind() != AlgKind::SL) throw PartitionError("SL pyramid requires an SL partition");
    Pyramid py{PyramidFlavor::SL, part, {}, {}};
    const auto parts = part.interleaved();
    for (std::size_t idx = 0; idx < parts.size(); ++idx) {
        const int y = static_cast<int>(idx) + 1;  // row 1 at the bottom
        const Part& pt = parts[idx];
        py.rows.push_back({y, pt.par, RowKind::Full});
        for (int c = 1 - pt.size; c <= pt.size - 1; c += 2)
            py.boxes.push_back({y, c, pt.par, false});
    }
    numberStandardBoxes(py, 0);
    return py;
}

Pyramid buildOsp(const Partition& part) {
    if (part.kind() != AlgKind::OSP) throw PartitionError("OSP pyramid requires an OSP partition");
    Pyramid py{PyramidFlavor::OSP, part, {}, {}};
    auto mult = part.multiplicities();
    const int m = part.m();
    int nextY = 1;

    auto addRow = [&](int y, Parity par, RowKind kind, int colFrom, int colTo, int crossedFrom,
                      int crossedTo) {
        py.rows.push_back({y, par, kind});
        for (int c = colFrom; c <= colTo; c += 2) py.boxes.push_back({y, c, par, false});
        for (int c = crossedFrom; c <= crossedTo; c += 2) py.boxes.push_back({y, c, par, true});
    };

    if (m % 2 == 1) {
        // Zeroth row from the largest odd part of p with odd multiplicity.
        int a1 = 0;
        for (const auto& [size, mn] : mult)
            if (size % 2 == 1 && mn.first % 2 == 1) a1 = std::max(a1, size);
        assert(a1 > 0);
        addRow(0, Parity::Even, RowKind::Zeroth, 1 - a1, a1 - 1, 0, -1);
        mult[a1].first--;
    }

    // Remaining odd parts of p with odd multiplicity, paired as c_k > b_k.
    std::vector<int> skewSizes;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it)
        if (it->first % 2 == 1 && it->second.first % 2 == 1) skewSizes.push_back(it->first);
    assert(skewSizes.size() % 2 == 0);

    std::vector<int> sizes;
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) sizes.push_back(it->first);

    for (int size : sizes) {
        auto& mn = mult[size];
        if (mn.first % 2 == 1) {
            // size == c_k; the matching b_k is the next skew representative.
            auto pos = std::find(skewSizes.begin(), skewSizes.end(), size);
            assert(pos != skewSizes.end() && pos + 1 != skewSizes.end());
            const int c = *pos, b = *(pos + 1);
            addRow(nextY++, Parity::Even, RowKind::EvenSkew, 1 - b, c - 1, 1 - c, -1 - b);
            mn.first--;
            mult[b].first--;
        }
        for (int i = 0; i < mn.first / 2; ++i)
            addRow(nextY++, Parity::Even, RowKind::Full, 1 - size, size - 1, 0, -1);
        if (mn.second % 2 == 1)
            addRow(nextY++, Parity::Odd, RowKind::OddSkew, 1, size - 1, 1 - size, -1);
        for (int i = 0; i < mn.second / 2; ++i)
            addRow(nextY++, Parity::Odd, RowKind::Full, 1 - size, size - 1, 0, -1);
    }

    // Mirror the upper half through the origin.
    const auto upperRows = py.rows;
    const auto upperBoxes = py.boxes;
    for (const auto& r : upperRows)
        if (r.y > 0) py.rows.push_back({-r.y, r.par, r.kind});
    for (const auto& b : upperBoxes)
        if (b.y > 0) py.boxes.push_back({-b.y, -b.col, b.par, b.crossed});

    assert(py.boxCount() == part.m() + part.n());
    numberStandardBoxes(py, (part.m() / 2) + part.n() / 2);
    return py;
}

Pyramid buildAlt(const Partition& part) {
    if (part.kind() != AlgKind::OSP) throw PartitionError("alternative pyramid requires an OSP partition");
    Pyramid py{PyramidFlavor::ALT, part, {}, {}};
    const auto g = part.grouped();
    const int a = static_cast<int>(g.singles.size());

    for (int i = 1; i <= a; ++i) {
        const Part& pt = g.singles[i - 1];
        const int lam = pt.size;
        py.rows.push_back({i, pt.par, RowKind::Full});
        py.rows.push_back({-i, pt.par, RowKind::Full});
        const int crossedTop = lam / 2;  // crossed out on the left of row i
        int seen = 0;
        for (int c = 1 - lam; c <= lam - 1; c += 2, ++seen) {
            const bool crossed = seen < crossedTop;
            py.boxes.push_back({i, c, pt.par, crossed, 0, crossed ? 0 : i, crossed ? 0 : c});
        }
        const int keptBottom = lam / 2;  // crossed out on the right of row -i
        seen = 0;
        for (int c = 1 - lam; c <= lam - 1; c += 2, ++seen) {
            const bool crossed = seen >= keptBottom;
            py.boxes.push_back({-i, c, pt.par, crossed, 0, crossed ? 0 : i, crossed ? 0 : c});
        }
    }
    for (std::size_t k = 0; k < g.pairs.size(); ++k) {
        const int i = a + 1 + static_cast<int>(k);
        const Part& pt = g.pairs[k];
        py.rows.push_back({i, pt.par, RowKind::Full});
        py.rows.push_back({-i, pt.par, RowKind::Full});
        for (int c = 1 - pt.size; c <= pt.size - 1; c += 2) {
            py.boxes.push_back({i, c, pt.par, false, 0, i, c});
            py.boxes.push_back({-i, c, pt.par, false, 0, -i, c});
        }
    }
    assert(py.boxCount() == part.m() + part.n());
    return py;
}

} // namespace superz
