#pragma once

#include "superz/partition.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace superz {

enum class PyramidFlavor { SL, OSP, ALT };

enum class RowKind { Full, Zeroth, EvenSkew, OddSkew };

struct PyramidRow {
    int y;
    Parity par;
    RowKind kind;
};

struct Box {
    int y;           // row coordinate
    int col;         // x-coordinate of the box centre
    Parity par;
    bool crossed = false;
    // Standard numbering: SL uses 1..m+n; OSP uses 1..l+n, 0, -(l+n)..-1.
    int num = 0;
    // ALT labels i_j (i the string index, possibly negative for paired rows).
    int altI = 0;
    int altJ = 0;
};

struct ColumnCount {
    int even = 0;  // parity-0 boxes
    int odd = 0;
    int total() const { return even + odd; }
};

struct Pyramid {
    PyramidFlavor flavor;
    Partition partition;
    std::vector<PyramidRow> rows;
    std::vector<Box> boxes;

    // Per-column box counts, crossed boxes excluded.
    std::map<int, ColumnCount> columnCounts() const;

    const Box* boxAt(int y, int col) const;       // non-crossed only
    const Box* boxByNum(int num) const;           // SL / OSP numbering
    const Box* boxByAlt(int i, int j) const;      // ALT labels
    const PyramidRow* rowAt(int y) const;

    int boxCount() const;                         // non-crossed boxes
    std::string render() const;
};

Pyramid buildSl(const Partition& part);
Pyramid buildOsp(const Partition& part);
Pyramid buildAlt(const Partition& part);

} // namespace superz
