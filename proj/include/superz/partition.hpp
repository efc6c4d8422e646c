#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superz {

enum class Parity { Even = 0, Odd = 1 };

inline Parity flipped(Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; }
inline int parityBit(Parity p) { return p == Parity::Even ? 0 : 1; }

enum class AlgKind { SL, OSP };

struct PartitionError : std::runtime_error {
    explicit PartitionError(const std::string& rule) : std::runtime_error(rule) {}
};

struct Part {
    int size;
    Parity par;
    bool operator==(const Part& o) const { return size == o.size && par == o.par; }
};

// A parity-tagged bipartition (p|q). For SL, p partitions m and q partitions
// n. For OSP, q partitions 2n and the multiplicity conditions below hold:
// every even part of p and every odd part of q occurs an even number of times.
class Partition {
public:
    Partition(AlgKind kind, std::vector<int> p, std::vector<int> q);

    static Partition parse(const std::string& text, AlgKind kind);

    AlgKind kind() const { return kind_; }
    const std::vector<int>& p() const { return p_; }
    const std::vector<int>& q() const { return q_; }
    int m() const;
    int n() const;  // sum of q (equals 2n for OSP)
    int largestPart() const;

    // Parts merged into one weakly decreasing sequence; among equal sizes the
    // even-parity entries come first.
    std::vector<Part> interleaved() const;

    struct Grouped {
        std::vector<Part> singles;  // strictly decreasing sizes
        std::vector<Part> pairs;    // weakly decreasing sizes, each listed once
    };
    Grouped grouped() const;  // OSP only

    // size -> (even-parity multiplicity, odd-parity multiplicity)
    std::map<int, std::pair<int, int>> multiplicities() const;

    std::string text() const;
    bool operator==(const Partition& o) const { return kind_ == o.kind_ && p_ == o.p_ && q_ == o.q_; }

private:
    void validate() const;

    AlgKind kind_;
    std::vector<int> p_, q_;
};

} // namespace superz
