#pragma once

#include "superz/centre.hpp"
#include "superz/diagram.hpp"

#include <string>
#include <vector>

namespace superz {

struct CheckOutcome {
    std::string name;
    bool applicable = true;
    bool pass = true;
    std::string detail;
};

// Runs the complete per-partition battery: closed forms against oracles,
// structural properties, and the three dimension identities.
std::vector<CheckOutcome> verifyPartition(const Partition& part);

std::vector<Partition> enumeratePartitions(AlgKind kind, int maxSize);

struct SweepEntry {
    Partition part;
    std::vector<CheckOutcome> checks;
};

struct SweepReport {
    std::vector<SweepEntry> entries;

    int partitionCount() const { return static_cast<int>(entries.size()); }
    int checksRun() const;
    std::vector<std::string> failures() const;  // "partition: check: detail"
    bool allPass() const { return failures().empty(); }
};

SweepReport sweep(AlgKind kind, int maxSize, int jobs = 1);

} // namespace superz
