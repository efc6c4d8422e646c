#include "superz/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace superz {

namespace {

std::vector<int> parseSide(const std::string& text, const char* name) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    std::vector<int> out;
    if (s.empty()) return out;

    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        const std::string tok =
            comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start);
        if (tok.empty()) throw PartitionError(std::string(name) + ": empty entry");
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(tok, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != tok.size()) throw PartitionError(std::string(name) + ": not an integer: '" + tok + "'");
        if (v < 1) throw PartitionError(std::string(name) + ": parts must be positive, got " + tok);
        out.push_back(static_cast<int>(v));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace

Partition::Partition(AlgKind kind, std::vector<int> p, std::vector<int> q)
    : kind_(kind), p_(std::move(p)), q_(std::move(q)) {
    validate();
}

Partition Partition::parse(const std::string& text, AlgKind kind) {
    const auto bar = text.find('|');
    if (bar == std::string::npos) throw PartitionError("missing '|' separator");
    if (text.find('|', bar + 1) != std::string::npos) throw PartitionError("more than one '|' separator");
    return Partition(kind, parseSide(text.substr(0, bar), "p"), parseSide(text.substr(bar + 1), "q"));
}

void Partition::validate() const {
    auto checkSorted = [](const std::vector<int>& v, const char* name) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i)
            if (v[i] < v[i + 1])
                throw PartitionError(std::string(name) + ": parts must be weakly decreasing");
        for (int x : v)
            if (x < 1) throw PartitionError(std::string(name) + ": parts must be positive");
    };
    checkSorted(p_, "p");
    checkSorted(q_, "q");
    if (p_.empty() && q_.empty()) throw PartitionError("partition is empty");
    if (kind_ == AlgKind::OSP) {
        if (n() % 2 != 0) throw PartitionError("q must sum to an even number");
        const auto mult = multiplicities();
        for (const auto& [size, mn] : mult) {
            if (size % 2 == 0 && mn.first % 2 != 0)
                throw PartitionError("even part " + std::to_string(size) + " of p has odd multiplicity");
            if (size % 2 == 1 && mn.second % 2 != 0)
                throw PartitionError("odd part " + std::to_string(size) + " of q has odd multiplicity");
        }
    }
}

int Partition::m() const { return std::accumulate(p_.begin(), p_.end(), 0); }
int Partition::n() const { return std::accumulate(q_.begin(), q_.end(), 0); }

int Partition::largestPart() const {
    int best = 0;
    if (!p_.empty()) best = std::max(best, p_[0]);
    if (!q_.empty()) best = std::max(best, q_[0]);
    return best;
}

std::vector<Part> Partition::interleaved() const {
    std::vector<Part> out;
    for (int x : p_) out.push_back({x, Parity::Even});
    for (int x : q_) out.push_back({x, Parity::Odd});
    std::stable_sort(out.begin(), out.end(), [](const Part& a, const Part& b) {
        if (a.size != b.size) return a.size > b.size;
        return parityBit(a.par) < parityBit(b.par);
    });
    return out;
}

Partition::Grouped Partition::grouped() const {
    if (kind_ != AlgKind::OSP) throw PartitionError("grouped notation applies to OSP partitions only");
    Grouped g;
    for (const auto& [size, mn] : multiplicities()) {
        auto add = [&](int count, Parity par) {
            if (count % 2 == 1) g.singles.push_back({size, par});
            for (int i = 0; i < count / 2; ++i) g.pairs.push_back({size, par});
        };
        add(mn.first, Parity::Even);
        add(mn.second, Parity::Odd);
    }
    auto bySizeDesc = [](const Part& a, const Part& b) {
        if (a.size != b.size) return a.size > b.size;
        return parityBit(a.par) < parityBit(b.par);
    };
    std::sort(g.singles.begin(), g.singles.end(), bySizeDesc);
    std::sort(g.pairs.begin(), g.pairs.end(), bySizeDesc);
    for (std::size_t i = 0; i + 1 < g.singles.size(); ++i)
        if (g.singles[i].size == g.singles[i + 1].size)
            throw PartitionError("internal: singles not strictly decreasing");
    return g;
}

std::map<int, std::pair<int, int>> Partition::multiplicities() const {
    std::map<int, std::pair<int, int>> mult;
    for (int x : p_) mult[x].first++;
    for (int x : q_) mult[x].second++;
    return mult;
}

std::string Partition::text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < p_.size(); ++i) os << (i ? "," : "") << p_[i];
    os << '|';
    for (std::size_t i = 0; i < q_.size(); ++i) os << (i ? "," : "") << q_[i];
    return os.str();
}

} // namespace superz
