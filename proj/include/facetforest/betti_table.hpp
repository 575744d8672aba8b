#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace facetforest {

// Table of graded Betti numbers β_{i,j}, i ≥ 0, as a sparse map. Every table
// additionally carries the implicit convention entry β_{-1,0} = 1, which is
// what the zero ideal's table consists of entirely; it makes the recursion
// algebra (shifted sums and convolutions) uniform, with no special cases for
// base complexes. Stored entries are always nonzero.
class BettiTable {
public:
    using Entries = std::map<std::pair<int, int>, std::int64_t>;

    BettiTable() = default;

    static BettiTable zero_ideal() { return BettiTable(); }

    // No stored entries: the table is exactly {β_{-1,0} = 1}, i.e. the zero ideal.
    bool is_zero_ideal() const { return entries_.empty(); }

    std::int64_t beta(int i, int j) const {
        if (i == -1) return j == 0 ? 1 : 0;
        auto it = entries_.find({i, j});
        return it == entries_.end() ? 0 : it->second;
    }

    void add(int i, int j, std::int64_t value);

    // this += src shifted by (di, dj), including src's implicit β_{-1,0} = 1,
    // which lands at (di - 1, dj). Requires di ≥ 1 so the result stays in
    // rows i ≥ 0.
    void add_shifted(const BettiTable& src, int di, int dj);

    const Entries& entries() const { return entries_; }

    // max i with a nonzero entry; the zero ideal has no projective dimension
    int projdim() const;
    // max over entries of j - i (top label of the literal diagram rows)
    int reg_literal() const;
    // max over entries of j - i - 1 (bottom row label of the shifted diagram)
    int reg_diagram() const;

    bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }
    bool operator!=(const BettiTable& o) const { return entries_ != o.entries_; }

private:
    Entries entries_;
};

// Text diagram with one column per homological degree i and one row per
// shifted degree: row label r lists β_{i, i+r+1} (or β_{i, i+r} when
// `literal_rows`). Zero cells render as '.'.
std::string betti_diagram(const BettiTable& t, bool literal_rows = false);

}  // namespace facetforest
