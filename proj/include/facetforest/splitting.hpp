#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "facetforest/betti_table.hpp"
#include "facetforest/complex.hpp"
#include "facetforest/good_leaf_order.hpp"

namespace facetforest {

// Thrown when the good leaf meets every other facet, leaving no far side to
// split off.
struct SplitInapplicableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when the splitting map would be ambiguous.
struct SplitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SplitResult {
    // Last order position whose facet meets the good leaf; positions beyond
    // it form the far side K.
    int t = -1;
    std::vector<int> j_facets;  // original indices, in order position
    std::vector<int> k_facets;
    // Minimal generators of J ∩ K, sorted by degree then descending lex.
    std::vector<Facet> gens;
    // Per generator: the witnessing facet on each side, lcm(phi, psi) = gen.
    // phi is the lex-least J-facet over all witnessing pairs; psi must be
    // unique or the split errors out.
    std::vector<int> phi;
    std::vector<int> psi;
};

// Splits the ideal along a good leaf order: J takes every facet meeting the
// good leaf, K the rest. Throws SplitInapplicableError when K would be empty
// and SplitError when some generator of J ∩ K has more than one K-side
// witness.
SplitResult split_by_good_leaf(const Complex& c, const GoodLeafOrder& order);

// Minimal generators of the intersection ideal: inclusion-minimal pairwise
// unions, deduplicated, sorted by degree then descending lex.
std::vector<Facet> intersection_generators(const Complex& j, const Complex& k);

struct SplittingCheck {
    bool ok = true;
    std::string clause;         // which condition failed
    std::vector<int> witness;   // indices into gens for the failing subset
};

// Independently checks the splitting conditions on a SplitResult: J, K
// partition the facets; every generator L of J ∩ K satisfies
// lcm(phi(L), psi(L)) = L; and for every nonempty subset S of the
// generators, lcm over S of phi and of psi each properly divide lcm(S).
// Subsets up to `subset_cap` are checked exhaustively, then up to
// `random_checks` seeded random larger subsets.
SplittingCheck verify_splitting(const Complex& c, const SplitResult& split, int subset_cap = 6,
                                int random_checks = 1000, std::uint64_t seed = 0x5eedf0c5);

struct IdentityReport {
    struct Row {
        int i, j;
        std::int64_t lhs, rhs;
    };
    bool ok = true;
    int checked = 0;
    std::vector<Row> mismatches;
};

// Checks β_{i,j}(whole) = β_{i,j}(j_side) + β_{i,j}(k_side) +
// β_{i-1,j}(meet) over every (i, j) touched by any of the four tables.
IdentityReport ek_betti_identity_check(const BettiTable& whole, const BettiTable& j_side, const BettiTable& k_side,
                                       const BettiTable& meet);

struct BoundsReport {
    bool hypotheses_ok = true;
    std::string hypothesis_error;

    struct Entry {
        int i, j;
        std::int64_t whole, parts;
        bool ok;
    };
    std::vector<Entry> entries;
    bool entries_ok = true;

    int projdim_whole = 0, projdim_parts = 0;
    bool projdim_ok = true;
    int reg_whole = 0, reg_parts = 0;  // diagram convention
    bool reg_ok = true;

    bool ok() const { return hypotheses_ok && entries_ok && projdim_ok && reg_ok; }
};

using TableEngine = std::function<BettiTable(const Complex&)>;

// Facet-interval partition bounds: the parts must be consecutive intervals
// of the facet list, each part a tree whose identity order is a good leaf
// order with the head facet meeting every facet of its part, and each head
// disjoint from all later facets. Then entrywise β(whole) ≥ Σ β(part), and
// projdim/reg dominate the parts' maxima. Hypothesis violations are reported
// in `hypothesis_error` (naming the offending part or pair), in which case no
// inequalities are evaluated.
BoundsReport partition_bounds(const Complex& c, const std::vector<std::vector<int>>& parts, const TableEngine& engine);

}  // namespace facetforest
