#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "facetforest/betti_table.hpp"
#include "facetforest/complex.hpp"
#include "facetforest/good_leaf_order.hpp"

namespace facetforest {

struct RecursionStats {
    std::int64_t nodes = 0;
    std::int64_t memo_hits = 0;
    int max_depth = 0;
};

// Betti table of a forest by deletion and localization: pick the
// lowest-index leaf F; with A = the complex minus F, B = the piece attached
// to F localized at it (reduced_conn) and C = the facets outside F's
// component, the table of the whole is
//
//   table(A) + Σ  v_B · v_C  at  (a + a' + 2, b + b' + |F|)
//
// summed over entries (a,b):v_B of B's table and (a',b'):v_C of C's table,
// both extended by their implicit β_{-1,0} = 1. Memoized per call; throws
// when some state has no leaf (input was not a forest).
BettiTable betti_hv(const Complex& c, RecursionStats* stats = nullptr);

// Betti table of a tree from a good leaf order. A strict order is consumed
// back to front within one self-recursion: peel the last facet L, localize
// what precedes it at L, and add that table shifted by (1, |L|). Non-strict
// orders take one such step per position with betti_hv on the localized
// prefixes. Either way the facet at order[0] contributes the base entry
// (0, |F_{order[0]}|).
BettiTable betti_glo(const Complex& c, const GoodLeafOrder& order, RecursionStats* stats = nullptr);

// One step of the prefix-localization chain: the state after localizing the
// prefix before position u at the facet at position u.
struct ChainStep {
    int u = -1;
    Complex state;             // surviving facets, prefix order inherited
    std::vector<int> origin;   // origin[k]: position in the previous state it came from
    bool forest = false;                // certificate: the state is a forest
    bool last_has_free_vertex = false;  // certificate: its last facet has a free vertex
};

struct LocalizationChain {
    std::vector<ChainStep> steps;
};

// Iterated prefix localizations of a tree along its good leaf order: us[0]
// indexes into the order, each later us[k] into the facets of the previous
// step's state. Records the certificates the recursion in betti_glo leans
// on.
LocalizationChain localization_chain(const Complex& c, const GoodLeafOrder& order, const std::vector<int>& us);

// Degree histogram of the minimal generators: the i = 0 row of the table.
std::map<int, std::int64_t> beta0_formula(const Complex& c);

// The i = 1 row of a tree's table, read off a good leaf order in closed
// form. Writing G_k for the facet at order position k and D_{b,u} for
// G_b ∖ G_u, position pair (b, u) with b < u contributes 1 at
// j = |D_{b,u}| + |G_u| exactly when D_{b,u} is inclusion-minimal among
// {D_{d,u} : d < u} and b is the first position achieving that set.
std::map<int, std::int64_t> beta1_formula(const Complex& c, const GoodLeafOrder& order);

}  // namespace facetforest
