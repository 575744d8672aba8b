#pragma once

#include <optional>
#include <vector>

#include "facetforest/complex.hpp"

namespace facetforest {

// Leaf evidence for facet `leaf`: W = F_leaf ∩ (union of the other facets)
// is contained in every F_j listed in `joints`, and `free_vertices` are the
// vertices of F_leaf in no other facet. A facet whose W is empty (single or
// isolated facet) is a leaf with no joints.
struct LeafCertificate {
    int leaf = -1;
    std::vector<int> joints;
    VertexSet free_vertices;
};

struct ForestCertificate {
    bool verdict = false;
    // verdict true: a removal order, each entry a good leaf of what remains.
    std::vector<int> peel_order;
    // verdict false: facet indices of a subcollection without any leaf.
    std::vector<int> witness;
};

// Groups of facet indices (each ascending, groups by smallest member) whose
// facets are linked transitively by shared vertices.
std::vector<std::vector<int>> connected_components(const Complex& c);

bool is_connected(const Complex& c);

// std::nullopt when facet i is not a leaf.
std::optional<LeafCertificate> leaf_certificate(const Complex& c, int i);

// Good leaf: the intersections {F_i ∩ F_j : j ≠ i} form a chain under
// inclusion, which makes F_i a leaf of every subcollection containing it.
bool is_good_leaf(const Complex& c, int i);

std::vector<int> good_leaves(const Complex& c);

// Decides by peeling good leaves: a complex is a forest exactly when it is
// empty or has a good leaf whose removal leaves a forest. On failure the
// witness is found by exhaustive search over subcollections of the stuck
// residual, smallest first (exponential in the residual size, which is small
// in practice — the search only runs on non-forests).
ForestCertificate is_forest(const Complex& c);

// Checks the definition directly: every nonempty subset of facets has a leaf.
// Exponential; refuses more than `cap` facets.
bool is_forest_bruteforce(const Complex& c, int cap = 20);

bool is_tree(const Complex& c);

// Facet complex of {G ∖ f : G facet of c, G ∖ f nonempty}, kept
// inclusion-minimal (first occurrence wins on duplicates).
Complex localize(const Complex& c, const Facet& f);

// The connected component containing facet i, as a subcollection (ascending
// original indices).
Complex conn_component_of(const Complex& c, int i);
std::vector<int> conn_component_indices(const Complex& c, int i);

// Localization at F_i of the connected component of F_i with F_i removed:
// the piece of the complex that still talks to F_i, seen from F_i.
Complex reduced_conn(const Complex& c, int i);

}  // namespace facetforest
