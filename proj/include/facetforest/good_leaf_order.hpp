#pragma once

#include <vector>

#include "facetforest/complex.hpp"

namespace facetforest {

// An ordering F_{o0}, F_{o1}, ..., F_{oq} of a tree's facets such that
//   (1) the intersections F_{o0} ∩ F_{ok} descend along a chain,
//   (2) each F_{ok} is a leaf of the prefix complex ⟨F_{o0},...,F_{ok}⟩,
//   (3) consecutive facets hand over a joint (see verify_good_leaf_order),
//   (4) every prefix complex is connected.
struct GoodLeafOrder {
    std::vector<int> order;        // order[0] is the good leaf it starts from
    std::vector<VertexSet> chain;  // chain[k] = F_{o0} ∩ F_{ok}; chain[0] = F_{o0}
    std::vector<int> joints;       // joints[k]: a joint of F_{ok} in the prefix at k; joints[0] = -1
    bool strict = false;           // every containment chain[k] ⊋ chain[k+1] strict (k >= 1)
};

struct PropertyCheck {
    bool pass = true;
    int position = -1;  // first order position where the property fails
};

struct OrderReport {
    PropertyCheck chain_descending;   // (1)
    PropertyCheck leaf_of_prefix;     // (2)
    PropertyCheck joint_continuity;   // (3)
    PropertyCheck prefix_connected;   // (4)

    bool all_pass() const {
        return chain_descending.pass && leaf_of_prefix.pass && joint_continuity.pass && prefix_connected.pass;
    }
};

// Smallest index in `block` whose facet is a leaf of the prefix complex
// ⟨facets 0..prefix_end of c⟩. Throws when no block member is a leaf.
int find_leaf_in_block(const Complex& c, int prefix_end, const std::vector<int>& block);

// Builds a good leaf order of the tree `c` starting from the good leaf g:
// the other facets are sorted by descending intersection with F_g, and each
// run of equal intersections is ordered by repeatedly extracting a leaf of
// the remaining prefix and placing it at the back of the run.
GoodLeafOrder good_leaf_order(const Complex& c, int g);

// Checks properties (1)-(4) independently of the construction. `order` must
// be a permutation of the facet indices. Property (3) at position k: either
// some joint of F_{o(k-1)} in the previous prefix is still one of its joints
// in the current prefix, or F_{o(k-1)} is the unique joint of F_{ok} there.
OrderReport verify_good_leaf_order(const Complex& c, const std::vector<int>& order);

}  // namespace facetforest
