#pragma once

#include <random>

#include "facetforest/complex.hpp"

namespace facetforest {

struct GenOptions {
    int max_facets = 8;
    int max_vertices = 14;
    int max_facet_size = 4;
    bool connected = false;  // grow one tree instead of a forest
};

// Random simplicial forest grown by leaf attachment: every new facet glues a
// proper nonempty subset of an existing facet to at least one fresh vertex,
// or starts a new component. Growth only guarantees a leaf order, so results
// are filtered through is_forest_bruteforce and regrown when they fail.
// Universe vertices are exactly the used ones, in order of first use.
Complex random_forest(std::mt19937_64& rng, const GenOptions& opts = {});

// random_forest with connected = true.
Complex random_tree(std::mt19937_64& rng, const GenOptions& opts = {});

// A complex that may or may not be a forest: a smaller random forest,
// usually spoiled by extra facets over the vertices already in play.
Complex random_maybe_forest(std::mt19937_64& rng, const GenOptions& opts = {});

}  // namespace facetforest
