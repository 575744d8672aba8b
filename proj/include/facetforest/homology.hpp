#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "facetforest/complex.hpp"

namespace facetforest {

// Reduced homology ranks (over the rationals, computed exactly in integer
// arithmetic) indexed by dimension starting at -1.
class HomologyProfile {
public:
    HomologyProfile() = default;
    explicit HomologyProfile(std::vector<std::int64_t> ranks_from_dim_minus1)
        : ranks_(std::move(ranks_from_dim_minus1)) {}

    std::int64_t rank(int dim) const {
        int k = dim + 1;
        if (k < 0 || k >= static_cast<int>(ranks_.size())) return 0;
        return ranks_[k];
    }

    int max_dim() const { return static_cast<int>(ranks_.size()) - 2; }

    bool all_zero() const {
        for (std::int64_t r : ranks_)
            if (r) return false;
        return true;
    }

private:
    std::vector<std::int64_t> ranks_;  // ranks_[d + 1] = rank of H̃_d
};

// Ranks for the complex generated by the given maximal faces, as bit masks
// over at most 64 vertices. An empty list is the void complex (all ranks
// zero); the list {0} is the complex whose only face is empty (rank 1 in
// dimension -1). Dimensions above `max_dim` are not computed and report as
// zero; the default computes everything.
HomologyProfile reduced_homology_ranks_masks(const std::vector<std::uint64_t>& maximal_faces,
                                             int max_dim = std::numeric_limits<int>::max());

// Same on vertex sets; the union of the faces must have at most 64 vertices.
HomologyProfile reduced_homology_ranks(const std::vector<VertexSet>& maximal_faces);

}  // namespace facetforest
