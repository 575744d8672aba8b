#pragma once

#include <cstdint>
#include <vector>

#include "facetforest/betti_table.hpp"
#include "facetforest/complex.hpp"

namespace facetforest {

struct OracleOptions {
    // Refuse supports larger than this (hard limit 63). The oracle's work
    // grows with both the number of multidegrees and the faces per
    // multidegree, so this is the safety valve.
    int max_vertices = 20;
    // Spread multidegrees across OpenMP threads; results are merged in a
    // fixed order, so the table never depends on the thread count.
    bool parallel = true;
};

// Multigraded Betti numbers from first principles: for every candidate
// multidegree σ (a union of generator supports), β_{i,σ} is the rank of the
// (i-1)-st reduced homology of the simplicial complex whose faces are the
// subsets τ ⊆ σ with some generator outside τ; the table entry at (i, |σ|)
// accumulates those ranks. Exact integer arithmetic throughout.
//
// This is the fast path: per σ it decomposes the complex into connected
// pieces, discards pieces that are cones (contractible), and caps the
// computed homological dimensions by the number of generators inside σ.
BettiTable betti_oracle(const Complex& c, const OracleOptions& opts = {});

// Same table by the straight-line method: one plain loop over multidegrees,
// full homology profile of the whole complex each time, no decomposition, no
// cone pruning, no dimension cap. Kept as the reference the fast path is
// tested against; also the benchmark baseline.
BettiTable betti_oracle_serial(const Complex& c, const OracleOptions& opts = {});

// The candidate multidegrees: all unions of nonempty sets of generator
// supports, as masks over the support vertices (ascending vertex order),
// sorted. Exposed for tests and the benchmark.
std::vector<std::uint64_t> lcm_lattice_masks(const Complex& c, int max_vertices = 20);

// Maximal faces of the complex K^σ described above, as vertex sets over the
// complex's universe. Requires σ ⊆ the union of the facets. The void complex
// comes back as an empty list; the complex {∅} as a single empty set.
std::vector<VertexSet> upper_koszul_complex(const Complex& c, const VertexSet& sigma);

}  // namespace facetforest
