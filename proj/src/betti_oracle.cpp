#include "facetforest/betti_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "facetforest/homology.hpp"

namespace facetforest {

namespace {

struct CompactIdeal {
    std::vector<int> verts;            // original vertex index per slot
    std::vector<std::uint64_t> gens;   // generator supports in slot space
};

CompactIdeal compact(const Complex& c, int max_vertices) {
    if (max_vertices > 63) throw std::invalid_argument("betti_oracle: vertex cap above the 63 supported");
    VertexSet support = c.vertex_support();
    CompactIdeal out;
    out.verts = support.bits().to_indices();
    if (static_cast<int>(out.verts.size()) > max_vertices)
        throw std::invalid_argument("betti_oracle: " + std::to_string(out.verts.size()) +
                                    " support vertices exceed the cap of " + std::to_string(max_vertices));
    std::vector<int> slot(c.universe() ? c.universe()->size() : 0, -1);
    for (std::size_t k = 0; k < out.verts.size(); ++k) slot[out.verts[k]] = static_cast<int>(k);
    for (const Facet& f : c.facets()) {
        std::uint64_t m = 0;
        f.vertices().bits().for_each_bit([&](int v) { m |= std::uint64_t{1} << slot[v]; });
        out.gens.push_back(m);
    }
    return out;
}

std::vector<std::uint64_t> lattice_of(const std::vector<std::uint64_t>& gens) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> queue;
    for (std::uint64_t g : gens)
        if (seen.insert(g).second) queue.push_back(g);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint64_t m = queue[head];
        for (std::uint64_t g : gens) {
            std::uint64_t u = m | g;
            if (seen.insert(u).second) queue.push_back(u);
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

std::vector<std::uint64_t> koszul_maximal_faces(const std::vector<std::uint64_t>& gens, std::uint64_t sigma) {
    std::vector<std::uint64_t> maximal;
    for (std::uint64_t g : gens)
        if ((g & ~sigma) == 0) maximal.push_back(sigma & ~g);
    // generators are pairwise incomparable, so the complements already are too
    return maximal;
}

// Reduced homology ranks of ⟨maximal⟩ for dimensions -1..max_dim, summed over
// connected pieces. A piece all of whose faces share a vertex is a cone and
// contributes nothing; dimension 0 additionally counts the splits between
// pieces.
std::vector<std::int64_t> pruned_ranks(const std::vector<std::uint64_t>& maximal, int max_dim) {
    std::vector<std::int64_t> ranks(max_dim + 2, 0);  // ranks[d + 1] = rank of H̃_d
    if (maximal.empty() || max_dim < -1) return ranks;
    if (maximal.size() == 1 && maximal[0] == 0) {
        ranks[0] = 1;  // the complex {∅}
        return ranks;
    }
    // group the maximal faces into vertex-sharing pieces
    std::vector<int> piece(maximal.size(), -1);
    int npieces = 0;
    for (std::size_t s = 0; s < maximal.size(); ++s) {
        if (piece[s] >= 0) continue;
        piece[s] = npieces;
        std::uint64_t grown = maximal[s];
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t t = 0; t < maximal.size(); ++t)
                if (piece[t] < 0 && (maximal[t] & grown)) {
                    piece[t] = npieces;
                    grown |= maximal[t];
                    again = true;
                }
        }
        ++npieces;
    }
    if (max_dim >= 0) ranks[1] += npieces - 1;
    for (int p = 0; p < npieces; ++p) {
        std::vector<std::uint64_t> part;
        std::uint64_t common = ~std::uint64_t{0};
        for (std::size_t s = 0; s < maximal.size(); ++s)
            if (piece[s] == p) {
                part.push_back(maximal[s]);
                common &= maximal[s];
            }
        if (common != 0 || part.size() == 1) continue;  // cone or simplex: contractible
        HomologyProfile prof = reduced_homology_ranks_masks(part, max_dim);
        for (int d = 0; d <= max_dim; ++d) ranks[d + 1] += prof.rank(d);
    }
    return ranks;
}

std::vector<std::int64_t> full_ranks(const std::vector<std::uint64_t>& maximal) {
    HomologyProfile prof = reduced_homology_ranks_masks(maximal);
    std::vector<std::int64_t> ranks(std::max(prof.max_dim(), -1) + 2, 0);
    for (int d = -1; d <= prof.max_dim(); ++d) ranks[d + 1] = prof.rank(d);
    return ranks;
}

BettiTable accumulate(const std::vector<std::uint64_t>& sigmas,
                      const std::vector<std::vector<std::int64_t>>& ranks_by_sigma) {
    BettiTable table;
    for (std::size_t s = 0; s < sigmas.size(); ++s) {
        int j = __builtin_popcountll(sigmas[s]);
        const std::vector<std::int64_t>& ranks = ranks_by_sigma[s];
        // β_{i,σ} = rank of H̃_{i-1}
        for (int k = 0; k < static_cast<int>(ranks.size()); ++k)
            if (ranks[k]) table.add(k, j, ranks[k]);
    }
    return table;
}

}  // namespace

BettiTable betti_oracle(const Complex& c, const OracleOptions& opts) {
    if (c.empty()) return BettiTable::zero_ideal();
    CompactIdeal ci = compact(c, opts.max_vertices);
    std::vector<std::uint64_t> sigmas = lattice_of(ci.gens);
    std::vector<std::vector<std::int64_t>> ranks(sigmas.size());
    long long n = static_cast<long long>(sigmas.size());
    if (opts.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long s = 0; s < n; ++s) {
            std::vector<std::uint64_t> maximal = koszul_maximal_faces(ci.gens, sigmas[s]);
            ranks[s] = pruned_ranks(maximal, static_cast<int>(maximal.size()) - 2);
        }
    } else {
        for (long long s = 0; s < n; ++s) {
            std::vector<std::uint64_t> maximal = koszul_maximal_faces(ci.gens, sigmas[s]);
            ranks[s] = pruned_ranks(maximal, static_cast<int>(maximal.size()) - 2);
        }
    }
    return accumulate(sigmas, ranks);
}

BettiTable betti_oracle_serial(const Complex& c, const OracleOptions& opts) {
    if (c.empty()) return BettiTable::zero_ideal();
    CompactIdeal ci = compact(c, opts.max_vertices);
    std::vector<std::uint64_t> sigmas = lattice_of(ci.gens);
    std::vector<std::vector<std::int64_t>> ranks(sigmas.size());
    for (std::size_t s = 0; s < sigmas.size(); ++s)
        ranks[s] = full_ranks(koszul_maximal_faces(ci.gens, sigmas[s]));
    return accumulate(sigmas, ranks);
}

std::vector<std::uint64_t> lcm_lattice_masks(const Complex& c, int max_vertices) {
    if (c.empty()) return {};
    return lattice_of(compact(c, max_vertices).gens);
}

std::vector<VertexSet> upper_koszul_complex(const Complex& c, const VertexSet& sigma) {
    if (sigma.universe() != c.universe()) throw std::invalid_argument("upper_koszul_complex: universe mismatch");
    if (!c.vertex_support().contains(sigma))
        throw std::invalid_argument("upper_koszul_complex: sigma is not inside the union of the facets");
    std::vector<VertexSet> out;
    for (const Facet& f : c.facets())
        if (sigma.contains(f.vertices())) out.push_back(sigma - f.vertices());
    return out;
}

}  // namespace facetforest
