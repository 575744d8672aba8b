#include "facetforest/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace facetforest {

namespace {

using BigInt = boost::multiprecision::cpp_int;

// One matrix column, entries sorted by row index. Coefficients are exact:
// boundary matrices start at ±1 but elimination can grow them.
using Column = std::vector<std::pair<int, BigInt>>;

// a*ca + b*cb, merged by row, zero entries dropped.
Column combine(const Column& a, const BigInt& ca, const Column& b, const BigInt& cb) {
    Column out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.emplace_back(a[i].first, a[i].second * ca);
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, b[j].second * cb);
            ++j;
        } else {
            BigInt v = a[i].second * ca + b[j].second * cb;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

// Exact rank by column reduction: each column is reduced against the stored
// pivot columns (pivot = largest remaining row) until it either dies or
// claims a fresh pivot row.
std::int64_t sparse_rank(std::vector<Column>&& cols) {
    std::unordered_map<int, int> pivot_for_row;
    std::vector<Column> reduced;
    std::int64_t rank = 0;
    for (Column& col : cols) {
        Column cur = std::move(col);
        while (!cur.empty()) {
            int row = cur.back().first;
            auto it = pivot_for_row.find(row);
            if (it == pivot_for_row.end()) {
                pivot_for_row.emplace(row, static_cast<int>(reduced.size()));
                reduced.push_back(std::move(cur));
                ++rank;
                break;
            }
            const Column& piv = reduced[it->second];
            const BigInt& pv = piv.back().second;
            const BigInt& cv = cur.back().second;
            BigInt g = boost::multiprecision::gcd(pv, cv);
            cur = combine(cur, pv / g, piv, -cv / g);
        }
    }
    return rank;
}

// Faces of the complex, bucketed by cardinality; bucket k holds the faces of
// k vertices, sorted. Only sizes up to `max_size` are produced.
std::vector<std::vector<std::uint64_t>> enumerate_faces(const std::vector<std::uint64_t>& maximal, int max_size) {
    int top = 0;
    for (std::uint64_t m : maximal) top = std::max(top, __builtin_popcountll(m));
    max_size = std::min(max_size, top);
    std::vector<std::vector<std::uint64_t>> faces(max_size + 1);
    faces[0].push_back(0);
    struct Item {
        int from;            // next bit position eligible for inclusion
        std::uint64_t mask;  // face built so far
        int size;
    };
    std::vector<int> bits;
    std::vector<Item> work;
    for (std::uint64_t m : maximal) {
        bits.clear();
        for (std::uint64_t w = m; w; w &= w - 1) bits.push_back(__builtin_ctzll(w));
        int n = static_cast<int>(bits.size());
        work.assign(1, {0, 0, 0});
        while (!work.empty()) {
            Item it = work.back();
            work.pop_back();
            for (int p = it.from; p < n; ++p) {
                std::uint64_t next = it.mask | (std::uint64_t{1} << bits[p]);
                faces[it.size + 1].push_back(next);
                if (it.size + 1 < max_size) work.push_back({p + 1, next, it.size + 1});
            }
        }
    }
    for (auto& bucket : faces) {
        std::sort(bucket.begin(), bucket.end());
        bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
    }
    return faces;
}

// Boundary matrix from faces of `size` down to faces of `size - 1`, one
// column per face, rows indexed into the smaller bucket.
std::vector<Column> boundary_columns(const std::vector<std::uint64_t>& faces_k,
                                     const std::vector<std::uint64_t>& faces_km1) {
    std::vector<Column> cols;
    cols.reserve(faces_k.size());
    for (std::uint64_t f : faces_k) {
        Column col;
        int sign = 1;
        for (std::uint64_t w = f; w; w &= w - 1) {
            std::uint64_t child = f ^ (w & ~(w - 1));
            auto it = std::lower_bound(faces_km1.begin(), faces_km1.end(), child);
            col.emplace_back(static_cast<int>(it - faces_km1.begin()), sign);
            sign = -sign;
        }
        std::sort(col.begin(), col.end());
        cols.push_back(std::move(col));
    }
    return cols;
}

}  // namespace

HomologyProfile reduced_homology_ranks_masks(const std::vector<std::uint64_t>& maximal_faces, int max_dim) {
    if (maximal_faces.empty()) return HomologyProfile();  // void complex
    if (max_dim < -1) return HomologyProfile();
    int cap = max_dim >= std::numeric_limits<int>::max() - 2 ? std::numeric_limits<int>::max() - 2 : max_dim;
    // H̃_d needs boundary ranks at d and d+1, hence faces of size up to d+2.
    long long want = static_cast<long long>(cap) + 2;
    int max_size = want > 64 ? 64 : static_cast<int>(want);
    std::vector<std::vector<std::uint64_t>> faces = enumerate_faces(maximal_faces, max_size);

    int top_size = static_cast<int>(faces.size()) - 1;  // largest face cardinality produced
    std::vector<std::int64_t> bd_rank(top_size + 2, 0);  // bd_rank[k] = rank of ∂ from size k to size k-1
    for (int k = 1; k <= top_size; ++k) bd_rank[k] = sparse_rank(boundary_columns(faces[k], faces[k - 1]));

    int stored_top = std::min<long long>(cap, static_cast<long long>(top_size) - 1);
    std::vector<std::int64_t> ranks;
    for (int d = -1; d <= stored_top; ++d) {
        std::int64_t n_d = static_cast<std::int64_t>(faces[d + 1].size());
        ranks.push_back(n_d - bd_rank[d + 1] - bd_rank[d + 2]);
    }
    return HomologyProfile(std::move(ranks));
}

HomologyProfile reduced_homology_ranks(const std::vector<VertexSet>& maximal_faces) {
    if (maximal_faces.empty()) return HomologyProfile();
    const UniversePtr& u = maximal_faces.front().universe();
    VertexSet support = VertexSet::empty_set(u);
    for (const VertexSet& f : maximal_faces) support = support | f;
    std::vector<int> verts = support.bits().to_indices();
    if (verts.size() > 64) throw std::invalid_argument("reduced_homology_ranks: more than 64 vertices in support");
    std::vector<int> slot(u->size(), -1);
    for (std::size_t k = 0; k < verts.size(); ++k) slot[verts[k]] = static_cast<int>(k);
    std::vector<std::uint64_t> masks;
    masks.reserve(maximal_faces.size());
    for (const VertexSet& f : maximal_faces) {
        std::uint64_t m = 0;
        f.bits().for_each_bit([&](int v) { m |= std::uint64_t{1} << slot[v]; });
        masks.push_back(m);
    }
    return reduced_homology_ranks_masks(masks);
}

}  // namespace facetforest
