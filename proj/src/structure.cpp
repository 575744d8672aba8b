#include "facetforest/structure.hpp"

#include <algorithm>
#include <numeric>

namespace facetforest {

std::vector<std::vector<int>> connected_components(const Complex& c) {
    int q = c.facet_count();
    std::vector<int> comp(q, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < q; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> group{s};
        comp[s] = static_cast<int>(out.size());
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < q; ++j) {
                if (comp[j] >= 0) continue;
                if (c.facet(i).vertices().intersects(c.facet(j).vertices())) {
                    comp[j] = comp[s];
                    group.push_back(j);
                    stack.push_back(j);
                }
            }
        }
        std::sort(group.begin(), group.end());
        out.push_back(std::move(group));
    }
    return out;
}

bool is_connected(const Complex& c) { return connected_components(c).size() == 1; }

std::optional<LeafCertificate> leaf_certificate(const Complex& c, int i) {
    if (i < 0 || i >= c.facet_count()) throw std::out_of_range("leaf_certificate: no facet F" + std::to_string(i));
    const VertexSet& fi = c.facet(i).vertices();
    VertexSet others = VertexSet::empty_set(c.universe());
    for (int j = 0; j < c.facet_count(); ++j)
        if (j != i) others = others | c.facet(j).vertices();
    VertexSet w = fi & others;
    LeafCertificate cert;
    cert.leaf = i;
    cert.free_vertices = fi - others;
    if (w.empty()) return cert;  // single or isolated facet: leaf, no joints
    for (int j = 0; j < c.facet_count(); ++j)
        if (j != i && c.facet(j).vertices().contains(w)) cert.joints.push_back(j);
    if (cert.joints.empty()) return std::nullopt;
    return cert;
}

bool is_good_leaf(const Complex& c, int i) {
    if (i < 0 || i >= c.facet_count()) throw std::out_of_range("is_good_leaf: no facet F" + std::to_string(i));
    const VertexSet& fi = c.facet(i).vertices();
    std::vector<VertexSet> ints;
    ints.reserve(c.facet_count() - 1);
    for (int j = 0; j < c.facet_count(); ++j)
        if (j != i) ints.push_back(fi & c.facet(j).vertices());
    std::sort(ints.begin(), ints.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
    for (std::size_t k = 0; k + 1 < ints.size(); ++k)
        if (!ints[k].contains(ints[k + 1])) return false;
    return true;
}

std::vector<int> good_leaves(const Complex& c) {
    std::vector<int> out;
    for (int i = 0; i < c.facet_count(); ++i)
        if (is_good_leaf(c, i)) out.push_back(i);
    return out;
}

namespace {

// Exhaustive search for a leafless subcollection of `c` restricted to the
// facets in `pool`, by increasing size. Sizes 1 and 2 always have a leaf.
std::vector<int> find_leafless_subcollection(const Complex& c, const std::vector<int>& pool) {
    int r = static_cast<int>(pool.size());
    std::vector<int> pick;
    for (int size = 3; size <= r; ++size) {
        pick.assign(size, 0);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<int> sub;
            sub.reserve(size);
            for (int p : pick) sub.push_back(pool[p]);
            Complex gamma = c.subcollection(sub);
            bool has_leaf = false;
            for (int k = 0; k < size && !has_leaf; ++k) has_leaf = leaf_certificate(gamma, k).has_value();
            if (!has_leaf) return sub;
            // next combination
            int k = size - 1;
            while (k >= 0 && pick[k] == r - size + k) --k;
            if (k < 0) break;
            ++pick[k];
            for (int m = k + 1; m < size; ++m) pick[m] = pick[m - 1] + 1;
        }
    }
    return {};
}

}  // namespace

ForestCertificate is_forest(const Complex& c) {
    ForestCertificate cert;
    std::vector<int> alive(c.facet_count());
    std::iota(alive.begin(), alive.end(), 0);
    while (!alive.empty()) {
        Complex residual = c.subcollection(alive);
        int found = -1;
        for (int k = 0; k < residual.facet_count(); ++k)
            if (is_good_leaf(residual, k)) {
                found = k;
                break;
            }
        if (found < 0) {
            cert.verdict = false;
            cert.witness = find_leafless_subcollection(c, alive);
            return cert;
        }
        cert.peel_order.push_back(alive[found]);
        alive.erase(alive.begin() + found);
    }
    cert.verdict = true;
    return cert;
}

bool is_forest_bruteforce(const Complex& c, int cap) {
    int q = c.facet_count();
    if (q > cap)
        throw std::invalid_argument("is_forest_bruteforce: " + std::to_string(q) + " facets exceeds cap " +
                                    std::to_string(cap));
    if (q == 0) return true;
    // unions[m] = union of the facets selected by mask m
    std::vector<VertexSet> unions(std::size_t{1} << q, VertexSet::empty_set(c.universe()));
    for (std::size_t m = 1; m < unions.size(); ++m) {
        int low = __builtin_ctzll(m);
        unions[m] = unions[m & (m - 1)] | c.facet(low).vertices();
    }
    for (std::size_t m = 1; m < unions.size(); ++m) {
        if ((m & (m - 1)) == 0) continue;  // singletons always have a leaf
        bool has_leaf = false;
        for (std::size_t rest = m; rest && !has_leaf; rest &= rest - 1) {
            int i = __builtin_ctzll(rest);
            VertexSet w = c.facet(i).vertices() & unions[m ^ (std::size_t{1} << i)];
            if (w.empty()) {
                has_leaf = true;  // isolated within the subcollection
                break;
            }
            for (std::size_t js = m ^ (std::size_t{1} << i); js; js &= js - 1) {
                int j = __builtin_ctzll(js);
                if (c.facet(j).vertices().contains(w)) {
                    has_leaf = true;
                    break;
                }
            }
        }
        if (!has_leaf) return false;
    }
    return true;
}

bool is_tree(const Complex& c) { return c.facet_count() > 0 && is_connected(c) && is_forest(c).verdict; }

Complex localize(const Complex& c, const Facet& f) {
    if (f.universe() != c.universe()) throw std::invalid_argument("localize: universe mismatch");
    std::vector<VertexSet> diffs;
    diffs.reserve(c.facet_count());
    for (const Facet& g : c.facets()) {
        VertexSet d = g.vertices() - f.vertices();
        if (!d.empty()) diffs.push_back(std::move(d));
    }
    std::vector<VertexSet> minimal = keep_inclusion_minimal(diffs);
    std::vector<Facet> facets;
    facets.reserve(minimal.size());
    for (VertexSet& s : minimal) facets.emplace_back(std::move(s));
    return Complex(c.universe(), std::move(facets));
}

std::vector<int> conn_component_indices(const Complex& c, int i) {
    if (i < 0 || i >= c.facet_count()) throw std::out_of_range("conn_component_indices: no facet F" + std::to_string(i));
    for (std::vector<int>& group : connected_components(c))
        if (std::find(group.begin(), group.end(), i) != group.end()) return std::move(group);
    return {};  // unreachable
}

Complex conn_component_of(const Complex& c, int i) { return c.subcollection(conn_component_indices(c, i)); }

Complex reduced_conn(const Complex& c, int i) {
    std::vector<int> group = conn_component_indices(c, i);
    group.erase(std::remove(group.begin(), group.end(), i), group.end());
    return localize(c.subcollection(group), c.facet(i));
}

}  // namespace facetforest
