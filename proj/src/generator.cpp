#include "facetforest/generator.hpp"

#include <algorithm>
#include <stdexcept>

#include "facetforest/structure.hpp"

namespace facetforest {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::vector<std::string> vertex_names(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (n <= 26)
            names.emplace_back(1, static_cast<char>('a' + i));
        else
            names.push_back("v" + std::to_string(i));
    }
    return names;
}

Complex build(const std::vector<std::vector<int>>& facets, int used) {
    UniversePtr u = Universe::make(vertex_names(used));
    std::vector<Facet> out;
    out.reserve(facets.size());
    for (const std::vector<int>& f : facets) {
        Bits b(used);
        for (int v : f) b.set(v);
        out.emplace_back(VertexSet(u, std::move(b)));
    }
    return Complex(std::move(u), std::move(out));
}

std::vector<std::vector<int>> grow(std::mt19937_64& rng, const GenOptions& opts) {
    int target = pick(rng, 1, opts.max_facets);
    int used = 0;
    std::vector<std::vector<int>> facets;
    auto fresh_run = [&](int count) {
        std::vector<int> f;
        for (int k = 0; k < count; ++k) f.push_back(used++);
        return f;
    };
    // first facet; a tree of several facets cannot carry a singleton
    int first_hi = std::min(opts.max_facet_size, opts.max_vertices);
    int first_lo = (opts.connected && target >= 2) ? std::min(2, first_hi) : 1;
    facets.push_back(fresh_run(pick(rng, first_lo, first_hi)));

    while (static_cast<int>(facets.size()) < target && used < opts.max_vertices) {
        std::vector<int> attachable;
        for (std::size_t i = 0; i < facets.size(); ++i)
            if (facets[i].size() >= 2) attachable.push_back(static_cast<int>(i));
        bool new_component = !opts.connected && (attachable.empty() || pick(rng, 0, 3) == 0);
        if (new_component) {
            int size = pick(rng, 1, std::min(opts.max_facet_size, opts.max_vertices - used));
            facets.push_back(fresh_run(size));
            continue;
        }
        if (attachable.empty()) break;
        const std::vector<int>& g = facets[attachable[pick(rng, 0, static_cast<int>(attachable.size()) - 1)]];
        std::vector<int> shuffled = g;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        int keep = pick(rng, 1, static_cast<int>(g.size()) - 1);
        std::vector<int> f(shuffled.begin(), shuffled.begin() + keep);
        std::sort(f.begin(), f.end());
        int room = std::min(opts.max_facet_size - keep, opts.max_vertices - used);
        if (room < 1) break;
        for (int v : fresh_run(pick(rng, 1, room))) f.push_back(v);
        facets.push_back(std::move(f));
    }
    return facets;
}

}  // namespace

Complex random_forest(std::mt19937_64& rng, const GenOptions& opts) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::vector<int>> facets = grow(rng, opts);
        int used = 0;
        for (const std::vector<int>& f : facets)
            for (int v : f) used = std::max(used, v + 1);
        Complex c = build(facets, used);
        if (is_forest_bruteforce(c)) return c;
    }
    throw std::logic_error("random_forest: leaf attachment kept producing non-forests");
}

Complex random_tree(std::mt19937_64& rng, const GenOptions& opts) {
    GenOptions o = opts;
    o.connected = true;
    return random_forest(rng, o);
}

Complex random_maybe_forest(std::mt19937_64& rng, const GenOptions& opts) {
    GenOptions base = opts;
    base.max_facets = std::max(1, opts.max_facets - 2);
    Complex c = random_forest(rng, base);
    int spoilers = pick(rng, 0, 2);
    for (int s = 0; s < spoilers; ++s) {
        int used = c.universe()->size();
        if (used < 2) break;
        for (int attempt = 0; attempt < 20; ++attempt) {
            int size = pick(rng, 2, std::min(opts.max_facet_size, used));
            std::vector<int> verts(used);
            for (int v = 0; v < used; ++v) verts[v] = v;
            std::shuffle(verts.begin(), verts.end(), rng);
            Bits b(used);
            for (int k = 0; k < size; ++k) b.set(verts[k]);
            VertexSet cand(c.universe(), std::move(b));
            bool comparable = false;
            for (const Facet& f : c.facets())
                if (f.vertices().contains(cand) || cand.contains(f.vertices())) {
                    comparable = true;
                    break;
                }
            if (comparable) continue;
            std::vector<Facet> facets = c.facets();
            facets.emplace_back(std::move(cand));
            c = Complex(c.universe(), std::move(facets));
            break;
        }
    }
    return c;
}

}  // namespace facetforest
