#include "facetforest/splitting.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "facetforest/structure.hpp"

namespace facetforest {

std::vector<Facet> intersection_generators(const Complex& j, const Complex& k) {
    if (j.universe() != k.universe()) throw std::invalid_argument("intersection_generators: universe mismatch");
    std::vector<VertexSet> lcms;
    lcms.reserve(static_cast<std::size_t>(j.facet_count()) * k.facet_count());
    for (const Facet& a : j.facets())
        for (const Facet& b : k.facets()) lcms.push_back(a.vertices() | b.vertices());
    std::vector<VertexSet> minimal = keep_inclusion_minimal(lcms);
    std::sort(minimal.begin(), minimal.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return lex_greater(a, b);
    });
    std::vector<Facet> out;
    out.reserve(minimal.size());
    for (VertexSet& s : minimal) out.emplace_back(std::move(s));
    return out;
}

SplitResult split_by_good_leaf(const Complex& c, const GoodLeafOrder& order) {
    int q = c.facet_count();
    if (static_cast<int>(order.order.size()) != q) throw std::invalid_argument("split_by_good_leaf: order size mismatch");
    if (q == 0) throw SplitInapplicableError("split_by_good_leaf: empty complex");
    const VertexSet& fg = c.facet(order.order[0]).vertices();

    SplitResult res;
    res.t = 0;
    for (int pos = 1; pos < q; ++pos)
        if (fg.intersects(c.facet(order.order[pos]).vertices())) res.t = pos;
    if (res.t == q - 1)
        throw SplitInapplicableError("split_by_good_leaf: the good leaf meets every facet, nothing to split off");
    for (int pos = 0; pos <= res.t; ++pos) res.j_facets.push_back(order.order[pos]);
    for (int pos = res.t + 1; pos < q; ++pos) res.k_facets.push_back(order.order[pos]);

    Complex jc = c.subcollection(res.j_facets);
    Complex kc = c.subcollection(res.k_facets);
    res.gens = intersection_generators(jc, kc);

    for (const Facet& gen : res.gens) {
        int best_j = -1;
        std::vector<int> k_side;
        for (int a = 0; a < jc.facet_count(); ++a)
            for (int b = 0; b < kc.facet_count(); ++b) {
                if ((jc.facet(a).vertices() | kc.facet(b).vertices()) != gen.vertices()) continue;
                if (best_j < 0 || lex_greater(jc.facet(best_j).vertices(), jc.facet(a).vertices())) best_j = a;
                if (std::find(k_side.begin(), k_side.end(), b) == k_side.end()) k_side.push_back(b);
            }
        if (k_side.size() != 1) {
            std::string who;
            for (int b : k_side) who += (who.empty() ? "F" : ", F") + std::to_string(res.k_facets[b]);
            throw SplitError("split_by_good_leaf: generator " + gen.to_string() + " of the intersection has " +
                             std::to_string(k_side.size()) + " far-side witnesses {" + who + "}");
        }
        res.phi.push_back(res.j_facets[best_j]);
        res.psi.push_back(res.k_facets[k_side.front()]);
    }
    return res;
}

namespace {

bool proper_subset(const VertexSet& a, const VertexSet& b) { return b.contains(a) && a != b; }

// lcm(S), lcm(phi over S) and lcm(psi over S) for the subset of generator
// indices in `subset`.
SplittingCheck check_subset(const Complex& c, const SplitResult& split, const std::vector<int>& subset) {
    VertexSet lcm_s = VertexSet::empty_set(c.universe());
    VertexSet lcm_phi = lcm_s, lcm_psi = lcm_s;
    for (int w : subset) {
        lcm_s = lcm_s | split.gens[w].vertices();
        lcm_phi = lcm_phi | c.facet(split.phi[w]).vertices();
        lcm_psi = lcm_psi | c.facet(split.psi[w]).vertices();
    }
    SplittingCheck bad{false, "", subset};
    if (!proper_subset(lcm_phi, lcm_s)) {
        bad.clause = "(2)(b): lcm of the near-side images does not properly divide lcm(S)";
        return bad;
    }
    if (!proper_subset(lcm_psi, lcm_s)) {
        bad.clause = "(2)(b): lcm of the far-side images does not properly divide lcm(S)";
        return bad;
    }
    return SplittingCheck{};
}

}  // namespace

SplittingCheck verify_splitting(const Complex& c, const SplitResult& split, int subset_cap, int random_checks,
                                std::uint64_t seed) {
    int q = c.facet_count();
    // the two sides partition the facets
    {
        std::vector<bool> seen(q, false);
        bool valid = split.j_facets.size() + split.k_facets.size() == static_cast<std::size_t>(q) &&
                     !split.j_facets.empty() && !split.k_facets.empty();
        for (const std::vector<int>* side : {&split.j_facets, &split.k_facets})
            for (int i : *side) {
                if (i < 0 || i >= q || seen[i]) valid = false;
                if (valid) seen[i] = true;
            }
        if (!valid) return SplittingCheck{false, "J and K do not partition the facets", {}};
    }
    // recomputing the intersection generators must give the same set
    {
        std::vector<Facet> expect = intersection_generators(c.subcollection(split.j_facets), c.subcollection(split.k_facets));
        bool same = expect.size() == split.gens.size();
        for (std::size_t w = 0; same && w < expect.size(); ++w) same = expect[w] == split.gens[w];
        if (!same) return SplittingCheck{false, "gens is not the minimal generating set of the intersection", {}};
    }
    if (split.phi.size() != split.gens.size() || split.psi.size() != split.gens.size())
        return SplittingCheck{false, "phi/psi size mismatch", {}};

    int n = static_cast<int>(split.gens.size());
    for (int w = 0; w < n; ++w) {
        bool j_ok = std::find(split.j_facets.begin(), split.j_facets.end(), split.phi[w]) != split.j_facets.end();
        bool k_ok = std::find(split.k_facets.begin(), split.k_facets.end(), split.psi[w]) != split.k_facets.end();
        if (!j_ok || !k_ok) return SplittingCheck{false, "phi/psi image on the wrong side", {w}};
        VertexSet together = c.facet(split.phi[w]).vertices() | c.facet(split.psi[w]).vertices();
        if (together != split.gens[w].vertices())
            return SplittingCheck{false, "(2)(a): lcm(phi(L), psi(L)) differs from L", {w}};
    }

    // nonempty subsets: exhaustive up to subset_cap elements...
    std::vector<int> subset;
    std::vector<int> pick;
    for (int size = 1; size <= std::min(subset_cap, n); ++size) {
        pick.assign(size, 0);
        for (int k = 0; k < size; ++k) pick[k] = k;
        while (true) {
            SplittingCheck chk = check_subset(c, split, pick);
            if (!chk.ok) return chk;
            int k = size - 1;
            while (k >= 0 && pick[k] == n - size + k) --k;
            if (k < 0) break;
            ++pick[k];
            for (int m = k + 1; m < size; ++m) pick[m] = pick[m - 1] + 1;
        }
    }
    // ...then seeded random larger ones
    if (n > subset_cap) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> size_dist(subset_cap + 1, n);
        for (int trial = 0; trial < random_checks; ++trial) {
            int size = size_dist(rng);
            subset.resize(n);
            for (int k = 0; k < n; ++k) subset[k] = k;
            for (int k = 0; k < size; ++k) {
                std::uniform_int_distribution<int> d(k, n - 1);
                std::swap(subset[k], subset[d(rng)]);
            }
            subset.resize(size);
            std::sort(subset.begin(), subset.end());
            SplittingCheck chk = check_subset(c, split, subset);
            if (!chk.ok) return chk;
        }
    }
    return SplittingCheck{};
}

IdentityReport ek_betti_identity_check(const BettiTable& whole, const BettiTable& j_side, const BettiTable& k_side,
                                       const BettiTable& meet) {
    std::set<std::pair<int, int>> spots;
    for (const BettiTable* t : {&whole, &j_side, &k_side})
        for (const auto& [ij, v] : t->entries()) spots.insert(ij);
    for (const auto& [ij, v] : meet.entries()) spots.insert({ij.first + 1, ij.second});

    IdentityReport rep;
    // every spot has j >= 1, so meet.beta(i-1, j) never touches the
    // convention entry at (-1, 0)
    for (const auto& [i, j] : spots) {
        std::int64_t lhs = whole.beta(i, j);
        std::int64_t rhs = j_side.beta(i, j) + k_side.beta(i, j) + meet.beta(i - 1, j);
        ++rep.checked;
        if (lhs != rhs) {
            rep.ok = false;
            rep.mismatches.push_back({i, j, lhs, rhs});
        }
    }
    return rep;
}

BoundsReport partition_bounds(const Complex& c, const std::vector<std::vector<int>>& parts, const TableEngine& engine) {
    BoundsReport rep;
    auto fail = [&](const std::string& why) {
        rep.hypotheses_ok = false;
        rep.hypothesis_error = why;
        return rep;
    };
    if (c.empty()) return fail("empty complex");

    // consecutive intervals covering the facet list
    int next = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].empty()) return fail("part " + std::to_string(p) + " is empty");
        for (int i : parts[p]) {
            if (i != next) return fail("parts must be consecutive intervals of the facet list; part " +
                                       std::to_string(p) + " hits F" + std::to_string(i) + " where F" +
                                       std::to_string(next) + " was expected");
            ++next;
        }
    }
    if (next != c.facet_count()) return fail("parts do not cover all facets");

    for (std::size_t p = 0; p < parts.size(); ++p) {
        Complex part = c.subcollection(parts[p]);
        std::string tag = "part " + std::to_string(p);
        if (!is_tree(part)) return fail(tag + " is not a tree");
        if (!is_good_leaf(part, 0)) return fail(tag + ": its first facet F" + std::to_string(parts[p][0]) +
                                                " is not a good leaf of the part");
        const VertexSet& head = part.facet(0).vertices();
        for (int k = 1; k < part.facet_count(); ++k)
            if (!head.intersects(part.facet(k).vertices()))
                return fail(tag + ": head F" + std::to_string(parts[p][0]) + " misses F" +
                            std::to_string(parts[p][k]) + " of its own part");
        std::vector<int> identity(part.facet_count());
        for (int k = 0; k < part.facet_count(); ++k) identity[k] = k;
        if (!verify_good_leaf_order(part, identity).all_pass())
            return fail(tag + ": the given facet order is not a good leaf order of the part");
        // the head must be disjoint from every facet after its part
        int head_ix = parts[p][0];
        for (std::size_t p2 = p + 1; p2 < parts.size(); ++p2)
            for (int j : parts[p2])
                if (c.facet(head_ix).vertices().intersects(c.facet(j).vertices()))
                    return fail("head F" + std::to_string(head_ix) + " meets the later facet F" + std::to_string(j));
    }

    BettiTable whole = engine(c);
    std::vector<BettiTable> part_tables;
    part_tables.reserve(parts.size());
    for (const std::vector<int>& part : parts) part_tables.push_back(engine(c.subcollection(part)));

    std::set<std::pair<int, int>> spots;
    for (const BettiTable& t : part_tables)
        for (const auto& [ij, v] : t.entries()) spots.insert(ij);
    for (const auto& [i, j] : spots) {
        std::int64_t sum = 0;
        for (const BettiTable& t : part_tables) sum += t.beta(i, j);
        BoundsReport::Entry e{i, j, whole.beta(i, j), sum, whole.beta(i, j) >= sum};
        if (!e.ok) rep.entries_ok = false;
        rep.entries.push_back(e);
    }

    rep.projdim_whole = whole.projdim();
    rep.reg_whole = whole.reg_diagram();
    for (const BettiTable& t : part_tables) {
        rep.projdim_parts = std::max(rep.projdim_parts, t.projdim());
        rep.reg_parts = std::max(rep.reg_parts, t.reg_diagram());
    }
    rep.projdim_ok = rep.projdim_whole >= rep.projdim_parts;
    rep.reg_ok = rep.reg_whole >= rep.reg_parts;
    return rep;
}

}  // namespace facetforest
