#include "facetforest/betti_recursive.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "facetforest/structure.hpp"

namespace facetforest {

namespace {

struct Ctx {
    std::unordered_map<CanonicalKey, BettiTable> memo;
    RecursionStats* stats;

    void enter(int depth) {
        if (!stats) return;
        ++stats->nodes;
        stats->max_depth = std::max(stats->max_depth, depth);
    }
    void hit() {
        if (stats) ++stats->memo_hits;
    }
};

// entries of t plus the implicit (-1, 0): 1
template <typename Fn>
void for_each_extended(const BettiTable& t, Fn&& fn) {
    fn(-1, 0, std::int64_t{1});
    for (const auto& [ij, v] : t.entries()) fn(ij.first, ij.second, v);
}

BettiTable hv_rec(const Complex& c, Ctx& ctx, int depth) {
    ctx.enter(depth);
    if (c.empty()) return BettiTable::zero_ideal();
    CanonicalKey key = c.canonical_key();
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) {
        ctx.hit();
        return it->second;
    }

    int leaf = -1;
    for (int i = 0; i < c.facet_count() && leaf < 0; ++i)
        if (leaf_certificate(c, i)) leaf = i;
    if (leaf < 0) throw std::invalid_argument("betti_hv: complex has no leaf, so it is not a forest");

    std::vector<int> comp = conn_component_indices(c, leaf);
    std::vector<int> outside;
    for (int i = 0; i < c.facet_count(); ++i)
        if (std::find(comp.begin(), comp.end(), i) == comp.end()) outside.push_back(i);

    BettiTable ta = hv_rec(c.remove_facet(leaf), ctx, depth + 1);
    BettiTable tb = hv_rec(reduced_conn(c, leaf), ctx, depth + 1);
    BettiTable tc = hv_rec(c.subcollection(outside), ctx, depth + 1);

    BettiTable out = ta;
    int fsize = c.facet(leaf).degree();
    for_each_extended(tb, [&](int a, int b, std::int64_t vb) {
        for_each_extended(tc, [&](int a2, int b2, std::int64_t vc) {
            out.add(a + a2 + 2, b + b2 + fsize, vb * vc);
        });
    });
    ctx.memo.emplace(std::move(key), out);
    return out;
}

void check_permutation(const Complex& c, const std::vector<int>& order, const char* who) {
    if (static_cast<int>(order.size()) != c.facet_count())
        throw std::invalid_argument(std::string(who) + ": order size mismatch");
    std::vector<bool> seen(order.size(), false);
    for (int i : order) {
        if (i < 0 || i >= c.facet_count() || seen[i])
            throw std::invalid_argument(std::string(who) + ": order is not a permutation");
        seen[i] = true;
    }
}

bool last_facet_has_free_vertex(const Complex& c) {
    int last = c.facet_count() - 1;
    VertexSet others = VertexSet::empty_set(c.universe());
    for (int i = 0; i < last; ++i) others = others | c.facet(i).vertices();
    return !(c.facet(last).vertices() - others).empty();
}

// Strict-order recursion: facets of s are already in good leaf order.
BettiTable t_rec(const Complex& s, Ctx& ctx, int depth) {
    ctx.enter(depth);
    if (s.empty()) return BettiTable::zero_ideal();
    CanonicalKey key = s.canonical_key();
    if (auto it = ctx.memo.find(key); it != ctx.memo.end()) {
        ctx.hit();
        return it->second;
    }
    if (!is_forest(s).verdict) throw std::logic_error("betti_glo: recursion state is not a forest");
    if (!last_facet_has_free_vertex(s)) throw std::logic_error("betti_glo: recursion state's last facet has no free vertex");

    int last = s.facet_count() - 1;
    Complex before = s.remove_facet(last);
    BettiTable out = t_rec(before, ctx, depth + 1);
    out.add_shifted(t_rec(localize(before, s.facet(last)), ctx, depth + 1), 1, s.facet(last).degree());
    ctx.memo.emplace(std::move(key), out);
    return out;
}

}  // namespace

BettiTable betti_hv(const Complex& c, RecursionStats* stats) {
    Ctx ctx{{}, stats};
    return hv_rec(c, ctx, 1);
}

BettiTable betti_glo(const Complex& c, const GoodLeafOrder& order, RecursionStats* stats) {
    check_permutation(c, order.order, "betti_glo");
    if (c.empty()) return BettiTable::zero_ideal();
    Complex s = c.subcollection(order.order);
    if (order.strict) {
        Ctx ctx{{}, stats};
        return t_rec(s, ctx, 1);
    }
    Ctx ctx{{}, stats};
    BettiTable out;
    out.add(0, s.facet(0).degree(), 1);
    std::vector<int> prefix;
    for (int u = 1; u < s.facet_count(); ++u) {
        prefix.resize(u);
        std::iota(prefix.begin(), prefix.end(), 0);
        Complex loc = localize(s.subcollection(prefix), s.facet(u));
        out.add_shifted(hv_rec(loc, ctx, 1), 1, s.facet(u).degree());
    }
    return out;
}

LocalizationChain localization_chain(const Complex& c, const GoodLeafOrder& order, const std::vector<int>& us) {
    check_permutation(c, order.order, "localization_chain");
    LocalizationChain chain;
    Complex state = c.subcollection(order.order);
    for (int u : us) {
        if (u < 1 || u >= state.facet_count())
            throw std::out_of_range("localization_chain: position " + std::to_string(u) + " has no prefix to localize");
        std::vector<int> prefix(u);
        std::iota(prefix.begin(), prefix.end(), 0);
        Complex pre = state.subcollection(prefix);
        const Facet& at = state.facet(u);

        // localize by hand to keep track of where survivors came from
        std::vector<VertexSet> diffs;
        std::vector<int> from;
        for (int k = 0; k < pre.facet_count(); ++k) {
            VertexSet d = pre.facet(k).vertices() - at.vertices();
            if (!d.empty()) {
                diffs.push_back(std::move(d));
                from.push_back(k);
            }
        }
        ChainStep step;
        step.u = u;
        std::vector<Facet> kept;
        std::vector<VertexSet> minimal = keep_inclusion_minimal(diffs);
        for (const VertexSet& m : minimal) {
            for (std::size_t k = 0; k < diffs.size(); ++k)
                if (diffs[k] == m) {
                    step.origin.push_back(from[k]);
                    break;
                }
            kept.emplace_back(m);
        }
        step.state = Complex(c.universe(), std::move(kept));
        step.forest = is_forest(step.state).verdict;
        step.last_has_free_vertex = step.state.facet_count() > 0 && last_facet_has_free_vertex(step.state);
        state = step.state;
        chain.steps.push_back(std::move(step));
    }
    return chain;
}

std::map<int, std::int64_t> beta0_formula(const Complex& c) {
    std::map<int, std::int64_t> out;
    for (const Facet& f : c.facets()) ++out[f.degree()];
    return out;
}

std::map<int, std::int64_t> beta1_formula(const Complex& c, const GoodLeafOrder& order) {
    check_permutation(c, order.order, "beta1_formula");
    int q = c.facet_count();
    std::vector<const VertexSet*> g(q);
    for (int k = 0; k < q; ++k) g[k] = &c.facet(order.order[k]).vertices();

    std::map<int, std::int64_t> out;
    for (int u = 1; u < q; ++u) {
        std::vector<VertexSet> d;
        d.reserve(u);
        for (int b = 0; b < u; ++b) d.push_back(*g[b] - *g[u]);
        for (int b = 0; b < u; ++b) {
            bool counted = true;
            for (int e = 0; e < u && counted; ++e) {
                if (e == b) continue;
                bool subset = d[b].contains(d[e]);  // d[e] ⊆ d[b]
                if (subset && d[e] != d[b]) counted = false;          // not inclusion-minimal
                if (d[e] == d[b] && e < b) counted = false;           // a copy appeared earlier
            }
            if (counted) ++out[d[b].size() + g[u]->size()];
        }
    }
    return out;
}

}  // namespace facetforest
