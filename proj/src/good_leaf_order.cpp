#include "facetforest/good_leaf_order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "facetforest/structure.hpp"

namespace facetforest {

int find_leaf_in_block(const Complex& c, int prefix_end, const std::vector<int>& block) {
    if (prefix_end < 0 || prefix_end >= c.facet_count())
        throw std::out_of_range("find_leaf_in_block: prefix end " + std::to_string(prefix_end) + " out of range");
    std::vector<int> prefix(prefix_end + 1);
    std::iota(prefix.begin(), prefix.end(), 0);
    Complex gamma = c.subcollection(prefix);
    std::vector<int> sorted = block;
    std::sort(sorted.begin(), sorted.end());
    for (int i : sorted) {
        if (i < 0 || i > prefix_end)
            throw std::out_of_range("find_leaf_in_block: block member " + std::to_string(i) + " outside prefix");
        if (leaf_certificate(gamma, i)) return i;
    }
    throw std::runtime_error("find_leaf_in_block: no block member is a leaf of the prefix");
}

GoodLeafOrder good_leaf_order(const Complex& c, int g) {
    int q = c.facet_count();
    if (g < 0 || g >= q) throw std::out_of_range("good_leaf_order: no facet F" + std::to_string(g));
    if (!is_tree(c)) throw std::invalid_argument("good_leaf_order: complex is not a tree");
    if (!is_good_leaf(c, g)) throw std::invalid_argument("good_leaf_order: F" + std::to_string(g) + " is not a good leaf");

    const VertexSet& fg = c.facet(g).vertices();
    std::vector<int> others;
    for (int i = 0; i < q; ++i)
        if (i != g) others.push_back(i);
    std::stable_sort(others.begin(), others.end(), [&](int a, int b) {
        return (fg & c.facet(a).vertices()).size() > (fg & c.facet(b).vertices()).size();
    });

    GoodLeafOrder glo;
    glo.order.assign(q, -1);
    glo.order[0] = g;
    glo.chain.assign(q, VertexSet::empty_set(c.universe()));
    glo.chain[0] = fg;
    glo.joints.assign(q, -1);

    // Process each run of equal chain intersections; within a run the order
    // is fixed back-to-front by leaf extraction from the shrinking prefix.
    std::size_t lo = 0;
    while (lo < others.size()) {
        VertexSet common = fg & c.facet(others[lo]).vertices();
        std::size_t hi = lo;
        while (hi + 1 < others.size()) {
            VertexSet next = fg & c.facet(others[hi + 1]).vertices();
            if (next.size() != common.size()) break;
            if (next != common)
                throw std::logic_error("good_leaf_order: equal-size intersections differ; chain property broken");
            ++hi;
        }
        std::vector<int> remaining(others.begin() + lo, others.begin() + hi + 1);  // ascending original index
        for (std::size_t pos = hi + 1; pos >= lo + 1; --pos) {
            // prefix facets placed before this run, then the remaining run members
            std::vector<int> working(glo.order.begin(), glo.order.begin() + lo + 1);
            working.insert(working.end(), remaining.begin(), remaining.end());
            Complex gamma = c.subcollection(working);
            std::vector<int> block_positions;
            for (std::size_t k = 0; k < remaining.size(); ++k)
                block_positions.push_back(static_cast<int>(lo + 1 + k));
            int leaf_pos = find_leaf_in_block(gamma, gamma.facet_count() - 1, block_positions);
            int chosen = working[leaf_pos];
            glo.order[pos] = chosen;
            glo.chain[pos] = fg & c.facet(chosen).vertices();
            auto cert = leaf_certificate(gamma, leaf_pos);
            if (!cert) throw std::logic_error("good_leaf_order: extracted facet lost its leaf certificate");
            if (!cert->joints.empty()) glo.joints[pos] = working[cert->joints.front()];
            remaining.erase(std::find(remaining.begin(), remaining.end(), chosen));
        }
        lo = hi + 1;
    }

    glo.strict = true;
    for (std::size_t k = 1; k + 1 < glo.chain.size(); ++k)
        if (!(glo.chain[k].contains(glo.chain[k + 1]) && glo.chain[k] != glo.chain[k + 1])) {
            glo.strict = false;
            break;
        }

    OrderReport report = verify_good_leaf_order(c, glo.order);
    if (!report.all_pass()) throw std::logic_error("good_leaf_order: constructed order fails verification");
    return glo;
}

namespace {

std::vector<int> prefix_indices(const std::vector<int>& order, int k) {
    return std::vector<int>(order.begin(), order.begin() + k + 1);
}

// Joints of the facet at position `pos_in_prefix` within the prefix complex,
// reported as positions in `order`.
std::vector<int> joints_at(const Complex& c, const std::vector<int>& order, int prefix_len, int pos_in_prefix) {
    Complex gamma = c.subcollection(prefix_indices(order, prefix_len - 1));
    auto cert = leaf_certificate(gamma, pos_in_prefix);
    if (!cert) return {};
    return cert->joints;
}

}  // namespace

OrderReport verify_good_leaf_order(const Complex& c, const std::vector<int>& order) {
    int q = c.facet_count();
    if (static_cast<int>(order.size()) != q) throw std::invalid_argument("verify_good_leaf_order: order size mismatch");
    std::vector<bool> seen(q, false);
    for (int i : order) {
        if (i < 0 || i >= q || seen[i]) throw std::invalid_argument("verify_good_leaf_order: order is not a permutation");
        seen[i] = true;
    }

    OrderReport rep;
    if (q == 0) return rep;
    const VertexSet& fg = c.facet(order[0]).vertices();

    for (int k = 1; k + 1 < q; ++k) {
        VertexSet a = fg & c.facet(order[k]).vertices();
        VertexSet b = fg & c.facet(order[k + 1]).vertices();
        if (!a.contains(b)) {
            rep.chain_descending = {false, k + 1};
            break;
        }
    }

    for (int k = 0; k < q; ++k) {
        Complex gamma = c.subcollection(prefix_indices(order, k));
        if (!leaf_certificate(gamma, k)) {
            rep.leaf_of_prefix = {false, k};
            break;
        }
    }

    for (int k = 1; k < q; ++k) {
        // previous facet keeps one of its joints across the prefix step...
        std::vector<int> before = joints_at(c, order, k, k - 1);
        std::vector<int> after = joints_at(c, order, k + 1, k - 1);
        bool carried = false;
        for (int j : before)
            if (std::find(after.begin(), after.end(), j) != after.end()) carried = true;
        // ...or is itself the unique joint of the new facet
        std::vector<int> of_new = joints_at(c, order, k + 1, k);
        bool unique_joint = of_new.size() == 1 && of_new[0] == k - 1;
        if (!carried && !unique_joint) {
            rep.joint_continuity = {false, k};
            break;
        }
    }

    for (int k = 0; k < q; ++k) {
        if (!is_connected(c.subcollection(prefix_indices(order, k)))) {
            rep.prefix_connected = {false, k};
            break;
        }
    }
    return rep;
}

}  // namespace facetforest
