#include <doctest.h>

#include <random>

#include "facetforest/betti_oracle.hpp"
#include "facetforest/betti_recursive.hpp"
#include "facetforest/complex.hpp"
#include "facetforest/generator.hpp"
#include "facetforest/good_leaf_order.hpp"
#include "facetforest/splitting.hpp"
#include "facetforest/structure.hpp"

using namespace facetforest;

namespace {
Complex I() { return parse_ideal("xyz, yzv, yu, vw, wt").complex; }

// Splitting the same object matters: every parse creates a fresh universe,
// and facets from different universes do not mix.
SplitResult split_of(const Complex& c) { return split_by_good_leaf(c, good_leaf_order(c, 0)); }
}  // namespace

TEST_CASE("split of the running example along its first good leaf") {
    Complex c = I();
    SplitResult s = split_of(c);
    CHECK(s.t == 2);
    CHECK(s.j_facets == std::vector<int>{0, 1, 2});
    CHECK(s.k_facets == std::vector<int>{3, 4});

    REQUIRE(s.gens.size() == 4);
    // degree then descending lex; rendering follows the universe order x,y,z,v,u,w,t
    CHECK(s.gens[0].to_string() == "yzvw");
    CHECK(s.gens[1].to_string() == "yvuw");
    CHECK(s.gens[2].to_string() == "yuwt");
    CHECK(s.gens[3].to_string() == "xyzwt");

    CHECK(s.phi == std::vector<int>{1, 2, 2, 0});
    CHECK(s.psi == std::vector<int>{3, 3, 4, 4});
}

TEST_CASE("the verifier accepts the genuine split and pins down corruptions") {
    Complex c = I();
    SplitResult s = split_of(c);
    CHECK(verify_splitting(c, s).ok);

    SplitResult bad_phi = s;
    bad_phi.phi[0] = 2;  // lcm(yu, vw) = yvuw, not yzvw
    SplittingCheck chk = verify_splitting(c, bad_phi);
    CHECK(!chk.ok);
    CHECK(chk.clause == "(2)(a): lcm(phi(L), psi(L)) differs from L");
    CHECK(chk.witness == std::vector<int>{0});

    SplitResult bad_parts = s;
    bad_parts.j_facets = {0, 1};
    SplittingCheck chk2 = verify_splitting(c, bad_parts);
    CHECK(!chk2.ok);
    CHECK(chk2.clause == "J and K do not partition the facets");
}

TEST_CASE("a leaf meeting every facet leaves nothing to split off") {
    Complex c = parse_ideal("xy, xz, xw").complex;
    GoodLeafOrder glo = good_leaf_order(c, 0);
    CHECK_THROWS_AS(split_by_good_leaf(c, glo), SplitInapplicableError);
}

TEST_CASE("intersection generators are minimal, sorted, deduplicated") {
    Complex c = I();
    std::vector<Facet> gens = intersection_generators(c.subcollection({0, 1, 2}), c.subcollection({3, 4}));
    REQUIRE(gens.size() == 4);
    CHECK(gens[0].to_string() == "yzvw");
    CHECK(gens[3].to_string() == "xyzwt");
    for (std::size_t a = 0; a + 1 < gens.size(); ++a)
        CHECK(gens[a].degree() <= gens[a + 1].degree());
}

TEST_CASE("Betti tables add up across the split") {
    Complex c = I();
    SplitResult s = split_of(c);
    BettiTable whole = betti_oracle(c);
    BettiTable tj = betti_oracle(c.subcollection(s.j_facets));
    BettiTable tk = betti_oracle(c.subcollection(s.k_facets));
    BettiTable tm = betti_oracle(Complex(c.universe(), s.gens));

    // the intersection ideal's generator degrees feed the identity's shift
    CHECK(tm.beta(0, 4) == 3);
    CHECK(tm.beta(0, 5) == 1);

    IdentityReport rep = ek_betti_identity_check(whole, tj, tk, tm);
    CHECK(rep.ok);
    CHECK(rep.checked >= 8);
    CHECK(rep.mismatches.empty());

    // explicit spot: β_{1,4}(whole) = 6 = 3 (J) + 0 (K) + 3 (meet at i=0)
    CHECK(whole.beta(1, 4) == 6);
    CHECK(tj.beta(1, 4) + tk.beta(1, 4) + tm.beta(0, 4) == 6);

    BettiTable corrupted = whole;
    corrupted.add(1, 4, 1);
    IdentityReport bad = ek_betti_identity_check(corrupted, tj, tk, tm);
    CHECK(!bad.ok);
    REQUIRE(bad.mismatches.size() == 1);
    CHECK(bad.mismatches[0].i == 1);
    CHECK(bad.mismatches[0].j == 4);
    CHECK(bad.mismatches[0].lhs == 7);
    CHECK(bad.mismatches[0].rhs == 6);
}

TEST_CASE("splits of random trees verify and satisfy the identity") {
    std::mt19937_64 rng(53);
    GenOptions opts;
    opts.max_facets = 6;
    opts.max_vertices = 11;
    int split_count = 0;
    for (int k = 0; k < 30 && split_count < 12; ++k) {
        Complex c = random_tree(rng, opts);
        GoodLeafOrder glo = good_leaf_order(c, good_leaves(c).front());
        SplitResult s;
        try {
            s = split_by_good_leaf(c, glo);
        } catch (const SplitInapplicableError&) {
            continue;
        }
        ++split_count;
        CHECK(verify_splitting(c, s).ok);
        BettiTable whole = betti_oracle(c);
        BettiTable tj = betti_oracle(c.subcollection(s.j_facets));
        BettiTable tk = betti_oracle(c.subcollection(s.k_facets));
        BettiTable tm = betti_oracle(Complex(c.universe(), s.gens));
        CHECK(ek_betti_identity_check(whole, tj, tk, tm).ok);
    }
    CHECK(split_count > 0);
}

TEST_CASE("partition bounds hold on the running example") {
    Complex c = I();
    TableEngine oracle = [](const Complex& x) { return betti_oracle(x); };
    BoundsReport rep = partition_bounds(c, {{0, 1, 2}, {3, 4}}, oracle);
    CHECK(rep.hypotheses_ok);
    CHECK(rep.ok());
    CHECK(rep.projdim_whole == 3);
    CHECK(rep.projdim_parts == 2);
    CHECK(rep.reg_whole == 3);
    CHECK(rep.reg_parts == 2);
    CHECK(!rep.entries.empty());
    for (const auto& e : rep.entries) CHECK(e.whole >= e.parts);

    // the recursive engine reaches the same verdict
    TableEngine recursive = [](const Complex& x) { return betti_hv(x); };
    BoundsReport rep2 = partition_bounds(c, {{0, 1, 2}, {3, 4}}, recursive);
    CHECK(rep2.ok());
    CHECK(rep2.entries.size() == rep.entries.size());
}

TEST_CASE("partition hypothesis violations are named") {
    Complex c = I();
    TableEngine oracle = [](const Complex& x) { return betti_oracle(x); };

    BoundsReport gap = partition_bounds(c, {{0, 2}, {1, 3, 4}}, oracle);
    CHECK(!gap.hypotheses_ok);
    CHECK(gap.hypothesis_error.find("consecutive intervals") != std::string::npos);

    BoundsReport meets = partition_bounds(c, {{0, 1}, {2, 3, 4}}, oracle);
    CHECK(!meets.hypotheses_ok);
    CHECK(meets.hypothesis_error == "head F0 meets the later facet F2");

    BoundsReport missing = partition_bounds(c, {{0, 1, 2}}, oracle);
    CHECK(!missing.hypotheses_ok);
    CHECK(missing.hypothesis_error == "parts do not cover all facets");
}
