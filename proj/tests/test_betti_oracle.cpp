#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "facetforest/betti_oracle.hpp"
#include "facetforest/betti_table.hpp"
#include "facetforest/complex.hpp"
#include "facetforest/generator.hpp"
#include "facetforest/homology.hpp"

using namespace facetforest;

namespace {
Complex I() { return parse_ideal("xyz, yzv, yu, vw, wt").complex; }

BettiTable table_of(std::initializer_list<std::tuple<int, int, std::int64_t>> cells) {
    BettiTable t;
    for (auto [i, j, v] : cells) t.add(i, j, v);
    return t;
}
}  // namespace

TEST_CASE("homology rank conventions") {
    CHECK(reduced_homology_ranks_masks({}).all_zero());  // void complex

    HomologyProfile empty_face = reduced_homology_ranks_masks({0});  // the complex {∅}
    CHECK(empty_face.rank(-1) == 1);
    CHECK(empty_face.rank(0) == 0);

    // two isolated vertices
    HomologyProfile two_points = reduced_homology_ranks_masks({0b01, 0b10});
    CHECK(two_points.rank(-1) == 0);
    CHECK(two_points.rank(0) == 1);

    // hollow triangle: a 1-cycle
    HomologyProfile triangle = reduced_homology_ranks_masks({0b011, 0b101, 0b110});
    CHECK(triangle.rank(0) == 0);
    CHECK(triangle.rank(1) == 1);

    // filled triangle: contractible
    CHECK(reduced_homology_ranks_masks({0b111}).all_zero());

    // hollow tetrahedron boundary: a 2-sphere
    HomologyProfile sphere = reduced_homology_ranks_masks({0b0111, 0b1011, 0b1101, 0b1110});
    CHECK(sphere.rank(1) == 0);
    CHECK(sphere.rank(2) == 1);

    // the dimension cap suppresses ranks above it
    CHECK(reduced_homology_ranks_masks({0b0111, 0b1011, 0b1101, 0b1110}, 1).all_zero());
}

TEST_CASE("upper Koszul complexes at informative multidegrees") {
    Complex c = parse_ideal("vw, wt").complex;
    VertexSet sigma = c.vertex_support();  // {v,w,t}
    std::vector<VertexSet> faces = upper_koszul_complex(c, sigma);
    // complements of the generators inside σ: {t} and {v} — two isolated points
    REQUIRE(faces.size() == 2);
    CHECK(faces[0].to_string() == "t");
    CHECK(faces[1].to_string() == "v");
    CHECK(reduced_homology_ranks(faces).rank(0) == 1);  // hence β_{1,vwt} = 1

    // σ = one generator's support exactly: the only face is ∅
    std::vector<VertexSet> at_gen = upper_koszul_complex(c, c.facet(0).vertices());
    REQUIRE(at_gen.size() == 1);
    CHECK(at_gen[0].empty());

    // σ containing no generator: the void complex
    auto u = c.universe();
    std::vector<VertexSet> none = upper_koszul_complex(c, VertexSet::of(u, {"v", "t"}));
    CHECK(none.empty());
}

TEST_CASE("lcm lattice of the running example") {
    Complex c = I();
    std::vector<std::uint64_t> lattice = lcm_lattice_masks(c);
    CHECK(lattice.size() == 23);  // 2^5 - 1 = 31 subsets collapse to 23 distinct unions
    CHECK(std::is_sorted(lattice.begin(), lattice.end()));
    // every generator support is present
    for (int i = 0; i < c.facet_count(); ++i) {
        std::uint64_t mask = 0;
        for (int v = 0; v < c.universe()->size(); ++v)
            if (c.facet(i).vertices().contains(v)) mask |= 1ull << v;
        CHECK(std::find(lattice.begin(), lattice.end(), mask) != lattice.end());
    }
}

TEST_CASE("oracle reproduces the worked example table") {
    BettiTable t = betti_oracle(I());
    BettiTable expected = table_of({{0, 2, 3}, {0, 3, 2}, {1, 3, 1}, {1, 4, 6}, {1, 5, 1},
                                    {2, 5, 3}, {2, 6, 2}, {3, 7, 1}});
    CHECK(t == expected);
    CHECK(t.projdim() == 3);
    CHECK(t.reg_diagram() == 3);
    CHECK(t.reg_literal() == 4);
}

TEST_CASE("oracle on the two sides of the worked split") {
    BettiTable tj = betti_oracle(parse_ideal("xyz, yzv, yu").complex);
    CHECK(tj == table_of({{0, 2, 1}, {0, 3, 2}, {1, 4, 3}, {2, 5, 1}}));

    BettiTable tk = betti_oracle(parse_ideal("vw, wt").complex);
    CHECK(tk == table_of({{0, 2, 2}, {1, 3, 1}}));
}

TEST_CASE("row zero is the generator degree histogram") {
    Complex c = parse_ideal("abc, cd, de, ef, fg").complex;
    BettiTable t = betti_oracle(c);
    CHECK(t.beta(0, 2) == 4);
    CHECK(t.beta(0, 3) == 1);
}

TEST_CASE("the table does not depend on generator order") {
    Complex c = I();
    std::vector<int> perm(c.facet_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(3);
    BettiTable reference = betti_oracle(c);
    for (int k = 0; k < 5; ++k) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(betti_oracle(c.subcollection(perm)) == reference);
    }
}

TEST_CASE("pruned oracle agrees with the naive serial reference") {
    std::mt19937_64 rng(31);
    GenOptions opts;
    opts.max_facets = 6;
    opts.max_vertices = 11;
    for (int k = 0; k < 25; ++k) {
        // arbitrary complexes, not only forests: the oracle sees any ideal
        Complex c = random_maybe_forest(rng, opts);
        BettiTable fast = betti_oracle(c);
        BettiTable slow = betti_oracle_serial(c);
        CHECK(fast == slow);
    }
}

TEST_CASE("parallel flag cannot change the table") {
    std::mt19937_64 rng(37);
    GenOptions opts;
    opts.max_facets = 6;
    OracleOptions par, ser;
    ser.parallel = false;
    for (int k = 0; k < 10; ++k) {
        Complex c = random_forest(rng, opts);
        CHECK(betti_oracle(c, par) == betti_oracle(c, ser));
    }
}

TEST_CASE("vertex cap is enforced") {
    Complex c = I();
    OracleOptions tight;
    tight.max_vertices = 5;
    CHECK_THROWS_AS(betti_oracle(c, tight), std::invalid_argument);
    OracleOptions over;
    over.max_vertices = 64;
    CHECK_THROWS_AS(betti_oracle(c, over), std::invalid_argument);
}

TEST_CASE("single generator has the one-entry table") {
    BettiTable t = betti_oracle(parse_ideal("abc").complex);
    CHECK(t == table_of({{0, 3, 1}}));
}
