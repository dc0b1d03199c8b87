#include <doctest.h>

#include <random>

#include "saito/analysis.hpp"
#include "saito/curves.hpp"
#include "test_util.hpp"

using namespace saito;

TEST_SUITE_BEGIN("saito-analysis");

TEST_CASE("saito numbers") {
    const NumberedTree dc = builtin_family("double_cusp", {});
    CHECK(saito_number(dc.tree, dc.numbering) == 2);

    const NumberedTree cusp = tree_from_char_exponents(2, {3});
    CHECK(saito_number(cusp.tree, cusp.numbering) == 1);

    for (i64 r = 2; r <= 10; r += 2) {
        const NumberedTree rc = builtin_family("r_cusps", {r});
        CHECK(saito_number(rc.tree, rc.numbering) == r);
    }
}

TEST_CASE("valuation profile of the double cusp") {
    const NumberedTree dc = builtin_family("double_cusp", {});
    const SaitoProfile profile = saito_valuation_profile(dc.tree, dc.numbering);
    CHECK(profile.saito_number == 2);
    CHECK(profile.per_vertex == std::vector<i64>({2, 1, 1, 1, 1}));
    CHECK(profile.dicriticity == Dicriticity({1, 1, 1, 0, 0}));
    CHECK(profile.epsilon == Configuration({1, 1, 1, 0, 0}));
}

TEST_CASE("upper bounds") {
    const NumberedTree rc = builtin_family("r_cusps", {4});
    CHECK(saito_number(rc.tree, rc.numbering) == 4);
    CHECK(check_upper_bound(rc.tree, rc.numbering, 4));  // 4 <= floor(8/2)

    const NumberedTree dc = builtin_family("double_cusp", {});
    CHECK(check_upper_bound(dc.tree, dc.numbering, 2));

    const NumberedTree cusp = builtin_family("cusp", {});
    CHECK(check_upper_bound(cusp.tree, cusp.numbering, 1));
    CHECK_FALSE(check_upper_bound(cusp.tree, cusp.numbering, 2));
}

TEST_CASE("gluing data on the anchors") {
    const NumberedTree cusp = builtin_family("cusp", {});
    const GluingData g = gluing_data(cusp.tree, cusp.numbering);
    CHECK_FALSE(g.models[0].dicritical);
    CHECK(g.models[0].self_int_magnitude == 3);
    REQUIRE(g.models[0].free_weights.size() == 1);
    CHECK(g.models[0].free_weights[0] == Rational(3));
    REQUIRE(g.models[1].free_weights.size() == 1);
    CHECK(g.models[1].free_weights[0] == Rational(2));
    CHECK(g.models[2].dicritical);
    CHECK(g.models[2].tangency_count == 0);

    const GluingData one = gluing_data(ResolutionTree::build({}), {0});
    REQUIRE(one.models[0].free_weights.size() == 1);
    CHECK(one.models[0].free_weights[0] == Rational(1));

    const NumberedTree ex1 = builtin_family("example1", {});
    const GluingData ge = gluing_data(ex1.tree, ex1.numbering);
    REQUIRE(ge.models[0].free_weights.size() == 1);
    CHECK(ge.models[0].free_weights[0] == Rational(4));
    REQUIRE(ge.models[2].free_weights.size() == 2);
    CHECK(ge.models[2].free_weights[0] + ge.models[2].free_weights[1] == Rational(2));
    CHECK(ge.models[2].free_weights[0] != Rational(0));
    CHECK(ge.models[2].free_weights[1] != Rational(0));
}

TEST_CASE("index sums") {
    const NumberedTree cusp = builtin_family("cusp", {});
    const IndexSums cs = index_sums(cusp.tree, cusp.numbering);
    CHECK(cs.totals == std::vector<i64>({1, 1, 0}));
    CHECK(cs.weighted_sum == 2);

    const NumberedTree dc = builtin_family("double_cusp", {});
    CHECK(index_sums(dc.tree, dc.numbering).weighted_sum == 3);

    CHECK(index_sums(ResolutionTree::build({}), {0}).weighted_sum == 1);
}

TEST_CASE("gluing invariants on random trees") {
    std::mt19937 rng(550123);
    for (int trial = 0; trial < 250; ++trial) {
        const ResolutionTree tree = testutil::random_tree(rng, 10);
        const Numbering n = testutil::random_numbering(rng, tree.size(), 4);
        const GluingData g = gluing_data(tree, n, trial % 5);
        validate_gluing(tree, g);  // throws on any failed invariant

        // Camacho-Sad with zero residual, rechecked here against the
        // intersection matrix rather than trusting the stored magnitudes
        const IntMatrix inter = intersection_matrix(tree);
        for (VertexId s = 0; s < tree.size(); ++s) {
            if (g.delta[s] == 0) continue;
            Rational total(0);
            for (const Rational& w : g.models[s].free_weights) total += w;
            for (const auto& [to, w] : g.models[s].edge_weights) total += w;
            CHECK(total == Rational(-inter(s, s)));
        }
    }
}

TEST_SUITE_END();
