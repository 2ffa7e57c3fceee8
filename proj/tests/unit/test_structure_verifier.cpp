#include <doctest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "twoway/dp_solver.hpp"
#include "twoway/structure_verifier.hpp"

using namespace twoway;
using testing::fixture_instance;
using testing::fixture_tree;
using testing::R;

TEST_CASE("side-weights along the skewed equality tree") {
    const auto skewed = fixture_instance("skewed.inst");
    const auto tree = fixture_tree("skewed_eq.tree", skewed);
    const auto ann = annotate_side_weights(tree, skewed);

    auto id = tree.root();
    CHECK(ann.at(id).side_weight == Weight(R("0.9")));
    CHECK(ann.at(id).subtree_weight == Weight(R("1")));
    id = tree.node(id).no;
    CHECK(ann.at(id).side_weight == Weight(R("0.09")));
    id = tree.node(id).no;
    CHECK(ann.at(id).side_weight == Weight(R("0.005")));
    CHECK(ann.at(tree.node(id).yes).side_weight == Weight(R("0")));

    CHECK(check_side_weight_monotone(tree, skewed).ok());
    CHECK(check_mlk(tree, skewed));
    CHECK(check_rmlk(tree, skewed, RankPermutation(skewed)));
    CHECK(right_spine_equality_keys(tree, tree.root()) == std::vector<int>{2, 3});
}

TEST_CASE("root side-weight of the four-key tree") {
    const auto four = fixture_instance("four_keys.inst");
    const auto tree = fixture_tree("four_keys_twoway.tree", four);
    const auto ann = annotate_side_weights(tree, four);
    CHECK(ann.at(tree.root()).side_weight == Weight(R("0.44")));
    const auto& right = ann.at(tree.node(tree.root()).no);
    CHECK(right.reaching.lo_gap == 2);
    CHECK(right.reaching.hi_gap == 5);
    CHECK(right.reaching.keys() == std::vector<int>{2, 3, 4});
}

TEST_CASE("the suboptimal forced tree is still monotone") {
    // Frozen: side-weights along tree (c) never increase, so monotonicity
    // alone does not certify optimality.
    const auto two = fixture_instance("two_keys.inst");
    CHECK(check_side_weight_monotone(fixture_tree("two_keys_forced.tree", two), two).ok());
}

TEST_CASE("a heavy comparison under a light equality test breaks monotonicity") {
    const auto inst = Instance::full({R("4")}, {R("0.1")}, {R("0.45"), R("0.45")});
    const auto tree = ComparisonTree::equality_test(
        1, ComparisonTree::less(1, ComparisonTree::interval_leaf(0), ComparisonTree::interval_leaf(1)));
    REQUIRE(handles(tree, inst).ok());
    const auto report = check_side_weight_monotone(tree, inst);
    CHECK_FALSE(report.ok());
    REQUIRE(report.first_violation.has_value());
    CHECK(report.first_violation->parent == tree.root());

    const auto good = ComparisonTree::less(1, ComparisonTree::interval_leaf(0),
                                           ComparisonTree::equality_test(1, ComparisonTree::interval_leaf(1)));
    CHECK(check_side_weight_monotone(good, inst).ok());
}

TEST_CASE("MLK and RMLK on the tied two-key instance") {
    const auto two = fixture_instance("two_keys.inst");
    const RankPermutation pi(two);
    const auto a = fixture_tree("two_keys_tie.tree", two);
    CHECK(check_mlk(a, two));
    CHECK_FALSE(check_rmlk(a, two, pi));
    const auto b = fixture_tree("two_keys_opt.tree", two);
    CHECK(check_mlk(b, two));
    CHECK(check_rmlk(b, two, pi));
}

TEST_CASE("trees without equality tests pass MLK and RMLK vacuously") {
    const auto skewed = fixture_instance("skewed.inst");
    const auto tree = fixture_tree("skewed_lt_only.tree", skewed);
    CHECK(check_mlk(tree, skewed));
    CHECK(check_rmlk(tree, skewed, RankPermutation(skewed)));
    CHECK(right_spine_equality_keys(tree, tree.root()).empty());
}

TEST_CASE("an equality test to a light key fails MLK") {
    const auto skewed = fixture_instance("skewed.inst");
    const auto tree = ComparisonTree::equality_test(
        1, ComparisonTree::less(4, ComparisonTree::less(3, ComparisonTree::key_leaf(2), ComparisonTree::key_leaf(3)),
                                ComparisonTree::key_leaf(4)));
    REQUIRE(handles(tree, skewed).ok());
    CHECK_FALSE(check_mlk(tree, skewed));
    CHECK_FALSE(check_rmlk(tree, skewed, RankPermutation(skewed)));
}

TEST_CASE("property: subtree weights sum to the tree cost") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 200; ++t) {
        const Variant variant = t % 2 ? Variant::Full : Variant::Successful;
        const int n = (variant == Variant::Full ? 0 : 1) + static_cast<int>(rng() % 8);
        const auto inst = testing::random_instance(rng, variant, n, testing::style_for(t));
        const auto tree = testing::random_tree(rng, inst);
        const auto ann = annotate_side_weights(tree, inst);
        Weight internal_sum(Rational(0));
        for (int id = 0; id < tree.node_count(); ++id) {
            const auto kind = tree.node(id).kind;
            if (kind == ComparisonTree::Kind::Less || kind == ComparisonTree::Kind::Equal)
                internal_sum += ann.at(id).subtree_weight;
        }
        CHECK(internal_sum == evaluate_cost(tree, inst).total_cost);
        CHECK(ann.at(tree.root()).subtree_weight == total_weight(inst));
    }
}
