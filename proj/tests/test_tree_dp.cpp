#include <doctest.h>

#include <cmath>

#include "pdom/exact.hpp"
#include "pdom/families.hpp"
#include "pdom/tree_dp.hpp"
#include "test_support.hpp"

using namespace pdom;
using pdom::testing::TestRng;

namespace {

double tree_weight(const WeightedTree& t, const VertexSet& s) {
    double w = 0.0;
    s.for_each([&](int v) { w += t.weights[static_cast<std::size_t>(v)]; });
    return w;
}

}  // namespace

TEST_SUITE("tree_dp") {

TEST_CASE("from_parts validates the ordering") {
    CHECK_THROWS_AS(WeightedTree::from_parts({}, {}), InputError);
    CHECK_THROWS_AS(WeightedTree::from_parts({0, 1}, {1.0, 1.0}), InputError);   // father <= index
    CHECK_THROWS_AS(WeightedTree::from_parts({1, 0}, {1.0, 1.0}), InputError);   // root not last
    CHECK_THROWS_AS(WeightedTree::from_parts({1, 1}, {1.0, 0.0}), InputError);   // weight
    CHECK_THROWS_AS(WeightedTree::from_parts({1, 1}, {1.0}), InputError);        // count
    WeightedTree ok = WeightedTree::from_parts({1, 1}, {1.0, 2.0});
    CHECK(ok.root() == 1);
}

TEST_CASE("tree_ordering on a single vertex") {
    TreeOrdering ord = tree_ordering(1, {}, 0);
    CHECK(ord.father == std::vector<int>{0});
    CHECK(ord.new_of_old == std::vector<int>{0});
}

TEST_CASE("tree_ordering of P_3 rooted at an endpoint is the chain") {
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}};
    TreeOrdering ord = tree_ordering(3, edges, 2);
    CHECK(ord.father == std::vector<int>{1, 2, 2});
    CHECK(ord.new_of_old == std::vector<int>{0, 1, 2});
}

TEST_CASE("tree_ordering of the star keeps leaves first, center last") {
    std::vector<std::pair<int, int>> edges{{4, 0}, {4, 1}, {4, 2}, {4, 3}};
    TreeOrdering ord = tree_ordering(5, edges, 4);
    CHECK(ord.father == std::vector<int>{4, 4, 4, 4, 4});
    CHECK(ord.new_of_old == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("tree_ordering preserves an input that is already ordered") {
    TestRng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        WeightedTree t = gen_random_tree(1 + rng.below(12), 1, 5,
                                         500 + static_cast<std::uint64_t>(trial));
        const int n = t.vertex_count();
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, t.father[static_cast<std::size_t>(i)]);
        TreeOrdering ord = tree_ordering(n, edges, n - 1);
        CHECK(ord.father == t.father);
        for (int v = 0; v < n; ++v) CHECK(ord.new_of_old[static_cast<std::size_t>(v)] == v);
    }
}

TEST_CASE("tree_ordering rejects non-trees") {
    std::vector<std::pair<int, int>> cycle{{0, 1}, {1, 2}, {2, 0}};
    CHECK_THROWS_AS(tree_ordering(3, cycle, 0), InputError);  // wrong edge count
    std::vector<std::pair<int, int>> disconnected{{0, 1}, {2, 3}, {3, 4}, {2, 4}};
    CHECK_THROWS_AS(tree_ordering(5, disconnected, 0), InputError);
    std::vector<std::pair<int, int>> dup{{0, 1}, {1, 0}, {1, 2}};
    CHECK_THROWS_AS(tree_ordering(4, dup, 0), InputError);
    std::vector<std::pair<int, int>> loop{{0, 0}, {1, 2}};
    CHECK_THROWS_AS(tree_ordering(3, loop, 0), InputError);
}

TEST_CASE("merge of two fresh leaves") {
    ClassVector parent = ClassVector::initial(5.0);
    ClassVector child = ClassVector::initial(3.0);
    ClassVector out = merge_child(parent, child);
    CHECK(out.slot == std::array<double, 5>{5.0, 3.0, kInfWeight, kInfWeight, 0.0});
}

TEST_CASE("merge absorbs infinities") {
    ClassVector parent = ClassVector::initial(2.0);
    ClassVector child{{kInfWeight, kInfWeight, 4.0, kInfWeight, kInfWeight}};
    ClassVector out = merge_child(parent, child);
    CHECK(out[DpClass::D] == 0.0 + 4.0);              // d = d.c
    CHECK(out[DpClass::E] == kInfWeight);             // e needs d.(d|e) or e.c
    CHECK(out[DpClass::A] == 2.0 + 4.0);
    CHECK(out[DpClass::B] == kInfWeight);

    ClassVector all_inf{{kInfWeight, kInfWeight, kInfWeight, kInfWeight, kInfWeight}};
    ClassVector out2 = merge_child(parent, all_inf);
    for (double v : out2.slot) CHECK(v == kInfWeight);
}

TEST_CASE("merge records argmin backpointers with the tie-break order") {
    ClassVector parent = ClassVector::initial(5.0);
    ClassVector child = ClassVector::initial(3.0);
    MergeBack back;
    ClassVector out = merge_child(parent, child, back);
    CHECK(out.slot == std::array<double, 5>{5.0, 3.0, kInfWeight, kInfWeight, 0.0});
    // slot a: parent a + child d (0) beats child a (3)
    CHECK(back.choice[0].parent_slot == 0);
    CHECK(back.choice[0].child_slot == 3);
    // slot b: only the d.(a) route is finite
    CHECK(back.choice[1].parent_slot == 3);
    CHECK(back.choice[1].child_slot == 0);
    // slot c infeasible
    CHECK(back.choice[2].parent_slot == -1);
    // slot e: d.(d)
    CHECK(back.choice[4].parent_slot == 3);
    CHECK(back.choice[4].child_slot == 3);
}

TEST_CASE("wpdt on the single vertex") {
    WeightedTree t = WeightedTree::from_parts({0}, {7.0});
    PdsResult res = wpdt(t);
    CHECK(res.weight == 7.0);
    CHECK(res.set == VertexSet::of(1, {0}));
    CHECK(res.optimal);
}

TEST_CASE("wpdt on P_2 rooted at the heavier end") {
    WeightedTree t = WeightedTree::from_parts({1, 1}, {3.0, 5.0});
    CHECK(wpdt(t).weight == 3.0);
}

TEST_CASE("wpdt on the weighted star") {
    WeightedTree t = testing::star_tree_center_root(2.0, {1.0, 1.0, 1.0, 1.0});
    PdsResult res = wpdt(t);
    CHECK(res.weight == 2.0);
    CHECK(res.set == VertexSet::of(5, {4}));
}

TEST_CASE("dp_class_minima matches the initial vector on K_1") {
    WeightedTree t = WeightedTree::from_parts({0}, {7.0});
    CHECK(dp_class_minima(t) == std::array<double, 5>{7.0, kInfWeight, kInfWeight, 0.0, kInfWeight});
}

TEST_CASE("dp_class_minima on P_2") {
    WeightedTree t = WeightedTree::from_parts({1, 1}, {3.0, 5.0});
    CHECK(dp_class_minima(t) == std::array<double, 5>{5.0, 3.0, kInfWeight, kInfWeight, 0.0});
    CHECK(dp_class_minima(t) == testing::enumerate_class_minima(t));
}

TEST_CASE("dp_class_minima equals subset enumeration on small trees") {
    TestRng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + rng.below(8);
        WeightedTree t = gen_random_tree(n, 1, 50, 9000 + static_cast<std::uint64_t>(trial));
        CAPTURE(trial);
        CHECK(dp_class_minima(t) == testing::enumerate_class_minima(t));
    }
    // paths and stars specifically
    for (int n = 1; n <= 8; ++n) {
        std::vector<double> w;
        for (int i = 0; i < n; ++i) w.push_back(1.0 + (i * 7) % 5);
        WeightedTree p = testing::path_tree(w);
        CHECK(dp_class_minima(p) == testing::enumerate_class_minima(p));
    }
}

TEST_CASE("wpdt agrees with the exhaustive weighted solver") {
    for (int trial = 0; trial < 80; ++trial) {
        int n = 1 + trial % 12;
        WeightedTree t = gen_random_tree(n, 1, 100, 40000 + static_cast<std::uint64_t>(trial));
        PdsResult dp = wpdt(t);
        PdsResult oracle = min_weight_pds(t.to_graph(), t.weights);
        CAPTURE(trial);
        REQUIRE(dp.weight == oracle.weight);
        CHECK(is_pds(t.to_graph(), dp.set));
        CHECK(tree_weight(t, dp.set) == dp.weight);
    }
}

TEST_CASE("unit-weight wpdt equals min_pds on trees") {
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + trial % 14;
        WeightedTree t = gen_random_tree(n, 1, 1, 77000 + static_cast<std::uint64_t>(trial));
        CHECK(wpdt(t).weight == static_cast<double>(min_pds(t.to_graph()).cardinality));
    }
}

TEST_CASE("sequential in-place merges give a wrong answer on a known witness") {
    // P_3 rooted at an endpoint, weights (5, 5, 1): the cheap root alone is
    // optimal, but the in-place variant loses it.
    WeightedTree witness = testing::path_tree({5.0, 5.0, 1.0});
    CHECK(wpdt(witness).weight == 1.0);
    CHECK(testing::wpdt_value_sequential(witness) == 5.0);
}

TEST_CASE("differential search finds sequential-merge witnesses") {
    int mismatches = 0;
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + trial % 9;
        WeightedTree t = gen_random_tree(n, 1, 30, 123000 + static_cast<std::uint64_t>(trial));
        double right = wpdt(t).weight;
        double seq = testing::wpdt_value_sequential(t);
        REQUIRE(right == min_weight_pds(t.to_graph(), t.weights).weight);
        if (seq != right) ++mismatches;
    }
    CHECK(mismatches > 0);
}

TEST_CASE("reconstructed sets stay valid on deeper structures") {
    // spider: three legs of length 3 glued at a hub
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 9}, {3, 4}, {4, 5},
                                           {5, 9}, {6, 7}, {7, 8}, {8, 9}};
    TreeOrdering ord = tree_ordering(10, edges, 9);
    std::vector<double> w(10, 1.0);
    w[9] = 0.5;
    WeightedTree t = WeightedTree::from_parts(std::move(ord.father), std::move(w));
    PdsResult res = wpdt(t);
    CHECK(is_pds(t.to_graph(), res.set));
    CHECK(res.weight == min_weight_pds(t.to_graph(), t.weights).weight);
}

}  // TEST_SUITE
