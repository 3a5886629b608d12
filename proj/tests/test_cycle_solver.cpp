#include <doctest.h>

#include <random>

#include "ytdist/cycle_solver.hpp"
#include "ytdist/generate.hpp"
#include "ytdist/perm_solver.hpp"

#include "enumerate.hpp"

using namespace ytdist;

namespace {

TreeMetric star4() {
    return TreeMetric::build(4, {{1, 4, 1}, {2, 4, 1}, {3, 4, 1}});
}

TreeMetric path6() {
    return TreeMetric::build(6, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1}});
}

// center 7 with branches {1,4}, {2,3}, {5,6}
TreeMetric bal7() {
    return TreeMetric::build(7, {{7, 4, 1}, {4, 1, 1}, {7, 6, 1}, {6, 5, 1}, {7, 2, 1}, {2, 3, 1}});
}

// center 6 with branches {1,2}, {3,4,5}, {7,8}
TreeMetric tree2a() {
    return TreeMetric::build(
        8, {{6, 1, 1}, {1, 2, 1}, {6, 3, 1}, {3, 5, 1}, {5, 4, 1}, {6, 7, 1}, {7, 8, 1}});
}

// center 6 with branches {1,2,3,5}, {4}, {7,8}
TreeMetric tree2b() {
    return TreeMetric::build(
        8, {{6, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 5, 1}, {6, 4, 1}, {6, 7, 1}, {7, 8, 1}});
}

// center 8 with branches {1,2,3}, {4,5}, {6,7}; the 8-7 edge weighs 2
TreeMetric tree10() {
    return TreeMetric::build(
        8, {{8, 2, 1}, {2, 3, 1}, {3, 1, 1}, {8, 5, 1}, {5, 4, 1}, {8, 7, 2}, {7, 6, 1}});
}

Permutation product_of(const std::vector<Transposition>& taus, int n,
                        std::size_t lo, std::size_t hi) {
    Permutation p(n);
    for (std::size_t i = lo; i < hi; ++i) p.apply_transposition(taus[i].a, taus[i].b);
    return p;
}

Permutation product_of(const Transform& tf, int n) {
    return product_of(tf.taus, n, 0, tf.taus.size());
}

void check_solution(const TreeMetric& t, const Cycle& c, const Transform& tf) {
    Permutation p = cycle_to_perm(c, t.size());
    CHECK(product_of(tf, t.size()) == p);
    CHECK(tf.total_weight == delta_cycle(t, c));
    Weight sum = 0;
    for (const auto& tau : tf.taus) sum += t.phi(tau.a, tau.b);
    CHECK(sum == tf.total_weight);
}

} // namespace

TEST_CASE("classification of cycles") {
    TreeMetric s = star4();
    CHECK(classify_cycle(s, Cycle({1, 2})).kind == CycleKind::OnPath);
    CHECK(classify_cycle(s, Cycle({1, 4})).kind == CycleKind::OnPath);
    // two branches plus the center still fit on one path
    CHECK(classify_cycle(s, Cycle({1, 4, 2})).kind == CycleKind::OnPath);
    CHECK(classify_cycle(s, Cycle({1, 2, 3, 4})).kind == CycleKind::ContainsCenter);

    CycleClass cc = classify_cycle(s, Cycle({1, 2, 3}));
    CHECK(cc.kind == CycleKind::Unbalanced);
    CHECK(cc.counts.l[1][2] == 1);
    CHECK(cc.counts.l[2][3] == 1);
    CHECK(cc.counts.l[3][1] == 1);
    CHECK(cc.counts.l[2][1] == 0);

    CHECK(classify_cycle(tree2a(), Cycle({1, 3, 5, 2, 7, 4, 8})).kind == CycleKind::Balanced);
    CHECK(classify_cycle(bal7(), Cycle({7, 4, 6, 5, 2, 3})).kind == CycleKind::ContainsCenter);

    TreeMetric p6 = path6();
    CHECK(classify_cycle(p6, Cycle({1, 4, 2, 6, 5, 3})).kind == CycleKind::OnPath);
}

TEST_CASE("path cycles split at the two leftmost elements") {
    TreeMetric t = path6();
    Cycle c({1, 4, 2, 6, 5, 3});
    Transform tf = path_td(t, c);
    REQUIRE(tf.taus.size() == 5);
    CHECK(product_of(tf.taus, 6, 0, 2) == cycle_to_perm(Cycle({1, 4, 2}), 6));
    CHECK(product_of(tf.taus, 6, 2, 5) == cycle_to_perm(Cycle({2, 6, 5, 3}), 6));
    check_solution(t, c, tf);
    CHECK(tf.total_weight == 7);
}

TEST_CASE("path cycles peel a single transposition when the second leftmost closes the cycle") {
    TreeMetric t = path6();
    Cycle c({1, 4, 6, 5, 3});
    Transform tf = path_td(t, c);
    REQUIRE(tf.taus.size() == 4);
    CHECK(tf.taus.back() == Transposition(1, 3));
    CHECK(product_of(tf.taus, 6, 0, 3) == cycle_to_perm(Cycle({3, 4, 6, 5}), 6));
    check_solution(t, c, tf);
}

TEST_CASE("two-element cycles are their own decomposition") {
    TreeMetric t = path6();
    Transform tf = path_td(t, Cycle({2, 5}));
    REQUIRE(tf.taus.size() == 1);
    CHECK(tf.taus[0] == Transposition(2, 5));
    CHECK(tf.total_weight == 3);
}

TEST_CASE("path_td rejects cycles spanning three branches") {
    CHECK_THROWS_AS(path_td(star4(), Cycle({1, 2, 3})), Error);
}

TEST_CASE("every cycle on a weighted path costs half its displacement") {
    TreeMetric t = TreeMetric::build(5, {{1, 2, 2}, {2, 3, 1}, {3, 4, 3}, {4, 5, 1}});
    for (const Cycle& c : testing::all_cycles(5)) {
        Transform tf = path_td(t, c);
        CHECK(static_cast<int>(tf.taus.size()) == c.length() - 1);
        CHECK(2 * tf.total_weight == t.displacement(cycle_to_perm(c, 5)));
        check_solution(t, c, tf);
    }
}

TEST_CASE("central cycles peel one branch run at a time") {
    TreeMetric t = bal7();
    Cycle c({7, 4, 6, 5, 2, 3});
    Transform tf = central_td(t, c);
    REQUIRE(tf.taus.size() == 5);
    CHECK(product_of(tf.taus, 7, 0, 4) == cycle_to_perm(Cycle({7, 6, 5, 2, 3}), 7));
    CHECK(tf.taus.back() == Transposition(4, 7));
    check_solution(t, c, tf);
    CHECK(tf.total_weight == 5);
}

TEST_CASE("central_td requires the center") {
    TreeMetric t = bal7();
    CHECK_THROWS_AS(central_td(t, Cycle({1, 2, 3})), Error);
}

TEST_CASE("balanced cycle keeping the near endpoint") {
    TreeMetric t = tree2a();
    Cycle c({1, 3, 5, 2, 7, 4, 8});
    Transform tf = balanced_td(t, c);
    REQUIRE(tf.taus.size() == 6);
    // first extraction removes (1 3 5) and leaves (1 2 7 4 8)
    CHECK(product_of(tf.taus, 8, 0, 4) == cycle_to_perm(Cycle({1, 2, 7, 4, 8}), 8));
    CHECK(product_of(tf.taus, 8, 4, 6) == cycle_to_perm(Cycle({1, 3, 5}), 8));
    check_solution(t, c, tf);
    Weight d = t.displacement(cycle_to_perm(c, 8));
    CHECK(2 * tf.total_weight == d);
}

TEST_CASE("balanced cycle keeping the far endpoint") {
    TreeMetric t = tree2b();
    Cycle c({1, 8, 4, 7, 2, 3, 5});
    Transform tf = balanced_td(t, c);
    REQUIRE(tf.taus.size() == 6);
    // (4 7) is extracted in front of the remaining cycle
    CHECK(tf.taus[0] == Transposition(4, 7));
    CHECK(product_of(tf.taus, 8, 1, 6) == cycle_to_perm(Cycle({1, 8, 7, 2, 3, 5}), 8));
    check_solution(t, c, tf);
}

TEST_CASE("balanced_td rejects unbalanced and central cycles") {
    CHECK_THROWS_AS(balanced_td(star4(), Cycle({1, 2, 3})), Error);
    CHECK_THROWS_AS(balanced_td(star4(), Cycle({1, 2, 3, 4})), Error);
}

TEST_CASE("unbalanced cycle routes through the center once") {
    TreeMetric t = tree10();
    Cycle c({3, 5, 7});
    CHECK(classify_cycle(t, c).kind == CycleKind::Unbalanced);
    Transform tf = unbalanced_td(t, c);
    REQUIRE(tf.taus.size() == 4);
    CHECK(product_of(tf.taus, 8, 0, 3) == cycle_to_perm(Cycle({3, 5, 8, 7}), 8));
    CHECK(tf.taus.back() == Transposition(5, 8));
    check_solution(t, c, tf);
    CHECK(tf.total_weight == 6); // 10/2 plus phi(8,5) = 1
}

TEST_CASE("unbalanced cycle with a leading same-branch run") {
    TreeMetric t = tree10();
    Cycle c({2, 3, 5, 7});
    Transform tf = unbalanced_td(t, c);
    REQUIRE(tf.taus.size() == 5);
    // the minimum-phi vertex ties between 2 and 5; the smaller label 2 wins
    CHECK(product_of(tf.taus, 8, 0, 3) == cycle_to_perm(Cycle({2, 8, 5, 7}), 8));
    CHECK(tf.taus[3] == Transposition(2, 8));
    CHECK(tf.taus[4] == Transposition(2, 3));
    check_solution(t, c, tf);
    CHECK(tf.total_weight == 6);
}

TEST_CASE("unbalanced_td rejects other kinds") {
    CHECK_THROWS_AS(unbalanced_td(tree2a(), Cycle({1, 3, 5, 2, 7, 4, 8})), Error);
    CHECK_THROWS_AS(unbalanced_td(star4(), Cycle({1, 4, 2})), Error);
}

TEST_CASE("closed-form cost matches the constructed transforms") {
    TreeMetric s = star4();
    CHECK(delta_cycle(s, Cycle({1, 2, 3})) == 4);
    CHECK(unbalanced_td(s, Cycle({1, 2, 3})).total_weight == 4);
    CHECK(delta_cycle(path6(), Cycle({1, 4, 2, 6, 5, 3})) == 7);
    CHECK(delta_cycle(tree10(), Cycle({3, 5, 7})) == 6);

    for (const TreeMetric& t : testing::all_ytrees_unit(5)) {
        for (const Cycle& c : testing::all_cycles(5)) {
            Transform tf = decompose_cycle(t, c);
            CHECK(tf.total_weight == delta_cycle(t, c));
            CHECK(product_of(tf, 5) == cycle_to_perm(c, 5));
        }
    }
}

TEST_CASE("decompose_cycle output always satisfies the cost identity") {
    TreeMetric t = tree10();
    for (const Cycle& c : testing::all_cycles(8)) {
        if (c.length() > 5) continue;
        Transform tf = decompose_cycle(t, c);
        Permutation p = cycle_to_perm(c, 8);
        VerificationReport rep = verify_transform(t, p, tf.taus);
        CHECK(rep.product_matches);
        CHECK(rep.identity_holds);
        CycleKind kind = classify_cycle(t, c).kind;
        if (kind != CycleKind::Unbalanced) CHECK(rep.inefficiency_sum == 0);
        else CHECK(rep.gap == tf.total_weight - t.displacement(p) / 2);
    }
}

TEST_CASE("long cycles on large trees stay exact") {
    std::mt19937_64 rng(7);
    TreeMetric path = random_path(20'000, rng, 1, 9);
    Cycle c = random_cycle(20'000, 10'000, rng);
    Transform tf = path_td(path, c);
    CHECK(2 * tf.total_weight == path.displacement(cycle_to_perm(c, 20'000)));
    CHECK(product_of(tf, 20'000) == cycle_to_perm(c, 20'000));

    TreeMetric yt = random_ytree(20'000, rng, 1, 9);
    Cycle yc = random_cycle(20'000, 10'000, rng);
    SolveStats stats;
    Transform ytf = decompose_cycle(yt, yc, &stats);
    CHECK(ytf.total_weight == delta_cycle(yt, yc));
    CHECK(product_of(ytf, 20'000) == cycle_to_perm(yc, 20'000));
    CHECK(stats.ops > 0);
}
