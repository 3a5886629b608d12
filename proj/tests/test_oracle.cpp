#include <doctest.h>

#include <random>

#include "ytdist/generate.hpp"
#include "ytdist/oracle.hpp"
#include "ytdist/perm_solver.hpp"

#include "enumerate.hpp"

using namespace ytdist;

namespace {

TreeMetric star4() {
    return TreeMetric::build(4, {{1, 4, 1}, {2, 4, 1}, {3, 4, 1}});
}

Permutation product_of(const Transform& tf, int n) {
    Permutation p(n);
    for (const auto& tau : tf.taus) p.apply_transposition(tau.a, tau.b);
    return p;
}

} // namespace

TEST_CASE("packing preserves lexicographic order") {
    Permutation a = parse_one_line("1 3 2", 3);
    Permutation b = parse_one_line("2 1 3", 3);
    Permutation e(3);
    CHECK(pack_permutation(e) < pack_permutation(a));
    CHECK(pack_permutation(a) < pack_permutation(b));
    Permutation c = parse_one_line("2 3 1", 3);
    CHECK(pack_permutation(c) != pack_permutation(c.inverse()));
    CHECK(pack_permutation(Permutation(16)) == pack_permutation(Permutation(16)));
}

TEST_CASE("three-cycle on the star needs four unit steps") {
    TreeMetric t = star4();
    Permutation p = parse_cycles("(1 2 3)", 4);
    auto [dist, tf] = exact_distance(t, p);
    CHECK(dist == 4);
    CHECK(tf.total_weight == 4);
    CHECK(product_of(tf, 4) == p);
    VerificationReport rep = verify_transform(t, p, tf.taus);
    CHECK(rep.product_matches);
    CHECK(rep.identity_holds);
}

TEST_CASE("identity has distance zero and an empty transform") {
    auto [dist, tf] = exact_distance(star4(), Permutation(4));
    CHECK(dist == 0);
    CHECK(tf.taus.empty());
}

TEST_CASE("the oracle is deterministic") {
    TreeMetric t = star4();
    Permutation p = parse_cycles("(1 3)(2 4)", 4);
    auto [d1, t1] = exact_distance(t, p);
    auto [d2, t2] = exact_distance(t, p);
    CHECK(d1 == d2);
    CHECK(t1.taus == t2.taus);
}

TEST_CASE("on a path every permutation costs half its displacement") {
    TreeMetric t = TreeMetric::build(5, {{1, 2, 2}, {2, 3, 1}, {3, 4, 1}, {4, 5, 3}});
    DistanceTable table = oracle_all_distances(t);
    for (const Permutation& p : testing::all_permutations(5))
        CHECK(2 * table.at(p) == t.displacement(p));
}

TEST_CASE("pair distances are symmetric and left-invariant") {
    TreeMetric t = star4();
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        Permutation p = random_permutation(4, rng);
        Permutation q = random_permutation(4, rng);
        Weight pq = exact_distance_pair(t, p, q);
        CHECK(pq == exact_distance_pair(t, q, p));
        CHECK(exact_distance_pair(t, p, p) == 0);
        Permutation r = random_permutation(4, rng);
        CHECK(pq == exact_distance_pair(t, compose(r, p), compose(r, q)));
    }
}

TEST_CASE("budget limits are enforced") {
    std::mt19937_64 rng(5);
    TreeMetric big = random_ytree(9, rng);
    CHECK_THROWS_AS(exact_distance(big, Permutation(9)), Error);
    try {
        exact_distance(big, random_permutation(9, rng));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BudgetExceeded);
    }

    SearchBudget tight;
    tight.max_n = 7;
    tight.max_states = 10;
    TreeMetric t7 = random_ytree(7, rng);
    CHECK_THROWS_AS(exact_distance(t7, parse_cycles("(1 2 3 4 5 6 7)", 7), tight), Error);

    SearchBudget capped;
    capped.max_weight = 1;
    CHECK_THROWS_AS(exact_distance(star4(), parse_cycles("(1 2 3)", 4), capped), Error);
}

TEST_CASE("weight tables reproduce tree distances and unit Cayley distances") {
    TreeMetric t = star4();
    WeightTable wt = WeightTable::from_tree(t);
    CHECK(wt.phi(1, 2) == 2);
    Permutation p = parse_cycles("(1 2 3)", 4);
    auto [dist, tf] = exact_distance_table(wt, p);
    CHECK(dist == 4);
    CHECK(product_of(tf, 4) == p);

    // unit complete graph: minimum transpositions = n minus number of orbits
    WeightTable unit = WeightTable::complete_unit(4);
    for (const Permutation& q : testing::all_permutations(4)) {
        int orbits = 4;
        for (const Cycle& c : cycle_decomposition(q)) orbits -= c.length() - 1;
        auto [d, tfq] = exact_distance_table(unit, q);
        CHECK(d == 4 - orbits);
        CHECK(product_of(tfq, 4) == q);
    }
}

TEST_CASE("full sweep agrees with single queries") {
    std::mt19937_64 rng(9);
    TreeMetric t = random_ytree(5, rng, 1, 4);
    DistanceTable table = oracle_all_distances(t);
    CHECK(table.dist.size() == 120);
    for (int trial = 0; trial < 20; ++trial) {
        Permutation p = random_permutation(5, rng);
        CHECK(table.at(p) == exact_distance(t, p).first);
    }
}
