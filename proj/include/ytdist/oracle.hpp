#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ytdist/cycle_solver.hpp"
#include "ytdist/permutation.hpp"
#include "ytdist/tree_metric.hpp"

namespace ytdist {

struct SearchBudget {
    int max_n = 8;
    std::int64_t max_states = 10'000'000;
    std::optional<Weight> max_weight;
};

/// Big-endian nibble packing of the one-line form, so numeric order on keys
/// equals lexicographic order on permutations. Requires n <= 16.
std::uint64_t pack_permutation(const Permutation& p);

/// Exact minimum decomposition cost by Dijkstra over the Cayley graph of S_n
/// with edge costs phi(a,b). The returned transform multiplies to p and ties
/// are broken deterministically (lexicographically smallest settled state).
std::pair<Weight, Transform> exact_distance(const TreeMetric& t, const Permutation& p,
                                            const SearchBudget& budget = {});

/// d(p, q) via left-invariance: the cost of the permutation r with q r = p.
Weight exact_distance_pair(const TreeMetric& t, const Permutation& p, const Permutation& q,
                           const SearchBudget& budget = {});

/// All distances from the identity in one sweep. Since every transposition is
/// its own inverse with symmetric cost, this is delta of every permutation of
/// [n]; intended for exhaustive small-n verification.
struct DistanceTable {
    int n = 0;
    std::unordered_map<std::uint64_t, Weight> dist;

    Weight at(const Permutation& p) const;
};
DistanceTable oracle_all_distances(const TreeMetric& t, const SearchBudget& budget = {});

/// Explicit symmetric cost table over [n]. Lets the oracle run on defining
/// graphs that are not trees, such as the unit complete graph.
struct WeightTable {
    int n = 0;
    std::vector<Weight> w; // (n+1) x (n+1), row-major

    Weight phi(int a, int b) const { return w[static_cast<std::size_t>(a) * (n + 1) + b]; }

    static WeightTable complete_unit(int n);
    static WeightTable from_tree(const TreeMetric& t);
};
std::pair<Weight, Transform> exact_distance_table(const WeightTable& wt, const Permutation& p,
                                                  const SearchBudget& budget = {});

} // namespace ytdist
