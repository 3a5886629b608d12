#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ytdist/permutation.hpp"
#include "ytdist/tree_metric.hpp"

namespace ytdist {

/// Ordered transposition sequence whose left-to-right product equals the
/// target permutation, together with its exact total weight.
struct Transform {
    std::vector<Transposition> taus;
    Weight total_weight = 0;

    void append(const TreeMetric& t, int a, int b) {
        taus.emplace_back(a, b);
        total_weight += t.phi(a, b);
    }
    void append(const Transform& other) {
        taus.insert(taus.end(), other.taus.begin(), other.taus.end());
        total_weight += other.total_weight;
    }
};

enum class CycleKind { OnPath, ContainsCenter, Balanced, Unbalanced };

const char* cycle_kind_name(CycleKind k);

/// l[i][j] = number of arcs of the cycle from branch i to branch j (i != j);
/// arcs incident to the center are not counted.
struct BalanceCounts {
    std::array<std::array<std::int64_t, 4>, 4> l{};
};

struct CycleClass {
    CycleKind kind;
    BalanceCounts counts;
};

/// Instrumentation counter for the linear-time claims.
struct SolveStats {
    std::int64_t ops = 0;
};

/// Single pass, O(|c|). Precedence: OnPath > ContainsCenter > Balanced > Unbalanced.
CycleClass classify_cycle(const TreeMetric& t, const Cycle& c);

/// Minimum cost decomposition of a cycle supported on a path of the defining
/// tree; weight is exactly D(c)/2 and the transform has |c|-1 transpositions.
Transform path_td(const TreeMetric& t, const Cycle& c, SolveStats* stats = nullptr);

/// Minimum cost decomposition of a cycle containing the central vertex;
/// weight is exactly D(c)/2.
Transform central_td(const TreeMetric& t, const Cycle& c, SolveStats* stats = nullptr);

/// Minimum cost decomposition of a balanced cycle avoiding the central
/// vertex; weight is exactly D(c)/2.
Transform balanced_td(const TreeMetric& t, const Cycle& c, SolveStats* stats = nullptr);

/// Minimum cost decomposition of an unbalanced cycle avoiding the central
/// vertex; weight is exactly D(c)/2 + min over supp(c) of phi(center, v).
Transform unbalanced_td(const TreeMetric& t, const Cycle& c, SolveStats* stats = nullptr);

/// Closed-form minimum decomposition cost of a single cycle, O(|c|),
/// without building the transform.
Weight delta_cycle(const TreeMetric& t, const Cycle& c);

/// Dispatch on classify_cycle; total weight always equals delta_cycle.
Transform decompose_cycle(const TreeMetric& t, const Cycle& c, SolveStats* stats = nullptr);

} // namespace ytdist
