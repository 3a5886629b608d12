#pragma once

#include <vector>

#include "ytdist/cycle_solver.hpp"
#include "ytdist/permutation.hpp"
#include "ytdist/tree_metric.hpp"

namespace ytdist {

enum class SolveMethod { PerCycle, Merged };

struct PerCycleEntry {
    Cycle cycle;
    CycleClass cls;
    Weight weight;
};

struct DistanceReport {
    Weight distance_upper = 0;
    Weight lower_bound = 0;
    Transform transform;
    std::vector<PerCycleEntry> per_cycle;
    Weight displacement = 0;
    SolveMethod method = SolveMethod::PerCycle;
};

/// Solve each disjoint cycle independently (4/3-approximation overall;
/// exact whenever p is a single cycle or no cycle is unbalanced).
DistanceReport decompose(const TreeMetric& t, const Permutation& p);

/// Try cycle merging on top of the per-cycle solution and keep the cheaper
/// result: the center is merged into unbalanced cycles through their cheapest
/// center transpositions, and pairs of unbalanced cycles are joined through
/// efficient transpositions when that removes the unbalanced surcharge.
DistanceReport decompose_merged(const TreeMetric& t, const Permutation& p);

/// D(p)/2, plus min over supp(p) of phi(cv, v) when the center is fixed and
/// the aggregate branch-crossing arc counts of p are unbalanced.
Weight lower_bound(const TreeMetric& t, const Permutation& p);

struct VerificationReport {
    bool product_matches = false;
    Weight total_weight = 0;
    Weight displacement = 0;
    Weight gap = 0;              // total_weight - displacement/2
    Weight inefficiency_sum = 0; // accumulated while sorting p by the reversed sequence
    bool identity_holds = false; // 2 * gap == inefficiency_sum
};

/// Check that taus multiply to p and report the exact cost/inefficiency
/// bookkeeping; never throws on bad transforms, it flags them instead.
VerificationReport verify_transform(const TreeMetric& t, const Permutation& p,
                                    const std::vector<Transposition>& taus);

/// Reorder a sorting of p so that no transposition is disjoint from the
/// product of the suffix it starts: repeatedly move the leftmost such
/// transposition to the end. Multiset, product, and cost are preserved.
/// Throws NonSortingInput if taus does not sort p, and NoProgress if the same
/// position stays defective for more than |taus| rounds (possible only for
/// sortings that are not minimum-cost).
std::vector<Transposition> normalize_sorting(const TreeMetric& t, const Permutation& p,
                                             std::vector<Transposition> taus);

} // namespace ytdist
