#pragma once

#include <random>

#include "ytdist/permutation.hpp"
#include "ytdist/tree_metric.hpp"

namespace ytdist {

/// Random Y-tree on [n], n >= 4: random branch sizes, random label placement,
/// edge weights uniform in [wmin, wmax].
TreeMetric random_ytree(int n, std::mt19937_64& rng, Weight wmin = 1, Weight wmax = 1);

/// Random path on [n] with shuffled labels and uniform weights.
TreeMetric random_path(int n, std::mt19937_64& rng, Weight wmin = 1, Weight wmax = 1);

/// Random cycle of the given length over distinct labels from [n].
Cycle random_cycle(int n, int length, std::mt19937_64& rng);

Permutation random_permutation(int n, std::mt19937_64& rng);

} // namespace ytdist
