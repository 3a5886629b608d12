#include "ytdist/generate.hpp"

#include <algorithm>
#include <numeric>

namespace ytdist {

namespace {

std::vector<int> shuffled_labels(int n, std::mt19937_64& rng) {
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    return labels;
}

Weight draw_weight(std::mt19937_64& rng, Weight wmin, Weight wmax) {
    if (wmin == wmax) return wmin;
    return std::uniform_int_distribution<Weight>(wmin, wmax)(rng);
}

} // namespace

TreeMetric random_ytree(int n, std::mt19937_64& rng, Weight wmin, Weight wmax) {
    if (n < 4) fail(Errc::OutOfRange, "a Y-tree needs at least 4 vertices");
    // branch sizes: three positive parts of n-1
    const int rest = n - 1 - 3;
    std::uniform_int_distribution<int> part(0, rest);
    int a = part(rng), b = part(rng);
    if (a > b) std::swap(a, b);
    int s1 = 1 + a, s2 = 1 + (b - a), s3 = 1 + (rest - b);

    std::vector<int> labels = shuffled_labels(n, rng);
    const int center = labels[0];
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    int idx = 1;
    for (int len : {s1, s2, s3}) {
        int prev = center;
        for (int i = 0; i < len; ++i) {
            int v = labels[idx++];
            edges.push_back({prev, v, draw_weight(rng, wmin, wmax)});
            prev = v;
        }
    }
    return TreeMetric::build(n, edges);
}

TreeMetric random_path(int n, std::mt19937_64& rng, Weight wmin, Weight wmax) {
    std::vector<int> labels = shuffled_labels(n, rng);
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int i = 0; i + 1 < n; ++i)
        edges.push_back({labels[i], labels[i + 1], draw_weight(rng, wmin, wmax)});
    return TreeMetric::build(n, edges);
}

Cycle random_cycle(int n, int length, std::mt19937_64& rng) {
    if (length < 2 || length > n) fail(Errc::OutOfRange, "cycle length out of range");
    std::vector<int> labels = shuffled_labels(n, rng);
    labels.resize(length);
    return Cycle(std::move(labels));
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
    return Permutation::from_images(shuffled_labels(n, rng));
}

} // namespace ytdist
