#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "ytdist/permutation.hpp"
#include "ytdist/tree_metric.hpp"

namespace ytdist::testing {

/// Decode a Pruefer sequence (values in [1,n], length n-2) into an edge list.
inline std::vector<Edge> pruefer_decode(const std::vector<int>& code, int n) {
    std::vector<int> deg(n + 1, 1);
    for (int v : code) ++deg[v];
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    std::vector<int> degs = deg;
    std::vector<bool> used(n + 1, false);
    for (int v : code) {
        int leaf = 0;
        for (int u = 1; u <= n; ++u)
            if (degs[u] == 1 && !used[u]) {
                leaf = u;
                break;
            }
        used[leaf] = true;
        --degs[v];
        edges.push_back({leaf, v, 1});
    }
    int a = 0, b = 0;
    for (int u = 1; u <= n; ++u)
        if (!used[u] && degs[u] >= 1) {
            if (a == 0) a = u;
            else b = u;
        }
    edges.push_back({a, b, 1});
    return edges;
}

/// All unit-weight Y-shaped labeled trees on [n] (exactly one degree-3 vertex).
inline std::vector<TreeMetric> all_ytrees_unit(int n) {
    std::vector<TreeMetric> out;
    const int len = n - 2;
    std::vector<int> code(len, 1);
    while (true) {
        std::vector<int> deg(n + 1, 1);
        for (int v : code) ++deg[v];
        int deg3 = 0;
        bool ok = true;
        for (int v = 1; v <= n; ++v) {
            if (deg[v] > 3) ok = false;
            if (deg[v] == 3) ++deg3;
        }
        if (ok && deg3 == 1) out.push_back(TreeMetric::build(n, pruefer_decode(code, n)));
        int i = len - 1;
        while (i >= 0 && code[i] == n) code[i--] = 1;
        if (i < 0) break;
        ++code[i];
    }
    return out;
}

/// Every cycle over [n]: all supports of size >= 2, all cyclic orders.
inline std::vector<Cycle> all_cycles(int n) {
    std::vector<Cycle> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> elems;
        for (int v = 1; v <= n; ++v)
            if (mask & (1u << (v - 1))) elems.push_back(v);
        if (elems.size() < 2) continue;
        // fix the minimum in front, permute the rest
        std::vector<int> rest(elems.begin() + 1, elems.end());
        std::sort(rest.begin(), rest.end());
        do {
            std::vector<int> c;
            c.push_back(elems[0]);
            c.insert(c.end(), rest.begin(), rest.end());
            out.push_back(Cycle(c));
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return out;
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do out.push_back(Permutation::from_images(img));
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace ytdist::testing
