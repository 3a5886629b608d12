#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ytdist/errors.hpp"
#include "ytdist/permutation.hpp"

namespace ytdist {

/// Exact edge/path weight. Displacements of permutations are always even,
/// so half-displacements stay integral.
using Weight = std::int64_t;

struct Edge {
    int u;
    int v;
    Weight w;
};

enum class TreeShape { Path, YTree };

/// Positive-edge-weighted tree on [n] that is either a simple path or a
/// Y-tree (exactly one vertex of degree three). Immutable after build; all
/// queries are O(1) after linear preprocessing.
class TreeMetric {
public:
    static TreeMetric build(int n, const std::vector<Edge>& edges);

    int size() const { return n_; }
    TreeShape shape() const { return shape_; }
    bool is_ytree() const { return shape_ == TreeShape::YTree; }

    /// The unique degree-3 vertex. Throws NotAYTree on paths.
    int center() const;

    /// Sum of edge weights on the unique a,b-path.
    Weight phi(int a, int b) const;

    /// True iff c lies on the unique a,b-path (endpoints included).
    bool on_path(int c, int a, int b) const;

    /// Branch index in {1,2,3}; branches ordered by smallest vertex label.
    int branch_of(int v) const;

    /// Distance from the center (YTree) or from the root endpoint (Path).
    Weight depth(int v) const;

    Weight total_weight() const { return total_weight_; }

    /// D(p) = sum over i of phi(i, p(i)).
    Weight displacement(const Permutation& p) const;

    /// 2 phi(a,b) - (D(p) - D(p (a b))); always >= 0.
    Weight inefficiency(const Permutation& p, const Transposition& tau) const;

    /// on_path(a, b, p(b)) && on_path(b, a, p(a)); equals (inefficiency == 0).
    bool is_efficient(const Permutation& p, const Transposition& tau) const;

private:
    TreeMetric() = default;

    void check_vertex(int v) const {
        if (v < 1 || v > n_) fail(Errc::OutOfRange, "vertex " + std::to_string(v));
    }

    int n_ = 0;
    TreeShape shape_ = TreeShape::Path;
    int center_ = 0;                // 0 when shape is Path
    std::vector<int> branch_;       // 1..3 per vertex (YTree); 0 for the center
    std::vector<Weight> depth_;
    Weight total_weight_ = 0;
};

/// Tree file format: optional '#' comment lines, first data line "n",
/// then n-1 lines "u v w" with integer w > 0.
TreeMetric load_tree(std::istream& in);
TreeMetric load_tree_file(const std::string& path);

} // namespace ytdist
