#include "ytdist/tree_metric.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace ytdist {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace

TreeMetric TreeMetric::build(int n, const std::vector<Edge>& edges) {
    TreeMetric t;
    if (n < 1) fail(Errc::OutOfRange, "n must be >= 1");
    t.n_ = n;
    t.branch_.assign(n + 1, 0);
    t.depth_.assign(n + 1, 0);

    std::vector<std::vector<std::pair<int, Weight>>> adj(n + 1);
    Dsu dsu(n);
    for (const Edge& e : edges) {
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
            fail(Errc::OutOfRange, "edge endpoint out of [1," + std::to_string(n) + "]");
        if (e.w <= 0) fail(Errc::NonPositiveWeight, "edge weight must be positive");
        if (e.u == e.v || !dsu.unite(e.u, e.v)) fail(Errc::HasCycle, "edges contain a cycle");
        adj[e.u].emplace_back(e.v, e.w);
        adj[e.v].emplace_back(e.u, e.w);
        t.total_weight_ += e.w;
    }
    for (int v = 1; v <= n; ++v)
        if (dsu.find(v) != dsu.find(1)) fail(Errc::NotConnected, "graph is not connected");

    int deg3 = 0, center = 0;
    for (int v = 1; v <= n; ++v) {
        auto d = adj[v].size();
        if (d >= 4) fail(Errc::DegreeTooHigh, "vertex " + std::to_string(v) + " has degree " + std::to_string(d));
        if (d == 3) {
            ++deg3;
            center = v;
        }
    }
    if (deg3 >= 2) fail(Errc::DegreeTooHigh, "more than one vertex of degree three");

    if (deg3 == 1) {
        t.shape_ = TreeShape::YTree;
        t.center_ = center;
        t.depth_[center] = 0;
        // collect the three chains hanging off the center
        std::vector<std::vector<int>> branches;
        for (auto [start, w0] : adj[center]) {
            std::vector<int> chain;
            int prev = center, cur = start;
            Weight d = w0;
            while (true) {
                t.depth_[cur] = d;
                chain.push_back(cur);
                int next = 0;
                Weight wn = 0;
                for (auto [nb, w] : adj[cur])
                    if (nb != prev) {
                        next = nb;
                        wn = w;
                    }
                if (next == 0) break;
                prev = cur;
                cur = next;
                d += wn;
            }
            branches.push_back(std::move(chain));
        }
        std::sort(branches.begin(), branches.end(), [](const auto& a, const auto& b) {
            return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
        });
        for (int i = 0; i < 3; ++i)
            for (int v : branches[i]) t.branch_[v] = i + 1;
    } else {
        t.shape_ = TreeShape::Path;
        t.center_ = 0;
        // root at the smaller-labelled endpoint
        int root = 0;
        for (int v = 1; v <= n && root == 0; ++v)
            if (adj[v].size() <= 1) root = v;
        t.depth_[root] = 0;
        int prev = 0, cur = root;
        while (cur != 0) {
            int next = 0;
            Weight wn = 0;
            for (auto [nb, w] : adj[cur])
                if (nb != prev) {
                    next = nb;
                    wn = w;
                }
            if (next != 0) t.depth_[next] = t.depth_[cur] + wn;
            prev = cur;
            cur = next;
        }
    }
    return t;
}

int TreeMetric::center() const {
    if (shape_ != TreeShape::YTree) fail(Errc::NotAYTree, "tree is a path");
    return center_;
}

int TreeMetric::branch_of(int v) const {
    check_vertex(v);
    if (shape_ != TreeShape::YTree) fail(Errc::NotAYTree, "tree is a path");
    if (v == center_) fail(Errc::CenterHasNoBranch, "center vertex belongs to no branch");
    return branch_[v];
}

Weight TreeMetric::depth(int v) const {
    check_vertex(v);
    return depth_[v];
}

Weight TreeMetric::phi(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    if (a == b) return 0;
    if (shape_ == TreeShape::Path) {
        Weight d = depth_[a] - depth_[b];
        return d < 0 ? -d : d;
    }
    if (a != center_ && b != center_ && branch_[a] == branch_[b]) {
        Weight d = depth_[a] - depth_[b];
        return d < 0 ? -d : d;
    }
    return depth_[a] + depth_[b];
}

bool TreeMetric::on_path(int c, int a, int b) const {
    return phi(a, c) + phi(c, b) == phi(a, b);
}

Weight TreeMetric::displacement(const Permutation& p) const {
    if (p.size() != n_) fail(Errc::SizeMismatch, "permutation size does not match tree");
    Weight d = 0;
    for (int i = 1; i <= n_; ++i) d += phi(i, p(i));
    return d;
}

Weight TreeMetric::inefficiency(const Permutation& p, const Transposition& tau) const {
    if (p.size() != n_) fail(Errc::SizeMismatch, "permutation size does not match tree");
    const int a = tau.a, b = tau.b;
    return 2 * phi(a, b) - phi(a, p(a)) - phi(b, p(b)) + phi(a, p(b)) + phi(b, p(a));
}

bool TreeMetric::is_efficient(const Permutation& p, const Transposition& tau) const {
    if (p.size() != n_) fail(Errc::SizeMismatch, "permutation size does not match tree");
    const int a = tau.a, b = tau.b;
    return on_path(b, a, p(a)) && on_path(a, b, p(b));
}

TreeMetric load_tree(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n) {
                if (n < 1) fail(Errc::OutOfRange, "line " + std::to_string(lineno) + ": n must be >= 1");
            }
            continue;
        }
        Edge e{};
        if (ls >> e.u >> e.v >> e.w)
            edges.push_back(e);
        else if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos)
            fail(Errc::MalformedCycle, "line " + std::to_string(lineno) + ": expected 'u v w'");
    }
    if (n < 0) fail(Errc::LengthMismatch, "missing vertex count line");
    return TreeMetric::build(n, edges);
}

TreeMetric load_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::OutOfRange, "cannot open tree file " + path);
    return load_tree(in);
}

} // namespace ytdist
