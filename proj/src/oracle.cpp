#include "ytdist/oracle.hpp"

#include <functional>
#include <queue>
#include <unordered_set>

namespace ytdist {

std::uint64_t pack_permutation(const Permutation& p) {
    if (p.size() > 16) fail(Errc::BudgetExceeded, "nibble keys support n <= 16");
    std::uint64_t key = 0;
    for (int i = 1; i <= p.size(); ++i)
        key = (key << 4) | static_cast<std::uint64_t>(p(i) - 1);
    return key;
}

namespace {

struct SearchOut {
    std::unordered_map<std::uint64_t, Weight> dist;
    std::unordered_map<std::uint64_t, std::uint32_t> move; // (a << 8) | b, step into the state
};

// Dijkstra from `start`; stops once `target` is settled, or sweeps everything
// when target is null. Pops tie-break on the packed key, so the search order
// and the recorded moves are deterministic.
template <typename Phi>
SearchOut dijkstra(int n, Phi phi, const Permutation& start, const std::uint64_t* target,
                   const SearchBudget& budget) {
    if (n > budget.max_n) fail(Errc::BudgetExceeded, "permutation size exceeds oracle budget");
    if (n > 16) fail(Errc::BudgetExceeded, "oracle keys support n <= 16");
    SearchOut out;
    using Entry = std::pair<Weight, std::uint64_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    std::unordered_set<std::uint64_t> settled;
    const std::uint64_t skey = pack_permutation(start);
    out.dist[skey] = 0;
    pq.push({0, skey});
    while (!pq.empty()) {
        auto [d, key] = pq.top();
        pq.pop();
        if (!settled.insert(key).second) continue;
        if (target && key == *target) break;
        for (int a = 1; a <= n; ++a) {
            const int sa = 4 * (n - a);
            for (int b = a + 1; b <= n; ++b) {
                const int sb = 4 * (n - b);
                const std::uint64_t va = (key >> sa) & 0xF, vb = (key >> sb) & 0xF;
                const std::uint64_t nk = key ^ ((va ^ vb) << sa) ^ ((va ^ vb) << sb);
                const Weight nd = d + phi(a, b);
                if (budget.max_weight && nd > *budget.max_weight) continue;
                auto [it, inserted] = out.dist.try_emplace(nk, nd);
                if (!inserted && it->second <= nd) continue;
                it->second = nd;
                out.move[nk] = static_cast<std::uint32_t>((a << 8) | b);
                pq.push({nd, nk});
            }
        }
        if (static_cast<std::int64_t>(out.dist.size()) > budget.max_states)
            fail(Errc::BudgetExceeded, "oracle state budget exceeded");
    }
    return out;
}

template <typename Phi>
std::pair<Weight, Transform> shortest_sorting(int n, Phi phi, const Permutation& p,
                                              const SearchBudget& budget) {
    const std::uint64_t target = pack_permutation(Permutation(n));
    SearchOut out = dijkstra(n, phi, p, &target, budget);
    auto it = out.dist.find(target);
    if (it == out.dist.end()) fail(Errc::BudgetExceeded, "identity not reached within budget");
    Transform tf;
    // Walking the parent chain from the identity back to p yields the moves in
    // exactly the product order for a decomposition of p.
    std::uint64_t key = target;
    const std::uint64_t skey = pack_permutation(p);
    while (key != skey) {
        std::uint32_t mv = out.move.at(key);
        int a = static_cast<int>(mv >> 8), b = static_cast<int>(mv & 0xFF);
        tf.taus.emplace_back(a, b);
        tf.total_weight += phi(a, b);
        const int sa = 4 * (n - a), sb = 4 * (n - b);
        const std::uint64_t va = (key >> sa) & 0xF, vb = (key >> sb) & 0xF;
        key = key ^ ((va ^ vb) << sa) ^ ((va ^ vb) << sb);
        if (tf.taus.size() > out.dist.size()) fail(Errc::Internal, "cyclic parent chain");
    }
    return {it->second, std::move(tf)};
}

} // namespace

std::pair<Weight, Transform> exact_distance(const TreeMetric& t, const Permutation& p,
                                            const SearchBudget& budget) {
    if (p.size() != t.size()) fail(Errc::SizeMismatch, "permutation size does not match tree");
    return shortest_sorting(t.size(), [&](int a, int b) { return t.phi(a, b); }, p, budget);
}

Weight exact_distance_pair(const TreeMetric& t, const Permutation& p, const Permutation& q,
                           const SearchBudget& budget) {
    if (p.size() != q.size()) fail(Errc::SizeMismatch, "permutations of different sizes");
    return exact_distance(t, compose(q.inverse(), p), budget).first;
}

Weight DistanceTable::at(const Permutation& p) const {
    auto it = dist.find(pack_permutation(p));
    if (it == dist.end()) fail(Errc::Internal, "permutation missing from distance table");
    return it->second;
}

DistanceTable oracle_all_distances(const TreeMetric& t, const SearchBudget& budget) {
    DistanceTable table;
    table.n = t.size();
    SearchOut out = dijkstra(
        t.size(), [&](int a, int b) { return t.phi(a, b); }, Permutation(t.size()), nullptr, budget);
    table.dist = std::move(out.dist);
    return table;
}

WeightTable WeightTable::complete_unit(int n) {
    WeightTable wt;
    wt.n = n;
    wt.w.assign(static_cast<std::size_t>(n + 1) * (n + 1), 1);
    for (int a = 0; a <= n; ++a) wt.w[static_cast<std::size_t>(a) * (n + 1) + a] = 0;
    return wt;
}

WeightTable WeightTable::from_tree(const TreeMetric& t) {
    WeightTable wt;
    wt.n = t.size();
    wt.w.assign(static_cast<std::size_t>(wt.n + 1) * (wt.n + 1), 0);
    for (int a = 1; a <= wt.n; ++a)
        for (int b = 1; b <= wt.n; ++b) wt.w[static_cast<std::size_t>(a) * (wt.n + 1) + b] = t.phi(a, b);
    return wt;
}

std::pair<Weight, Transform> exact_distance_table(const WeightTable& wt, const Permutation& p,
                                                  const SearchBudget& budget) {
    if (p.size() != wt.n) fail(Errc::SizeMismatch, "permutation size does not match weight table");
    return shortest_sorting(wt.n, [&](int a, int b) { return wt.phi(a, b); }, p, budget);
}

} // namespace ytdist
