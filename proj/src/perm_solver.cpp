#include "ytdist/perm_solver.hpp"

#include <algorithm>

namespace ytdist {

namespace {

void check_sizes(const TreeMetric& t, const Permutation& p) {
    if (p.size() != t.size()) fail(Errc::SizeMismatch, "permutation size does not match tree");
}

int closest_to_center(const TreeMetric& t, const std::vector<int>& elems) {
    const int cv = t.center();
    int best = elems[0];
    for (int v : elems) {
        Weight dv = t.phi(cv, v), db = t.phi(cv, best);
        if (dv < db || (dv == db && v < best)) best = v;
    }
    return best;
}

} // namespace

DistanceReport decompose(const TreeMetric& t, const Permutation& p) {
    check_sizes(t, p);
    DistanceReport r;
    r.displacement = t.displacement(p);
    r.lower_bound = lower_bound(t, p);
    for (const Cycle& c : cycle_decomposition(p)) {
        CycleClass cls = classify_cycle(t, c);
        Transform tf = decompose_cycle(t, c);
        r.per_cycle.push_back({c, cls, tf.total_weight});
        r.transform.append(tf);
    }
    r.distance_upper = r.transform.total_weight;
    return r;
}

DistanceReport decompose_merged(const TreeMetric& t, const Permutation& p) {
    DistanceReport best = decompose(t, p);
    if (!t.is_ytree()) return best;
    const int cv = t.center();

    // Merging is expressed on the permutation itself: q <- q * (u v) joins the
    // cycles through u and v, and p = q'' * (reversed merge transpositions).
    auto finish = [&](const Permutation& q, const std::vector<Transposition>& mergers) {
        DistanceReport r;
        r.displacement = best.displacement;
        r.lower_bound = best.lower_bound;
        r.method = SolveMethod::Merged;
        for (const Cycle& c : cycle_decomposition(q)) {
            CycleClass cls = classify_cycle(t, c);
            Transform tf = decompose_cycle(t, c);
            r.per_cycle.push_back({c, cls, tf.total_weight});
            r.transform.append(tf);
        }
        for (auto m = mergers.rbegin(); m != mergers.rend(); ++m)
            r.transform.append(t, m->a, m->b);
        r.distance_upper = r.transform.total_weight;
        return r;
    };

    std::vector<Cycle> unbalanced;
    for (const Cycle& c : cycle_decomposition(p))
        if (classify_cycle(t, c).kind == CycleKind::Unbalanced) unbalanced.push_back(c);

    if (!unbalanced.empty()) {
        // pull every unbalanced cycle into one center-containing cycle,
        // longest first so the single surcharge lands on the longest cycle
        std::sort(unbalanced.begin(), unbalanced.end(), [](const Cycle& a, const Cycle& b) {
            if (a.length() != b.length()) return a.length() > b.length();
            return a.elems[0] < b.elems[0];
        });
        Permutation q = p;
        std::vector<Transposition> mergers;
        for (const Cycle& c : unbalanced) {
            int u = closest_to_center(t, c.elems);
            q.apply_transposition(u, cv);
            mergers.emplace_back(u, cv);
        }
        DistanceReport cand = finish(q, mergers);
        if (cand.distance_upper < best.distance_upper) best = std::move(cand);
    }

    // joining two unbalanced cycles by an efficient transposition keeps the
    // displacement budget intact and can cancel their center surcharges;
    // quadratic pair scan, so only attempted at moderate support sizes
    if (unbalanced.size() >= 2 && support(p).size() <= 4096) {
        Permutation q = p;
        std::vector<Transposition> mergers;
        while (true) {
            std::vector<int> cid(t.size() + 1, -1);
            int groups = 0;
            for (const Cycle& c : cycle_decomposition(q)) {
                if (classify_cycle(t, c).kind != CycleKind::Unbalanced) continue;
                for (int v : c.elems) cid[v] = groups;
                ++groups;
            }
            if (groups < 2) break;
            int bu = 0, bv = 0;
            Weight bw = 0;
            for (int u = 1; u <= t.size(); ++u) {
                if (cid[u] < 0) continue;
                for (int v = u + 1; v <= t.size(); ++v) {
                    if (cid[v] < 0 || cid[v] == cid[u]) continue;
                    if (t.inefficiency(q, Transposition(u, v)) != 0) continue;
                    Weight w = t.phi(u, v);
                    if (bu == 0 || w < bw) {
                        bu = u;
                        bv = v;
                        bw = w;
                    }
                }
            }
            if (bu == 0) break;
            q.apply_transposition(bu, bv);
            mergers.emplace_back(bu, bv);
        }
        if (!mergers.empty()) {
            DistanceReport cand = finish(q, mergers);
            if (cand.distance_upper < best.distance_upper) best = std::move(cand);
        }
    }
    return best;
}

Weight lower_bound(const TreeMetric& t, const Permutation& p) {
    check_sizes(t, p);
    const Weight half = t.displacement(p) / 2;
    if (!t.is_ytree()) return half;
    const int cv = t.center();
    if (p(cv) != cv) return half;
    std::int64_t l[4][4] = {};
    Weight closest = -1;
    for (int i = 1; i <= t.size(); ++i) {
        if (p(i) == i) continue;
        Weight d = t.phi(cv, i);
        if (closest < 0 || d < closest) closest = d;
        int bi = t.branch_of(i), bj = t.branch_of(p(i));
        if (bi != bj) ++l[bi][bj];
    }
    if (closest < 0) return half; // identity
    bool unbalanced = l[1][2] != l[2][1] || l[1][3] != l[3][1] || l[2][3] != l[3][2];
    return unbalanced ? half + closest : half;
}

VerificationReport verify_transform(const TreeMetric& t, const Permutation& p,
                                    const std::vector<Transposition>& taus) {
    check_sizes(t, p);
    VerificationReport rep;
    rep.displacement = t.displacement(p);
    // sort p by applying the sequence in reverse; the inefficiency telescope
    // runs along this sorting direction
    Permutation q = p;
    for (auto it = taus.rbegin(); it != taus.rend(); ++it) {
        rep.inefficiency_sum += t.inefficiency(q, *it);
        rep.total_weight += t.phi(it->a, it->b);
        q.apply_transposition(it->a, it->b);
    }
    rep.product_matches = q.is_identity();
    rep.gap = rep.total_weight - rep.displacement / 2;
    rep.identity_holds = 2 * rep.gap == rep.inefficiency_sum;
    return rep;
}

std::vector<Transposition> normalize_sorting(const TreeMetric& t, const Permutation& p,
                                             std::vector<Transposition> taus) {
    check_sizes(t, p);
    {
        Permutation q = p;
        for (const Transposition& tau : taus) q.apply_transposition(tau.a, tau.b);
        if (!q.is_identity()) fail(Errc::NonSortingInput, "sequence does not sort the permutation");
    }
    const int k = static_cast<int>(taus.size());
    std::vector<int> visits(k, 0);
    while (true) {
        std::vector<char> bad(k, 0);
        Permutation suffix(p.size()); // product taus[i..k)
        for (int i = k - 1; i >= 0; --i) {
            suffix = compose(transposition_to_perm(taus[i], p.size()), suffix);
            bad[i] = suffix(taus[i].a) == taus[i].a && suffix(taus[i].b) == taus[i].b;
        }
        int b = 0;
        while (b < k && !bad[b]) ++b;
        if (b == k) return taus;
        if (++visits[b] > k)
            fail(Errc::NoProgress, "position " + std::to_string(b + 1) + " stays disjoint from its suffix");
        std::rotate(taus.begin() + b, taus.begin() + b + 1, taus.end());
    }
}

} // namespace ytdist
