#include "ytdist/cycle_solver.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace ytdist {

const char* cycle_kind_name(CycleKind k) {
    switch (k) {
        case CycleKind::OnPath: return "OnPath";
        case CycleKind::ContainsCenter: return "ContainsCenter";
        case CycleKind::Balanced: return "Balanced";
        case CycleKind::Unbalanced: return "Unbalanced";
    }
    return "Unknown";
}

namespace {

inline void bump(SolveStats* s, std::int64_t k = 1) {
    if (s) s->ops += k;
}

/// Linear coordinates of the cycle elements along the path that carries them.
/// Throws NotOnPath if the support touches all three branches.
std::vector<Weight> path_coords(const TreeMetric& t, const std::vector<int>& elems) {
    std::vector<Weight> coord(elems.size());
    if (!t.is_ytree()) {
        for (std::size_t i = 0; i < elems.size(); ++i) coord[i] = t.depth(elems[i]);
        return coord;
    }
    const int cv = t.center();
    int b_lo = 0, b_hi = 0;
    for (int v : elems) {
        if (v == cv) continue;
        int b = t.branch_of(v);
        if (b_lo == 0) b_lo = b;
        else if (b != b_lo && b_hi == 0) b_hi = b;
        else if (b != b_lo && b != b_hi)
            fail(Errc::NotOnPath, "cycle support spans all three branches");
    }
    if (b_hi != 0 && b_hi < b_lo) std::swap(b_lo, b_hi);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        int v = elems[i];
        if (v == cv) coord[i] = 0;
        else if (b_hi != 0 && t.branch_of(v) == b_lo) coord[i] = -t.depth(v);
        else coord[i] = t.depth(v);
    }
    return coord;
}

/// Static range-argmin over one materialized subsequence of the cycle.
struct Arena {
    std::vector<int> vert;
    std::vector<Weight> coord;
    static constexpr int kBlock = 32;
    std::vector<int> block_arg;
    std::vector<std::vector<int>> table; // sparse table over block argmins

    void build() {
        const int n = static_cast<int>(coord.size());
        const int nb = (n + kBlock - 1) / kBlock;
        block_arg.resize(nb);
        for (int b = 0; b < nb; ++b) {
            int lo = b * kBlock, hi = std::min(n, lo + kBlock);
            int best = lo;
            for (int i = lo + 1; i < hi; ++i)
                if (coord[i] < coord[best]) best = i;
            block_arg[b] = best;
        }
        table.assign(1, block_arg);
        for (int k = 1; (1 << k) <= nb; ++k) {
            const auto& prev = table.back();
            std::vector<int> row(nb - (1 << k) + 1);
            for (std::size_t b = 0; b < row.size(); ++b) {
                int x = prev[b], y = prev[b + (std::size_t(1) << (k - 1))];
                row[b] = coord[x] < coord[y] ? x : y;
            }
            table.push_back(std::move(row));
        }
    }

    int argmin(int lo, int hi) const { // [lo, hi) nonempty
        int best = lo;
        auto upd = [&](int i) {
            if (coord[i] < coord[best]) best = i;
        };
        int bl = (lo + kBlock - 1) / kBlock, bh = hi / kBlock;
        if (bl >= bh) {
            for (int i = lo + 1; i < hi; ++i) upd(i);
            return best;
        }
        for (int i = lo + 1; i < bl * kBlock; ++i) upd(i);
        for (int i = bh * kBlock; i < hi; ++i) upd(i);
        unsigned len = static_cast<unsigned>(bh - bl);
        int k = std::bit_width(len) - 1;
        upd(table[k][bl]);
        upd(table[k][bh - (1 << k)]);
        return best;
    }
};

/// Iterative path solver on a raw element sequence (any rotation). Segments
/// keep their leftmost-on-path element at a boundary, so every factor is a
/// contiguous slice except when the head sits at the right edge; only that
/// wrap-around factor gets copied out.
void path_td_run(const TreeMetric& t, std::vector<int> elems, Transform& out, SolveStats* stats) {
    const int m = static_cast<int>(elems.size());
    if (m < 2) fail(Errc::Internal, "degenerate cycle in path decomposition");
    if (m == 2) {
        bump(stats);
        out.append(t, elems[0], elems[1]);
        return;
    }
    std::vector<Weight> coords = path_coords(t, elems);
    int start = static_cast<int>(std::min_element(coords.begin(), coords.end()) - coords.begin());
    std::rotate(elems.begin(), elems.begin() + start, elems.end());
    std::rotate(coords.begin(), coords.begin() + start, coords.end());
    bump(stats, 2 * m);

    std::deque<Arena> arenas;
    arenas.emplace_back();
    arenas.back().vert = std::move(elems);
    arenas.back().coord = std::move(coords);
    arenas.back().build();

    struct Item {
        int arena; // -1 marks a pending transposition (a b)
        int lo, hi;
        int a, b;
    };
    std::vector<Item> work;
    work.push_back({0, 0, m, 0, 0});
    while (!work.empty()) {
        Item it = work.back();
        work.pop_back();
        bump(stats);
        if (it.arena < 0) {
            out.append(t, it.a, it.b);
            continue;
        }
        const Arena& A = arenas[it.arena];
        const int lo = it.lo, hi = it.hi;
        if (hi - lo == 2) {
            out.append(t, A.vert[lo], A.vert[lo + 1]);
            continue;
        }
        int p = A.argmin(lo, hi);
        int q;
        if (p == lo) q = A.argmin(lo + 1, hi);
        else if (p == hi - 1) q = A.argmin(lo, hi - 1);
        else fail(Errc::Internal, "path segment head left the boundary");
        const int pred = (p == lo) ? hi - 1 : p - 1;
        if (q == pred) {
            // peel: factor out (v1 vlast), applied after the shorter cycle
            work.push_back({-1, 0, 0, A.vert[p], A.vert[pred]});
            if (p == lo) work.push_back({it.arena, lo + 1, hi, 0, 0});
            else work.push_back({it.arena, lo, hi - 1, 0, 0});
        } else if (p == lo) {
            work.push_back({it.arena, q, hi, 0, 0});
            work.push_back({it.arena, lo, q + 1, 0, 0});
        } else {
            // head at the right edge: the (v1 .. vt) factor wraps, copy it
            Arena fresh;
            fresh.vert.reserve(q - lo + 2);
            fresh.coord.reserve(q - lo + 2);
            fresh.vert.push_back(A.vert[p]);
            fresh.coord.push_back(A.coord[p]);
            fresh.vert.insert(fresh.vert.end(), A.vert.begin() + lo, A.vert.begin() + q + 1);
            fresh.coord.insert(fresh.coord.end(), A.coord.begin() + lo, A.coord.begin() + q + 1);
            fresh.build();
            bump(stats, q - lo + 2);
            const int id = static_cast<int>(arenas.size());
            arenas.push_back(std::move(fresh));
            work.push_back({it.arena, q, hi - 1, 0, 0});
            work.push_back({id, 0, static_cast<int>(arenas[id].vert.size()), 0, 0});
        }
    }
}

/// Iterative center-run peeling on the cycle (cv arr[0] .. arr[last]).
void central_run(const TreeMetric& t, std::vector<int> arr, Transform& out, SolveStats* stats) {
    const int cv = t.center();
    const int m1 = static_cast<int>(arr.size());
    int cnt[4] = {0, 0, 0, 0};
    for (int v : arr) ++cnt[t.branch_of(v)];
    bump(stats, m1);

    std::vector<std::vector<int>> pieces;
    int s = 0;
    while ((cnt[1] > 0) + (cnt[2] > 0) + (cnt[3] > 0) == 3) {
        const int b = t.branch_of(arr[s]);
        int r = s;
        while (r < m1 && t.branch_of(arr[r]) == b) {
            --cnt[b];
            ++r;
        }
        bump(stats, r - s);
        std::vector<int> piece;
        piece.reserve(r - s + 1);
        piece.push_back(cv);
        piece.insert(piece.end(), arr.begin() + s, arr.begin() + r);
        pieces.push_back(std::move(piece));
        s = r;
    }
    std::vector<int> fin;
    fin.reserve(m1 - s + 1);
    fin.push_back(cv);
    fin.insert(fin.end(), arr.begin() + s, arr.end());
    path_td_run(t, std::move(fin), out, stats);
    for (auto p = pieces.rbegin(); p != pieces.rend(); ++p)
        path_td_run(t, std::move(*p), out, stats);
}

} // namespace

CycleClass classify_cycle(const TreeMetric& t, const Cycle& c) {
    CycleClass out{CycleKind::OnPath, {}};
    if (!t.is_ytree()) return out;
    const int cv = t.center();
    const auto& e = c.elems;
    const int m = c.length();
    bool has_center = false;
    int b1 = 0, b2 = 0;
    bool three = false;
    for (int v : e) {
        if (v == cv) {
            has_center = true;
            continue;
        }
        int b = t.branch_of(v);
        if (b1 == 0) b1 = b;
        else if (b != b1 && b2 == 0) b2 = b;
        else if (b != b1 && b != b2) three = true;
    }
    for (int i = 0; i < m; ++i) {
        int u = e[i], v = e[(i + 1) % m];
        if (u == cv || v == cv) continue;
        int bu = t.branch_of(u), bv = t.branch_of(v);
        if (bu != bv) ++out.counts.l[bu][bv];
    }
    if (!three) return out;
    if (has_center) {
        out.kind = CycleKind::ContainsCenter;
        return out;
    }
    const auto& l = out.counts.l;
    bool balanced = l[1][2] == l[2][1] && l[1][3] == l[3][1] && l[2][3] == l[3][2];
    out.kind = balanced ? CycleKind::Balanced : CycleKind::Unbalanced;
    return out;
}

Transform path_td(const TreeMetric& t, const Cycle& c, SolveStats* stats) {
    Transform out;
    out.taus.reserve(c.length() - 1);
    path_td_run(t, c.elems, out, stats);
    return out;
}

Transform central_td(const TreeMetric& t, const Cycle& c, SolveStats* stats) {
    const int cv = t.center();
    auto it = std::find(c.elems.begin(), c.elems.end(), cv);
    if (it == c.elems.end()) fail(Errc::CenterNotInCycle, "cycle does not move the central vertex");
    std::vector<int> arr(it + 1, c.elems.end());
    arr.insert(arr.end(), c.elems.begin(), it);
    Transform out;
    out.taus.reserve(c.length() - 1);
    central_run(t, std::move(arr), out, stats);
    return out;
}

Transform balanced_td(const TreeMetric& t, const Cycle& c, SolveStats* stats) {
    CycleClass cls = classify_cycle(t, c);
    Transform out;
    if (cls.kind == CycleKind::OnPath) {
        path_td_run(t, c.elems, out, stats);
        return out;
    }
    if (cls.kind != CycleKind::Balanced)
        fail(Errc::NotBalanced, std::string("cycle is ") + cycle_kind_name(cls.kind));
    const int cv = t.center();
    const int m = c.length();
    std::vector<int> next(t.size() + 1, 0);
    for (int i = 0; i < m; ++i) next[c.elems[i]] = c.elems[(i + 1) % m];
    int cnt[4] = {0, 0, 0, 0};
    for (int v : c.elems) ++cnt[t.branch_of(v)];
    bump(stats, 2 * m);

    std::vector<std::vector<int>> left, right;
    std::vector<std::pair<int, int>> stack; // pending branch-changing arcs
    int a = c.elems[0];
    std::int64_t guard = 0;
    auto step = [&] {
        if (++guard > 4 * static_cast<std::int64_t>(m))
            fail(Errc::Internal, "closed walk revisited vertices");
        bump(stats);
    };
    while ((cnt[1] > 0) + (cnt[2] > 0) + (cnt[3] > 0) == 3) {
        int c1 = a;
        while (t.branch_of(next[c1]) == t.branch_of(c1)) {
            c1 = next[c1];
            step();
        }
        const int c2 = next[c1];
        a = c2;
        step();
        if (stack.empty() || t.branch_of(c2) != t.branch_of(stack.back().first)) {
            stack.emplace_back(c1, c2);
            continue;
        }
        auto [b1, b2] = stack.back();
        stack.pop_back();
        std::vector<int> piece;
        if (t.phi(cv, b1) < t.phi(cv, c2)) {
            for (int v = b1; v != c2; v = next[v]) { // (b1 .. c1)
                piece.push_back(v);
                step();
            }
            right.push_back(piece);
        } else {
            for (int v = b2;; v = next[v]) { // (b2 .. c2)
                piece.push_back(v);
                step();
                if (v == c2) break;
            }
            left.push_back(piece);
        }
        // drop the excised run from the branch census; the retained endpoint
        // is piece.front() in the first case and piece.back() in the second
        bool keep_front = t.phi(cv, b1) < t.phi(cv, c2);
        for (std::size_t i = 0; i < piece.size(); ++i) {
            if (keep_front && i == 0) continue;
            if (!keep_front && i + 1 == piece.size()) continue;
            --cnt[t.branch_of(piece[i])];
        }
        next[b1] = c2;
    }
    std::vector<int> fin;
    int v = a;
    do {
        fin.push_back(v);
        v = next[v];
        step();
    } while (v != a);

    for (auto& p : left) path_td_run(t, std::move(p), out, stats);
    path_td_run(t, std::move(fin), out, stats);
    for (auto p = right.rbegin(); p != right.rend(); ++p)
        path_td_run(t, std::move(*p), out, stats);
    return out;
}

Transform unbalanced_td(const TreeMetric& t, const Cycle& c, SolveStats* stats) {
    CycleClass cls = classify_cycle(t, c);
    if (cls.kind != CycleKind::Unbalanced)
        fail(Errc::NotUnbalanced, std::string("cycle is ") + cycle_kind_name(cls.kind));
    const int cv = t.center();
    const int m = c.length();
    int j = 0;
    for (int i = 1; i < m; ++i) {
        Weight di = t.phi(cv, c.elems[i]);
        Weight dj = t.phi(cv, c.elems[j]);
        if (di < dj || (di == dj && c.elems[i] < c.elems[j])) j = i;
    }
    bump(stats, m);
    std::vector<int> rot(c.elems.begin() + j, c.elems.end());
    rot.insert(rot.end(), c.elems.begin(), c.elems.begin() + j);
    const int vj = rot[0];
    int k = 1;
    while (k < m && t.branch_of(rot[k]) == t.branch_of(vj)) ++k;
    if (k == m) fail(Errc::Internal, "unbalanced cycle confined to one branch");

    // merged = (vj cv rot[k] .. rot[m-1]); the original cycle is merged*(vj cv)
    // followed by the same-branch run (vj rot[1] .. rot[k-1]) when present
    std::vector<int> arr(rot.begin() + k, rot.end());
    arr.push_back(vj);
    Transform out;
    out.taus.reserve(m + 1);
    central_run(t, std::move(arr), out, stats);
    out.append(t, vj, cv);
    if (k > 1) {
        std::vector<int> run(rot.begin(), rot.begin() + k);
        path_td_run(t, std::move(run), out, stats);
    }
    return out;
}

Weight delta_cycle(const TreeMetric& t, const Cycle& c) {
    Weight d = 0;
    const int m = c.length();
    for (int i = 0; i < m; ++i) d += t.phi(c.elems[i], c.elems[(i + 1) % m]);
    if (classify_cycle(t, c).kind == CycleKind::Unbalanced) {
        const int cv = t.center();
        Weight best = t.phi(cv, c.elems[0]);
        for (int v : c.elems) best = std::min(best, t.phi(cv, v));
        return d / 2 + best;
    }
    return d / 2;
}

Transform decompose_cycle(const TreeMetric& t, const Cycle& c, SolveStats* stats) {
    switch (classify_cycle(t, c).kind) {
        case CycleKind::OnPath: return path_td(t, c, stats);
        case CycleKind::ContainsCenter: return central_td(t, c, stats);
        case CycleKind::Balanced: return balanced_td(t, c, stats);
        case CycleKind::Unbalanced: return unbalanced_td(t, c, stats);
    }
    fail(Errc::Internal, "unreachable cycle class");
}

} // namespace ytdist
