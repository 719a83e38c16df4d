#pragma once

// Points-on-a-circle algorithms: forbidden boundary chains, the O(n) sliding
// window MaxMin1, the linear threshold matching construction, boundary-edge
// MinMax1 / MinMin, and span-based MaxMax. All comparisons use rational arc
// spans; chord length is strictly increasing in span on [0, 1/2].

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ncm/convex.hpp"
#include "ncm/instance.hpp"

namespace ncm {

using ForbiddenMask = std::vector<char>;  // per boundary edge (i, i+1), circular

inline std::vector<Scalar> boundary_spans(const Instance& inst) {
    const int n2 = static_cast<int>(inst.size());
    std::vector<Scalar> g(n2);
    for (int i = 0; i < n2; ++i) g[i] = chord_span(inst, i, (i + 1) % n2);
    return g;
}

// Longest circular run of true entries; mask.size() if all are true.
inline int max_forbidden_chain(const ForbiddenMask& mask) {
    const int m = static_cast<int>(mask.size());
    int best = 0, run = 0;
    for (int i = 0; i < 2 * m; ++i) {  // doubled scan covers the wrap
        if (mask[i % m]) {
            ++run;
            best = std::max(best, std::min(run, m));
        } else {
            run = 0;
        }
    }
    return best;
}

// A perfect non-crossing matching avoiding the forbidden boundary edges
// exists iff the longest forbidden chain is shorter than n.
inline bool has_matching_avoiding(const ForbiddenMask& mask) {
    return max_forbidden_chain(mask) < static_cast<int>(mask.size()) / 2;
}

struct WindowResult {
    Scalar value;
    int window_start = 0;
};

// Minimum over all circular windows of size `window` of the window maximum.
// Ties inside the monotone queue keep the earliest index; the outer minimum
// keeps the earliest window.
inline WindowResult sliding_window_min_of_max(const std::vector<Scalar>& values,
                                              int window) {
    const int m = static_cast<int>(values.size());
    if (m < 1 || window < 1 || window > m)
        throw std::invalid_argument("sliding_window_min_of_max: bad window");
    std::deque<int> q;  // indices into the doubled sequence, values decreasing
    std::optional<WindowResult> best;
    for (int i = 0; i < m + window - 1; ++i) {
        const Scalar& v = values[i % m];
        while (!q.empty() && values[q.back() % m] < v) q.pop_back();
        q.push_back(i);
        if (i < window - 1) continue;
        int start = i - window + 1;
        if (q.front() < start) q.pop_front();
        const Scalar& mx = values[q.front() % m];
        if (!best || mx < best->value) best = WindowResult{mx, start};
    }
    return *best;
}

// Bucket process from the threshold lemma: repeatedly take a longest
// forbidden chain with first endpoint i and match (pred(i), i); chains never
// merge and shrink by one at an end per step. Remaining all-allowed points
// are matched as consecutive pairs.
inline Matching construct_matching_with_threshold(const Instance& inst, const Scalar& mu) {
    const int n2 = static_cast<int>(inst.size());
    if (n2 <= 0 || n2 % 2 != 0)
        throw std::invalid_argument("construct_matching_with_threshold: bad size");
    std::vector<Scalar> gaps = boundary_spans(inst);
    ForbiddenMask mask(n2);
    for (int i = 0; i < n2; ++i) mask[i] = gaps[i] < mu;
    if (!has_matching_avoiding(mask))
        throw std::runtime_error("construct_matching_with_threshold: no matching avoids mask");

    // circular doubly linked list of alive points
    std::vector<int> nxt(n2), prv(n2);
    for (int i = 0; i < n2; ++i) {
        nxt[i] = (i + 1) % n2;
        prv[i] = (i + n2 - 1) % n2;
    }

    // chains of forbidden edges: (first point, last point, length)
    struct Chain {
        int first, last, len;
    };
    std::vector<Chain> chains;
    std::vector<int> chain_start_at(n2, -1), chain_end_at(n2, -1);
    {
        bool all_forbidden = true;
        for (int i = 0; i < n2; ++i)
            if (!mask[i]) all_forbidden = false;
        if (!all_forbidden) {
            for (int i = 0; i < n2; ++i) {
                // edge e is (e, e+1); a chain starts at edge i if forbidden
                // and the previous edge is allowed
                if (!mask[i] || mask[(i + n2 - 1) % n2]) continue;
                int len = 0, e = i;
                while (mask[e]) {
                    ++len;
                    e = (e + 1) % n2;
                }
                int id = static_cast<int>(chains.size());
                chains.push_back({i, e, len});  // covers edges i..e-1, points i..e
                chain_start_at[i] = id;
                chain_end_at[e] = id;
            }
        }
    }

    const int n = n2 / 2;
    std::vector<std::vector<int>> bucket(n);
    for (int id = 0; id < static_cast<int>(chains.size()); ++id)
        bucket[chains[id].len].push_back(id);

    Matching m;
    std::vector<char> alive(n2, 1);
    auto shrink_front = [&](int id) {  // first edge of chain `id` vanished
        Chain& c = chains[id];
        chain_start_at[c.first] = -1;
        c.first = nxt[c.first];
        if (--c.len > 0) {
            chain_start_at[c.first] = id;
            bucket[c.len].push_back(id);
        } else {
            chain_end_at[c.last] = -1;
        }
    };
    auto shrink_back = [&](int id) {  // last edge of chain `id` vanished
        Chain& c = chains[id];
        chain_end_at[c.last] = -1;
        c.last = prv[c.last];
        if (--c.len > 0) {
            chain_end_at[c.last] = id;
            bucket[c.len].push_back(id);
        } else {
            chain_start_at[c.first] = -1;
        }
    };

    for (int b = n - 1; b >= 1; --b) {
        while (!bucket[b].empty()) {
            int id = bucket[b].back();
            bucket[b].pop_back();
            if (chains[id].len != b) continue;  // stale entry, lives in a lower bucket
            int i = chains[id].first;
            int p = prv[i];
            // (p, i) is allowed: it is the boundary edge preceding the chain
            // or a diagonal of the original set
            m.add(p, i);
            alive[p] = alive[i] = 0;
            int a = prv[p], z = nxt[i];
            // the matched chain loses its first edge; a chain ending at p, if
            // any, loses its last edge
            int id2 = chain_end_at[p];
            shrink_front(id);
            if (id2 >= 0) shrink_back(id2);
            nxt[a] = z;
            prv[z] = a;
        }
    }

    // all remaining boundary edges are allowed: pair consecutive alive points
    int start = -1;
    for (int i = 0; i < n2; ++i)
        if (alive[i]) {
            start = i;
            break;
        }
    if (start >= 0) {
        int i = start;
        do {
            int j = nxt[i];
            m.add(i, j);
            i = nxt[j];
        } while (i != start);
    }
    m.normalize();
    if (static_cast<int>(m.pairs.size()) != n)
        throw std::logic_error("construct_matching_with_threshold: not perfect");
    return m;
}

// MaxMin1: the optimum is the minimum over all windows of n consecutive
// boundary spans of the window maximum.
inline SolveOutcome maxmin1_circle(const Instance& inst, bool want_matching = true) {
    const int n2 = static_cast<int>(inst.size());
    std::vector<Scalar> gaps = boundary_spans(inst);
    WindowResult w = sliding_window_min_of_max(gaps, n2 / 2);
    SolveOutcome out{w.value, {-1, -1}, std::nullopt, "circle-sliding-window"};
    Matching m = construct_matching_with_threshold(inst, w.value);
    auto [val, witness] = objective_value(inst, m, Agg::Min);
    if (val != w.value) throw std::logic_error("maxmin1_circle: construction misses value");
    out.witness = witness;
    if (want_matching) out.matching = std::move(m);
    return out;
}

// MinMax1: some optimal matching uses only boundary edges, and there are just
// two all-boundary matchings.
inline SolveOutcome minmax1_circle(const Instance& inst, bool want_matching = true) {
    const int n2 = static_cast<int>(inst.size());
    std::optional<Scalar> best;
    IndexPair best_w{-1, -1};
    std::optional<Matching> best_m;
    for (int par = 0; par < 2; ++par) {
        Matching m;
        for (int i = par; i < n2 + par; i += 2) m.add(i % n2, (i + 1) % n2);
        m.normalize();
        auto [val, w] = objective_value(inst, m, Agg::Max);
        if (outcome_improves(Agg::Min, val, w, best, best_w)) {
            best = val;
            best_w = w;
            best_m = std::move(m);
        }
    }
    SolveOutcome out{*best, best_w, std::nullopt, "circle-boundary-minmax1"};
    if (want_matching) out.matching = std::move(best_m);
    return out;
}

// MinMin: the shortest edge of any matching is a boundary edge, so take the
// shortest (color-compatible) boundary edge and extend it.
inline SolveOutcome minmin_circle(const Instance& inst, bool want_matching = true) {
    const int n2 = static_cast<int>(inst.size());
    std::optional<PairCandidate> best;
    for (int i = 0; i < n2; ++i) {
        int j = (i + 1) % n2;
        if (inst.mode == Mode::Bi && inst.color(i) == inst.color(j)) continue;
        detail::consider(best, Agg::Min, chord_span(inst, i, j), i, j);
    }
    if (!best) throw std::logic_error("minmin_circle: no feasible boundary edge");
    SolveOutcome out{best->value, best->pair, std::nullopt, "circle-boundary-minmin"};
    if (want_matching) out.matching = extend_edge_to_matching_convex(inst, best->pair);
    return out;
}

namespace detail {

// Largest span between `a_set` and `b_set` (both ascending by angle): for
// each a, the best partner is the b nearest the antipode of a, found by
// binary search; span(i,j) = 1/2 - |delta - 1/2|.
inline void maxspan_cross(const Instance& inst, const std::vector<int>& a_set,
                          const std::vector<int>& b_set,
                          std::optional<PairCandidate>& best) {
    if (a_set.empty() || b_set.empty()) return;
    std::vector<Scalar> bturns(b_set.size());
    for (std::size_t i = 0; i < b_set.size(); ++i) bturns[i] = inst.circle[b_set[i]].turns;
    for (int a : a_set) {
        Scalar target = inst.circle[a].turns + Scalar(1, 2);
        if (target >= 1) target -= 1;
        auto it = std::lower_bound(bturns.begin(), bturns.end(), target);
        long pos = it - bturns.begin();
        const long k = static_cast<long>(b_set.size());
        for (long d = -1; d <= 1; ++d) {
            long q = ((pos + d) % k + k) % k;
            int b = b_set[q];
            if (b == a) continue;
            consider(best, Agg::Max, chord_span(inst, a, b), a, b);
        }
    }
}

}  // namespace detail

// MaxMax on a circle: the longest feasible edge (largest span) extends to a
// matching. Mono: opposite index parities. Bi: cross-color pairs per orbit.
inline SolveOutcome maxmax_circle(const Instance& inst, bool want_matching = true) {
    const int n2 = static_cast<int>(inst.size());
    std::optional<PairCandidate> best;
    if (inst.mode == Mode::Mono) {
        std::vector<int> even, odd;
        for (int i = 0; i < n2; ++i) (i % 2 ? odd : even).push_back(i);
        detail::maxspan_cross(inst, even, odd, best);
    } else {
        OrbitDecomposition od = compute_orbits(inst);
        for (const auto& orbit : od.members) {
            std::vector<int> blues, reds;
            for (int i : orbit) (inst.color(i) == Color::Blue ? blues : reds).push_back(i);
            detail::maxspan_cross(inst, blues, reds, best);
        }
    }
    if (!best) throw std::logic_error("maxmax_circle: no feasible pair");
    SolveOutcome out{best->value, best->pair, std::nullopt, "circle-antipodal-maxmax"};
    if (want_matching) out.matching = extend_edge_to_matching_convex(inst, best->pair);
    return out;
}

}  // namespace ncm
