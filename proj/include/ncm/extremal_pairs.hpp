#pragma once

// Closest / farthest pair subroutines over exact coordinates.
//
// closest_pair: divide and conquer with an admissibility filter (used both
// unfiltered and restricted to cross-color pairs).
//
// farthest_pair_convex: support-based candidate merge over two ccw convex
// vertex sequences. For the optimal pair (a,b), a is extremal in direction
// a-b and b in the opposite direction, so it suffices to scan the pairs
// (argmax_A(d), argmin_B(d)) as d rotates over the edge-normal events of A
// and the negated edge-normal events of B. Correct whether or not the two
// polygons intersect, which they do here (the inputs interleave on one
// convex boundary).

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "ncm/geom.hpp"
#include "ncm/instance.hpp"

namespace ncm {

struct PairCandidate {
    Scalar value;  // squared distance
    IndexPair pair;
};

using PairFilter = std::function<bool(int, int)>;

namespace detail {

inline void consider(std::optional<PairCandidate>& best, Agg agg, const Scalar& v, int a,
                     int b) {
    IndexPair w = a < b ? IndexPair{a, b} : IndexPair{b, a};
    if (!best || outcome_improves(agg, v, w, std::optional<Scalar>(best->value), best->pair))
        best = PairCandidate{v, w};
}

inline void closest_rec(const std::vector<Point2>& pts, std::vector<int>& by_x,
                        std::vector<int>& scratch, std::size_t lo, std::size_t hi,
                        const PairFilter& admissible, std::optional<PairCandidate>& best) {
    if (hi - lo <= 3) {
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = i + 1; j < hi; ++j)
                if (!admissible || admissible(by_x[i], by_x[j]))
                    consider(best, Agg::Min, squared_distance(pts[by_x[i]], pts[by_x[j]]),
                             by_x[i], by_x[j]);
        std::sort(by_x.begin() + lo, by_x.begin() + hi,
                  [&](int a, int b) { return pts[a].y < pts[b].y; });
        return;
    }
    std::size_t mid = (lo + hi) / 2;
    Scalar mid_x = pts[by_x[mid]].x;
    closest_rec(pts, by_x, scratch, lo, mid, admissible, best);
    closest_rec(pts, by_x, scratch, mid, hi, admissible, best);
    // merge by y
    std::merge(by_x.begin() + lo, by_x.begin() + mid, by_x.begin() + mid, by_x.begin() + hi,
               scratch.begin() + lo, [&](int a, int b) { return pts[a].y < pts[b].y; });
    std::copy(scratch.begin() + lo, scratch.begin() + hi, by_x.begin() + lo);

    // strip scan; with a filter the packing bound does not apply, so scan all
    // partners within the vertical gap instead of a fixed count
    std::vector<int> strip;
    for (std::size_t i = lo; i < hi; ++i) {
        Scalar dx = pts[by_x[i]].x - mid_x;
        if (!best || dx * dx < best->value) strip.push_back(by_x[i]);
    }
    for (std::size_t i = 0; i < strip.size(); ++i)
        for (std::size_t j = i + 1; j < strip.size(); ++j) {
            Scalar dy = pts[strip[j]].y - pts[strip[i]].y;
            if (best && dy * dy >= best->value) break;
            if (!admissible || admissible(strip[i], strip[j]))
                consider(best, Agg::Min, squared_distance(pts[strip[i]], pts[strip[j]]),
                         strip[i], strip[j]);
        }
}

// angle class for circular direction comparison: 0 = upper half (incl. +x
// axis), 1 = lower half (incl. -x axis)
inline int dir_half(const Vec2& d) {
    if (d.y > 0 || (d.y == 0 && d.x > 0)) return 0;
    return 1;
}

inline bool dir_less(const Vec2& a, const Vec2& b) {
    int ha = dir_half(a), hb = dir_half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

}  // namespace detail

// Minimum squared distance over admissible index pairs drawn from `subset`.
// Returns nothing if no admissible pair exists.
inline std::optional<PairCandidate> closest_pair(const std::vector<Point2>& pts,
                                                 std::vector<int> subset,
                                                 const PairFilter& admissible = nullptr) {
    if (subset.size() < 2) return std::nullopt;
    std::sort(subset.begin(), subset.end(), [&](int a, int b) {
        if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
        return pts[a].y < pts[b].y;
    });
    std::optional<PairCandidate> best;
    std::vector<int>& by_x = subset;
    std::vector<int> scratch(by_x.size());
    detail::closest_rec(pts, by_x, scratch, 0, by_x.size(), admissible, best);
    return best;
}

inline std::optional<PairCandidate> brute_extremal_pair(const std::vector<Point2>& pts,
                                                        const std::vector<int>& a_set,
                                                        const std::vector<int>& b_set,
                                                        Agg agg) {
    std::optional<PairCandidate> best;
    for (int a : a_set)
        for (int b : b_set)
            detail::consider(best, agg, squared_distance(pts[a], pts[b]), a, b);
    return best;
}

// `a_set` and `b_set` are vertex index sequences of two convex polygons in
// ccw order. Small inputs fall back to the exhaustive scan; the merge path is
// cross-checked against it in the test suites.
inline std::optional<PairCandidate> farthest_pair_convex(const std::vector<Point2>& pts,
                                                         const std::vector<int>& a_set,
                                                         const std::vector<int>& b_set) {
    if (a_set.empty() || b_set.empty()) return std::nullopt;
    const std::size_t m = a_set.size(), k = b_set.size();
    if (m <= 8 || k <= 8) return brute_extremal_pair(pts, a_set, b_set, Agg::Max);

    // event directions: outward edge normals of A, negated outward normals of B
    std::vector<Vec2> events;
    events.reserve(m + k);
    for (std::size_t i = 0; i < m; ++i) {
        const Point2& v = pts[a_set[i]];
        const Point2& w = pts[a_set[(i + 1) % m]];
        events.push_back({w.y - v.y, v.x - w.x});
    }
    for (std::size_t i = 0; i < k; ++i) {
        const Point2& v = pts[b_set[i]];
        const Point2& w = pts[b_set[(i + 1) % k]];
        events.push_back({v.y - w.y, w.x - v.x});
    }
    std::sort(events.begin(), events.end(), detail::dir_less);

    auto argmax_scan = [&](const std::vector<int>& poly, const Vec2& d, bool minimize) {
        std::size_t best_i = 0;
        auto key = [&](std::size_t i) {
            Scalar s = pts[poly[i]].x * d.x + pts[poly[i]].y * d.y;
            return minimize ? Scalar(-s) : s;
        };
        Scalar best_v = key(0);
        for (std::size_t i = 1; i < poly.size(); ++i) {
            Scalar v = key(i);
            if (v > best_v) {
                best_v = v;
                best_i = i;
            }
        }
        return best_i;
    };

    std::optional<PairCandidate> best;
    std::size_t ia = argmax_scan(a_set, events[0], false);
    std::size_t ib = argmax_scan(b_set, events[0], true);
    auto support = [&](const Vec2& d, const std::vector<int>& poly, std::size_t& i,
                       bool minimize, std::size_t out[2]) -> int {
        const std::size_t sz = poly.size();
        auto gain = [&](std::size_t from, std::size_t to) {
            const Point2& p = pts[poly[from]];
            const Point2& q = pts[poly[to]];
            Scalar g = (q.x - p.x) * d.x + (q.y - p.y) * d.y;
            return minimize ? Scalar(-g) : g;
        };
        std::size_t guard = 0;
        while (guard++ <= sz && gain(i, (i + 1) % sz) > 0) i = (i + 1) % sz;
        int cnt = 1;
        out[0] = i;
        if (gain(i, (i + 1) % sz) == 0) out[cnt++] = (i + 1) % sz;
        return cnt;
    };

    for (const Vec2& d : events) {
        std::size_t as[2], bs[2];
        int na = support(d, a_set, ia, false, as);
        int nb = support(d, b_set, ib, true, bs);
        for (int x = 0; x < na; ++x)
            for (int y = 0; y < nb; ++y)
                detail::consider(best, Agg::Max,
                                 squared_distance(pts[a_set[as[x]]], pts[b_set[bs[y]]]),
                                 a_set[as[x]], b_set[bs[y]]);
    }
    return best;
}

// Closest cross pair between two convex vertex sets; exhaustive for small
// inputs, filtered divide and conquer otherwise.
inline std::optional<PairCandidate> closest_pair_convex(const std::vector<Point2>& pts,
                                                        const std::vector<int>& a_set,
                                                        const std::vector<int>& b_set) {
    if (a_set.empty() || b_set.empty()) return std::nullopt;
    if (a_set.size() <= 8 || b_set.size() <= 8)
        return brute_extremal_pair(pts, a_set, b_set, Agg::Min);
    std::vector<char> side(pts.size(), 0);
    for (int a : a_set) side[a] = 1;
    for (int b : b_set) side[b] = 2;
    std::vector<int> all = a_set;
    all.insert(all.end(), b_set.begin(), b_set.end());
    return closest_pair(pts, std::move(all),
                        [&](int i, int j) { return side[i] != side[j]; });
}

}  // namespace ncm
