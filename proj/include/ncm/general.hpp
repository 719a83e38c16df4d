#pragma once

// Monochromatic general-position algorithms: hull-based edge feasibility,
// weak radial orderings with the parity walk, MinMin / MaxMax solvers, and
// completion of a feasible edge into a perfect non-crossing matching.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ncm/extremal_pairs.hpp"
#include "ncm/geom.hpp"
#include "ncm/instance.hpp"

namespace ncm {

struct HullData {
    std::vector<int> hull;      // ccw
    std::vector<int> interior;  // ascending
    std::vector<char> on_hull;  // size 2n
    int h = 0;
};

inline HullData compute_hull_data(const Instance& inst) {
    HullData hd;
    hd.hull = convex_hull(inst.points);
    hd.h = static_cast<int>(hd.hull.size());
    hd.on_hull.assign(inst.points.size(), 0);
    for (int q : hd.hull) hd.on_hull[q] = 1;
    for (int i = 0; i < static_cast<int>(inst.points.size()); ++i)
        if (!hd.on_hull[i]) hd.interior.push_back(i);
    return hd;
}

// An edge is infeasible iff both endpoints are hull vertices and both open
// sides of its line hold an odd number of points.
inline bool edge_feasible_mono_general(const Instance& inst, const HullData& hd, int v,
                                       int w) {
    if (!hd.on_hull[v] || !hd.on_hull[w]) return true;
    int left = 0, right = 0;
    for (int i = 0; i < static_cast<int>(inst.points.size()); ++i) {
        if (i == v || i == w) continue;
        Orientation o = orientation(inst.points[v], inst.points[w], inst.points[i]);
        (o == Orientation::CCW ? left : right)++;
    }
    return !(left % 2 == 1 && right % 2 == 1);
}

// Radial ordering around one hull vertex with interior points collapsed to
// per-gap counts. hull_seq lists the other h-1 hull vertices in ccw angular
// order (equal to hull order); gap_counts[g] is the number of interior points
// between hull_seq[g] and hull_seq[g+1].
struct WeakRadialOrdering {
    std::vector<int> hull_seq;
    std::vector<int> gap_counts;  // size hull_seq.size() - 1
};

inline std::vector<WeakRadialOrdering> weak_radial_orderings(const Instance& inst,
                                                             const HullData& hd) {
    const auto& pts = inst.points;
    std::vector<WeakRadialOrdering> out(hd.h);
    std::vector<int> others;
    for (int qi = 0; qi < hd.h; ++qi) {
        int q = hd.hull[qi];
        others.clear();
        for (int i = 0; i < static_cast<int>(pts.size()); ++i)
            if (i != q) others.push_back(i);
        // all points lie in a wedge of angle < pi at q, so one cross-product
        // comparison is a total order
        std::sort(others.begin(), others.end(), [&](int a, int b) {
            Vec2 va{pts[a].x - pts[q].x, pts[a].y - pts[q].y};
            Vec2 vb{pts[b].x - pts[q].x, pts[b].y - pts[q].y};
            return cross(va, vb) > 0;
        });
        WeakRadialOrdering& w = out[qi];
        int run = 0;
        for (int p : others) {
            if (hd.on_hull[p]) {
                if (!w.hull_seq.empty()) w.gap_counts.push_back(run);
                w.hull_seq.push_back(p);
                run = 0;
            } else {
                ++run;
            }
        }
        if (run != 0 || w.hull_seq.size() != static_cast<std::size_t>(hd.h - 1))
            throw std::logic_error("weak_radial_orderings: interior point outside hull wedge");
    }
    return out;
}

// Feasibility flags of (hull[qi], hull_seq[g]) for all g, by the parity walk:
// the hull successor is feasible and feasibility toggles across a gap with an
// even interior count.
inline std::vector<char> parity_walk_flags(const WeakRadialOrdering& w) {
    std::vector<char> feasible(w.hull_seq.size());
    bool f = true;
    for (std::size_t g = 0; g < w.hull_seq.size(); ++g) {
        feasible[g] = f;
        if (g < w.gap_counts.size() && w.gap_counts[g] % 2 == 0) f = !f;
    }
    return feasible;
}

namespace detail {

inline std::optional<PairCandidate> hull_hull_extremal(const Instance& inst,
                                                       const HullData& hd, Agg agg) {
    auto wro = weak_radial_orderings(inst, hd);
    std::optional<PairCandidate> best;
    for (int qi = 0; qi < hd.h; ++qi) {
        const auto& w = wro[qi];
        auto flags = parity_walk_flags(w);
        for (std::size_t g = 0; g < w.hull_seq.size(); ++g)
            if (flags[g])
                consider(best, agg,
                         squared_distance(inst.points[hd.hull[qi]], inst.points[w.hull_seq[g]]),
                         hd.hull[qi], w.hull_seq[g]);
    }
    return best;
}

}  // namespace detail

inline Matching complete_matching_general(const Instance& inst, IndexPair e);

// Shortest feasible edge: m1 over pairs with an interior endpoint (always
// feasible), m2 over feasible hull-hull pairs via the parity walk.
inline SolveOutcome minmin1_general(const Instance& inst, bool want_matching = false) {
    HullData hd = compute_hull_data(inst);
    std::optional<PairCandidate> best = detail::hull_hull_extremal(inst, hd, Agg::Min);

    if (!hd.interior.empty()) {
        if (auto ii = closest_pair(inst.points, hd.interior))
            detail::consider(best, Agg::Min, ii->value, ii->pair.first, ii->pair.second);
        for (int q : hd.hull)
            for (int p : hd.interior)
                detail::consider(best, Agg::Min, squared_distance(inst.points[q], inst.points[p]),
                                 q, p);
    }
    SolveOutcome out{best->value, best->pair, std::nullopt, "general-minmin1"};
    if (want_matching) out.matching = complete_matching_general(inst, best->pair);
    return out;
}

// Longest feasible edge; interior endpoints only pair with hull vertices
// since a longest feasible edge has a hull endpoint.
inline SolveOutcome maxmax1_general(const Instance& inst, bool want_matching = false) {
    HullData hd = compute_hull_data(inst);
    std::optional<PairCandidate> best = detail::hull_hull_extremal(inst, hd, Agg::Max);
    for (int q : hd.hull)
        for (int p : hd.interior)
            detail::consider(best, Agg::Max, squared_distance(inst.points[q], inst.points[p]), q,
                             p);
    SolveOutcome out{best->value, best->pair, std::nullopt, "general-maxmax1"};
    if (want_matching) out.matching = complete_matching_general(inst, best->pair);
    return out;
}

namespace detail {

// Pair up an even set by sweeping along a direction with pairwise distinct
// projections; consecutive pairs occupy disjoint slabs, hence never cross.
inline void sweep_match(const std::vector<Point2>& pts, std::vector<int> side, Matching& m) {
    if (side.empty()) return;
    if (side.size() % 2 != 0) throw std::logic_error("sweep_match: odd side");
    // directions (1, t) collide only on finitely many t; (max pairs + 1)
    // candidates always contain a collision-free one
    const long max_t = static_cast<long>(side.size()) * (side.size() - 1) / 2 + 1;
    for (long t = 0;; ++t) {
        if (t > max_t) throw std::logic_error("sweep_match: no direction found");
        std::vector<std::pair<Scalar, int>> proj;
        proj.reserve(side.size());
        for (int i : side) proj.emplace_back(pts[i].x + t * pts[i].y, i);
        std::sort(proj.begin(), proj.end());
        bool distinct = true;
        for (std::size_t i = 1; i < proj.size(); ++i)
            if (proj[i].first == proj[i - 1].first) {
                distinct = false;
                break;
            }
        if (!distinct) continue;
        for (std::size_t i = 0; i + 1 < proj.size(); i += 2)
            m.add(proj[i].second, proj[i + 1].second);
        return;
    }
}

}  // namespace detail

// Completes a feasible edge into a perfect non-crossing matching following
// the feasibility lemma's constructive proof: even sides are matched within
// themselves; odd sides (possible only with an interior endpoint) are fixed
// up with a hull edge that straddles the supporting line beyond the segment.
inline Matching complete_matching_general(const Instance& inst, IndexPair e) {
    const auto& pts = inst.points;
    HullData hd = compute_hull_data(inst);
    int v = e.first, w = e.second;
    if (!edge_feasible_mono_general(inst, hd, v, w))
        throw std::invalid_argument("complete_matching_general: infeasible edge");

    std::vector<int> side_ccw, side_cw;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        if (i == v || i == w) continue;
        Orientation o = orientation(pts[v], pts[w], pts[i]);
        (o == Orientation::CCW ? side_ccw : side_cw).push_back(i);
    }

    Matching m;
    m.add(v, w);

    if (side_ccw.size() % 2 == 1) {
        // find a hull edge straddling line(v,w) whose crossing lies outside
        // the closed segment [v,w]
        bool fixed = false;
        for (int i = 0; i < hd.h && !fixed; ++i) {
            int x = hd.hull[i], y = hd.hull[(i + 1) % hd.h];
            if (x == v || x == w || y == v || y == w) continue;
            Orientation ox = orientation(pts[v], pts[w], pts[x]);
            Orientation oy = orientation(pts[v], pts[w], pts[y]);
            if (ox == oy) continue;
            // crossing parameter s along v + s*(w - v)
            Vec2 vw{pts[w].x - pts[v].x, pts[w].y - pts[v].y};
            Vec2 xy{pts[y].x - pts[x].x, pts[y].y - pts[x].y};
            Vec2 vx{pts[x].x - pts[v].x, pts[x].y - pts[v].y};
            Scalar denom = cross(vw, xy);
            Scalar s = cross(vx, xy) / denom;
            if (s >= 0 && s <= 1) continue;
            m.add(x, y);
            auto drop = [](std::vector<int>& vec, int val) {
                vec.erase(std::remove(vec.begin(), vec.end(), val), vec.end());
            };
            drop(side_ccw, x);
            drop(side_ccw, y);
            drop(side_cw, x);
            drop(side_cw, y);
            fixed = true;
        }
        if (!fixed)
            throw std::logic_error("complete_matching_general: no straddling hull edge");
    }

    detail::sweep_match(pts, side_ccw, m);
    detail::sweep_match(pts, side_cw, m);
    m.normalize();
    return m;
}

}  // namespace ncm
