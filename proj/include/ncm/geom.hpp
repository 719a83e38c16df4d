#pragma once

// Exact planar predicates and constructions shared by all solvers.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ncm/rational.hpp"

namespace ncm {

enum class Color { None, Blue, Red };

struct Point2 {
    Scalar x, y;
    Color color = Color::None;

    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
};

struct Vec2 {
    Scalar x, y;
};

inline Scalar dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Scalar cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Scalar norm_sq(const Vec2& a) { return a.x * a.x + a.y * a.y; }

enum class Orientation { CW, Collinear, CCW };

// Exact sign of twice the signed area of triangle abc.
inline Orientation orientation(const Point2& a, const Point2& b, const Point2& c) {
    Scalar det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    int s = sign(det);
    if (s > 0) return Orientation::CCW;
    if (s < 0) return Orientation::CW;
    return Orientation::Collinear;
}

inline Scalar squared_distance(const Point2& a, const Point2& b) {
    Scalar dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// p collinear with [a,b] assumed; true iff p lies in the closed box of a,b.
inline bool collinear_point_on_segment(const Point2& a, const Point2& b, const Point2& p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// True iff the closed segments [a,b] and [c,d] share at least one point.
inline bool segments_intersect(const Point2& a, const Point2& b, const Point2& c,
                               const Point2& d) {
    Orientation o1 = orientation(a, b, c);
    Orientation o2 = orientation(a, b, d);
    Orientation o3 = orientation(c, d, a);
    Orientation o4 = orientation(c, d, b);

    if (o1 != o2 && o3 != o4 && o1 != Orientation::Collinear && o2 != Orientation::Collinear &&
        o3 != Orientation::Collinear && o4 != Orientation::Collinear)
        return true;

    if (o1 == Orientation::Collinear && collinear_point_on_segment(a, b, c)) return true;
    if (o2 == Orientation::Collinear && collinear_point_on_segment(a, b, d)) return true;
    if (o3 == Orientation::Collinear && collinear_point_on_segment(c, d, a)) return true;
    if (o4 == Orientation::Collinear && collinear_point_on_segment(c, d, b)) return true;
    return false;
}

// The two closed segments share no point. The four endpoints must be
// pairwise distinct points; a shared endpoint indicates overlapping
// matching pairs upstream.
inline bool segments_disjoint(const Point2& a, const Point2& b, const Point2& c,
                              const Point2& d) {
    if (a == c || a == d || b == c || b == d)
        throw std::invalid_argument("segments_disjoint: shared endpoint");
    return !segments_intersect(a, b, c, d);
}

// Counterclockwise convex hull (Andrew's monotone chain), returned as indices
// into `points`. Throws if all points are collinear.
inline std::vector<int> convex_hull(const std::vector<Point2>& points) {
    const int n = static_cast<int>(points.size());
    if (n < 3) throw std::invalid_argument("convex_hull: need at least 3 points");

    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        if (points[i].x != points[j].x) return points[i].x < points[j].x;
        return points[i].y < points[j].y;
    });

    auto build = [&](auto begin, auto end) {
        std::vector<int> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   orientation(points[chain[chain.size() - 2]], points[chain.back()],
                               points[*it]) != Orientation::CCW)
                chain.pop_back();
            chain.push_back(*it);
        }
        return chain;
    };

    std::vector<int> lower = build(idx.begin(), idx.end());
    std::vector<int> upper = build(idx.rbegin(), idx.rend());
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() < 3) throw std::invalid_argument("convex_hull: all points collinear");
    return lower;
}

}  // namespace ncm
