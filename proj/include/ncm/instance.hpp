#pragma once

// Instance and matching data model: the four point configurations, the four
// optimization variants, matching validation, and objective evaluation.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncm/geom.hpp"
#include "ncm/rational.hpp"

namespace ncm {

enum class Kind { General, Convex, Circle, DoublyCollinear };
enum class Mode { Mono, Bi };

enum class Agg { Min, Max };

// outer optimizes over matchings, inner aggregates edge lengths inside one.
struct VariantSpec {
    Agg outer, inner;
    bool operator==(const VariantSpec&) const = default;
};

inline constexpr VariantSpec kMinMin{Agg::Min, Agg::Min};
inline constexpr VariantSpec kMaxMax{Agg::Max, Agg::Max};
inline constexpr VariantSpec kMinMax{Agg::Min, Agg::Max};
inline constexpr VariantSpec kMaxMin{Agg::Max, Agg::Min};

inline std::string variant_name(VariantSpec v) {
    if (v == kMinMin) return "minmin";
    if (v == kMaxMax) return "maxmax";
    if (v == kMinMax) return "minmax";
    return "maxmin";
}

inline VariantSpec parse_variant(const std::string& s) {
    if (s == "minmin") return kMinMin;
    if (s == "maxmax") return kMaxMax;
    if (s == "minmax") return kMinMax;
    if (s == "maxmin") return kMaxMin;
    throw std::invalid_argument("unknown variant: " + s);
}

struct CirclePoint {
    Scalar turns;  // angle as a fraction of a full turn, in [0,1)
    Color color = Color::None;
};

// Blue points on the line {v * dir_b}, red points on {u * dir_r}; the lines
// meet at the origin, which carries no point.
struct DCData {
    Vec2 dir_r, dir_b;
    std::vector<Scalar> red, blue;  // sorted ascending, all nonzero
};

struct Instance {
    Kind kind = Kind::General;
    Mode mode = Mode::Mono;
    std::vector<Point2> points;        // General / Convex / DoublyCollinear
    std::vector<CirclePoint> circle;   // Circle only
    std::optional<DCData> dc;          // DoublyCollinear only

    std::size_t size() const { return kind == Kind::Circle ? circle.size() : points.size(); }

    Color color(std::size_t i) const {
        return kind == Kind::Circle ? circle[i].color : points[i].color;
    }
};

// DC point order: all red points (ascending coordinate) then all blue points.
inline std::vector<Point2> materialize_dc_points(const DCData& dc) {
    std::vector<Point2> pts;
    pts.reserve(dc.red.size() + dc.blue.size());
    for (const Scalar& u : dc.red)
        pts.push_back({u * dc.dir_r.x, u * dc.dir_r.y, Color::Red});
    for (const Scalar& v : dc.blue)
        pts.push_back({v * dc.dir_b.x, v * dc.dir_b.y, Color::Blue});
    return pts;
}

using IndexPair = std::pair<int, int>;

struct Matching {
    std::vector<IndexPair> pairs;  // normalized: first < second, sorted

    void add(int a, int b) {
        if (a > b) std::swap(a, b);
        pairs.emplace_back(a, b);
    }
    void normalize() {
        for (auto& p : pairs)
            if (p.first > p.second) std::swap(p.first, p.second);
        std::sort(pairs.begin(), pairs.end());
    }
};

// Chord comparisons on the circle use arc spans: chord length is strictly
// increasing in span on [0, 1/2], so span order equals length order.
inline Scalar chord_span(const Instance& inst, int i, int j) {
    Scalar d = inst.circle[j].turns - inst.circle[i].turns;
    if (d < 0) d = -d;
    Scalar other = 1 - d;
    return d < other ? d : other;
}

// Edge measure used in every objective: squared Euclidean length for
// coordinate instances, arc span for circle instances. Exactly ordered
// either way.
inline Scalar edge_measure(const Instance& inst, int i, int j) {
    if (inst.kind == Kind::Circle) return chord_span(inst, i, j);
    return squared_distance(inst.points[i], inst.points[j]);
}

// Two chords of a circle with 4 distinct endpoints intersect iff their
// endpoints interleave along the circular order.
inline bool chords_cross(int a, int b, int c, int d) {
    if (a > b) std::swap(a, b);
    bool c_in = a < c && c < b;
    bool d_in = a < d && d < b;
    return c_in != d_in;
}

// Closed-segment disjointness of two matching edges; kind-aware.
inline bool edges_disjoint(const Instance& inst, IndexPair e, IndexPair f) {
    if (e.first == f.first || e.first == f.second || e.second == f.first ||
        e.second == f.second)
        throw std::invalid_argument("edges_disjoint: shared endpoint index");
    if (inst.kind == Kind::Circle)
        return !chords_cross(e.first, e.second, f.first, f.second);
    return segments_disjoint(inst.points[e.first], inst.points[e.second],
                             inst.points[f.first], inst.points[f.second]);
}

struct ValidationReport {
    bool perfect = false;
    bool non_crossing = false;
    bool color_ok = false;

    bool all() const { return perfect && non_crossing && color_ok; }
};

inline ValidationReport validate_matching(const Instance& inst, const Matching& m) {
    const int n2 = static_cast<int>(inst.size());
    ValidationReport rep;

    std::vector<int> cover(n2, 0);
    bool in_range = true;
    for (auto [a, b] : m.pairs) {
        if (a < 0 || b < 0 || a >= n2 || b >= n2 || a == b) {
            in_range = false;
            break;
        }
        ++cover[a];
        ++cover[b];
    }
    if (!in_range) throw std::out_of_range("validate_matching: index out of range");

    rep.perfect = static_cast<int>(m.pairs.size()) * 2 == n2;
    for (int c : cover)
        if (c != 1) rep.perfect = false;

    auto share_index = [](IndexPair e, IndexPair f) {
        return e.first == f.first || e.first == f.second || e.second == f.first ||
               e.second == f.second;
    };
    rep.non_crossing = true;
    for (std::size_t i = 0; i < m.pairs.size() && rep.non_crossing; ++i)
        for (std::size_t j = i + 1; j < m.pairs.size(); ++j) {
            if (share_index(m.pairs[i], m.pairs[j])) continue;  // reported via perfect
            if (!edges_disjoint(inst, m.pairs[i], m.pairs[j])) {
                rep.non_crossing = false;
                break;
            }
        }

    rep.color_ok = true;
    if (inst.mode == Mode::Bi)
        for (auto [a, b] : m.pairs)
            if (inst.color(a) == inst.color(b)) {
                rep.color_ok = false;
                break;
            }
    return rep;
}

// Inner aggregate of a matching's edge measures plus the realizing edge.
// Ties go to the lexicographically smallest index pair.
inline std::pair<Scalar, IndexPair> objective_value(const Instance& inst, const Matching& m,
                                                    Agg inner) {
    if (m.pairs.empty()) throw std::invalid_argument("objective_value: empty matching");
    Matching sorted = m;
    sorted.normalize();
    std::optional<Scalar> best;
    IndexPair witness{-1, -1};
    for (auto [a, b] : sorted.pairs) {
        Scalar v = edge_measure(inst, a, b);
        bool better = !best || (inner == Agg::Min ? v < *best : v > *best);
        if (better) {
            best = v;
            witness = {a, b};
        }
    }
    return {*best, witness};
}

inline std::pair<Scalar, IndexPair> objective_value(const Instance& inst, const Matching& m,
                                                    VariantSpec v) {
    return objective_value(inst, m, v.inner);
}

// Optimal objective with witness edge; the full matching is attached when the
// solver constructs one.
struct SolveOutcome {
    Scalar value;  // squared length, or span for circle instances
    IndexPair witness{-1, -1};
    std::optional<Matching> matching;
    std::string algorithm;
};

// Deterministic "is (v,w) better than the incumbent" for outer aggregation:
// strict improvement in value, or equal value with smaller witness.
inline bool outcome_improves(Agg outer, const Scalar& v, IndexPair w,
                             const std::optional<Scalar>& best, IndexPair best_w) {
    if (!best) return true;
    if (outer == Agg::Min) {
        if (v < *best) return true;
        if (v > *best) return false;
    } else {
        if (v > *best) return true;
        if (v < *best) return false;
    }
    return w < best_w;
}

}  // namespace ncm
