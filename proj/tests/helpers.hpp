#pragma once

// Shared construction helpers for the test suites.

#include <vector>

#include "ncm/generate.hpp"
#include "ncm/instance.hpp"

namespace ncm::testing {

inline Point2 pt(long x, long y, Color c = Color::None) { return {Scalar(x), Scalar(y), c}; }

// Canonicalized fraction (mpq_class(a, b) alone does not canonicalize).
inline Scalar frac(long a, long b) {
    Scalar q(a, b);
    q.canonicalize();
    return q;
}

inline Instance coords_instance(Kind kind, std::vector<Point2> pts, bool bi = false) {
    Instance inst;
    inst.kind = kind;
    inst.mode = bi ? Mode::Bi : Mode::Mono;
    inst.points = std::move(pts);
    return inst;
}

// Circle instance from turn fractions given as (numerator, denominator).
inline Instance circle_instance(const std::vector<std::pair<long, long>>& turns,
                                const std::vector<Color>& colors = {}) {
    Instance inst;
    inst.kind = Kind::Circle;
    inst.mode = colors.empty() ? Mode::Mono : Mode::Bi;
    for (std::size_t i = 0; i < turns.size(); ++i) {
        CirclePoint cp;
        cp.turns = frac(turns[i].first, turns[i].second);
        if (!colors.empty()) cp.color = colors[i];
        inst.circle.push_back(cp);
    }
    return inst;
}

inline Instance evenly_spaced_circle(int n2) {
    std::vector<std::pair<long, long>> t;
    for (int i = 0; i < n2; ++i) t.push_back({i, n2});
    return circle_instance(t);
}

// Doubly-collinear instance; the u/v lists are 1-D coordinates.
inline Instance dc_instance(Vec2 dir_r, Vec2 dir_b, std::vector<long> red,
                            std::vector<long> blue) {
    DCData dc;
    dc.dir_r = dir_r;
    dc.dir_b = dir_b;
    std::sort(red.begin(), red.end());
    std::sort(blue.begin(), blue.end());
    for (long u : red) dc.red.push_back(Scalar(u));
    for (long v : blue) dc.blue.push_back(Scalar(v));
    Instance inst;
    inst.kind = Kind::DoublyCollinear;
    inst.mode = Mode::Bi;
    inst.points = materialize_dc_points(dc);
    inst.dc = std::move(dc);
    return inst;
}

inline Instance orthogonal_dc(std::vector<long> red, std::vector<long> blue) {
    return dc_instance({Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}, std::move(red),
                       std::move(blue));
}

// Small random instances for oracle-equivalence suites; n = pairs.
inline Instance random_instance(Kind kind, Mode mode, int n, std::uint64_t seed,
                                const std::string& family = "default") {
    GenConfig cfg;
    cfg.kind = kind;
    cfg.mode = mode;
    cfg.n = n;
    cfg.seed = seed;
    cfg.family = family;
    return generate_instance(cfg);
}

// Random small-coordinate doubly-collinear instance (coordinates in
// [-range, range] \ {0}, distinct per line), optionally one-sided reds.
inline Instance random_dc(int n, std::uint64_t seed, const std::string& family = "default") {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 12345);
    auto draw = [&](bool positive_only) {
        std::set<long long> s;
        while (static_cast<int>(s.size()) < n) {
            long long c = positive_only
                              ? static_cast<long long>(detail::u64_below(rng, 20)) + 1
                              : detail::nonzero_in_range(rng, 20);
            s.insert(c);
        }
        std::vector<long> v(s.begin(), s.end());
        return v;
    };
    std::vector<long> red = draw(family == "onesided");
    std::vector<long> blue = draw(false);
    if (family == "orthogonal") return orthogonal_dc(red, blue);
    if (family == "small-angle")
        return dc_instance({Scalar(1), Scalar(0)}, {Scalar(4), Scalar(3)}, red, blue);
    // random non-parallel directions
    for (;;) {
        Vec2 r{Scalar(static_cast<long>(detail::nonzero_in_range(rng, 9))),
               Scalar(static_cast<long>(detail::nonzero_in_range(rng, 9)))};
        Vec2 b{Scalar(static_cast<long>(detail::nonzero_in_range(rng, 9))),
               Scalar(static_cast<long>(detail::nonzero_in_range(rng, 9)))};
        if (sign(cross(r, b)) == 0) continue;
        return dc_instance(r, b, red, blue);
    }
}

}  // namespace ncm::testing
