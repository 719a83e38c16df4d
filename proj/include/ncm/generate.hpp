#pragma once

// Seeded instance generators for all four configurations. Randomness comes
// from mt19937_64 through explicitly defined bounded draws (mask-and-reject),
// so a (kind, mode, n, seed, family) tuple yields the same instance on every
// platform; the PRNG identifier below is recorded alongside generated files.

#include <algorithm>
#include <cstdint>
#include <set>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncm/geom.hpp"
#include "ncm/instance.hpp"

namespace ncm {

inline constexpr const char* kGeneratorPrng = "mt19937_64/mask-reject-v1";

struct GenConfig {
    Kind kind = Kind::General;
    Mode mode = Mode::Mono;
    int n = 1;                      // instance has 2n points
    std::uint64_t seed = 0;
    std::string family = "default"; // general: default|fixed-hull
                                    // dc: default|orthogonal|small-angle|onesided
};

namespace detail {

// Uniform draw from [0, bound) by masking to the next power of two and
// rejecting; fully defined, unlike std::uniform_int_distribution.
inline std::uint64_t u64_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("u64_below: zero bound");
    std::uint64_t mask = ~0ULL;
    std::uint64_t b = bound - 1;
    if (b == 0) return 0;
    mask = ~0ULL >> __builtin_clzll(b);
    for (;;) {
        std::uint64_t v = rng() & mask;
        if (v < bound) return v;
    }
}

// Uniform signed integer in [-range, range] \ {0}.
inline long long nonzero_in_range(std::mt19937_64& rng, std::uint64_t range) {
    for (;;) {
        std::uint64_t v = u64_below(rng, 2 * range + 1);
        long long x = static_cast<long long>(v) - static_cast<long long>(range);
        if (x != 0) return x;
    }
}

template <class T>
inline void shuffle_defined(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[u64_below(rng, i)]);
}

inline void assign_colors(Instance& inst, std::mt19937_64& rng) {
    const std::size_t n2 = inst.size();
    if (inst.mode == Mode::Mono) return;
    std::vector<Color> colors(n2);
    for (std::size_t i = 0; i < n2; ++i)
        colors[i] = i < n2 / 2 ? Color::Blue : Color::Red;
    shuffle_defined(colors, rng);
    for (std::size_t i = 0; i < n2; ++i) {
        if (inst.kind == Kind::Circle)
            inst.circle[i].color = colors[i];
        else
            inst.points[i].color = colors[i];
    }
}

inline constexpr int kRejectionBudget = 100000;

inline Instance generate_general(const GenConfig& cfg, std::mt19937_64& rng) {
    Instance inst;
    inst.kind = Kind::General;
    inst.mode = cfg.mode;
    const int n2 = 2 * cfg.n;
    // Pairwise incremental collinearity rejection is quadratic per point;
    // above this size a huge coordinate range makes collinear triples
    // vanishingly unlikely instead.
    const bool full_check = n2 <= 512;
    const std::uint64_t range = full_check ? (1ULL << 30) : (1ULL << 60);

    std::set<std::pair<long long, long long>> used;
    int budget = kRejectionBudget + 64 * n2;
    std::vector<Point2> hull_poly;
    if (cfg.family == "fixed-hull") {
        // 12 nearly-circular hull vertices (h <= 16); interior points are
        // sampled strictly inside.
        static const int kH = 12;
        static const long long cx[kH] = {1000000, 866025, 500000, 0,       -500000, -866025,
                                         -1000000, -866025, -500000, 0,     500000,  866025};
        static const long long cy[kH] = {0,       500000,  866025, 1000000, 866025,  500000,
                                         0,       -500000, -866025, -1000000, -866025, -500000};
        const long long s = static_cast<long long>(range / 1000000ULL);
        for (int i = 0; i < kH; ++i) {
            Point2 p{Scalar(static_cast<long>(cx[i] * s)), Scalar(static_cast<long>(cy[i] * s)),
                     Color::None};
            hull_poly.push_back(p);
            used.insert({cx[i] * s, cy[i] * s});
            inst.points.push_back(std::move(p));
        }
        if (n2 < kH) throw std::invalid_argument("fixed-hull family needs 2n >= 12");
    } else if (cfg.family != "default") {
        throw std::invalid_argument("unknown general family: " + cfg.family);
    }

    auto inside_hull = [&](const Point2& p) {
        if (hull_poly.empty()) return true;
        const std::size_t h = hull_poly.size();
        for (std::size_t i = 0; i < h; ++i)
            if (orientation(hull_poly[i], hull_poly[(i + 1) % h], p) != Orientation::CCW)
                return false;
        return true;
    };

    while (static_cast<int>(inst.points.size()) < n2) {
        if (--budget < 0) throw std::runtime_error("generate: rejection budget exhausted");
        long long x = nonzero_in_range(rng, range);
        long long y = nonzero_in_range(rng, range);
        if (used.count({x, y})) continue;
        Point2 p{Scalar(static_cast<long>(x)), Scalar(static_cast<long>(y)), Color::None};
        if (!inside_hull(p)) continue;
        if (full_check) {
            bool bad = false;
            for (std::size_t i = 0; i < inst.points.size() && !bad; ++i)
                for (std::size_t j = i + 1; j < inst.points.size(); ++j)
                    if (orientation(inst.points[i], inst.points[j], p) ==
                        Orientation::Collinear) {
                        bad = true;
                        break;
                    }
            if (bad) continue;
        }
        used.insert({x, y});
        inst.points.push_back(std::move(p));
    }
    assign_colors(inst, rng);
    return inst;
}

inline Instance generate_convex(const GenConfig& cfg, std::mt19937_64& rng) {
    Instance inst;
    inst.kind = Kind::Convex;
    inst.mode = cfg.mode;
    const int n2 = 2 * cfg.n;
    if (n2 < 3) {
        // 2n = 2: any two distinct points are trivially "convex"
        inst.points.push_back({Scalar(0), Scalar(0), Color::None});
        inst.points.push_back({Scalar(1) + Scalar(static_cast<long>(u64_below(rng, 1000))),
                               Scalar(1), Color::None});
        assign_colors(inst, rng);
        return inst;
    }

    // Edge vectors with distinct directions summing to zero, sorted by angle
    // ccw; prefix sums are the vertices of a convex polygon.
    const long long range = 1LL << 20;
    int budget = kRejectionBudget + 64 * n2;
    std::vector<Vec2> edges;
    std::set<std::pair<long long, long long>> dirs;  // primitive directions
    auto gcdll = [](long long a, long long b) {
        while (b) {
            long long t = a % b;
            a = b;
            b = t;
        }
        return a < 0 ? -a : a;
    };
    long long sx = 0, sy = 0;
    while (static_cast<int>(edges.size()) < n2 - 1) {
        if (--budget < 0) throw std::runtime_error("generate: rejection budget exhausted");
        long long x = nonzero_in_range(rng, range);
        long long y = nonzero_in_range(rng, range);
        long long g = gcdll(gcdll(x, y), 0);
        if (dirs.count({x / g, y / g})) continue;
        dirs.insert({x / g, y / g});
        edges.push_back({Scalar(static_cast<long>(x)), Scalar(static_cast<long>(y))});
        sx += x;
        sy += y;
    }
    // closing edge; must be nonzero and direction-distinct, else retry whole set
    if (sx == 0 && sy == 0) return generate_convex({cfg.kind, cfg.mode, cfg.n, cfg.seed + 0x9E3779B97F4A7C15ULL, cfg.family}, rng);
    {
        long long x = -sx, y = -sy;
        long long g = gcdll(x, y);
        if (dirs.count({x / g, y / g}))
            return generate_convex({cfg.kind, cfg.mode, cfg.n, cfg.seed, cfg.family}, rng);
        edges.push_back({Scalar(static_cast<long>(x)), Scalar(static_cast<long>(y))});
    }
    std::sort(edges.begin(), edges.end(), [](const Vec2& a, const Vec2& b) {
        auto half = [](const Vec2& d) {
            if (sign(d.y) > 0 || (sign(d.y) == 0 && sign(d.x) > 0)) return 0;
            return 1;
        };
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        return sign(cross(a, b)) > 0;
    });
    Scalar px(0), py(0);
    for (const Vec2& e : edges) {
        inst.points.push_back({px, py, Color::None});
        px += e.x;
        py += e.y;
    }
    assign_colors(inst, rng);
    return inst;
}

inline Instance generate_circle(const GenConfig& cfg, std::mt19937_64& rng) {
    Instance inst;
    inst.kind = Kind::Circle;
    inst.mode = cfg.mode;
    const int n2 = 2 * cfg.n;
    const std::uint64_t denom = 1ULL << 42;
    std::set<std::uint64_t> ks;
    int budget = kRejectionBudget + 64 * n2;
    while (static_cast<int>(ks.size()) < n2) {
        if (--budget < 0) throw std::runtime_error("generate: rejection budget exhausted");
        ks.insert(u64_below(rng, denom));
    }
    for (std::uint64_t k : ks) {
        CirclePoint cp;
        cp.turns = Scalar(static_cast<unsigned long>(k)) /
                   Scalar(static_cast<unsigned long>(denom));
        inst.circle.push_back(std::move(cp));
    }
    assign_colors(inst, rng);
    return inst;
}

inline Instance generate_dc(const GenConfig& cfg, std::mt19937_64& rng) {
    Instance inst;
    inst.kind = Kind::DoublyCollinear;
    inst.mode = Mode::Bi;
    DCData dc;
    if (cfg.family == "orthogonal") {
        dc.dir_r = {Scalar(1), Scalar(0)};
        dc.dir_b = {Scalar(0), Scalar(1)};
    } else if (cfg.family == "small-angle") {
        // dirB = (p, q) with p > |q| gives cos^2(alpha) = p^2/(p^2+q^2) >= 1/2
        dc.dir_r = {Scalar(1), Scalar(0)};
        long long p = 2 + static_cast<long long>(u64_below(rng, 1000));
        long long q = static_cast<long long>(u64_below(rng, static_cast<std::uint64_t>(p))) + 1;
        if (u64_below(rng, 2)) q = -q;
        dc.dir_b = {Scalar(static_cast<long>(p)), Scalar(static_cast<long>(q))};
    } else if (cfg.family == "default" || cfg.family == "onesided") {
        int budget = kRejectionBudget;
        for (;;) {
            if (--budget < 0) throw std::runtime_error("generate: rejection budget exhausted");
            Vec2 r{Scalar(static_cast<long>(nonzero_in_range(rng, 50))),
                   Scalar(static_cast<long>(nonzero_in_range(rng, 50)))};
            Vec2 b{Scalar(static_cast<long>(nonzero_in_range(rng, 50))),
                   Scalar(static_cast<long>(nonzero_in_range(rng, 50)))};
            if (sign(cross(r, b)) == 0) continue;
            dc.dir_r = r;
            dc.dir_b = b;
            break;
        }
    } else {
        throw std::invalid_argument("unknown dc family: " + cfg.family);
    }

    const std::uint64_t range = 1ULL << 40;
    auto draw_coords = [&](bool positive_only) {
        std::set<long long> s;
        int budget = kRejectionBudget + 64 * cfg.n;
        while (static_cast<int>(s.size()) < cfg.n) {
            if (--budget < 0) throw std::runtime_error("generate: rejection budget exhausted");
            long long c = positive_only
                              ? static_cast<long long>(u64_below(rng, range)) + 1
                              : nonzero_in_range(rng, range);
            s.insert(c);
        }
        return std::vector<Scalar>([&] {
            std::vector<Scalar> v;
            for (long long c : s) v.push_back(Scalar(static_cast<long>(c)));
            return v;
        }());
    };
    dc.red = draw_coords(cfg.family == "onesided");
    dc.blue = draw_coords(false);
    inst.points = materialize_dc_points(dc);
    inst.dc = std::move(dc);
    return inst;
}

}  // namespace detail

inline Instance generate_instance(const GenConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("generate: n must be >= 1");
    std::mt19937_64 rng(cfg.seed ^ 0xD1B54A32D192ED03ULL);
    switch (cfg.kind) {
        case Kind::General:
            return detail::generate_general(cfg, rng);
        case Kind::Convex:
            return detail::generate_convex(cfg, rng);
        case Kind::Circle:
            return detail::generate_circle(cfg, rng);
        case Kind::DoublyCollinear:
            return detail::generate_dc(cfg, rng);
    }
    throw std::invalid_argument("generate: bad kind");
}

}  // namespace ncm
