#pragma once

// JSON wire format: instances, matchings, and solve outcomes. All rationals
// travel as exact decimal strings ("p" or "p/q"); floating-point fields are
// derived at output time with a fixed format so serialization is
// byte-deterministic. parse_instance validates every structural invariant and
// reports violations with a machine-readable code.

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncm/geom.hpp"
#include "ncm/instance.hpp"
#include "ncm/rational.hpp"

namespace ncm {

using json = nlohmann::ordered_json;

// Input rejection with a machine-readable code (E_SCHEMA, E_COLLINEAR, ...).
class IOError : public std::runtime_error {
   public:
    IOError(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

   private:
    std::string code_;
};

namespace detail {

inline Scalar parse_scalar_field(const json& j, const char* what) {
    if (!j.is_string()) throw IOError("E_SCHEMA", std::string(what) + " must be a rational string");
    try {
        return parse_scalar(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw IOError("E_SCHEMA", std::string(what) + ": " + e.what());
    }
}

inline Color parse_color(const json& j) {
    if (!j.is_string()) throw IOError("E_SCHEMA", "color must be \"B\" or \"R\"");
    std::string s = j.get<std::string>();
    if (s == "B") return Color::Blue;
    if (s == "R") return Color::Red;
    throw IOError("E_SCHEMA", "color must be \"B\" or \"R\", got \"" + s + "\"");
}

inline Mode parse_mode(const json& j) {
    if (!j.is_string()) throw IOError("E_SCHEMA", "mode must be \"mono\" or \"bi\"");
    std::string s = j.get<std::string>();
    if (s == "mono") return Mode::Mono;
    if (s == "bi") return Mode::Bi;
    throw IOError("E_SCHEMA", "mode must be \"mono\" or \"bi\", got \"" + s + "\"");
}

inline void check_parity_and_balance(const Instance& inst) {
    const std::size_t n2 = inst.size();
    if (n2 == 0 || n2 % 2 != 0)
        throw IOError("E_PARITY", "point count must be even and positive");
    if (inst.mode == Mode::Bi) {
        std::size_t blue = 0;
        for (std::size_t i = 0; i < n2; ++i)
            if (inst.color(i) == Color::Blue) ++blue;
        if (2 * blue != n2)
            throw IOError("E_UNBALANCED", "bichromatic instance must have n Blue and n Red");
    }
}

// Exhaustive no-three-collinear check is cubic; skip it above this size so
// benchmark-scale files still parse quickly (generators guarantee it).
inline constexpr std::size_t kCollinearCheckCap = 128;

inline void check_general_position(const std::vector<Point2>& pts) {
    const std::size_t n2 = pts.size();
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = i + 1; j < n2; ++j)
            if (pts[i].x == pts[j].x && pts[i].y == pts[j].y)
                throw IOError("E_DUPLICATE", "duplicate point");
    if (n2 > kCollinearCheckCap) return;
    for (std::size_t i = 0; i < n2; ++i)
        for (std::size_t j = i + 1; j < n2; ++j)
            for (std::size_t k = j + 1; k < n2; ++k)
                if (orientation(pts[i], pts[j], pts[k]) == Orientation::Collinear)
                    throw IOError("E_COLLINEAR", "three collinear points");
}

inline void check_convex_ccw(const std::vector<Point2>& pts) {
    if (pts.size() == 2) return;  // two distinct points are trivially convex
    std::vector<int> hull;
    try {
        hull = convex_hull(pts);
    } catch (const std::exception& e) {
        throw IOError("E_COLLINEAR", e.what());
    }
    if (hull.size() != pts.size())
        throw IOError("E_NOT_CONVEX", "points are not in convex position");
    // the hull is ccw; the listed order must be a rotation of it
    std::size_t at0 = 0;
    while (at0 < hull.size() && hull[at0] != 0) ++at0;
    for (std::size_t i = 0; i < hull.size(); ++i)
        if (hull[(at0 + i) % hull.size()] != static_cast<int>(i))
            throw IOError("E_NOT_CONVEX", "points are not listed in ccw convex order");
}

}  // namespace detail

inline Instance parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw IOError("E_SCHEMA", e.what());
    }
    if (!j.is_object() || !j.contains("kind"))
        throw IOError("E_SCHEMA", "instance must be an object with a \"kind\" field");
    std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";

    Instance inst;
    if (kind == "general" || kind == "convex") {
        inst.kind = kind == "general" ? Kind::General : Kind::Convex;
        if (!j.contains("mode")) throw IOError("E_SCHEMA", "missing \"mode\"");
        inst.mode = detail::parse_mode(j["mode"]);
        if (!j.contains("points") || !j["points"].is_array())
            throw IOError("E_SCHEMA", "missing \"points\" array");
        for (const auto& pj : j["points"]) {
            if (!pj.is_object() || !pj.contains("x") || !pj.contains("y"))
                throw IOError("E_SCHEMA", "point must have \"x\" and \"y\"");
            Point2 p{detail::parse_scalar_field(pj["x"], "x"),
                     detail::parse_scalar_field(pj["y"], "y"), Color::None};
            if (inst.mode == Mode::Bi) {
                if (!pj.contains("c")) throw IOError("E_SCHEMA", "bi point must have \"c\"");
                p.color = detail::parse_color(pj["c"]);
            }
            inst.points.push_back(std::move(p));
        }
        detail::check_parity_and_balance(inst);
        detail::check_general_position(inst.points);
        if (inst.kind == Kind::Convex) detail::check_convex_ccw(inst.points);
    } else if (kind == "circle") {
        inst.kind = Kind::Circle;
        if (!j.contains("points") || !j["points"].is_array())
            throw IOError("E_SCHEMA", "missing \"points\" array");
        if (j.contains("mode")) {
            inst.mode = detail::parse_mode(j["mode"]);
        } else {
            // mode may be omitted for circle inputs; infer it from the colors
            inst.mode = !j["points"].empty() && j["points"].front().contains("c")
                            ? Mode::Bi
                            : Mode::Mono;
        }
        for (const auto& pj : j["points"]) {
            if (!pj.is_object() || !pj.contains("turns"))
                throw IOError("E_SCHEMA", "circle point must have \"turns\"");
            CirclePoint cp;
            cp.turns = detail::parse_scalar_field(pj["turns"], "turns");
            if (cp.turns < 0 || cp.turns >= 1)
                throw IOError("E_ANGLE_ORDER", "turns must lie in [0, 1)");
            if (inst.mode == Mode::Bi) {
                if (!pj.contains("c")) throw IOError("E_SCHEMA", "bi point must have \"c\"");
                cp.color = detail::parse_color(pj["c"]);
            }
            inst.circle.push_back(std::move(cp));
        }
        for (std::size_t i = 1; i < inst.circle.size(); ++i)
            if (!(inst.circle[i - 1].turns < inst.circle[i].turns))
                throw IOError("E_ANGLE_ORDER", "turns must be strictly increasing");
        detail::check_parity_and_balance(inst);
    } else if (kind == "doubly_collinear") {
        inst.kind = Kind::DoublyCollinear;
        inst.mode = Mode::Bi;
        DCData dc;
        auto parse_vec = [&](const char* name) {
            if (!j.contains(name) || !j[name].is_array() || j[name].size() != 2)
                throw IOError("E_SCHEMA", std::string(name) + " must be a 2-element array");
            return Vec2{detail::parse_scalar_field(j[name][0], name),
                        detail::parse_scalar_field(j[name][1], name)};
        };
        dc.dir_r = parse_vec("dirR");
        dc.dir_b = parse_vec("dirB");
        if ((sign(dc.dir_r.x) == 0 && sign(dc.dir_r.y) == 0) ||
            (sign(dc.dir_b.x) == 0 && sign(dc.dir_b.y) == 0))
            throw IOError("E_SCHEMA", "direction vectors must be nonzero");
        if (sign(cross(dc.dir_r, dc.dir_b)) == 0)
            throw IOError("E_PARALLEL_LINES", "supporting lines must intersect");
        auto parse_coords = [&](const char* name, std::vector<Scalar>& out) {
            if (!j.contains(name) || !j[name].is_array())
                throw IOError("E_SCHEMA", std::string(name) + " must be an array");
            for (const auto& cj : j[name]) out.push_back(detail::parse_scalar_field(cj, name));
            for (const Scalar& c : out)
                if (sign(c) == 0)
                    throw IOError("E_X_IN_P", "coordinate 0 places a point at the intersection");
            for (std::size_t i = 1; i < out.size(); ++i)
                if (!(out[i - 1] < out[i]))
                    throw IOError("E_COORD_ORDER",
                                  std::string(name) + " must be strictly increasing");
        };
        parse_coords("red", dc.red);
        parse_coords("blue", dc.blue);
        if (dc.red.empty() || dc.red.size() != dc.blue.size())
            throw IOError("E_UNBALANCED", "need equally many red and blue points, at least one each");
        inst.points = materialize_dc_points(dc);
        inst.dc = std::move(dc);
    } else {
        throw IOError("E_SCHEMA", "unknown kind \"" + kind + "\"");
    }
    return inst;
}

inline json instance_to_json(const Instance& inst) {
    json j;
    switch (inst.kind) {
        case Kind::General:
        case Kind::Convex: {
            j["kind"] = inst.kind == Kind::General ? "general" : "convex";
            j["mode"] = inst.mode == Mode::Mono ? "mono" : "bi";
            json pts = json::array();
            for (const Point2& p : inst.points) {
                json pj;
                pj["x"] = to_string(p.x);
                pj["y"] = to_string(p.y);
                if (inst.mode == Mode::Bi) pj["c"] = p.color == Color::Blue ? "B" : "R";
                pts.push_back(std::move(pj));
            }
            j["points"] = std::move(pts);
            break;
        }
        case Kind::Circle: {
            j["kind"] = "circle";
            j["mode"] = inst.mode == Mode::Mono ? "mono" : "bi";
            json pts = json::array();
            for (const CirclePoint& p : inst.circle) {
                json pj;
                pj["turns"] = to_string(p.turns);
                if (inst.mode == Mode::Bi) pj["c"] = p.color == Color::Blue ? "B" : "R";
                pts.push_back(std::move(pj));
            }
            j["points"] = std::move(pts);
            break;
        }
        case Kind::DoublyCollinear: {
            j["kind"] = "doubly_collinear";
            const DCData& dc = *inst.dc;
            j["dirR"] = json::array({to_string(dc.dir_r.x), to_string(dc.dir_r.y)});
            j["dirB"] = json::array({to_string(dc.dir_b.x), to_string(dc.dir_b.y)});
            json red = json::array(), blue = json::array();
            for (const Scalar& u : dc.red) red.push_back(to_string(u));
            for (const Scalar& v : dc.blue) blue.push_back(to_string(v));
            j["red"] = std::move(red);
            j["blue"] = std::move(blue);
            break;
        }
    }
    return j;
}

inline std::string serialize_instance(const Instance& inst) {
    return instance_to_json(inst).dump(2) + "\n";
}

inline Matching parse_matching(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw IOError("E_SCHEMA", e.what());
    }
    if (!j.is_object() || !j.contains("pairs") || !j["pairs"].is_array())
        throw IOError("E_SCHEMA", "matching must be an object with a \"pairs\" array");
    Matching m;
    for (const auto& pj : j["pairs"]) {
        if (!pj.is_array() || pj.size() != 2 || !pj[0].is_number_integer() ||
            !pj[1].is_number_integer())
            throw IOError("E_SCHEMA", "each pair must be a 2-element integer array");
        m.add(pj[0].get<int>(), pj[1].get<int>());
    }
    m.normalize();
    return m;
}

inline json matching_to_json(const Matching& m) {
    Matching sorted = m;
    sorted.normalize();
    json pairs = json::array();
    for (auto [a, b] : sorted.pairs) pairs.push_back(json::array({a, b}));
    json j;
    j["pairs"] = std::move(pairs);
    return j;
}

inline std::string serialize_matching(const Matching& m) {
    return matching_to_json(m).dump(2) + "\n";
}

// Fixed 12-significant-digit format; deterministic for a given double.
inline std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline json outcome_to_json(const Instance& inst, const SolveOutcome& out,
                            bool emit_matching) {
    json j;
    const bool circle = inst.kind == Kind::Circle;
    j[circle ? "span" : "value_sq"] = to_string(out.value);
    j["value_float"] = format_float(to_double(out.value));
    j["witness"] = json::array({out.witness.first, out.witness.second});
    j["algorithm"] = out.algorithm;
    if (emit_matching && out.matching) j["matching"] = matching_to_json(*out.matching);
    return j;
}

inline std::string serialize_outcome(const Instance& inst, const SolveOutcome& out,
                                     bool emit_matching = false) {
    return outcome_to_json(inst, out, emit_matching).dump(2) + "\n";
}

}  // namespace ncm
