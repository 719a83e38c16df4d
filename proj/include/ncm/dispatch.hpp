#pragma once

// Data-driven capability table and automatic solver dispatch per
// (kind, mode, variant). Combinations with no known polynomial algorithm
// (general-position bottleneck problems and their open siblings) are refused
// with E_UNSUPPORTED; the oracle can still be requested explicitly for tiny
// inputs.

#include <stdexcept>
#include <string>
#include <vector>

#include "ncm/circle.hpp"
#include "ncm/convex.hpp"
#include "ncm/dc.hpp"
#include "ncm/general.hpp"
#include "ncm/instance.hpp"
#include "ncm/oracle.hpp"

namespace ncm {

class UnsupportedError : public std::runtime_error {
   public:
    explicit UnsupportedError(const std::string& detail)
        : std::runtime_error("E_UNSUPPORTED: " + detail) {}
};

struct Capability {
    Kind kind;
    Mode mode;
    VariantSpec variant;
    bool supported;
    std::string algorithm;  // empty when unsupported
    std::string note;       // complexity, or the reason for refusal
};

inline const char* kind_name(Kind k) {
    switch (k) {
        case Kind::General: return "general";
        case Kind::Convex: return "convex";
        case Kind::Circle: return "circle";
        case Kind::DoublyCollinear: return "doubly_collinear";
    }
    return "?";
}

inline std::vector<Capability> capabilities() {
    std::vector<Capability> t;
    auto add = [&](Kind k, Mode m, VariantSpec v, bool ok, std::string algo,
                   std::string note) {
        t.push_back({k, m, v, ok, std::move(algo), std::move(note)});
    };
    // monochromatic
    add(Kind::General, Mode::Mono, kMinMin, true, "general-minmin1", "O(nh + n log n)");
    add(Kind::General, Mode::Mono, kMaxMax, true, "general-maxmax1", "O(nh + n log n)");
    add(Kind::General, Mode::Mono, kMinMax, false, "", "NP-hard");
    add(Kind::General, Mode::Mono, kMaxMin, false, "", "open problem");
    add(Kind::Convex, Mode::Mono, kMinMin, true, "convex-split-minmin1", "O(n)");
    add(Kind::Convex, Mode::Mono, kMaxMax, true, "convex-split-maxmax1", "O(n)");
    add(Kind::Convex, Mode::Mono, kMinMax, true, "convex-interval-dp", "O(n^3) here (O(n^2) known)");
    add(Kind::Convex, Mode::Mono, kMaxMin, true, "convex-interval-dp", "O(n^3)");
    add(Kind::Circle, Mode::Mono, kMinMin, true, "circle-boundary-minmin", "O(n)");
    add(Kind::Circle, Mode::Mono, kMaxMax, true, "circle-antipodal-maxmax", "O(n log n)");
    add(Kind::Circle, Mode::Mono, kMinMax, true, "circle-boundary-minmax1", "O(n)");
    add(Kind::Circle, Mode::Mono, kMaxMin, true, "circle-sliding-window", "O(n)");
    // bichromatic
    add(Kind::General, Mode::Bi, kMinMin, false, "", "open problem");
    add(Kind::General, Mode::Bi, kMaxMax, false, "", "open problem");
    add(Kind::General, Mode::Bi, kMinMax, false, "", "NP-hard");
    add(Kind::General, Mode::Bi, kMaxMin, false, "", "open problem");
    add(Kind::Convex, Mode::Bi, kMinMin, true, "convex-orbit-minmin2", "O(n)");
    add(Kind::Convex, Mode::Bi, kMaxMax, true, "convex-orbit-maxmax2", "O(n)");
    add(Kind::Convex, Mode::Bi, kMinMax, true, "convex-interval-dp", "O(n^3) here (O(n^2) known)");
    add(Kind::Convex, Mode::Bi, kMaxMin, true, "convex-interval-dp", "O(n^3)");
    add(Kind::Circle, Mode::Bi, kMinMin, true, "circle-boundary-minmin", "O(n)");
    add(Kind::Circle, Mode::Bi, kMaxMax, true, "circle-antipodal-maxmax", "O(n log n)");
    add(Kind::Circle, Mode::Bi, kMinMax, true, "convex-interval-dp", "O(n^3) span metric");
    add(Kind::Circle, Mode::Bi, kMaxMin, true, "convex-interval-dp", "O(n^3) span metric");
    add(Kind::DoublyCollinear, Mode::Bi, kMinMin, true, "dc-twopointer-minmin2", "O(n)");
    add(Kind::DoublyCollinear, Mode::Bi, kMaxMax, true, "dc-extremal-maxmax2", "O(1) + O(n)");
    add(Kind::DoublyCollinear, Mode::Bi, kMinMax, true, "dc-case-enum-minmax2",
        "O(n^4 log n); O(n) orthogonal / small-angle fast paths");
    add(Kind::DoublyCollinear, Mode::Bi, kMaxMin, true, "dc-orthogonal",
        "orthogonal lines only; open otherwise");
    return t;
}

// The best implemented algorithm for the given instance and variant.
inline SolveOutcome solve_auto(const Instance& inst, VariantSpec v,
                               bool want_matching = true) {
    const std::string tag =
        std::string(kind_name(inst.kind)) + "/" +
        (inst.mode == Mode::Mono ? "mono" : "bi") + "/" + variant_name(v);
    switch (inst.kind) {
        case Kind::General: {
            if (inst.mode == Mode::Bi) throw UnsupportedError(tag);
            if (v == kMinMin) return minmin1_general(inst, want_matching);
            if (v == kMaxMax) return maxmax1_general(inst, want_matching);
            throw UnsupportedError(tag);
        }
        case Kind::Convex: {
            if (inst.mode == Mode::Mono) {
                if (v == kMinMin) return minmin1_convex(inst, want_matching);
                if (v == kMaxMax) return maxmax1_convex(inst, want_matching);
            } else {
                if (v == kMinMin) return minmin2_convex(inst, want_matching);
                if (v == kMaxMax) return maxmax2_convex(inst, want_matching);
            }
            return dp_solve_convex(inst, v, want_matching);
        }
        case Kind::Circle: {
            if (v == kMinMin) return minmin_circle(inst, want_matching);
            if (v == kMaxMax) return maxmax_circle(inst, want_matching);
            if (inst.mode == Mode::Mono) {
                if (v == kMinMax) return minmax1_circle(inst, want_matching);
                return maxmin1_circle(inst, want_matching);
            }
            return dp_solve_convex(inst, v, want_matching);
        }
        case Kind::DoublyCollinear: {
            if (v == kMinMin) return minmin2_dc(inst, want_matching);
            if (v == kMaxMax) return maxmax2_dc(inst, want_matching);
            DCView w = make_dc_view(inst);
            const bool orthogonal = sign(w.cosnum) == 0;
            if (v == kMaxMin) {
                if (!orthogonal) throw UnsupportedError(tag + " (non-orthogonal lines)");
                return maxmin2_orthogonal(inst, want_matching);
            }
            // MinMax
            if (orthogonal) return minmax2_orthogonal(inst, want_matching);
            if (sign(w.cosnum) > 0 && 2 * w.cosnum * w.cosnum >= w.rr * w.bb)
                return minmax2_small_angle(inst, want_matching);
            return minmax2_dc(inst, want_matching);
        }
    }
    throw UnsupportedError(tag);
}

// Dispatch honoring an explicit algorithm request: "auto", "oracle", "dp"
// (convex / circle interval DP, doubly-collinear one-sided DP), or
// "specialized" (same as auto but refuses the DP fallbacks).
inline SolveOutcome solve_with_algorithm(const Instance& inst, VariantSpec v,
                                         const std::string& algorithm,
                                         bool want_matching = true,
                                         std::size_t oracle_cap = kOracleDefaultCap) {
    if (algorithm == "auto" || algorithm == "specialized")
        return solve_auto(inst, v, want_matching);
    if (algorithm == "oracle") {
        if (inst.size() > oracle_cap)
            throw UnsupportedError("oracle capped at " + std::to_string(oracle_cap) +
                                   " points");
        SolveOutcome out = oracle_solve(inst, v, oracle_cap);
        if (!want_matching) out.matching.reset();
        return out;
    }
    if (algorithm == "dp") {
        if (inst.kind == Kind::Convex || inst.kind == Kind::Circle)
            return dp_solve_convex(inst, v, want_matching);
        throw UnsupportedError("dp algorithm applies to convex / circle instances");
    }
    throw std::invalid_argument("unknown algorithm: " + algorithm);
}

}  // namespace ncm
