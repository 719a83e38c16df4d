#pragma once

// Exhaustive ground truth: enumerate every perfect non-crossing matching of a
// small instance and fold the four objectives over the enumeration.

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ncm/instance.hpp"

namespace ncm {

inline constexpr std::size_t kOracleDefaultCap = 16;  // max 2n

// Optional per-edge veto applied before an edge may enter a matching; used by
// tests that enumerate matchings avoiding a given edge set.
using EdgeFilter = std::function<bool(int, int)>;

// Calls `visit` once per perfect non-crossing (and, in Bi mode,
// color-respecting) matching. Deterministic order: the lowest unmatched index
// is extended to candidate partners in increasing index order.
// Returns false if `visit` aborted the enumeration by returning false.
inline bool enumerate_ncpm(const Instance& inst,
                           const std::function<bool(const Matching&)>& visit,
                           std::size_t cap = kOracleDefaultCap,
                           const EdgeFilter& allow = nullptr) {
    const int n2 = static_cast<int>(inst.size());
    if (static_cast<std::size_t>(n2) > cap)
        throw std::invalid_argument("enumerate_ncpm: instance exceeds enumeration cap");
    if (n2 % 2 != 0) throw std::invalid_argument("enumerate_ncpm: odd point count");

    std::vector<bool> used(n2, false);
    Matching current;
    bool keep_going = true;

    auto color_compatible = [&](int a, int b) {
        return inst.mode == Mode::Mono || inst.color(a) != inst.color(b);
    };

    std::function<void()> rec = [&]() {
        if (!keep_going) return;
        int lo = 0;
        while (lo < n2 && used[lo]) ++lo;
        if (lo == n2) {
            keep_going = visit(current);
            return;
        }
        for (int j = lo + 1; j < n2 && keep_going; ++j) {
            if (used[j] || !color_compatible(lo, j)) continue;
            if (allow && !allow(lo, j)) continue;
            bool ok = true;
            for (const auto& e : current.pairs)
                if (!edges_disjoint(inst, e, {lo, j})) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            used[lo] = used[j] = true;
            current.pairs.emplace_back(lo, j);
            rec();
            current.pairs.pop_back();
            used[lo] = used[j] = false;
        }
    };
    rec();
    return keep_going;
}

inline std::vector<Matching> enumerate_ncpm_all(const Instance& inst,
                                                std::size_t cap = kOracleDefaultCap,
                                                const EdgeFilter& allow = nullptr) {
    std::vector<Matching> out;
    enumerate_ncpm(
        inst,
        [&](const Matching& m) {
            out.push_back(m);
            return true;
        },
        cap, allow);
    return out;
}

// Outer aggregate of objective_value over all enumerated matchings.
inline SolveOutcome oracle_solve(const Instance& inst, VariantSpec v,
                                 std::size_t cap = kOracleDefaultCap) {
    std::optional<Scalar> best;
    IndexPair best_witness{-1, -1};
    std::optional<Matching> best_matching;
    enumerate_ncpm(
        inst,
        [&](const Matching& m) {
            auto [val, w] = objective_value(inst, m, v.inner);
            if (outcome_improves(v.outer, val, w, best, best_witness)) {
                best = val;
                best_witness = w;
                best_matching = m;
                best_matching->normalize();
            }
            return true;
        },
        cap);
    if (!best) throw std::runtime_error("oracle_solve: no perfect non-crossing matching");
    return {*best, best_witness, best_matching, "oracle"};
}

// True iff some perfect non-crossing matching contains the edge (a,b).
inline bool oracle_edge_feasible(const Instance& inst, int a, int b,
                                 std::size_t cap = kOracleDefaultCap) {
    if (a > b) std::swap(a, b);
    bool found = false;
    enumerate_ncpm(
        inst,
        [&](const Matching& m) {
            for (auto [x, y] : m.pairs)
                if (x == a && y == b) {
                    found = true;
                    return false;  // stop early
                }
            return true;
        },
        cap);
    return found;
}

}  // namespace ncm
