#pragma once

// Convex-position algorithms: the O(n^3) interval DP for all four variants in
// both colorings, orbit decomposition, linear-time MinMin / MaxMax paths, and
// O(n) matching constructions.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ncm/extremal_pairs.hpp"
#include "ncm/instance.hpp"

namespace ncm {

// Mono: (i,j) is feasible iff i+j is odd. Bi: iff the endpoints have opposite
// colors and the open interval between them is color-balanced.
inline bool edge_feasible_convex(const Instance& inst, int i, int j) {
    const int n2 = static_cast<int>(inst.size());
    if (inst.mode == Mode::Mono) return (i + j) % 2 == 1;
    if (inst.color(i) == inst.color(j)) return false;
    int bal = 0;
    for (int k = (i + 1) % n2; k != j; k = (k + 1) % n2)
        bal += inst.color(k) == Color::Blue ? 1 : -1;
    return bal == 0;
}

struct OrbitDecomposition {
    std::vector<int> orbit_of;               // per point
    std::vector<std::vector<int>> members;   // per orbit, ccw order
    std::vector<int> level_of;               // per point
};

// Orbit of a point = its prefix-sum level class: walking ccw, s gains 1 at a
// blue point and loses 1 at a red one; a blue point takes the sum including
// itself, a red point the sum before itself.
inline OrbitDecomposition compute_orbits_of_sequence(const std::vector<Color>& colors) {
    const int n2 = static_cast<int>(colors.size());
    int bal = 0;
    for (Color c : colors) bal += c == Color::Blue ? 1 : -1;
    if (bal != 0) throw std::invalid_argument("compute_orbits: unbalanced coloring");

    OrbitDecomposition od;
    od.level_of.resize(n2);
    od.orbit_of.resize(n2);
    int s = 0;
    for (int i = 0; i < n2; ++i) {
        if (colors[i] == Color::Blue) {
            ++s;
            od.level_of[i] = s;
        } else {
            od.level_of[i] = s;
            --s;
        }
    }
    std::map<int, int> id_of_level;
    for (int i = 0; i < n2; ++i) {
        auto [it, inserted] = id_of_level.try_emplace(od.level_of[i],
                                                      static_cast<int>(od.members.size()));
        if (inserted) od.members.emplace_back();
        od.orbit_of[i] = it->second;
        od.members[it->second].push_back(i);
    }
    return od;
}

inline OrbitDecomposition compute_orbits(const Instance& inst) {
    std::vector<Color> colors(inst.size());
    for (std::size_t i = 0; i < inst.size(); ++i) colors[i] = inst.color(i);
    return compute_orbits_of_sequence(colors);
}

namespace detail {

// Arbitrary non-crossing matching of the ccw index list `seq` (global
// indices). Mono: consecutive pairs. Bi: per orbit, each red point is matched
// to the next blue point ccw along the orbit.
inline void arbitrary_match_sequence(const Instance& inst, const std::vector<int>& seq,
                                     Matching& m) {
    if (seq.empty()) return;
    if (seq.size() % 2 != 0)
        throw std::invalid_argument("arbitrary_match_sequence: odd interval");
    if (inst.mode == Mode::Mono) {
        for (std::size_t k = 0; k + 1 < seq.size(); k += 2) m.add(seq[k], seq[k + 1]);
        return;
    }
    std::vector<Color> colors(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) colors[i] = inst.color(seq[i]);
    OrbitDecomposition od = compute_orbits_of_sequence(colors);
    for (const auto& orbit : od.members) {
        for (std::size_t p = 0; p < orbit.size(); ++p) {
            if (colors[orbit[p]] != Color::Red) continue;
            int nxt = orbit[(p + 1) % orbit.size()];
            if (colors[nxt] != Color::Blue)
                throw std::logic_error("orbit colors do not alternate");
            m.add(seq[orbit[p]], seq[nxt]);
        }
    }
}

}  // namespace detail

inline Matching arbitrary_matching_convex(const Instance& inst) {
    std::vector<int> all(inst.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    Matching m;
    detail::arbitrary_match_sequence(inst, all, m);
    m.normalize();
    return m;
}

// The feasible edge e plus arbitrary matchings of the two open intervals
// flanking it.
inline Matching extend_edge_to_matching_convex(const Instance& inst, IndexPair e) {
    const int n2 = static_cast<int>(inst.size());
    if (!edge_feasible_convex(inst, e.first, e.second))
        throw std::invalid_argument("extend_edge_to_matching_convex: infeasible edge");
    Matching m;
    m.add(e.first, e.second);
    auto interval = [&](int from, int to) {
        std::vector<int> seq;
        for (int k = (from + 1) % n2; k != to; k = (k + 1) % n2) seq.push_back(k);
        return seq;
    };
    detail::arbitrary_match_sequence(inst, interval(e.first, e.second), m);
    detail::arbitrary_match_sequence(inst, interval(e.second, e.first), m);
    m.normalize();
    return m;
}

// ---------------------------------------------------------------------------
// Interval dynamic program, all four variants, both colorings. Works for any
// convex-position instance, including circle instances (span measure).

struct IntervalTable {
    int n2 = 0;
    // per (start, half-length): aggregated value (has_value=false means the
    // interval admits no perfect matching) and the chosen partner offset
    std::vector<std::vector<std::optional<Scalar>>> value;
    std::vector<std::vector<int>> choice;

    std::optional<Scalar>& val(int i, int len) { return value[i][len / 2 - 1]; }
    int& pick(int i, int len) { return choice[i][len / 2 - 1]; }
};

namespace detail {

inline Scalar inner_combine(Agg inner, const Scalar& a, const std::optional<Scalar>& b) {
    if (!b) return a;
    if (inner == Agg::Min) return a < *b ? a : *b;
    return a > *b ? a : *b;
}

inline void dp_reconstruct(const IntervalTable& tab, int start, int len, Matching& m) {
    if (len == 0) return;
    int o = tab.choice[start][len / 2 - 1];
    int partner = (start + o) % tab.n2;
    m.add(start, partner);
    dp_reconstruct(tab, (start + 1) % tab.n2, o - 1, m);
    dp_reconstruct(tab, (partner + 1) % tab.n2, len - o - 1, m);
}

}  // namespace detail

inline SolveOutcome dp_solve_convex(const Instance& inst, VariantSpec v,
                                    bool want_matching = true) {
    const int n2 = static_cast<int>(inst.size());
    if (n2 == 0 || n2 % 2 != 0) throw std::invalid_argument("dp_solve_convex: bad size");

    // measures computed once per pair
    std::vector<std::vector<Scalar>> dist(n2, std::vector<Scalar>(n2));
    for (int i = 0; i < n2; ++i)
        for (int j = i + 1; j < n2; ++j) {
            dist[i][j] = edge_measure(inst, i, j);
            dist[j][i] = dist[i][j];
        }

    IntervalTable tab;
    tab.n2 = n2;
    tab.value.assign(n2, std::vector<std::optional<Scalar>>(n2 / 2));
    tab.choice.assign(n2, std::vector<int>(n2 / 2, -1));

    const bool bi = inst.mode == Mode::Bi;
    for (int len = 2; len <= n2; len += 2) {
        for (int i = 0; i < n2; ++i) {
            if (len < n2 || i == 0) {  // full circle only needs start 0
                std::optional<Scalar> best;
                int best_o = -1;
                int bal = 0;  // color balance of the open interval (i, partner)
                for (int o = 1; o < len; ++o) {
                    int partner = (i + o) % n2;
                    if (o >= 2) bal += inst.color((i + o - 1) % n2) == Color::Blue ? 1 : -1;
                    bool feasible;
                    if (bi)
                        feasible = inst.color(i) != inst.color(partner) && bal == 0;
                    else
                        feasible = (i + partner) % 2 == 1;
                    if (!feasible || o % 2 != 1) continue;

                    const std::optional<Scalar>* left = nullptr;
                    const std::optional<Scalar>* right = nullptr;
                    if (o - 1 > 0) {
                        left = &tab.value[(i + 1) % n2][(o - 1) / 2 - 1];
                        if (!left->has_value()) continue;
                    }
                    if (len - o - 1 > 0) {
                        right = &tab.value[(partner + 1) % n2][(len - o - 1) / 2 - 1];
                        if (!right->has_value()) continue;
                    }
                    Scalar cand = dist[i][partner];
                    if (left) cand = detail::inner_combine(v.inner, cand, *left);
                    if (right) cand = detail::inner_combine(v.inner, cand, *right);
                    bool better =
                        !best || (v.outer == Agg::Min ? cand < *best : cand > *best);
                    if (better) {
                        best = cand;
                        best_o = o;
                    }
                }
                tab.value[i][len / 2 - 1] = best;
                tab.choice[i][len / 2 - 1] = best_o;
            }
        }
    }

    const auto& ans = tab.value[0][n2 / 2 - 1];
    if (!ans) throw std::runtime_error("dp_solve_convex: no feasible matching");

    Matching m;
    detail::dp_reconstruct(tab, 0, n2, m);
    m.normalize();
    auto [val, witness] = objective_value(inst, m, v.inner);
    if (val != *ans) throw std::logic_error("dp_solve_convex: retrace mismatch");
    SolveOutcome out{*ans, witness, std::nullopt, "convex-interval-dp"};
    if (want_matching) out.matching = std::move(m);
    return out;
}

// ---------------------------------------------------------------------------
// Fast monochromatic paths: odd and even index classes are two convex sets
// and every cross pair is feasible.

namespace detail {

inline SolveOutcome extremal_outcome(const Instance& inst, const PairCandidate& c,
                                     const char* algo, bool want_matching) {
    SolveOutcome out{c.value, c.pair, std::nullopt, algo};
    if (want_matching) out.matching = extend_edge_to_matching_convex(inst, c.pair);
    return out;
}

}  // namespace detail

inline SolveOutcome minmin1_convex(const Instance& inst, bool want_matching = false) {
    std::vector<int> odd, even;
    for (int i = 0; i < static_cast<int>(inst.size()); ++i)
        (i % 2 ? odd : even).push_back(i);
    auto c = closest_pair_convex(inst.points, even, odd);
    return detail::extremal_outcome(inst, *c, "convex-split-minmin1", want_matching);
}

inline SolveOutcome maxmax1_convex(const Instance& inst, bool want_matching = false) {
    std::vector<int> odd, even;
    for (int i = 0; i < static_cast<int>(inst.size()); ++i)
        (i % 2 ? odd : even).push_back(i);
    auto c = farthest_pair_convex(inst.points, even, odd);
    return detail::extremal_outcome(inst, *c, "convex-split-maxmax1", want_matching);
}

// Bichromatic: each orbit behaves monochromatically, so take the extremal
// cross pair per orbit and aggregate.
inline SolveOutcome minmin2_convex(const Instance& inst, bool want_matching = false) {
    OrbitDecomposition od = compute_orbits(inst);
    std::optional<PairCandidate> best;
    for (const auto& orbit : od.members) {
        std::vector<int> blues, reds;
        for (int i : orbit) (inst.color(i) == Color::Blue ? blues : reds).push_back(i);
        if (auto c = closest_pair_convex(inst.points, blues, reds))
            detail::consider(best, Agg::Min, c->value, c->pair.first, c->pair.second);
    }
    return detail::extremal_outcome(inst, *best, "convex-orbit-minmin2", want_matching);
}

inline SolveOutcome maxmax2_convex(const Instance& inst, bool want_matching = false) {
    OrbitDecomposition od = compute_orbits(inst);
    std::optional<PairCandidate> best;
    for (const auto& orbit : od.members) {
        std::vector<int> blues, reds;
        for (int i : orbit) (inst.color(i) == Color::Blue ? blues : reds).push_back(i);
        if (auto c = farthest_pair_convex(inst.points, blues, reds))
            detail::consider(best, Agg::Max, c->value, c->pair.first, c->pair.second);
    }
    return detail::extremal_outcome(inst, *best, "convex-orbit-maxmax2", want_matching);
}

}  // namespace ncm
