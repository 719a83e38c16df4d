#pragma once

// Doubly-collinear algorithms: O(1) edge feasibility, O(n) edge extension,
// MinMin2 / MaxMax2, the one-sided DP and O(n log n) MinMax2, the general
// O(n^4 log n) MinMax2 case enumeration, and the orthogonal / small-angle
// linear-time specializations. All geometry reduces to the rational form
// d^2 = u^2|dR|^2 + v^2|dB|^2 - 2uv(dR.dB) and sign tests on dot products.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ncm/convex.hpp"  // detail::inner_combine
#include "ncm/extremal_pairs.hpp"
#include "ncm/instance.hpp"

namespace ncm {

// Precomputed ranks and half-line membership. Global indices: reds 0..n-1 by
// ascending coordinate, blues n..2n-1 by ascending coordinate. Half-line
// lists are ordered by |coordinate| ascending (distance from x).
struct DCView {
    const Instance* inst = nullptr;
    int n = 0;
    Scalar rr, bb, cosnum;  // |dirR|^2, |dirB|^2, dirR . dirB
    std::vector<Scalar> coord;
    std::vector<int> rp, rm, bp, bm;
    std::vector<int> rank_of;
    std::vector<int> half_of;  // +1 / -1

    Scalar d2(int r, int b) const {
        const Scalar &u = coord[r], &v = coord[b];
        return u * u * rr + v * v * bb - 2 * u * v * cosnum;
    }
    bool is_red(int g) const { return g < n; }
};

inline DCView make_dc_view(const Instance& inst) {
    if (inst.kind != Kind::DoublyCollinear || !inst.dc)
        throw std::invalid_argument("make_dc_view: not a doubly-collinear instance");
    const DCData& dc = *inst.dc;
    if (dc.red.size() != dc.blue.size())
        throw std::invalid_argument("make_dc_view: unbalanced colors");
    DCView w;
    w.inst = &inst;
    w.n = static_cast<int>(dc.red.size());
    w.rr = dot(dc.dir_r, dc.dir_r);
    w.bb = dot(dc.dir_b, dc.dir_b);
    w.cosnum = dot(dc.dir_r, dc.dir_b);
    if (cross(dc.dir_r, dc.dir_b) == 0)
        throw std::invalid_argument("make_dc_view: parallel lines");
    w.coord.reserve(2 * w.n);
    for (const Scalar& u : dc.red) w.coord.push_back(u);
    for (const Scalar& v : dc.blue) w.coord.push_back(v);
    w.rank_of.assign(2 * w.n, -1);
    w.half_of.assign(2 * w.n, 0);
    auto split = [&](int base, const std::vector<Scalar>& cs, std::vector<int>& plus,
                     std::vector<int>& minus) {
        for (std::size_t i = 1; i < cs.size(); ++i)
            if (cs[i - 1] >= cs[i])
                throw std::invalid_argument("make_dc_view: coordinates not strictly sorted");
        for (int i = 0; i < static_cast<int>(cs.size()); ++i) {
            if (cs[i] == 0) throw std::invalid_argument("make_dc_view: point at x");
            (cs[i] > 0 ? plus : minus).push_back(base + i);
        }
        std::reverse(minus.begin(), minus.end());  // |coord| ascending
        for (auto* list : {&plus, &minus})
            for (int r = 0; r < static_cast<int>(list->size()); ++r) {
                w.rank_of[(*list)[r]] = r;
                w.half_of[(*list)[r]] = list == &plus ? 1 : -1;
            }
    };
    split(0, dc.red, w.rp, w.rm);
    split(w.n, dc.blue, w.bp, w.bm);
    return w;
}

// Feasibility criterion: with i reds strictly between r and x and j blues
// strictly between b and x, (r,b) is feasible iff i <= j + |B_other| and
// j <= i + |R_other|.
inline bool dc_edge_feasible(const DCView& w, int r, int b) {
    if (r < 0 || r >= w.n || b < w.n || b >= 2 * w.n)
        throw std::invalid_argument("dc_edge_feasible: bad indices");
    int i = w.rank_of[r], j = w.rank_of[b];
    int b_other = static_cast<int>(w.half_of[b] > 0 ? w.bm.size() : w.bp.size());
    int r_other = static_cast<int>(w.half_of[r] > 0 ? w.rm.size() : w.rp.size());
    return i <= j + b_other && j <= i + r_other;
}

inline bool dc_edge_feasible(const Instance& inst, int r, int b) {
    return dc_edge_feasible(make_dc_view(inst), r, b);
}

namespace detail {

inline void pair_same_order(const std::vector<int>& reds, const std::vector<int>& blues,
                            Matching& m) {
    if (reds.size() != blues.size())
        throw std::logic_error("pair_same_order: size mismatch");
    for (std::size_t t = 0; t < reds.size(); ++t) m.add(reds[t], blues[t]);
}

inline std::vector<int> slice(const std::vector<int>& v, int from, int to) {
    return {v.begin() + from, v.begin() + to};
}

// Arbitrary non-crossing matching of four half-line remainders (lists by rank
// ascending). Any sector assignment works — edges in different sectors never
// cross and same-order pairing within a sector is non-crossing — so pick the
// counts greedily.
inline void dc_arbitrary_match(const std::vector<int>& rp, const std::vector<int>& rm,
                               const std::vector<int>& bp, const std::vector<int>& bm,
                               Matching& m) {
    int a = static_cast<int>(std::min(rp.size(), bp.size()));
    int kpm = static_cast<int>(rp.size()) - a;
    int kmp = static_cast<int>(bp.size()) - a;
    int kmm = static_cast<int>(rm.size()) - kmp;
    if (kmm < 0 || kmm != static_cast<int>(bm.size()) - kpm)
        throw std::logic_error("dc_arbitrary_match: unbalanced remainder");
    pair_same_order(slice(rp, 0, a), slice(bp, 0, a), m);
    pair_same_order(slice(rm, 0, kmm), slice(bm, 0, kmm), m);
    pair_same_order(slice(rm, kmm, kmm + kmp), slice(bp, a, a + kmp), m);
    pair_same_order(slice(rp, a, a + kpm), slice(bm, kmm, kmm + kpm), m);
}

}  // namespace detail

// Extend a feasible edge into a perfect non-crossing matching following the
// feasibility lemma's constructive proof: pair up the between-segments (with
// the deficient side extended past x when the counts differ), then complete
// arbitrarily.
inline Matching dc_extend_edge(const DCView& w, int r, int b) {
    if (!dc_edge_feasible(w, r, b))
        throw std::invalid_argument("dc_extend_edge: infeasible edge");
    const std::vector<int>& Rsame = w.half_of[r] > 0 ? w.rp : w.rm;
    const std::vector<int>& Rother = w.half_of[r] > 0 ? w.rm : w.rp;
    const std::vector<int>& Bsame = w.half_of[b] > 0 ? w.bp : w.bm;
    const std::vector<int>& Bother = w.half_of[b] > 0 ? w.bm : w.bp;
    int i = w.rank_of[r], j = w.rank_of[b];

    Matching m;
    m.add(r, b);
    std::vector<int> rs_rem = detail::slice(Rsame, i + 1, static_cast<int>(Rsame.size()));
    std::vector<int> bs_rem = detail::slice(Bsame, j + 1, static_cast<int>(Bsame.size()));
    std::vector<int> ro_rem = Rother, bo_rem = Bother;
    if (i <= j) {
        detail::pair_same_order(detail::slice(Rsame, 0, i), detail::slice(Bsame, 0, i), m);
        detail::pair_same_order(detail::slice(Rother, 0, j - i), detail::slice(Bsame, i, j),
                                m);
        ro_rem = detail::slice(Rother, j - i, static_cast<int>(Rother.size()));
    } else {
        detail::pair_same_order(detail::slice(Rsame, 0, j), detail::slice(Bsame, 0, j), m);
        detail::pair_same_order(detail::slice(Rsame, j, i), detail::slice(Bother, 0, i - j),
                                m);
        bo_rem = detail::slice(Bother, i - j, static_cast<int>(Bother.size()));
    }
    // labels passed to the completion are arbitrary; keep (same, other)
    detail::dc_arbitrary_match(rs_rem, ro_rem, bs_rem, bo_rem, m);
    m.normalize();
    return m;
}

inline Matching dc_extend_edge(const Instance& inst, int r, int b) {
    return dc_extend_edge(make_dc_view(inst), r, b);
}

// MinMin2: per half-line pair, feasible partners form a rank range and the
// nearest feasible partner moves monotonically away from x, so a two-pointer
// sweep yields O(n) candidate edges.
inline SolveOutcome minmin2_dc(const Instance& inst, bool want_matching = true) {
    DCView w = make_dc_view(inst);
    std::optional<PairCandidate> best;
    for (const std::vector<int>* R : {&w.rp, &w.rm}) {
        for (const std::vector<int>* B : {&w.bp, &w.bm}) {
            if (R->empty() || B->empty()) continue;
            int r_other = static_cast<int>(R == &w.rp ? w.rm.size() : w.rp.size());
            int b_other = static_cast<int>(B == &w.bp ? w.bm.size() : w.bp.size());
            int s = static_cast<int>(B->size());
            int ptr = 0;
            for (int i = 0; i < static_cast<int>(R->size()); ++i) {
                int lo = std::max(0, i - b_other);
                int hi = std::min(s - 1, i + r_other);
                if (lo > hi) continue;
                ptr = std::clamp(ptr, lo, hi);
                while (ptr + 1 <= hi &&
                       w.d2((*R)[i], (*B)[ptr + 1]) < w.d2((*R)[i], (*B)[ptr]))
                    ++ptr;
                detail::consider(best, Agg::Min, w.d2((*R)[i], (*B)[ptr]), (*R)[i],
                                 (*B)[ptr]);
            }
        }
    }
    if (!best) throw std::logic_error("minmin2_dc: no feasible edge");
    SolveOutcome out{best->value, best->pair, std::nullopt, "dc-twopointer-minmin2"};
    if (want_matching) out.matching = dc_extend_edge(w, best->pair.first, best->pair.second);
    return out;
}

// MaxMax2: d^2(u, v) is strictly convex (its Hessian determinant is
// 4(|dirR|^2 |dirB|^2 - (dirR.dirB)^2) > 0), so the longest edge joins
// coordinate extremes: at most four candidates, and the longest overall
// edge is always feasible.
inline SolveOutcome maxmax2_dc(const Instance& inst, bool want_matching = true) {
    DCView w = make_dc_view(inst);
    std::optional<PairCandidate> best;
    for (int r : {0, w.n - 1})
        for (int b : {w.n, 2 * w.n - 1}) {
            if (!dc_edge_feasible(w, r, b)) continue;
            detail::consider(best, Agg::Max, w.d2(r, b), r, b);
        }
    if (!best) throw std::logic_error("maxmax2_dc: no feasible edge");
    SolveOutcome out{best->value, best->pair, std::nullopt, "dc-extremal-maxmax2"};
    if (want_matching) out.matching = dc_extend_edge(w, best->pair.first, best->pair.second);
    return out;
}

// ---------------------------------------------------------------------------
// One-sided subproblems: all reds of the (sub)problem lie on one red
// half-line; blues may sit on both blue half-lines. Lists hold global indices
// by |coordinate| ascending.

struct OneSidedProblem {
    const DCView* w = nullptr;
    std::vector<int> red, bminus, bplus;
};

struct OneSidedResult {
    std::optional<Scalar> value;  // absent for the empty problem
    Matching matching;
};

// O(n^2) DP over prefixes: the red point farthest from x pairs with one of
// the two extremal blue points.
inline OneSidedResult onesided_solve_dp(const OneSidedProblem& p, VariantSpec v) {
    const int nm = static_cast<int>(p.bminus.size());
    const int np = static_cast<int>(p.bplus.size());
    const int nr = static_cast<int>(p.red.size());
    if (nr != nm + np) throw std::invalid_argument("onesided_solve_dp: unbalanced");
    OneSidedResult res;
    if (nr == 0) return res;

    std::vector<std::vector<std::optional<Scalar>>> val(
        nm + 1, std::vector<std::optional<Scalar>>(np + 1));
    std::vector<std::vector<signed char>> choice(nm + 1,
                                                 std::vector<signed char>(np + 1, -1));
    for (int a = 0; a <= nm; ++a)
        for (int b = 0; b <= np; ++b) {
            if (a + b == 0) continue;
            int r = p.red[a + b - 1];
            std::optional<Scalar> best;
            signed char pick = -1;
            auto try_branch = [&](signed char which, int blue,
                                  const std::optional<Scalar>& sub) {
                Scalar cand = detail::inner_combine(v.inner, p.w->d2(r, blue), sub);
                if (!best || (v.outer == Agg::Min ? cand < *best : cand > *best)) {
                    best = cand;
                    pick = which;
                }
            };
            if (a > 0) try_branch(0, p.bminus[a - 1], val[a - 1][b]);
            if (b > 0) try_branch(1, p.bplus[b - 1], val[a][b - 1]);
            val[a][b] = best;
            choice[a][b] = pick;
        }

    res.value = val[nm][np];
    int a = nm, b = np;
    while (a + b > 0) {
        int r = p.red[a + b - 1];
        if (choice[a][b] == 0) {
            res.matching.add(r, p.bminus[a - 1]);
            --a;
        } else {
            res.matching.add(r, p.bplus[b - 1]);
            --b;
        }
    }
    res.matching.normalize();
    return res;
}

namespace detail {

// One fixed structured matching M_k of a one-sided problem: small-side blues
// Bm matched to the consecutive reds k-1 .. k-2+|Bm| (0-based), the rest
// matched same-order with Bp through the big sector.
struct MkEval {
    Scalar small_max, big_max, total;
    int longest_small;  // index into Bm of the first realizing small edge
    bool big_is_longest;
};

inline MkEval evaluate_mk(const DCView& w, const std::vector<int>& red,
                          const std::vector<int>& Bm, const std::vector<int>& Bp, int k,
                          Matching* out) {
    const int nr = static_cast<int>(red.size());
    const int nb = static_cast<int>(Bm.size());
    const int np = static_cast<int>(Bp.size());
    MkEval ev{};
    ev.longest_small = 0;
    std::optional<Scalar> smax;
    for (int i = 0; i < nb; ++i) {
        Scalar d = w.d2(red[k - 1 + i], Bm[i]);
        if (out) out->add(red[k - 1 + i], Bm[i]);
        if (!smax || d > *smax) {
            smax = d;
            ev.longest_small = i;
        }
    }
    ev.small_max = *smax;
    // big sector: inner block red[0..k-2] with Bp[0..k-2], outer block
    // red[k-1+nb..] with Bp[k-1..]; the longest big edge is the outermost
    // pair by the decreasing chords property of the big sector
    if (out) {
        for (int t = 0; t < k - 1; ++t) out->add(red[t], Bp[t]);
        for (int t = k - 1 + nb; t < nr; ++t) out->add(red[t], Bp[t - nb]);
    }
    if (np > 0) {
        int outer_red = k - 1 + nb <= nr - 1 ? red[nr - 1] : red[k - 2];
        ev.big_max = w.d2(outer_red, Bp[np - 1]);
        ev.big_is_longest = ev.big_max >= ev.small_max;
        ev.total = ev.big_is_longest ? ev.big_max : ev.small_max;
    } else {
        ev.big_is_longest = false;
        ev.total = ev.small_max;
    }
    return ev;
}

}  // namespace detail

// O(n log n) one-sided MinMax2: binary search over the structured matchings
// M_k, driven by the obtuse/acute test at the red endpoint of the longest
// small edge. When the longest edge lies in the big sector it is the shared
// outermost edge, which every M_l with l < K also contains, so the probe
// dominates all of them; M_K (no outer block) is always probed separately.
inline OneSidedResult onesided_solve_minmax_fast(const OneSidedProblem& p) {
    const DCView& w = *p.w;
    const int nr = static_cast<int>(p.red.size());
    OneSidedResult res;
    if (nr == 0) return res;
    if (static_cast<int>(p.bminus.size() + p.bplus.size()) != nr)
        throw std::invalid_argument("onesided_solve_minmax_fast: unbalanced");

    if (p.bminus.empty() || p.bplus.empty()) {
        const std::vector<int>& bl = p.bminus.empty() ? p.bplus : p.bminus;
        detail::pair_same_order(p.red, bl, res.matching);
        std::optional<Scalar> mx;
        for (auto [a, b] : res.matching.pairs) {
            Scalar d = w.d2(a, b);
            if (!mx || d > *mx) mx = d;
        }
        res.value = mx;
        res.matching.normalize();
        return res;
    }

    // normalize labels so the sector incident to Bp is big
    int rho = w.half_of[p.red[0]];
    bool swap_sides = rho * w.cosnum > 0;  // cos of sector (rho, "+") positive => small
    const std::vector<int>& Bm = swap_sides ? p.bplus : p.bminus;
    const std::vector<int>& Bp = swap_sides ? p.bminus : p.bplus;
    const int nb = static_cast<int>(Bm.size());
    const int K = nr - nb + 1;

    std::optional<Scalar> best;
    int best_k = -1;
    auto record = [&](int k, const detail::MkEval& ev) {
        if (!best || ev.total < *best) {
            best = ev.total;
            best_k = k;
        }
    };

    record(K, detail::evaluate_mk(w, p.red, Bm, Bp, K, nullptr));
    int lo = 1, hi = K;
    while (lo <= hi) {
        int mid = lo + (hi - lo) / 2;
        detail::MkEval ev = detail::evaluate_mk(w, p.red, Bm, Bp, mid, nullptr);
        record(mid, ev);
        if (ev.big_is_longest) {
            if (mid < K) break;  // dominates every k < K; K already probed
            hi = mid - 1;
            continue;
        }
        int r = p.red[mid - 1 + ev.longest_small];
        const Scalar &u = w.coord[r], &v = w.coord[Bm[ev.longest_small]];
        Scalar dot_at_red = u * u * w.rr - u * v * w.cosnum;  // (b - r).(x - r)
        if (dot_at_red < 0)
            lo = mid + 1;  // obtuse: every smaller k is strictly worse
        else
            hi = mid - 1;  // acute/right: every larger k is at least as bad
    }

    detail::MkEval ev = detail::evaluate_mk(w, p.red, Bm, Bp, best_k, &res.matching);
    res.value = ev.total;
    res.matching.normalize();
    return res;
}

namespace detail {

inline OneSidedProblem onesided_problem_of_instance(const DCView& w) {
    if (!w.rp.empty() && !w.rm.empty())
        throw std::invalid_argument("one-sided solver requires reds on one half-line");
    OneSidedProblem p;
    p.w = &w;
    p.red = w.rp.empty() ? w.rm : w.rp;
    p.bminus = w.bm;
    p.bplus = w.bp;
    return p;
}

inline SolveOutcome onesided_outcome(const Instance& inst, const OneSidedResult& r,
                                     VariantSpec v, const char* algo, bool want_matching) {
    if (!r.value) throw std::invalid_argument("one-sided solver: empty instance");
    auto [val, witness] = objective_value(inst, r.matching, v.inner);
    if (val != *r.value) throw std::logic_error("one-sided solver: value mismatch");
    SolveOutcome out{val, witness, std::nullopt, algo};
    if (want_matching) out.matching = r.matching;
    return out;
}

}  // namespace detail

inline SolveOutcome onesided_dp(const Instance& inst, VariantSpec v,
                                bool want_matching = true) {
    DCView w = make_dc_view(inst);
    OneSidedResult r = onesided_solve_dp(detail::onesided_problem_of_instance(w), v);
    return detail::onesided_outcome(inst, r, v, "dc-onesided-dp", want_matching);
}

inline SolveOutcome onesided_minmax_fast(const Instance& inst, bool want_matching = true) {
    DCView w = make_dc_view(inst);
    OneSidedResult r = onesided_solve_minmax_fast(detail::onesided_problem_of_instance(w));
    return detail::onesided_outcome(inst, r, kMinMax, "dc-onesided-binary", want_matching);
}

// ---------------------------------------------------------------------------
// General MinMax2: enumerate the per-half-line small-sector counts (one free
// parameter t) and the consecutive small-sector runs on the two blue
// half-lines, then solve the two decoupled one-sided subproblems. The small
// sectors are (s,+) and (-s,-) for s = sign of dirR.dirB; a perpendicular
// instance uses the s = +1 designation, which the orthogonal structure lemma
// also covers.
inline SolveOutcome minmax2_dc(const Instance& inst, bool want_matching = true) {
    DCView w = make_dc_view(inst);
    const bool sig_plus = w.cosnum >= 0;
    const std::vector<int>& Rs = sig_plus ? w.rp : w.rm;  // reds of the (s,+) small sector
    const std::vector<int>& Ro = sig_plus ? w.rm : w.rp;
    const int NRs = static_cast<int>(Rs.size());
    const int NBp = static_cast<int>(w.bp.size());
    const int NBm = static_cast<int>(w.bm.size());

    std::optional<Scalar> best;
    Matching best_m;
    const int t_lo = std::max(0, NRs - NBm);
    const int t_hi = std::min(NBp, NRs);
    for (int t = t_lo; t <= t_hi; ++t) {
        const int kmm = NBm - (NRs - t);  // B-'s small-sector count (to Ro)
        for (int a = 0; a + t <= NBp; ++a) {
            for (int c = 0; c + kmm <= NBm; ++c) {
                OneSidedProblem s1, s2;
                s1.w = s2.w = &w;
                s1.red = Rs;
                s2.red = Ro;
                s1.bplus = detail::slice(w.bp, a, a + t);
                s2.bplus = detail::slice(w.bp, 0, a);
                s2.bplus.insert(s2.bplus.end(), w.bp.begin() + a + t, w.bp.end());
                s2.bminus = detail::slice(w.bm, c, c + kmm);
                s1.bminus = detail::slice(w.bm, 0, c);
                s1.bminus.insert(s1.bminus.end(), w.bm.begin() + c + kmm, w.bm.end());

                OneSidedResult r1 = onesided_solve_minmax_fast(s1);
                OneSidedResult r2 = onesided_solve_minmax_fast(s2);
                std::optional<Scalar> val = r1.value;
                if (r2.value && (!val || *r2.value > *val)) val = r2.value;
                if (!val) continue;
                if (!best || *val < *best) {
                    best = val;
                    best_m = r1.matching;
                    best_m.pairs.insert(best_m.pairs.end(), r2.matching.pairs.begin(),
                                        r2.matching.pairs.end());
                    best_m.normalize();
                }
            }
        }
    }
    if (!best) throw std::logic_error("minmax2_dc: no feasible case");
    auto [val, witness] = objective_value(inst, best_m, Agg::Max);
    if (val != *best) throw std::logic_error("minmax2_dc: value mismatch");
    SolveOutcome out{*best, witness, std::nullopt, "dc-case-enum-minmax2"};
    if (want_matching) out.matching = std::move(best_m);
    return out;
}

// ---------------------------------------------------------------------------
// Orthogonal specialization (cos a = 0): each half-line is cut into an inner
// and outer part, each part matched wholesale to one opposite-color
// half-line. 16 part-to-half-line patterns x O(n) splits; per sector the
// shortest edge is innermost and the longest is outermost (all sectors big).

namespace detail {

struct SectorIntervals {
    // per sector (rho, beta) with rho, beta in {0 -> +, 1 -> -}: rank
    // intervals [r_lo, r_hi) and [b_lo, b_hi), equal sizes
    int r_lo[2][2], r_hi[2][2], b_lo[2][2], b_hi[2][2];
};

// flags bit layout: bit0 R+, bit1 R-, bit2 B+, bit3 B-; a set bit sends the
// inner part to the "-" side instead of the "+" side.
inline bool orthogonal_intervals(const DCView& w, int pat, int p, SectorIntervals& si) {
    const int NR[2] = {static_cast<int>(w.rp.size()), static_cast<int>(w.rm.size())};
    const int NB[2] = {static_cast<int>(w.bp.size()), static_cast<int>(w.bm.size())};
    bool fr[2] = {(pat & 1) != 0, (pat & 2) != 0};
    bool fb[2] = {(pat & 4) != 0, (pat & 8) != 0};

    int k[2][2];  // edge count per sector
    k[0][0] = fr[0] ? NR[0] - p : p;  // R+ part sent to B+
    k[0][1] = NR[0] - k[0][0];
    k[1][0] = NB[0] - k[0][0];
    k[1][1] = NR[1] - k[1][0];
    for (int r = 0; r < 2; ++r)
        for (int b = 0; b < 2; ++b)
            if (k[r][b] < 0) return false;
    if (k[0][1] + k[1][1] != NB[1]) return false;

    int sr[2] = {p, fr[1] ? k[1][1] : k[1][0]};          // red inner sizes
    int sb[2] = {fb[0] ? k[1][0] : k[0][0], fb[1] ? k[1][1] : k[0][1]};  // blue inner sizes
    for (int r = 0; r < 2; ++r)
        for (int b = 0; b < 2; ++b) {
            bool red_inner = (fr[r] ? 1 : 0) == b;  // inner part targets side b?
            si.r_lo[r][b] = red_inner ? 0 : sr[r];
            si.r_hi[r][b] = red_inner ? sr[r] : NR[r];
            bool blue_inner = (fb[b] ? 1 : 0) == r;
            si.b_lo[r][b] = blue_inner ? 0 : sb[b];
            si.b_hi[r][b] = blue_inner ? sb[b] : NB[b];
            if (si.r_hi[r][b] - si.r_lo[r][b] != k[r][b] ||
                si.b_hi[r][b] - si.b_lo[r][b] != k[r][b])
                throw std::logic_error("orthogonal_intervals: inconsistent parts");
        }
    return true;
}

inline const std::vector<int>& red_half(const DCView& w, int r) { return r ? w.rm : w.rp; }
inline const std::vector<int>& blue_half(const DCView& w, int b) { return b ? w.bm : w.bp; }

inline Matching orthogonal_matching(const DCView& w, const SectorIntervals& si) {
    Matching m;
    for (int r = 0; r < 2; ++r)
        for (int b = 0; b < 2; ++b) {
            const auto& R = red_half(w, r);
            const auto& B = blue_half(w, b);
            for (int t = 0; si.r_lo[r][b] + t < si.r_hi[r][b]; ++t)
                m.add(R[si.r_lo[r][b] + t], B[si.b_lo[r][b] + t]);
        }
    m.normalize();
    return m;
}

}  // namespace detail

inline SolveOutcome solve_orthogonal(const Instance& inst, VariantSpec v,
                                     bool want_matching = true) {
    DCView w = make_dc_view(inst);
    if (w.cosnum != 0)
        throw std::invalid_argument("solve_orthogonal: lines are not perpendicular");
    if (v != kMinMax && v != kMaxMin)
        throw std::invalid_argument("solve_orthogonal: MinMax2 / MaxMin2 only");

    std::optional<Scalar> best;
    IndexPair best_w{-1, -1};
    detail::SectorIntervals best_si{};
    const int NRp = static_cast<int>(w.rp.size());
    for (int pat = 0; pat < 16; ++pat) {
        for (int p = 0; p <= NRp; ++p) {
            detail::SectorIntervals si;
            if (!detail::orthogonal_intervals(w, pat, p, si)) continue;
            // inner aggregate over the <= 8 extremal edges
            std::optional<Scalar> agg;
            IndexPair wit{-1, -1};
            for (int r = 0; r < 2; ++r)
                for (int b = 0; b < 2; ++b) {
                    if (si.r_lo[r][b] == si.r_hi[r][b]) continue;
                    const auto& R = detail::red_half(w, r);
                    const auto& B = detail::blue_half(w, b);
                    int ri = v.inner == Agg::Min ? si.r_lo[r][b] : si.r_hi[r][b] - 1;
                    int bi = v.inner == Agg::Min ? si.b_lo[r][b] : si.b_hi[r][b] - 1;
                    Scalar d = w.d2(R[ri], B[bi]);
                    IndexPair e = R[ri] < B[bi] ? IndexPair{R[ri], B[bi]}
                                                : IndexPair{B[bi], R[ri]};
                    bool take = !agg || (v.inner == Agg::Min ? d < *agg : d > *agg) ||
                                (d == *agg && e < wit);
                    if (take) {
                        agg = d;
                        wit = e;
                    }
                }
            if (!agg) continue;
            if (outcome_improves(v.outer, *agg, wit, best, best_w)) {
                best = *agg;
                best_w = wit;
                best_si = si;
            }
        }
    }
    if (!best) throw std::logic_error("solve_orthogonal: no feasible pattern");
    Matching m = detail::orthogonal_matching(w, best_si);
    auto [val, witness] = objective_value(inst, m, v.inner);
    if (val != *best) throw std::logic_error("solve_orthogonal: value mismatch");
    SolveOutcome out{val, witness, std::nullopt, "dc-orthogonal"};
    if (want_matching) out.matching = std::move(m);
    return out;
}

inline SolveOutcome minmax2_orthogonal(const Instance& inst, bool want_matching = true) {
    return solve_orthogonal(inst, kMinMax, want_matching);
}

inline SolveOutcome maxmin2_orthogonal(const Instance& inst, bool want_matching = true) {
    return solve_orthogonal(inst, kMaxMin, want_matching);
}

// ---------------------------------------------------------------------------
// Small-angle MinMax2 (cos a > 0, cos^2 a >= 1/2): inner parts are matched
// through the big sectors, outer parts through the small sectors. One split
// parameter; small-sector maxima come from prefix maxima over the
// outer-aligned pairs, which do not depend on the split.
inline SolveOutcome minmax2_small_angle(const Instance& inst, bool want_matching = true) {
    DCView w = make_dc_view(inst);
    if (!(w.cosnum > 0) || 2 * w.cosnum * w.cosnum < w.rr * w.bb)
        throw std::invalid_argument("minmax2_small_angle: requires cos a >= 1/sqrt(2)");
    const int NRp = static_cast<int>(w.rp.size());
    const int NRm = static_cast<int>(w.rm.size());
    const int NBp = static_cast<int>(w.bp.size());
    const int NBm = static_cast<int>(w.bm.size());

    // small sectors are (+,+) and (-,-); m[t] = max over the t outermost
    // aligned pairs
    auto prefix_max = [&](const std::vector<int>& R, const std::vector<int>& B) {
        int cnt = static_cast<int>(std::min(R.size(), B.size()));
        std::vector<Scalar> m(cnt + 1);
        for (int t = 1; t <= cnt; ++t) {
            Scalar d = w.d2(R[R.size() - t], B[B.size() - t]);
            m[t] = t == 1 ? d : std::max(m[t - 1], d);
        }
        return m;
    };
    std::vector<Scalar> mpp = prefix_max(w.rp, w.bp);
    std::vector<Scalar> mmm = prefix_max(w.rm, w.bm);

    std::optional<Scalar> best;
    int best_a = -1;
    const int a_lo = std::max(0, NRp - NBp);
    const int a_hi = std::min(NRp, NBm);
    for (int a = a_lo; a <= a_hi; ++a) {
        const int kmp = NBp - NRp + a;  // big sector (-,+) count
        if (kmp < 0 || kmp > NRm) continue;
        std::optional<Scalar> vmax;
        auto take = [&](const Scalar& d) {
            if (!vmax || d > *vmax) vmax = d;
        };
        if (a > 0) take(w.d2(w.rp[a - 1], w.bm[a - 1]));        // big (+,-) outermost
        if (kmp > 0) take(w.d2(w.rm[kmp - 1], w.bp[kmp - 1]));  // big (-,+) outermost
        if (NRp - a > 0) take(mpp[NRp - a]);                    // small (+,+)
        if (NBm - a > 0) take(mmm[NBm - a]);                    // small (-,-)
        if (!vmax) continue;
        if (!best || *vmax < *best) {
            best = *vmax;
            best_a = a;
        }
    }
    if (!best) throw std::logic_error("minmax2_small_angle: no feasible split");

    Matching m;
    {
        const int a = best_a;
        const int kmp = NBp - NRp + a;
        detail::pair_same_order(detail::slice(w.rp, 0, a), detail::slice(w.bm, 0, a), m);
        detail::pair_same_order(detail::slice(w.rm, 0, kmp), detail::slice(w.bp, 0, kmp),
                                m);
        detail::pair_same_order(detail::slice(w.rp, a, NRp),
                                detail::slice(w.bp, kmp, NBp), m);
        detail::pair_same_order(detail::slice(w.rm, kmp, NRm),
                                detail::slice(w.bm, a, NBm), m);
        m.normalize();
    }
    auto [val, witness] = objective_value(inst, m, Agg::Max);
    if (val != *best) throw std::logic_error("minmax2_small_angle: value mismatch");
    SolveOutcome out{val, witness, std::nullopt, "dc-small-angle"};
    if (want_matching) out.matching = std::move(m);
    return out;
}

}  // namespace ncm
