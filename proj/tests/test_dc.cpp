#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "ncm/dc.hpp"
#include "ncm/oracle.hpp"

using namespace ncm;
using namespace ncm::testing;

namespace {

// sector sign of an edge: +1 small, -1 big, 0 right angle
int sector_small(const DCView& w, int r, int b) {
    return sign(w.coord[r]) * sign(w.coord[b]) * sign(w.cosnum);
}

std::vector<Matching> optimal_matchings(const Instance& inst, VariantSpec v) {
    Scalar opt = oracle_solve(inst, v).value;
    std::vector<Matching> out;
    for (const Matching& m : enumerate_ncpm_all(inst))
        if (objective_value(inst, m, v.inner).first == opt) out.push_back(m);
    return out;
}

}  // namespace

TEST_CASE("squared-distance law matches materialized coordinates") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Instance inst = random_dc(1 + static_cast<int>(seed % 6), seed);
        DCView w = make_dc_view(inst);
        const int n = w.n;
        for (int r = 0; r < n; ++r)
            for (int b = n; b < 2 * n; ++b)
                CHECK(w.d2(r, b) == squared_distance(inst.points[r], inst.points[b]));
    }
}

TEST_CASE("view validation errors") {
    CHECK_THROWS(make_dc_view(
        dc_instance({Scalar(1), Scalar(0)}, {Scalar(2), Scalar(0)}, {1}, {1})));
    Instance at_x = orthogonal_dc({1}, {1});
    at_x.dc->blue[0] = 0;
    CHECK_THROWS(make_dc_view(at_x));
}

TEST_CASE("feasibility frozen examples") {
    Instance a = orthogonal_dc({1, 2, 3}, {1, 2, 3});
    CHECK_FALSE(dc_edge_feasible(a, 2, 3));  // r=3, b=1
    CHECK(dc_edge_feasible(a, 2, 5));        // r=3, b=3

    Instance b = orthogonal_dc({1, 2, -1}, {1, 2, -2});
    // sorted red {-1,1,2}, blue {-2,1,2}; r=2 is red index 2, b=-2 is blue index 3
    CHECK(dc_edge_feasible(b, 2, 3));
}

TEST_CASE("feasibility equals the oracle") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Instance inst = random_dc(1 + static_cast<int>(seed % 6), 17 * seed + 1);
        const int n = static_cast<int>(inst.size()) / 2;
        for (int r = 0; r < n; ++r)
            for (int b = n; b < 2 * n; ++b)
                CHECK(dc_edge_feasible(inst, r, b) == oracle_edge_feasible(inst, r, b));
    }
}

TEST_CASE("dc_extend_edge validity on every feasible edge") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Instance inst = random_dc(1 + static_cast<int>(seed % 5), 900 + seed);
        const int n = static_cast<int>(inst.size()) / 2;
        for (int r = 0; r < n; ++r)
            for (int b = n; b < 2 * n; ++b) {
                if (!dc_edge_feasible(inst, r, b)) {
                    CHECK_THROWS(dc_extend_edge(inst, r, b));
                    continue;
                }
                Matching m = dc_extend_edge(inst, r, b);
                CHECK(validate_matching(inst, m).all());
                bool contains = false;
                for (auto [x, y] : m.pairs)
                    contains |= (x == std::min(r, b) && y == std::max(r, b));
                CHECK(contains);
            }
    }
}

TEST_CASE("minmin2 frozen examples") {
    Instance a = orthogonal_dc({1, 2, 3}, {1, 2, 3});
    SolveOutcome out = minmin2_dc(a);
    CHECK(out.value == 2);
    CHECK(out.witness == IndexPair{0, 3});
    CHECK(minmin2_dc(orthogonal_dc({1}, {1})).value == 2);
}

TEST_CASE("maxmax2 frozen examples") {
    Instance a = orthogonal_dc({1, 2, 3}, {1, 2, 3});
    SolveOutcome out = maxmax2_dc(a);
    CHECK(out.value == 18);
    CHECK(out.witness == IndexPair{2, 5});
    CHECK(maxmax2_dc(orthogonal_dc({1, -1}, {2, -2})).value == 5);
}

TEST_CASE("minmin2 / maxmax2 equal the oracle") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Instance inst = random_dc(1 + static_cast<int>(seed % 6), 5 * seed + 2);
        for (auto [f, v] : {std::pair{&minmin2_dc, kMinMin}, std::pair{&maxmax2_dc, kMaxMax}}) {
            SolveOutcome out = (*f)(inst, true);
            CHECK(out.value == oracle_solve(inst, v).value);
            REQUIRE(out.matching.has_value());
            CHECK(validate_matching(inst, *out.matching).all());
            CHECK(objective_value(inst, *out.matching, v.inner).first == out.value);
        }
    }
}

TEST_CASE("monotonicity: nearest feasible partner moves outward") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Instance inst = random_dc(2 + static_cast<int>(seed % 7), 31 * seed + 7);
        DCView w = make_dc_view(inst);
        for (const std::vector<int>* R : {&w.rp, &w.rm})
            for (const std::vector<int>* B : {&w.bp, &w.bm}) {
                int prev = -1;
                for (int i = 0; i < static_cast<int>(R->size()); ++i) {
                    std::optional<Scalar> bd;
                    int bj = -1;
                    for (int j = 0; j < static_cast<int>(B->size()); ++j) {
                        if (!dc_edge_feasible(w, (*R)[i], (*B)[j])) continue;
                        Scalar d = w.d2((*R)[i], (*B)[j]);
                        if (!bd || d < *bd) {
                            bd = d;
                            bj = j;
                        }
                    }
                    if (bj < 0) continue;
                    CHECK(bj >= prev);
                    prev = bj;
                }
            }
    }
}

TEST_CASE("one-sided DP frozen example") {
    // red {1,2} on +x, blue {1} on +y and {-1} on -y
    Instance inst = orthogonal_dc({1, 2}, {1, -1});
    CHECK(onesided_dp(inst, kMinMax).value == 5);
    CHECK(onesided_dp(inst, kMaxMin).value == 2);
    // all blues on one half-line: unique matching
    Instance forced = orthogonal_dc({1, 2}, {1, 2});
    CHECK(onesided_dp(forced, kMinMax).value == oracle_solve(forced, kMinMax).value);
    CHECK(onesided_minmax_fast(forced).value == oracle_solve(forced, kMinMax).value);
    // not one-sided
    CHECK_THROWS(onesided_dp(orthogonal_dc({1, -1}, {1, -1}), kMinMax));
}

TEST_CASE("one-sided DP equals the oracle on all four variants") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Instance inst = random_dc(1 + static_cast<int>(seed % 6), 100 + seed, "onesided");
        for (VariantSpec v : {kMinMin, kMaxMax, kMinMax, kMaxMin}) {
            SolveOutcome out = onesided_dp(inst, v);
            CHECK(out.value == oracle_solve(inst, v).value);
            REQUIRE(out.matching.has_value());
            CHECK(validate_matching(inst, *out.matching).all());
        }
    }
}

TEST_CASE("fast one-sided MinMax equals the DP and the oracle") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Instance inst = random_dc(1 + static_cast<int>(seed % 8), 4000 + seed, "onesided");
        SolveOutcome fast = onesided_minmax_fast(inst);
        CHECK(fast.value == onesided_dp(inst, kMinMax).value);
        if (inst.size() <= 12) CHECK(fast.value == oracle_solve(inst, kMinMax).value);
        REQUIRE(fast.matching.has_value());
        CHECK(validate_matching(inst, *fast.matching).all());
    }
    // larger coordinates, larger n
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 20 + trial * 12;  // up to n = 188
        std::set<long long> rs, bs;
        while (static_cast<int>(rs.size()) < n)
            rs.insert(static_cast<long long>(detail::u64_below(rng, 100000)) + 1);
        while (static_cast<int>(bs.size()) < n)
            bs.insert(detail::nonzero_in_range(rng, 100000));
        Instance inst = dc_instance(
            {Scalar(static_cast<long>(detail::nonzero_in_range(rng, 9))),
             Scalar(static_cast<long>(detail::nonzero_in_range(rng, 9)))},
            {Scalar(static_cast<long>(detail::nonzero_in_range(rng, 9))),
             Scalar(static_cast<long>(detail::nonzero_in_range(rng, 9)))},
            std::vector<long>(rs.begin(), rs.end()), std::vector<long>(bs.begin(), bs.end()));
        if (sign(cross(inst.dc->dir_r, inst.dc->dir_b)) == 0) continue;
        CHECK(onesided_minmax_fast(inst).value == onesided_dp(inst, kMinMax).value);
    }
}

TEST_CASE("general MinMax2 equals the oracle") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Instance inst = random_dc(1 + static_cast<int>(seed % 5), 7000 + seed);
        SolveOutcome out = minmax2_dc(inst);
        CHECK(out.value == oracle_solve(inst, kMinMax).value);
        REQUIRE(out.matching.has_value());
        CHECK(validate_matching(inst, *out.matching).all());
    }
}

TEST_CASE("orthogonal specialization: frozen examples and oracle equality") {
    Instance ex = orthogonal_dc({1, 2}, {1, -1});
    CHECK(minmax2_orthogonal(ex).value == 5);
    CHECK(maxmin2_orthogonal(ex).value == 2);
    Instance sym = orthogonal_dc({1, 2, 3}, {1, 2, 3});
    CHECK(minmax2_orthogonal(sym).value == oracle_solve(sym, kMinMax).value);
    CHECK(maxmin2_orthogonal(sym).value == oracle_solve(sym, kMaxMin).value);
    CHECK_THROWS(solve_orthogonal(random_dc(2, 3, "small-angle"), kMinMax));

    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Instance inst = random_dc(1 + static_cast<int>(seed % 5), 8000 + seed, "orthogonal");
        SolveOutcome a = minmax2_orthogonal(inst);
        SolveOutcome b = maxmin2_orthogonal(inst);
        CHECK(a.value == oracle_solve(inst, kMinMax).value);
        CHECK(b.value == oracle_solve(inst, kMaxMin).value);
        REQUIRE(a.matching.has_value());
        CHECK(validate_matching(inst, *a.matching).all());
        REQUIRE(b.matching.has_value());
        CHECK(validate_matching(inst, *b.matching).all());
    }
}

TEST_CASE("orthogonal equals the general enumeration at mid scale") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Instance inst = random_dc(4 + static_cast<int>(seed * 2) % 12, 8700 + seed,
                                  "orthogonal");
        CHECK(minmax2_orthogonal(inst).value == minmax2_dc(inst).value);
    }
}

TEST_CASE("small-angle specialization equals oracle and general enumeration") {
    Instance ex = random_dc(2, 1, "small-angle");
    CHECK(minmax2_small_angle(ex).value == oracle_solve(ex, kMinMax).value);
    CHECK_THROWS(minmax2_small_angle(orthogonal_dc({1, 2}, {1, -1})));

    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Instance inst = random_dc(1 + static_cast<int>(seed % 5), 9100 + seed, "small-angle");
        SolveOutcome out = minmax2_small_angle(inst);
        CHECK(out.value == oracle_solve(inst, kMinMax).value);
        REQUIRE(out.matching.has_value());
        CHECK(validate_matching(inst, *out.matching).all());
    }
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        Instance inst = random_dc(5 + static_cast<int>(seed * 2), 9300 + seed, "small-angle");
        CHECK(minmax2_small_angle(inst).value == minmax2_dc(inst).value);
    }
}

TEST_CASE("structure lemma: some optimal MinMax2 matching uses consecutive small-sector runs") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Instance inst = random_dc(2 + static_cast<int>(seed % 4), 9800 + seed);
        DCView w = make_dc_view(inst);
        if (w.cosnum == 0) continue;  // no small sectors
        bool found = false;
        for (const Matching& m : optimal_matchings(inst, kMinMax)) {
            // per half-line: points matched through a small sector must be
            // rank-consecutive
            bool ok = true;
            for (const std::vector<int>* H : {&w.rp, &w.rm, &w.bp, &w.bm}) {
                std::vector<char> small_at(H->size(), 0);
                for (auto [a, b] : m.pairs) {
                    int sm = sector_small(w, std::min(a, b), std::max(a, b)) > 0;
                    for (std::size_t t = 0; t < H->size(); ++t)
                        if ((*H)[t] == a || (*H)[t] == b) small_at[t] = sm;
                }
                int switches = 0;
                for (std::size_t t = 1; t < H->size(); ++t)
                    if (small_at[t] != small_at[t - 1]) ++switches;
                bool run_ok = switches <= 2 && (switches < 2 || !small_at.front());
                ok = ok && run_ok;
            }
            if (ok) {
                found = true;
                break;
            }
        }
        CHECK(found);
    }
}

TEST_CASE("structure lemma: orthogonal optimum splits each half-line into two parts") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Instance inst = random_dc(2 + static_cast<int>(seed % 4), 11000 + seed, "orthogonal");
        DCView w = make_dc_view(inst);
        for (VariantSpec v : {kMinMax, kMaxMin}) {
            bool found = false;
            for (const Matching& m : optimal_matchings(inst, v)) {
                std::vector<int> partner(inst.size());
                for (auto [a, b] : m.pairs) {
                    partner[a] = b;
                    partner[b] = a;
                }
                bool ok = true;
                for (const std::vector<int>* H : {&w.rp, &w.rm, &w.bp, &w.bm}) {
                    int switches = 0;
                    for (std::size_t t = 1; t < H->size(); ++t)
                        if (w.half_of[partner[(*H)[t]]] != w.half_of[partner[(*H)[t - 1]]])
                            ++switches;
                    ok = ok && switches <= 1;
                }
                if (ok) {
                    found = true;
                    break;
                }
            }
            CHECK(found);
        }
    }
}

TEST_CASE("structure lemma: small-angle optimum is inner-big / outer-small") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Instance inst = random_dc(2 + static_cast<int>(seed % 4), 12000 + seed, "small-angle");
        DCView w = make_dc_view(inst);
        bool found = false;
        for (const Matching& m : optimal_matchings(inst, kMinMax)) {
            bool ok = true;
            for (const std::vector<int>* H : {&w.rp, &w.rm, &w.bp, &w.bm}) {
                // small-sector edges must form a suffix in rank order
                std::vector<char> small_at(H->size(), 0);
                for (auto [a, b] : m.pairs)
                    for (std::size_t t = 0; t < H->size(); ++t)
                        if ((*H)[t] == a || (*H)[t] == b)
                            small_at[t] =
                                sector_small(w, std::min(a, b), std::max(a, b)) > 0;
                for (std::size_t t = 1; t < H->size(); ++t)
                    if (small_at[t - 1] && !small_at[t]) ok = false;
            }
            if (ok) {
                found = true;
                break;
            }
        }
        CHECK(found);
    }
}
