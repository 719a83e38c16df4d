#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "ncm/general.hpp"
#include "ncm/oracle.hpp"

using namespace ncm;
using namespace ncm::testing;

namespace {

Instance square_mono() {
    return coords_instance(Kind::General, {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
}

Instance triangle_plus_interior() {
    return coords_instance(Kind::General, {pt(0, 0), pt(4, 0), pt(0, 4), pt(1, 1)});
}

Instance hexagon_mono() {
    return coords_instance(Kind::General, {pt(2, 0), pt(1, 2), pt(-1, 2), pt(-2, 0),
                                           pt(-1, -2), pt(1, -2)});
}

}  // namespace

TEST_CASE("edge feasibility examples") {
    Instance sq = square_mono();
    HullData hd = compute_hull_data(sq);
    CHECK_FALSE(edge_feasible_mono_general(sq, hd, 0, 2));  // odd/odd sides
    CHECK(edge_feasible_mono_general(sq, hd, 0, 1));

    Instance hex = hexagon_mono();
    HullData hh = compute_hull_data(hex);
    CHECK(edge_feasible_mono_general(hex, hh, 0, 3));  // even/even sides

    Instance tri = triangle_plus_interior();
    HullData ht = compute_hull_data(tri);
    CHECK(edge_feasible_mono_general(tri, ht, 0, 3));  // interior endpoint
}

TEST_CASE("feasibility equals the oracle on random small instances") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Instance inst = random_instance(Kind::General, Mode::Mono,
                                        2 + static_cast<int>(seed % 5), 100 + seed);
        HullData hd = compute_hull_data(inst);
        const int n2 = static_cast<int>(inst.size());
        for (int a = 0; a < n2; ++a)
            for (int b = a + 1; b < n2; ++b)
                CHECK(edge_feasible_mono_general(inst, hd, a, b) ==
                      oracle_edge_feasible(inst, a, b));
    }
}

TEST_CASE("weak radial ordering examples") {
    Instance tri = triangle_plus_interior();
    HullData hd = compute_hull_data(tri);
    auto wro = weak_radial_orderings(tri, hd);
    // locate vertex 0 = (0,0) in the hull
    int qi = 0;
    while (hd.hull[qi] != 0) ++qi;
    REQUIRE(wro[qi].hull_seq.size() == 2);
    CHECK(wro[qi].hull_seq[0] == 1);  // (4,0) first in ccw angular order
    CHECK(wro[qi].hull_seq[1] == 2);  // (0,4) last
    REQUIRE(wro[qi].gap_counts.size() == 1);
    CHECK(wro[qi].gap_counts[0] == 1);  // interior (1,1) between them

    Instance hex = hexagon_mono();
    HullData hh = compute_hull_data(hex);
    auto wh = weak_radial_orderings(hex, hh);
    for (int i = 0; i < hh.h; ++i) {
        CHECK(wh[i].hull_seq.size() == 5);
        for (int g : wh[i].gap_counts) CHECK(g == 0);
    }
}

TEST_CASE("weak radial ordering structural invariants") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Instance inst = random_instance(Kind::General, Mode::Mono,
                                        3 + static_cast<int>(seed % 4), 500 + seed);
        HullData hd = compute_hull_data(inst);
        auto wro = weak_radial_orderings(inst, hd);
        for (int i = 0; i < hd.h; ++i) {
            CHECK(static_cast<int>(wro[i].hull_seq.size()) == hd.h - 1);
            int total = 0;
            for (int g : wro[i].gap_counts) total += g;
            CHECK(total <= static_cast<int>(hd.interior.size()));
        }
    }
}

TEST_CASE("parity walk equals direct feasibility evaluation") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Instance inst = random_instance(Kind::General, Mode::Mono,
                                        2 + static_cast<int>(seed % 5), 900 + seed);
        HullData hd = compute_hull_data(inst);
        auto wro = weak_radial_orderings(inst, hd);
        for (int i = 0; i < hd.h; ++i) {
            auto flags = parity_walk_flags(wro[i]);
            for (std::size_t g = 0; g < wro[i].hull_seq.size(); ++g)
                CHECK(static_cast<bool>(flags[g]) ==
                      edge_feasible_mono_general(inst, hd, hd.hull[i], wro[i].hull_seq[g]));
        }
    }
}

TEST_CASE("minmin1 / maxmax1 frozen examples") {
    Instance tri = triangle_plus_interior();
    SolveOutcome mn = minmin1_general(tri, true);
    CHECK(mn.value == 2);
    CHECK(mn.witness == IndexPair{0, 3});
    SolveOutcome mx = maxmax1_general(tri, true);
    CHECK(mx.value == 32);
    CHECK(mx.witness == IndexPair{1, 2});

    CHECK(minmin1_general(square_mono()).value == 1);
    CHECK(maxmax1_general(square_mono()).value == 1);  // diagonals infeasible
    CHECK(minmin1_general(hexagon_mono()).value == 4);
    CHECK(maxmax1_general(hexagon_mono()).value == 20);
}

TEST_CASE("minmin1 / maxmax1 equal the oracle on random instances") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Instance inst = random_instance(Kind::General, Mode::Mono,
                                        2 + static_cast<int>(seed % 5), 42 + 13 * seed);
        SolveOutcome mn = minmin1_general(inst, true);
        SolveOutcome mx = maxmax1_general(inst, true);
        CHECK(mn.value == oracle_solve(inst, kMinMin).value);
        CHECK(mx.value == oracle_solve(inst, kMaxMax).value);
        REQUIRE(mn.matching.has_value());
        REQUIRE(mx.matching.has_value());
        CHECK(validate_matching(inst, *mn.matching).all());
        CHECK(validate_matching(inst, *mx.matching).all());
        CHECK(objective_value(inst, *mn.matching, Agg::Min).first == mn.value);
        CHECK(objective_value(inst, *mx.matching, Agg::Max).first == mx.value);
    }
}

TEST_CASE("the longest feasible edge has a hull endpoint") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Instance inst = random_instance(Kind::General, Mode::Mono,
                                        2 + static_cast<int>(seed % 5), 7777 + seed);
        HullData hd = compute_hull_data(inst);
        const int n2 = static_cast<int>(inst.size());
        std::optional<Scalar> best;
        IndexPair bw{-1, -1};
        for (int a = 0; a < n2; ++a)
            for (int b = a + 1; b < n2; ++b) {
                if (!oracle_edge_feasible(inst, a, b)) continue;
                Scalar d = squared_distance(inst.points[a], inst.points[b]);
                if (!best || d > *best) {
                    best = d;
                    bw = {a, b};
                }
            }
        REQUIRE(best.has_value());
        CHECK((hd.on_hull[bw.first] || hd.on_hull[bw.second]));
    }
}

TEST_CASE("complete_matching_general examples and validity") {
    Instance sq = square_mono();
    Matching m = complete_matching_general(sq, {0, 1});
    m.normalize();
    CHECK(m.pairs == std::vector<IndexPair>{{0, 1}, {2, 3}});
    CHECK_THROWS(complete_matching_general(sq, {0, 2}));

    Matching hm = complete_matching_general(hexagon_mono(), {0, 3});
    CHECK(validate_matching(hexagon_mono(), hm).all());

    Matching tm = complete_matching_general(triangle_plus_interior(), {0, 3});
    CHECK(validate_matching(triangle_plus_interior(), tm).all());

    // every feasible edge of random instances extends to a valid matching
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Instance inst = random_instance(Kind::General, Mode::Mono,
                                        2 + static_cast<int>(seed % 4), 31337 + seed);
        HullData hd = compute_hull_data(inst);
        const int n2 = static_cast<int>(inst.size());
        for (int a = 0; a < n2; ++a)
            for (int b = a + 1; b < n2; ++b) {
                if (!edge_feasible_mono_general(inst, hd, a, b)) continue;
                Matching mm = complete_matching_general(inst, {a, b});
                CHECK(validate_matching(inst, mm).all());
                bool contains = false;
                for (auto [x, y] : mm.pairs) contains |= (x == a && y == b);
                CHECK(contains);
            }
    }
}

TEST_CASE("fixed-hull generator keeps the hull small") {
    Instance inst = random_instance(Kind::General, Mode::Mono, 40, 5, "fixed-hull");
    HullData hd = compute_hull_data(inst);
    CHECK(hd.h <= 16);
    CHECK(inst.size() == 80);
}
