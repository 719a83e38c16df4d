#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "ncm/oracle.hpp"

using namespace ncm;
using namespace ncm::testing;

namespace {

Instance square_mono() {
    return coords_instance(Kind::Convex, {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
}

Instance square_bi_brrb() {
    return coords_instance(Kind::Convex,
                           {pt(0, 0, Color::Blue), pt(1, 0, Color::Red),
                            pt(1, 1, Color::Red), pt(0, 1, Color::Blue)},
                           true);
}

Instance hexagon_mono() {
    return coords_instance(Kind::Convex, {pt(2, 0), pt(1, 2), pt(-1, 2), pt(-2, 0),
                                          pt(-1, -2), pt(1, -2)});
}

// non-crossing perfect matching counts of 2n convex points: Catalan numbers
long catalan(int n) {
    long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

}  // namespace

TEST_CASE("enumeration counts") {
    CHECK(enumerate_ncpm_all(square_mono()).size() == 2);
    CHECK(enumerate_ncpm_all(hexagon_mono()).size() == 5);
    // B,R,R,B: the diagonal pairing is monochromatic, so one matching remains
    auto bi = enumerate_ncpm_all(square_bi_brrb());
    REQUIRE(bi.size() == 1);
    bi[0].normalize();
    CHECK(bi[0].pairs == std::vector<IndexPair>{{0, 1}, {2, 3}});
}

TEST_CASE("convex enumeration counts are Catalan") {
    for (int n = 1; n <= 6; ++n) {
        Instance inst = random_instance(Kind::Convex, Mode::Mono, n, 1000 + n);
        CHECK(static_cast<long>(enumerate_ncpm_all(inst).size()) == catalan(n));
    }
}

TEST_CASE("every enumerated matching is valid") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        for (Kind kind : {Kind::General, Kind::Convex, Kind::Circle}) {
            Instance inst = random_instance(kind, seed % 2 ? Mode::Bi : Mode::Mono,
                                            2 + static_cast<int>(seed % 3), seed);
            for (const Matching& m : enumerate_ncpm_all(inst))
                CHECK(validate_matching(inst, m).all());
        }
        Instance dc = random_dc(3, seed);
        for (const Matching& m : enumerate_ncpm_all(dc))
            CHECK(validate_matching(dc, m).all());
    }
}

TEST_CASE("oracle_solve frozen values") {
    CHECK(oracle_solve(square_mono(), kMaxMin).value == 1);
    // rational hexagon: sides 5, short diagonals 4 and 16, main diagonals 16
    // and 20; the d^2 = 20 diagonal (1,2)-(-1,-2) extends to a matching.
    Instance hex = hexagon_mono();
    CHECK(oracle_solve(hex, kMaxMax).value == 20);
    // {(0,1),(2,5),(3,4)} has edge lengths 5, 20, 5 -> min 5, the best
    CHECK(oracle_solve(hex, kMaxMin).value == 5);
}

TEST_CASE("oracle_edge_feasible examples") {
    Instance sq = square_mono();
    CHECK_FALSE(oracle_edge_feasible(sq, 0, 2));
    CHECK(oracle_edge_feasible(sq, 0, 1));
    CHECK(oracle_edge_feasible(hexagon_mono(), 0, 3));
}

TEST_CASE("variant order: minmin <= minmax, maxmin <= maxmax, minmin <= maxmax") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Instance inst = random_instance(seed % 2 ? Kind::Convex : Kind::Circle,
                                        seed % 3 ? Mode::Mono : Mode::Bi,
                                        2 + static_cast<int>(seed % 4), 7 * seed + 3);
        Scalar minmin = oracle_solve(inst, kMinMin).value;
        Scalar minmax = oracle_solve(inst, kMinMax).value;
        Scalar maxmin = oracle_solve(inst, kMaxMin).value;
        Scalar maxmax = oracle_solve(inst, kMaxMax).value;
        CHECK(minmin <= minmax);
        CHECK(maxmin <= maxmax);
        CHECK(minmin <= maxmin);
        CHECK(minmax <= maxmax);
    }
}

TEST_CASE("deterministic enumeration order") {
    auto a = enumerate_ncpm_all(hexagon_mono());
    auto b = enumerate_ncpm_all(hexagon_mono());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].pairs == b[i].pairs);
    // lowest free index is matched first, partners increasing
    CHECK(a.front().pairs.front() == IndexPair{0, 1});
}

TEST_CASE("cap enforcement") {
    Instance big = random_instance(Kind::Convex, Mode::Mono, 9, 42);
    CHECK_THROWS(enumerate_ncpm_all(big));
    CHECK_NOTHROW(enumerate_ncpm_all(big, 18));
}

TEST_CASE("edge filter restricts the enumeration") {
    Instance hex = hexagon_mono();
    // forbid all boundary edges except via filter allowing only diagonals:
    auto only_sides = [](int a, int b) { return (b - a == 1) || (a == 0 && b == 5); };
    auto ms = enumerate_ncpm_all(hex, kOracleDefaultCap, only_sides);
    CHECK(ms.size() == 2);  // the two all-boundary matchings
}
