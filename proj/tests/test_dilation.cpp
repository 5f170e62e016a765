#include <cmath>

#include "doctest.h"
#include "latdisp/dilation.hpp"
#include "latdisp/enumeration.hpp"
#include "latdisp/errors.hpp"
#include "oracles.hpp"

using namespace latdisp;

TEST_CASE("dilate") {
    SUBCASE("identity dilation") {
        const auto g = golden_lattice();
        const auto d = dilate(g, Point{1.0, 1.0});
        CHECK(d.generator() == g.generator());
        CHECK(d.det_abs() == g.det_abs());
        CHECK(d.nm_certified() == g.nm_certified());
    }
    SUBCASE("golden by (2,2)") {
        const auto d = dilate(golden_lattice(), Point{2.0, 2.0});
        CHECK(d.det_abs() == doctest::Approx(std::sqrt(5.0) / 4.0));
        CHECK(d.nm_certified() == doctest::Approx(0.25));
        CHECK(d.provenance() == "dilate(golden;t=2,2)");
    }
    SUBCASE("Z by 10") {
        const auto d = dilate(integer_lattice(1), Point{10.0});
        CHECK(d.det_abs() == doctest::Approx(0.1));
        const auto pts = points_in_box(d, Box({0.0}, {0.35}));
        REQUIRE(pts.size() == 4);
        CHECK(pts[3][0] == doctest::Approx(0.3));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(dilate(golden_lattice(), Point{1.0, 0.0}), ValidationError);
        CHECK_THROWS_AS(dilate(golden_lattice(), Point{1.0}), ValidationError);
    }
    SUBCASE("scaling law") {
        for (const auto& t : {Point{0.3, 7.0}, Point{-2.0, 5.5}, Point{11.0, 0.01}}) {
            for (const auto& l : {golden_lattice(), frolov_lattice(2)}) {
                CHECK(std::abs(dilate(l, t).det_abs() * n_of_t(t) - l.det_abs()) <= 1e-10 * l.det_abs());
            }
        }
        const Point t3{0.5, 2.0, 3.0};
        const auto f3 = frolov_lattice(3);
        CHECK(std::abs(dilate(f3, t3).det_abs() * n_of_t(t3) - f3.det_abs()) <= 1e-10 * f3.det_abs());
    }
}

TEST_CASE("restrict_unit_cube") {
    SUBCASE("Z dilated by 4") {
        const Point t{4.0};
        const auto ps = restrict_unit_cube(dilate(integer_lattice(1), t), t);
        REQUIRE(ps.size() == 5);
        for (std::size_t i = 0; i < 5; ++i) CHECK(ps.points[i][0] == doctest::Approx(0.25 * i));
        CHECK(ps.t == t);
    }
    SUBCASE("golden dilated by (3,3) maps the [0,3]^2 points") {
        const Point t{3.0, 3.0};
        const auto ps = restrict_unit_cube(dilate(golden_lattice(), t), t);
        const auto raw = points_in_box(golden_lattice(), Box::cube(2, 0.0, 3.0));
        REQUIRE(ps.size() == raw.size());
        CHECK(ps.size() == 6);
        for (std::size_t i = 0; i < raw.size(); ++i) {
            CHECK(ps.points[i][0] == doctest::Approx(raw[i][0] / 3.0));
            CHECK(ps.points[i][1] == doctest::Approx(raw[i][1] / 3.0));
        }
    }
    SUBCASE("huge t keeps at least the origin") {
        const Point t{1e-3, 1e-3};
        const auto ps = restrict_unit_cube(dilate(golden_lattice(), t), t);
        REQUIRE(ps.size() == 1);
        CHECK(ps.points[0] == Point{0.0, 0.0});
    }
    SUBCASE("points are clamped into the closed cube") {
        const Point t{3.0, 3.0};
        for (const auto& p : restrict_unit_cube(dilate(golden_lattice(), t), t).points) {
            for (double c : p) {
                CHECK(c >= 0.0);
                CHECK(c <= 1.0);
            }
        }
    }
}

TEST_CASE("find_t_for_n") {
    SUBCASE("Z, N = 7") {
        const auto t = find_t_for_n(integer_lattice(1), 7);
        CHECK(t[0] == doctest::Approx(6.5));
        CHECK(count_in_box(integer_lattice(1), Box({0.0}, t)) == 7);
    }
    SUBCASE("golden, N = 5, checked by brute force") {
        const auto l = golden_lattice();
        const auto t = find_t_for_n(l, 5);
        CHECK(oracle::brute_force_coefficients(l.generator(), Box(Point(2, 0.0), t)).size() == 5);
    }
    SUBCASE("golden, N = 2 needs n(t) > Nm") {
        const auto t = find_t_for_n(golden_lattice(), 2);
        CHECK(n_of_t(t) > 1.0);
    }
    SUBCASE("frolov(3)") {
        const auto l = frolov_lattice(3);
        for (std::size_t n : {1u, 2u, 10u, 40u}) {
            const auto t = find_t_for_n(l, n);
            CHECK(count_in_box(l, Box(Point(3, 0.0), t)) == n);
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(find_t_for_n(integer_lattice(2), 5), ValidationError);
        CHECK_THROWS_AS(find_t_for_n(golden_lattice(), 0), ValidationError);
        CHECK_THROWS_AS(find_t_for_n(dual(golden_lattice()), 5), ValidationError);
    }
    SUBCASE("a false certificate surfaces as a sweep tie") {
        Eigen::MatrixXd squashed(2, 2);
        squashed << 1.0, 0.0, 0.0, 0.01;
        const auto fake = Lattice::from_parts(squashed, 0.01, 1.0, "fake");
        CHECK_THROWS_AS(find_t_for_n(fake, 5), InvariantViolation);
    }
}

TEST_CASE("P_N has exactly N points and sweep coordinates are separated") {
    for (const auto& l : {golden_lattice(), frolov_lattice(2)}) {
        for (std::size_t n = 1; n <= 200; ++n) {
            CAPTURE(l.provenance());
            CAPTURE(n);
            const auto ps = point_set_for_n(l, n);
            REQUIRE(ps.size() == n);
            CHECK(ps.points.front() == Point(2, 0.0));
            for (std::size_t i = 1; i < ps.size(); ++i)
                CHECK(ps.points[i][0] * ps.t[0] - ps.points[i - 1][0] * ps.t[0] > 1e-9);
        }
    }
}

TEST_CASE("partition_bound_check") {
    SUBCASE("golden, N = 10") {
        const auto l = golden_lattice();
        const auto t = find_t_for_n(l, 10);
        const auto r = partition_bound_check(l, t, 10);
        CHECK(r.holds);
        CHECK(r.cells_ok);
        CHECK(r.bound_ok);
        CHECK(r.cell_volume < l.nm_certified());
        CHECK(static_cast<double>(r.occupancy.size()) <= r.n_t / l.nm_certified() + 1.0);
        CHECK(r.histogram.size() <= 2);
        std::size_t total = 0;
        for (auto c : r.occupancy) total += c;
        CHECK(total == 10);
    }
    SUBCASE("Z, N = 3, t = 2.5") {
        const auto r = partition_bound_check(integer_lattice(1), Point{2.5}, 3);
        CHECK(r.holds);
        CHECK(r.occupancy == std::vector<std::size_t>{1, 1, 1});
        CHECK(3.0 <= 2.0 * r.n_t);
    }
    SUBCASE("frolov(2), N = 64") {
        const auto l = frolov_lattice(2);
        const auto r = partition_bound_check(l, find_t_for_n(l, 64), 64);
        CHECK(r.holds);
        for (auto c : r.occupancy) CHECK(c <= 1);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(partition_bound_check(golden_lattice(), Point{3.0, 3.0}, 5), ValidationError);
        CHECK_THROWS_AS(partition_bound_check(integer_lattice(2), Point{3.0, 3.0}, 16), ValidationError);
    }
    SUBCASE("a false certificate is reported, not hidden") {
        // Z^2 claiming Nm = 1: cells of area < 1 still hold whole columns of points.
        const auto fake = Lattice::from_parts(Eigen::MatrixXd::Identity(2, 2), 1.0, 1.0, "fake");
        const auto r = partition_bound_check(fake, Point{2.5, 2.5}, 9);
        CHECK_FALSE(r.cells_ok);
        CHECK_FALSE(r.holds);
    }
}
