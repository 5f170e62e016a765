#include <cmath>
#include <numbers>

#include "doctest.h"
#include "latdisp/enumeration.hpp"
#include "latdisp/errors.hpp"
#include "latdisp/lattice.hpp"

using namespace latdisp;

namespace {

double lu_det(const Lattice& l) { return std::abs(l.generator().determinant()); }

}  // namespace

TEST_CASE("frolov_lattice d=1 is the Vandermonde lattice of x - 2") {
    const auto roots = frolov_roots(1);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == doctest::Approx(2.0).epsilon(1e-14));
    const auto l = frolov_lattice(1);
    CHECK(l.generator()(0, 0) == 1.0);
    CHECK(l.det_abs() == 1.0);
    CHECK(l.nm_certified() == 1.0);
    CHECK(l.provenance() == "frolov(1)");
}

TEST_CASE("frolov_lattice d=2 has roots 2 +- sqrt(2)") {
    const auto roots = frolov_roots(2);
    CHECK(roots[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-14));
    CHECK(roots[1] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-14));
    const auto l = frolov_lattice(2);
    CHECK(l.det_abs() == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(l.generator()(0, 1) == doctest::Approx(0.5857864376269049));
    CHECK(l.generator()(1, 1) == doctest::Approx(3.414213562373095));
}

TEST_CASE("frolov_lattice d=3 places one root in each of (0,2), (2,4), (4,6)") {
    CHECK(frolov_polynomial(3, 0.0) == -16.0);
    CHECK(frolov_polynomial(3, 2.0) == 2.0);
    CHECK(frolov_polynomial(3, 4.0) == -4.0);
    CHECK(frolov_polynomial(3, 6.0) == 14.0);
    const auto roots = frolov_roots(3);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(roots[k] > 2.0 * k);
        CHECK(roots[k] < 2.0 * k + 2.0);
    }
}

TEST_CASE("frolov roots are accurate and well separated for every supported d") {
    for (std::size_t d = 1; d <= kMaxFrolovDim; ++d) {
        CAPTURE(d);
        const auto roots = frolov_roots(d);
        REQUIRE(roots.size() == d);
        for (std::size_t i = 0; i < d; ++i) {
            CHECK(std::abs(frolov_polynomial(d, roots[i])) < 1e-9);
            if (i > 0) CHECK(roots[i] - roots[i - 1] > 0.1);
        }
        const auto l = frolov_lattice(d);
        CHECK(std::abs(l.det_abs() - lu_det(l)) <= 1e-12 * l.det_abs());
        long double product = 1.0L;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) product *= static_cast<long double>(roots[j]) - roots[i];
        CHECK(std::abs(l.det_abs() - static_cast<double>(product)) <= 1e-9 * l.det_abs());
    }
}

TEST_CASE("frolov_lattice rejects unsupported dimensions") {
    CHECK_THROWS_AS(frolov_lattice(0), ValidationError);
    CHECK_THROWS_AS(frolov_lattice(9), ValidationError);
}

TEST_CASE("golden_lattice") {
    const auto l = golden_lattice();
    constexpr double phi = std::numbers::phi;
    CHECK(l.det_abs() == doctest::Approx(2.2360679774997896).epsilon(1e-15));
    CHECK(std::abs(l.det_abs() - lu_det(l)) <= 1e-12 * l.det_abs());
    CHECK(l.nm_certified() == 1.0);

    const std::int64_t e1[] = {1, 0};
    const auto p1 = l.map(e1);
    CHECK(p1[0] == 1.0);
    CHECK(p1[1] == 1.0);

    const std::int64_t e2[] = {0, 1};
    const auto p2 = l.map(e2);
    CHECK(p2[0] == doctest::Approx(phi));
    CHECK(p2[1] == doctest::Approx(1.0 - phi));
    CHECK(p2[0] * p2[1] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("integer_lattice certificates") {
    CHECK(integer_lattice(1).nm_certified() == 1.0);
    CHECK(integer_lattice(2).nm_certified() == 0.0);
    CHECK(integer_lattice(3).det_abs() == 1.0);
    CHECK_THROWS_AS(integer_lattice(0), ValidationError);
}

TEST_CASE("nm_empirical") {
    CHECK(nm_empirical(golden_lattice(), 20.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(nm_empirical(integer_lattice(1), 5.0) == 1.0);
    CHECK(nm_empirical(integer_lattice(2), 5.0) == 0.0);
    CHECK(nm_empirical(integer_lattice(3), 5.0) == 0.0);
    const double f2 = nm_empirical(frolov_lattice(2), 20.0);
    CHECK(f2 >= 1.0 - 1e-9);
    CHECK(f2 <= 1.0 + 1e-9);
    CHECK_THROWS_AS(nm_empirical(integer_lattice(2), 0.5), ValidationError);
    CHECK_THROWS_AS(nm_empirical(golden_lattice(), -1.0), ValidationError);
}

TEST_CASE("golden Nm matches an exhaustive search of the norm form") {
    // |a^2 + ab - b^2| over a box of integer pairs; independent of any lattice code.
    std::int64_t best = -1;
    for (std::int64_t a = -50; a <= 50; ++a) {
        for (std::int64_t b = -50; b <= 50; ++b) {
            if (a == 0 && b == 0) continue;
            const auto v = std::abs(a * a + a * b - b * b);
            if (best < 0 || v < best) best = v;
        }
    }
    CHECK(best == 1);
    CHECK(nm_empirical(golden_lattice(), 20.0) == doctest::Approx(static_cast<double>(best)));
}

TEST_CASE("dual lattice") {
    SUBCASE("Z^d is self-dual") {
        for (std::size_t d = 1; d <= 4; ++d) {
            const auto l = dual(integer_lattice(d));
            CHECK(l.generator().isApprox(Eigen::MatrixXd::Identity(d, d)));
            CHECK(l.det_abs() == doctest::Approx(1.0));
        }
    }
    SUBCASE("golden") {
        const auto g = golden_lattice();
        const auto d = dual(g);
        CHECK(d.det_abs() == doctest::Approx(0.4472135954999579).epsilon(1e-13));
        CHECK(d.nm_certified() == 0.0);
        CHECK(d.provenance() == "dual(golden)");
        // Exhaustive enumeration over a padded coefficient range gives 1/5.
        CHECK(nm_empirical(d, 10.0) == doctest::Approx(0.2).epsilon(1e-12));
    }
    SUBCASE("involution and determinant product") {
        for (const auto& l : {golden_lattice(), frolov_lattice(2), frolov_lattice(3), frolov_lattice(4),
                              integer_lattice(3)}) {
            CAPTURE(l.provenance());
            const auto dd = dual(dual(l));
            CHECK((dd.generator() - l.generator()).cwiseAbs().maxCoeff() <= 1e-10);
            CHECK(std::abs(dual(l).det_abs() * l.det_abs() - 1.0) <= 1e-10);
        }
    }
    SUBCASE("admissibility transfers to the dual in finite windows") {
        for (const auto& l : {golden_lattice(), frolov_lattice(2), frolov_lattice(3)}) {
            for (double m : {10.0, 20.0, 40.0}) {
                if (l.dim() == 3 && m > 20.0) continue;  // keeps the 3-d scan small
                CAPTURE(l.provenance());
                CAPTURE(m);
                CHECK(nm_empirical(dual(l), m) > 0.0);
            }
        }
    }
}

TEST_CASE("dual of frolov(3) at window 40") {
    // The window needs ~5e8 enumeration candidates.
    Config cfg;
    cfg.candidate_budget = 1e9;
    CHECK(nm_empirical(dual(frolov_lattice(3)), 40.0, cfg) > 0.0);
}

TEST_CASE("certified lattices never undercut their certificate") {
    for (const auto& l : {golden_lattice(), frolov_lattice(1), frolov_lattice(2), frolov_lattice(3),
                          integer_lattice(1)}) {
        CAPTURE(l.provenance());
        const double m = l.dim() == 3 ? 8.0 : 20.0;
        for (const auto& p : enumerate_box(l, Box::cube(l.dim(), -m, m))) {
            bool origin = true;
            double prod = 1.0;
            for (std::size_t j = 0; j < l.dim(); ++j) {
                origin = origin && p.coeffs[j] == 0;
                prod *= std::abs(p.x[j]);
            }
            if (!origin) CHECK(prod >= l.nm_certified() - 1e-9);
        }
    }
}

TEST_CASE("custom and from_parts validation") {
    Eigen::MatrixXd singular(2, 2);
    singular << 1, 2, 2, 4;
    CHECK_THROWS_AS(Lattice::custom(singular), ValidationError);
    CHECK_THROWS_AS(Lattice::custom(Eigen::MatrixXd(2, 3)), ValidationError);

    Eigen::MatrixXd t(2, 2);
    t << 2, 1, 0, 3;
    const auto c = Lattice::custom(t);
    CHECK(c.det_abs() == doctest::Approx(6.0));
    CHECK(c.nm_certified() == 0.0);
    CHECK(c.provenance() == "custom");
    CHECK_THROWS_AS(Lattice::from_parts(t, 5.0, 0.0, "x"), ValidationError);
    CHECK_THROWS_AS(Lattice::from_parts(t, 6.0, -1.0, "x"), ValidationError);
}
