#include <cmath>
#include <functional>
#include <ostream>
#include <random>

#include "latdisp/dilation.hpp"
#include "latdisp/dispersion.hpp"
#include "latdisp/enumeration.hpp"
#include "latdisp/experiments.hpp"

namespace latdisp {

namespace {

using Check = std::function<std::string(const Config&)>;  // empty string == pass

std::string certified_products(const Config& cfg) {
    std::vector<Lattice> lattices{golden_lattice(), integer_lattice(1)};
    for (std::size_t d = 1; d <= 4; ++d) lattices.push_back(frolov_lattice(d));
    for (const auto& l : lattices) {
        const double m = l.dim() <= 2 ? 10.0 : 4.0;
        for (const auto& p : enumerate_box(l, Box::cube(l.dim(), -m, m), cfg)) {
            bool origin = true;
            double prod = 1.0;
            for (std::size_t j = 0; j < l.dim(); ++j) {
                origin = origin && p.coeffs[j] == 0;
                prod *= std::abs(p.x[j]);
            }
            if (!origin && prod < l.nm_certified() - cfg.certification_tol)
                return l.provenance() + " has a point below its certificate";
        }
    }
    return {};
}

std::string frolov_roots_ok(const Config&) {
    for (std::size_t d = 1; d <= kMaxFrolovDim; ++d) {
        const auto roots = frolov_roots(d);
        for (std::size_t i = 0; i < d; ++i) {
            if (!(std::abs(frolov_polynomial(d, roots[i])) < 1e-9))
                return "residual too large for d = " + std::to_string(d);
            if (i > 0 && !(roots[i] - roots[i - 1] > 0.1))
                return "roots too close for d = " + std::to_string(d);
        }
    }
    return {};
}

std::string dual_involution(const Config& cfg) {
    for (const auto& l : {golden_lattice(), frolov_lattice(2), frolov_lattice(3)}) {
        const auto dd = dual(dual(l));
        if ((dd.generator() - l.generator()).cwiseAbs().maxCoeff() > cfg.linear_algebra_tol)
            return "dual(dual(" + l.provenance() + ")) differs";
        if (std::abs(dual(l).det_abs() * l.det_abs() - 1.0) > cfg.linear_algebra_tol)
            return "det(dual) * det != 1 for " + l.provenance();
        if (!(nm_empirical(dual(l), 10.0, cfg) > 0.0))
            return "dual of " + l.provenance() + " has a zero product in the window";
    }
    return {};
}

std::string exact_cardinality(const Config& cfg) {
    const auto l = golden_lattice();
    for (std::size_t n = 1; n <= 50; ++n) {
        const auto t = find_t_for_n(l, n, cfg);
        if (restrict_unit_cube(dilate(l, t, cfg), t, cfg).size() != n)
            return "P_N has wrong size for N = " + std::to_string(n);
        if (n >= 2 && !partition_bound_check(l, t, n, cfg).holds)
            return "partition bound fails for N = " + std::to_string(n);
    }
    return {};
}

std::string solver_agreement(const Config& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> count(0, 30);
    const auto domain = Box::unit_cube(2);
    for (int inst = 0; inst < 20; ++inst) {
        std::vector<Point> pts(static_cast<std::size_t>(count(rng)));
        for (auto& p : pts) p = {u(rng), u(rng)};
        const auto a = largest_empty_box_sweep2d(pts, domain, cfg);
        const auto b = largest_empty_box_branch(pts, domain, cfg);
        if (std::abs(a.volume - b.volume) > 1e-12) return "sweep2d and branch_nd disagree";
        for (const auto& p : pts) {
            if (a.witness.interior_contains(p)) return "sweep2d witness is not empty";
        }
    }
    return {};
}

std::string windowed_monotone(const Config& cfg) {
    const auto l = golden_lattice();
    double prev = 0.0;
    for (double m : {2.0, 4.0, 8.0}) {
        const double v = windowed_lattice_dispersion(l, m, cfg).volume;
        if (v < prev) return "windowed dispersion decreased at M = " + std::to_string(m);
        prev = v;
    }
    return {};
}

}  // namespace

int run_selftest(std::ostream& log, const Config& cfg) {
    const std::vector<std::pair<const char*, Check>> checks{
        {"certified_products", certified_products}, {"frolov_roots", frolov_roots_ok},
        {"dual_involution", dual_involution},       {"exact_cardinality", exact_cardinality},
        {"solver_agreement", solver_agreement},     {"windowed_monotone", windowed_monotone},
    };
    int failures = 0;
    for (const auto& [name, check] : checks) {
        std::string msg;
        try {
            msg = check(cfg);
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        if (msg.empty()) {
            log << "PASS " << name << '\n';
        } else {
            log << "FAIL " << name << ": " << msg << '\n';
            ++failures;
        }
    }
    return failures;
}

}  // namespace latdisp
