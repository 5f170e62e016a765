#include "latdisp/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "latdisp/enumeration.hpp"
#include "latdisp/errors.hpp"

namespace latdisp {

namespace {

std::string join_decimal(std::span<const double> v) {
    std::string s;
    char buf[32];
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", v[i]);
        if (i) s += ',';
        s += buf;
    }
    return s;
}

}  // namespace

double n_of_t(std::span<const double> t) {
    double v = 1.0;
    for (double x : t) v *= std::abs(x);
    return v;
}

Lattice dilate(const Lattice& lattice, std::span<const double> t, const Config& cfg) {
    const auto d = lattice.dim();
    if (t.size() != d) throw ValidationError("dilation vector has wrong dimension");
    for (double x : t) {
        if (x == 0.0 || !std::isfinite(x))
            throw ValidationError("dilation components must be finite and nonzero");
    }
    Eigen::MatrixXd g = lattice.generator();
    for (std::size_t i = 0; i < d; ++i) g.row(i) /= t[i];
    const double n = n_of_t(t);
    return Lattice::from_parts(std::move(g), lattice.det_abs() / n, lattice.nm_certified() / n,
                               "dilate(" + lattice.provenance() + ";t=" + join_decimal(t) + ")",
                               cfg);
}

PointSet restrict_unit_cube(const Lattice& dilated, std::span<const double> t, const Config& cfg) {
    PointSet ps;
    ps.dim = dilated.dim();
    ps.lattice_provenance = dilated.provenance();
    ps.t.assign(t.begin(), t.end());
    ps.points = points_in_box(dilated, Box::unit_cube(ps.dim), cfg);
    for (auto& p : ps.points) {
        for (auto& c : p) c = std::clamp(c, 0.0, 1.0);
    }
    return ps;
}

Point find_t_for_n(const Lattice& lattice, std::size_t n, const Config& cfg) {
    if (n < 1) throw ValidationError("find_t_for_n requires n >= 1");
    if (!lattice.certified_admissible())
        throw ValidationError("find_t_for_n requires a certified admissible lattice (nm_certified > 0)");
    const auto d = lattice.dim();
    const double ext = cfg.slab_extension;

    // Expected slab population is ext * lambda^d / det; start just below the
    // size that would hold n + 1 points on average.
    double lambda = 0.5 * std::pow(static_cast<double>(n + 1) * lattice.det_abs() / ext,
                                   1.0 / static_cast<double>(d));
    std::vector<Point> slab;
    for (int iter = 0;; ++iter) {
        if (iter > 200) throw BudgetError("slab search did not reach n + 1 points");
        Point upper(d, lambda);
        upper[0] = ext * lambda;
        slab = points_in_box(lattice, Box(Point(d, 0.0), upper), cfg);
        if (slab.size() >= n + 1) break;
        lambda *= 2.0;
    }
    // points_in_box sorts lexicographically, so slab is ordered by axis 1.
    for (std::size_t i = 1; i < slab.size(); ++i) {
        if (!(slab[i][0] - slab[i - 1][0] > cfg.sweep_gap_tol))
            throw InvariantViolation("two lattice points share a sweep coordinate; "
                                     "the admissibility certificate is wrong");
    }
    Point t(d, lambda);
    t[0] = 0.5 * (slab[n - 1][0] + slab[n][0]);

    const auto check = count_in_box(lattice, Box(Point(d, 0.0), t), cfg);
    if (check != n)
        throw InvariantViolation("recount of [0, t] gave " + std::to_string(check) +
                                 " points, expected " + std::to_string(n));
    return t;
}

PointSet point_set_for_n(const Lattice& lattice, std::size_t n, const Config& cfg) {
    const auto t = find_t_for_n(lattice, n, cfg);
    auto ps = restrict_unit_cube(dilate(lattice, t, cfg), t, cfg);
    if (ps.size() != n)
        throw InvariantViolation("dilated unit cube holds " + std::to_string(ps.size()) +
                                 " points, expected " + std::to_string(n));
    return ps;
}

PartitionReport partition_bound_check(const Lattice& lattice, std::span<const double> t,
                                      std::size_t n, const Config& cfg) {
    const auto d = lattice.dim();
    if (t.size() != d) throw ValidationError("t has wrong dimension");
    if (!lattice.certified_admissible())
        throw ValidationError("partition_bound_check requires nm_certified > 0");
    for (double x : t) {
        if (!(x > 0.0)) throw ValidationError("t must have positive components");
    }
    const Box region(Point(d, 0.0), Point(t.begin(), t.end()));
    const auto points = points_in_box(lattice, region, cfg);
    if (points.size() != n)
        throw ValidationError("[0, t] holds " + std::to_string(points.size()) +
                              " points, expected " + std::to_string(n));

    PartitionReport r;
    r.n = n;
    r.n_t = n_of_t(t);
    const double nm = lattice.nm_certified();
    const auto cells = static_cast<std::size_t>(std::floor(r.n_t / nm)) + 1;
    const double width = t[0] / static_cast<double>(cells);
    r.cell_volume = r.n_t / static_cast<double>(cells);
    r.occupancy.assign(cells, 0);

    const double tol = cfg.membership_tol;
    for (const auto& p : points) {
        const double x = p[0];
        const auto first = static_cast<std::ptrdiff_t>(std::floor((x - tol) / width)) - 1;
        const auto last = static_cast<std::ptrdiff_t>(std::floor((x + tol) / width)) + 1;
        for (auto i = std::max<std::ptrdiff_t>(first, 0);
             i <= std::min<std::ptrdiff_t>(last, static_cast<std::ptrdiff_t>(cells) - 1); ++i) {
            // Cell i spans [i * width, (i + 1) * width] on axis 1 and all of [0, t_j] elsewhere.
            const double lo = static_cast<double>(i) * width;
            const double hi = i + 1 == static_cast<std::ptrdiff_t>(cells)
                                  ? t[0]
                                  : static_cast<double>(i + 1) * width;
            if (x >= lo - tol && x <= hi + tol) ++r.occupancy[static_cast<std::size_t>(i)];
        }
    }
    const auto max_occ = *std::max_element(r.occupancy.begin(), r.occupancy.end());
    r.histogram.assign(max_occ + 1, 0);
    for (auto c : r.occupancy) ++r.histogram[c];

    r.cells_ok = max_occ <= 1;
    r.bound_ok = n < 2 || static_cast<double>(n) <= 2.0 * r.n_t;
    r.holds = r.cells_ok && r.bound_ok;
    return r;
}

}  // namespace latdisp
