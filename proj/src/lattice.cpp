#include "latdisp/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "latdisp/enumeration.hpp"
#include "latdisp/errors.hpp"

namespace latdisp {

namespace {

struct Factored {
    Eigen::MatrixXd inverse;
    double det_abs;
};

Factored factor(const Eigen::MatrixXd& t) {
    if (t.rows() == 0 || t.rows() != t.cols())
        throw ValidationError("generator must be a non-empty square matrix");
    if (!t.allFinite()) throw ValidationError("generator has non-finite entries");
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(t);
    // Extended precision keeps ill-conditioned Vandermonde generators (d = 8)
    // inside the determinant tolerance.
    using MatrixXld = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    const Eigen::PartialPivLU<MatrixXld> lu_ld(t.cast<long double>());
    const double det = static_cast<double>(std::abs(lu_ld.determinant()));
    if (!(det > 0.0) || !std::isfinite(det)) throw ValidationError("generator is singular");
    return {lu.inverse(), det};
}

long double frolov_poly_ld(std::size_t d, long double x) {
    long double p = 1.0L;
    for (std::size_t j = 1; j <= d; ++j) p *= x - static_cast<long double>(2 * j - 1);
    return p - 1.0L;
}

long double frolov_poly_derivative_ld(std::size_t d, long double x) {
    long double sum = 0.0L;
    for (std::size_t i = 1; i <= d; ++i) {
        long double term = 1.0L;
        for (std::size_t j = 1; j <= d; ++j) {
            if (j != i) term *= x - static_cast<long double>(2 * j - 1);
        }
        sum += term;
    }
    return sum;
}

int sign(long double v) { return (v > 0) - (v < 0); }

}  // namespace

Lattice Lattice::custom(Eigen::MatrixXd generator, const Config& cfg) {
    (void)cfg;
    auto f = factor(generator);
    return Lattice(std::move(generator), std::move(f.inverse), f.det_abs, 0.0, "custom");
}

Lattice Lattice::from_parts(Eigen::MatrixXd generator, double det_abs, double nm_certified,
                            std::string provenance, const Config& cfg) {
    auto f = factor(generator);
    if (!(nm_certified >= 0.0) || !std::isfinite(nm_certified))
        throw ValidationError("nm_certified must be a finite nonnegative number");
    if (!(det_abs > 0.0) || std::abs(det_abs - f.det_abs) > cfg.determinant_tol * f.det_abs)
        throw ValidationError("det_abs " + std::to_string(det_abs) +
                              " disagrees with |det generator| = " + std::to_string(f.det_abs));
    return Lattice(std::move(generator), std::move(f.inverse), det_abs, nm_certified,
                   std::move(provenance));
}

Point Lattice::map(std::span<const std::int64_t> z) const {
    const auto d = dim();
    Point x(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < d; ++j) s += generator_(i, j) * static_cast<double>(z[j]);
        x[i] = s;
    }
    return x;
}

double frolov_polynomial(std::size_t d, double x) {
    return static_cast<double>(frolov_poly_ld(d, x));
}

std::vector<double> frolov_roots(std::size_t d) {
    if (d < 1 || d > kMaxFrolovDim)
        throw ValidationError("frolov_lattice supports 1 <= d <= " + std::to_string(kMaxFrolovDim));
    std::vector<double> roots;
    roots.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        long double lo = 2.0L * k, hi = 2.0L * k + 2.0L;
        int slo = sign(frolov_poly_ld(d, lo));
        const int shi = sign(frolov_poly_ld(d, hi));
        // p_d vanishes at an even integer only for d = 1 (root 2), which is
        // then the right end of the last bracket.
        if (shi == 0) {
            roots.push_back(static_cast<double>(hi));
            continue;
        }
        if (slo == 0 || slo == shi)
            throw InvariantViolation("frolov bracket (" + std::to_string(2 * k) + ", " +
                                     std::to_string(2 * k + 2) + ") has no sign change");
        while (hi - lo > 1e-14L) {
            const long double mid = 0.5L * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            const int sm = sign(frolov_poly_ld(d, mid));
            if (sm == 0) {
                lo = hi = mid;
                break;
            }
            if (sm == slo) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        const long double bracket_lo = 2.0L * k, bracket_hi = 2.0L * k + 2.0L;
        long double x = 0.5L * (lo + hi);
        for (int it = 0; it < 5; ++it) {
            const long double dp = frolov_poly_derivative_ld(d, x);
            if (dp == 0.0L) break;
            const long double next = x - frolov_poly_ld(d, x) / dp;
            if (!(next > bracket_lo && next <= bracket_hi)) break;
            x = next;
        }
        roots.push_back(static_cast<double>(x));
    }
    for (std::size_t i = 1; i < roots.size(); ++i) {
        if (!(roots[i] > roots[i - 1]))
            throw InvariantViolation("frolov roots are not strictly increasing");
    }
    return roots;
}

Lattice frolov_lattice(std::size_t d) {
    const auto roots = frolov_roots(d);
    Eigen::MatrixXd t(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        long double power = 1.0L;
        for (std::size_t j = 0; j < d; ++j) {
            t(i, j) = static_cast<double>(power);
            power *= roots[i];
        }
    }
    long double vdm = 1.0L;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) vdm *= static_cast<long double>(roots[j]) - roots[i];
    }
    // det_abs describes the stored double matrix. At d = 8 rounding the
    // entries moves its determinant ~1e-12 away from the Vandermonde product.
    const double stored = factor(t).det_abs;
    const double product = static_cast<double>(std::abs(vdm));
    const Config& cfg = default_config();
    if (std::abs(stored - product) > cfg.certification_tol * product)
        throw InvariantViolation("frolov(" + std::to_string(d) + ") generator determinant drifted from the Vandermonde product");
    return Lattice::from_parts(std::move(t), stored, 1.0, "frolov(" + std::to_string(d) + ")", cfg);
}

Lattice golden_lattice() {
    constexpr double phi = std::numbers::phi;
    Eigen::MatrixXd t(2, 2);
    t << 1.0, phi, 1.0, 1.0 - phi;
    return Lattice::from_parts(std::move(t), std::sqrt(5.0), 1.0, "golden");
}

Lattice integer_lattice(std::size_t d) {
    if (d < 1) throw ValidationError("integer_lattice requires d >= 1");
    return Lattice::from_parts(Eigen::MatrixXd::Identity(d, d), 1.0, d == 1 ? 1.0 : 0.0,
                               "integer(" + std::to_string(d) + ")");
}

Lattice dual(const Lattice& lattice) {
    Eigen::MatrixXd t = lattice.inverse().transpose();
    auto f = factor(t);
    return Lattice::from_parts(std::move(t), f.det_abs, 0.0, "dual(" + lattice.provenance() + ")");
}

double nm_empirical(const Lattice& lattice, double window, const Config& cfg) {
    if (!(window > 0.0)) throw ValidationError("nm_empirical window must be positive");
    const auto points = enumerate_box(lattice, Box::cube(lattice.dim(), -window, window), cfg);
    double best = std::numeric_limits<double>::infinity();
    bool any = false;
    for (const auto& p : points) {
        if (std::all_of(p.coeffs.begin(), p.coeffs.end(), [](std::int64_t v) { return v == 0; }))
            continue;
        double prod = 1.0;
        for (double c : p.x) prod *= std::abs(c);
        any = true;
        best = std::min(best, prod);
    }
    if (!any) throw ValidationError("window holds no nonzero lattice point; increase it");
    return best;
}

}  // namespace latdisp
