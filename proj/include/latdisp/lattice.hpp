#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "latdisp/box.hpp"
#include "latdisp/config.hpp"

namespace latdisp {

using IntVector = std::vector<std::int64_t>;

// Full-rank lattice T(Z^d). Basis vectors are the columns of the generator.
//
// nm_certified is a proven lower bound on Nm = inf over nonzero lattice points
// of the product of |coordinates|; zero means "no certificate", not "not
// admissible". Instances are immutable and cheap to copy for d <= 8.
class Lattice {
public:
    // Any invertible matrix; no admissibility certificate.
    static Lattice custom(Eigen::MatrixXd generator, const Config& cfg = default_config());

    // Reassembles a lattice from stored fields (deserialization, derived
    // constructions). Checks invertibility and that det_abs agrees with
    // |det generator| to cfg.determinant_tol relative.
    static Lattice from_parts(Eigen::MatrixXd generator, double det_abs, double nm_certified,
                              std::string provenance, const Config& cfg = default_config());

    std::size_t dim() const { return static_cast<std::size_t>(generator_.rows()); }
    const Eigen::MatrixXd& generator() const { return generator_; }
    const Eigen::MatrixXd& inverse() const { return inverse_; }
    double det_abs() const { return det_abs_; }
    double nm_certified() const { return nm_certified_; }
    const std::string& provenance() const { return provenance_; }
    bool certified_admissible() const { return nm_certified_ > 0.0; }

    // T z, summed over columns in ascending order.
    Point map(std::span<const std::int64_t> z) const;

private:
    Lattice(Eigen::MatrixXd generator, Eigen::MatrixXd inverse, double det_abs, double nm_certified,
            std::string provenance)
        : generator_(std::move(generator)),
          inverse_(std::move(inverse)),
          det_abs_(det_abs),
          nm_certified_(nm_certified),
          provenance_(std::move(provenance)) {}

    Eigen::MatrixXd generator_;
    Eigen::MatrixXd inverse_;
    double det_abs_ = 1.0;
    double nm_certified_ = 0.0;
    std::string provenance_;
};

inline constexpr std::size_t kMaxFrolovDim = 8;

// p_d(x) = prod_{j=1..d} (x - (2j - 1)) - 1, evaluated in extended precision.
double frolov_polynomial(std::size_t d, double x);

// The d real roots of p_d in increasing order, one in each (2k, 2k + 2].
// Throws ValidationError for d outside [1, 8] and InvariantViolation if a
// bracket fails to change sign.
std::vector<double> frolov_roots(std::size_t d);

// Vandermonde lattice T[i][j] = root_i^j of p_d; nm_certified = 1.
Lattice frolov_lattice(std::size_t d);

// Points (a + b*phi, a + b*(1 - phi)); nm_certified = 1, det_abs = sqrt(5).
Lattice golden_lattice();

// Z^d. Certified (Nm = 1) only for d = 1.
Lattice integer_lattice(std::size_t d);

// Lattice generated by (T^-1)^T. Carries no numeric certificate.
Lattice dual(const Lattice& lattice);

// min over nonzero points z in [-window, window]^d of prod |z_j|. An upper
// bound on Nm. Throws ValidationError when the window holds no nonzero point.
double nm_empirical(const Lattice& lattice, double window, const Config& cfg = default_config());

}  // namespace latdisp
