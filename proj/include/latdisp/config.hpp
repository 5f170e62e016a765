#pragma once

#include <cstdint>

namespace latdisp {

// Numerical tolerances and budgets shared by every module. Pass a modified
// copy to the operations that accept one; nothing reads global state.
struct Config {
    // Slack when comparing coordinate products against a certified Nm bound.
    double certification_tol = 1e-9;
    // Elementwise agreement for generator / inverse round trips.
    double linear_algebra_tol = 1e-10;
    // Relative agreement between det_abs and |det T|.
    double determinant_tol = 1e-12;
    // Closed-box membership slack, applied per coordinate.
    double membership_tol = 1e-12;
    // Minimum gap between consecutive sweep coordinates in find_t_for_n.
    double sweep_gap_tol = 1e-9;

    // Maximum size of the integer bounding box scanned by box enumeration.
    std::uint64_t candidate_budget = 100'000'000;
    // Axis-1 extent of the slab used by find_t_for_n, in units of lambda.
    double slab_extension = 64.0;

    // Shifts x in the counting study are drawn uniformly from [-r, r]^d.
    double shift_range = 100.0;

    // Point-count limits for largest_empty_box.
    std::size_t max_points_2d = 5000;
    std::size_t max_points_nd = 300;

    std::uint64_t seed = 42;
};

inline const Config& default_config() {
    static const Config cfg{};
    return cfg;
}

}  // namespace latdisp
