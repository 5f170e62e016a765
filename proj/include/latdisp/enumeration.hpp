#pragma once

#include <cstdint>
#include <vector>

#include "latdisp/box.hpp"
#include "latdisp/config.hpp"
#include "latdisp/lattice.hpp"

namespace latdisp {

struct LatticePoint {
    IntVector coeffs;  // z
    Point x;           // T z
};

// Size of the integer bounding box of T^-1(box), i.e. the number of
// candidates a plain scan would visit. Saturates at UINT64_MAX.
std::uint64_t candidate_count(const Lattice& lattice, const Box& box);

// All T z inside the closed box (per-coordinate slack cfg.membership_tol),
// sorted lexicographically by x. Throws BudgetError when candidate_count
// exceeds cfg.candidate_budget.
std::vector<LatticePoint> enumerate_box(const Lattice& lattice, const Box& box,
                                        const Config& cfg = default_config());

std::vector<Point> points_in_box(const Lattice& lattice, const Box& box,
                                 const Config& cfg = default_config());

std::size_t count_in_box(const Lattice& lattice, const Box& box,
                         const Config& cfg = default_config());

// Lattice point count in a box against its expectation |B| / det.
struct CountingReport {
    Box box;
    std::size_t count = 0;
    double expected = 0.0;
    double discrepancy = 0.0;
    // discrepancy / (ln(2 + |B|))^(d - 1)
    double log_bound_ratio = 0.0;
};

CountingReport counting_discrepancy(const Lattice& lattice, const Box& box,
                                    const Config& cfg = default_config());

// (ln(2 + volume))^(d - 1)
double log_bound(double volume, std::size_t dim);

}  // namespace latdisp
