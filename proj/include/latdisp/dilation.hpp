#pragma once

#include <span>
#include <string>
#include <vector>

#include "latdisp/box.hpp"
#include "latdisp/config.hpp"
#include "latdisp/lattice.hpp"

namespace latdisp {

// Finite point set in [0,1]^d cut from a dilated lattice.
struct PointSet {
    std::size_t dim = 0;
    std::vector<Point> points;
    std::string lattice_provenance;
    Point t;  // dilation vector; empty when unknown

    std::size_t size() const { return points.size(); }
};

// n(t) = prod |t_j|, the volume of [0, t].
double n_of_t(std::span<const double> t);

// t^-1 L: row j of the generator divided by t_j. det_abs and nm_certified
// scale by 1 / n(t). Throws ValidationError on a zero or non-finite entry.
Lattice dilate(const Lattice& lattice, std::span<const double> t,
               const Config& cfg = default_config());

// dilated ∩ [0,1]^d. Coordinates within cfg.membership_tol outside the cube
// are clamped onto it.
PointSet restrict_unit_cube(const Lattice& dilated, std::span<const double> t = {},
                            const Config& cfg = default_config());

// Dilation t with count_in_box(lattice, [0, t]) == n.
//
// Grows lambda by doubling until the slab [0, 64 lambda] x [0, lambda]^(d-1)
// holds at least n + 1 points, freezes t_j = lambda for j >= 2 and cuts axis 1
// halfway between the n-th and (n+1)-th sorted first coordinates. Requires a
// certified admissible lattice, which makes those coordinates pairwise
// distinct.
Point find_t_for_n(const Lattice& lattice, std::size_t n, const Config& cfg = default_config());

// (t_n^-1 L) ∩ [0,1]^d with exactly n points.
PointSet point_set_for_n(const Lattice& lattice, std::size_t n,
                         const Config& cfg = default_config());

struct PartitionReport {
    bool holds = false;        // cells_ok && bound_ok
    bool cells_ok = false;     // every cell holds at most one point
    bool bound_ok = false;     // n <= 2 n(t), vacuous for n < 2
    std::size_t n = 0;
    double n_t = 0.0;
    double cell_volume = 0.0;  // strictly below nm_certified
    std::vector<std::size_t> occupancy;  // points per cell, along axis 1
    std::vector<std::size_t> histogram;  // histogram[k] = cells holding k points
};

// Slices [0, t] along axis 1 into floor(n(t)/Nm) + 1 equal cells, each of
// volume < nm_certified, and counts lattice points per closed cell. Throws
// ValidationError unless the lattice is certified and [0, t] holds exactly n
// points.
PartitionReport partition_bound_check(const Lattice& lattice, std::span<const double> t,
                                      std::size_t n, const Config& cfg = default_config());

}  // namespace latdisp
