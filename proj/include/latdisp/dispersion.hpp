#pragma once

#include <span>
#include <string>
#include <string_view>

#include "latdisp/box.hpp"
#include "latdisp/config.hpp"
#include "latdisp/dilation.hpp"
#include "latdisp/lattice.hpp"

namespace latdisp {

enum class DispersionAlgorithm { sweep2d, branch_nd, grid_oracle };

std::string_view to_string(DispersionAlgorithm a);
DispersionAlgorithm algorithm_from_string(std::string_view s);

// Largest box inside a domain whose open interior misses every input point.
// Among boxes of equal volume the witness is the lexicographically smallest
// by (lower, upper).
struct DispersionResult {
    Box witness;
    double volume = 0.0;
    DispersionAlgorithm algorithm = DispersionAlgorithm::branch_nd;
    bool certified_exact = false;
};

// Exact largest empty box. Dispatches to the sweep for d == 2 and to the
// branching search otherwise. Points must lie in the (closed) domain.
DispersionResult largest_empty_box(std::span<const Point> points, const Box& domain,
                                   const Config& cfg = default_config());

// Maximal empty rectangles enumerated from point-supported staircases,
// O(n^2). d == 2 only.
DispersionResult largest_empty_box_sweep2d(std::span<const Point> points, const Box& domain,
                                           const Config& cfg = default_config());

// Exact branching search in any dimension: an occupied region is split at
// the interior point nearest its center into 2d half-regions, with volume
// pruning and memoization of visited regions.
DispersionResult largest_empty_box_branch(std::span<const Point> points, const Box& domain,
                                          const Config& cfg = default_config());

// Best empty box whose faces lie on the uniform resolution-r grid of the
// domain. A lower bound on the exact value; d <= 3, r <= 1024.
DispersionResult grid_oracle(std::span<const Point> points, const Box& domain, int resolution);

// Dispersion of a point set in [0,1]^d.
DispersionResult dispersion(const PointSet& ps, const Config& cfg = default_config());

// Largest empty box of the lattice inside [-window, window]^d.
DispersionResult windowed_lattice_dispersion(const Lattice& lattice, double window,
                                             const Config& cfg = default_config());
DispersionResult windowed_lattice_dispersion(const Lattice& lattice, const Box& window,
                                             const Config& cfg = default_config());

}  // namespace latdisp
