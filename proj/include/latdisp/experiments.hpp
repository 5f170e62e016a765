#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "latdisp/box.hpp"
#include "latdisp/config.hpp"
#include "latdisp/enumeration.hpp"
#include "latdisp/lattice.hpp"

namespace latdisp {

struct ScalingRow {
    std::size_t n = 0;
    double n_t = 0.0;           // n(t_N)
    double disp = 0.0;          // dispersion of P_N
    double n_times_disp = 0.0;  // N * disp
    Box witness;
};

// For each N: t_N, P_N and its exact dispersion. Rows sorted by N. Throws
// InvariantViolation if some row breaks N <= 2 n(t_N) for N >= 2.
std::vector<ScalingRow> scaling_study(const Lattice& lattice, std::span<const std::size_t> ns,
                                      const Config& cfg = default_config());

struct BoundednessRow {
    double window = 0.0;
    double disp_star = 0.0;
    double growth_ratio = 1.0;  // against the previous row; 1 for the first
};

struct BoundednessTable {
    std::vector<BoundednessRow> rows;
    double max_growth_ratio = 1.0;
};

// Windowed lattice dispersion over [-M, M]^d for each M (sorted ascending).
BoundednessTable boundedness_study(const Lattice& lattice, std::span<const double> windows,
                                   const Config& cfg = default_config());

struct DiscrepancyRow {
    double volume = 0.0;
    double max_discrepancy = 0.0;
    double max_log_bound_ratio = 0.0;
    std::vector<CountingReport> reports;
};

// Cubes of each target volume at `shifts` seeded random positions
// x in [-cfg.shift_range, cfg.shift_range]^d. Rows sorted by volume.
std::vector<DiscrepancyRow> discrepancy_study(const Lattice& lattice,
                                              std::span<const double> volumes, std::size_t shifts,
                                              const Config& cfg = default_config());

// Least-squares slope of log(disp) against log(N).
double log_log_slope(std::span<const ScalingRow> rows);

inline constexpr const char* kScalingCsvHeader = "N,n_t,disp,n_times_disp";
inline constexpr const char* kBoundedCsvHeader = "M,disp_star_window,growth_ratio";
inline constexpr const char* kCountingCsvHeader = "vol,max_discrepancy,max_log_bound_ratio";

std::string scaling_csv(std::span<const ScalingRow> rows);
std::string bounded_csv(const BoundednessTable& table);
std::string counting_csv(std::span<const DiscrepancyRow> rows);

std::string scaling_json(std::span<const ScalingRow> rows);
std::string bounded_json(const BoundednessTable& table);
std::string counting_json(std::span<const DiscrepancyRow> rows);

// Quick pass over the library invariants. Writes one line per check and
// returns the number of failures.
int run_selftest(std::ostream& log, const Config& cfg = default_config());

}  // namespace latdisp
