#include "latdisp/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "latdisp/dilation.hpp"
#include "latdisp/dispersion.hpp"
#include "latdisp/errors.hpp"
#include "latdisp/io.hpp"

namespace latdisp {

std::vector<ScalingRow> scaling_study(const Lattice& lattice, std::span<const std::size_t> ns,
                                      const Config& cfg) {
    std::vector<std::size_t> sorted(ns.begin(), ns.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<ScalingRow> rows;
    rows.reserve(sorted.size());
    for (auto n : sorted) {
        const auto ps = point_set_for_n(lattice, n, cfg);
        const auto res = dispersion(ps, cfg);
        ScalingRow row{n, n_of_t(ps.t), res.volume, static_cast<double>(n) * res.volume,
                       res.witness};
        if (n >= 2 && !(static_cast<double>(n) <= 2.0 * row.n_t))
            throw InvariantViolation("N = " + std::to_string(n) + " exceeds 2 n(t_N) = " +
                                     format_decimal(2.0 * row.n_t));
        rows.push_back(std::move(row));
    }
    return rows;
}

BoundednessTable boundedness_study(const Lattice& lattice, std::span<const double> windows,
                                   const Config& cfg) {
    std::vector<double> sorted(windows.begin(), windows.end());
    std::sort(sorted.begin(), sorted.end());
    BoundednessTable table;
    for (double m : sorted) {
        const auto res = windowed_lattice_dispersion(lattice, m, cfg);
        BoundednessRow row{m, res.volume, 1.0};
        if (!table.rows.empty()) {
            row.growth_ratio = res.volume / table.rows.back().disp_star;
            table.max_growth_ratio = std::max(table.max_growth_ratio, row.growth_ratio);
        }
        table.rows.push_back(row);
    }
    return table;
}

std::vector<DiscrepancyRow> discrepancy_study(const Lattice& lattice,
                                              std::span<const double> volumes, std::size_t shifts,
                                              const Config& cfg) {
    const auto d = lattice.dim();
    std::vector<double> sorted(volumes.begin(), volumes.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<DiscrepancyRow> rows;
    for (double v : sorted) {
        if (!(v >= 0.0)) throw ValidationError("volumes must be nonnegative");
        // Seeded per volume, so a row does not depend on which other volumes
        // were requested.
        const auto bits = std::bit_cast<std::uint64_t>(v);
        std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                          static_cast<std::uint32_t>(bits), static_cast<std::uint32_t>(bits >> 32)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> shift(-cfg.shift_range, cfg.shift_range);
        const Point side(d, std::pow(v, 1.0 / static_cast<double>(d)));

        DiscrepancyRow row;
        row.volume = v;
        for (std::size_t s = 0; s < shifts; ++s) {
            Point x(d);
            for (auto& c : x) c = shift(rng);
            auto rep = counting_discrepancy(lattice, Box::anchored(x, side), cfg);
            row.max_discrepancy = std::max(row.max_discrepancy, rep.discrepancy);
            row.max_log_bound_ratio = std::max(row.max_log_bound_ratio, rep.log_bound_ratio);
            row.reports.push_back(std::move(rep));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

double log_log_slope(std::span<const ScalingRow> rows) {
    if (rows.size() < 2) throw ValidationError("slope needs at least two rows");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double k = static_cast<double>(rows.size());
    for (const auto& r : rows) {
        const double x = std::log(static_cast<double>(r.n)), y = std::log(r.disp);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

std::string scaling_csv(std::span<const ScalingRow> rows) {
    std::string out = std::string(kScalingCsvHeader) + '\n';
    for (const auto& r : rows) {
        out += std::to_string(r.n) + ',' + format_decimal(r.n_t) + ',' + format_decimal(r.disp) +
               ',' + format_decimal(r.n_times_disp) + '\n';
    }
    return out;
}

std::string bounded_csv(const BoundednessTable& table) {
    std::string out = std::string(kBoundedCsvHeader) + '\n';
    for (const auto& r : table.rows) {
        out += format_decimal(r.window) + ',' + format_decimal(r.disp_star) + ',' +
               format_decimal(r.growth_ratio) + '\n';
    }
    return out;
}

std::string counting_csv(std::span<const DiscrepancyRow> rows) {
    std::string out = std::string(kCountingCsvHeader) + '\n';
    for (const auto& r : rows) {
        out += format_decimal(r.volume) + ',' + format_decimal(r.max_discrepancy) + ',' +
               format_decimal(r.max_log_bound_ratio) + '\n';
    }
    return out;
}

std::string scaling_json(std::span<const ScalingRow> rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"N", r.n},
                       {"n_t", r.n_t},
                       {"disp", r.disp},
                       {"n_times_disp", r.n_times_disp},
                       {"witness", box_to_json(r.witness)}});
    }
    return arr.dump(2) + '\n';
}

std::string bounded_json(const BoundednessTable& table) {
    json arr = json::array();
    for (const auto& r : table.rows) {
        arr.push_back({{"M", r.window},
                       {"disp_star_window", r.disp_star},
                       {"growth_ratio", r.growth_ratio}});
    }
    return json{{"rows", arr}, {"max_growth_ratio", table.max_growth_ratio}}.dump(2) + '\n';
}

std::string counting_json(std::span<const DiscrepancyRow> rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json reports = json::array();
        for (const auto& rep : r.reports) reports.push_back(counting_report_to_json(rep));
        arr.push_back({{"vol", r.volume},
                       {"max_discrepancy", r.max_discrepancy},
                       {"max_log_bound_ratio", r.max_log_bound_ratio},
                       {"reports", std::move(reports)}});
    }
    return arr.dump(2) + '\n';
}

}  // namespace latdisp
