#include "latdisp/dispersion.hpp"

#include <algorithm>

#include "dispersion_detail.hpp"
#include "latdisp/enumeration.hpp"
#include "latdisp/errors.hpp"

namespace latdisp {

namespace detail {

std::vector<Point> prepare_points(std::span<const Point> points, const Box& domain, double tol) {
    std::vector<Point> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        if (p.size() != domain.dim()) throw ValidationError("point dimension does not match domain");
        if (!domain.contains(p, tol)) throw ValidationError("point lies outside the domain");
        Point q = p;
        for (std::size_t j = 0; j < q.size(); ++j)
            q[j] = std::clamp(q[j], domain.lower()[j], domain.upper()[j]);
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace detail

std::string_view to_string(DispersionAlgorithm a) {
    switch (a) {
        case DispersionAlgorithm::sweep2d: return "sweep2d";
        case DispersionAlgorithm::branch_nd: return "branch_nd";
        case DispersionAlgorithm::grid_oracle: return "grid_oracle";
    }
    return "unknown";
}

DispersionAlgorithm algorithm_from_string(std::string_view s) {
    if (s == "sweep2d") return DispersionAlgorithm::sweep2d;
    if (s == "branch_nd") return DispersionAlgorithm::branch_nd;
    if (s == "grid_oracle") return DispersionAlgorithm::grid_oracle;
    throw ValidationError("unknown dispersion algorithm '" + std::string(s) + "'");
}

DispersionResult largest_empty_box(std::span<const Point> points, const Box& domain,
                                   const Config& cfg) {
    if (domain.dim() == 2) return largest_empty_box_sweep2d(points, domain, cfg);
    return largest_empty_box_branch(points, domain, cfg);
}

DispersionResult dispersion(const PointSet& ps, const Config& cfg) {
    return largest_empty_box(ps.points, Box::unit_cube(ps.dim), cfg);
}

DispersionResult windowed_lattice_dispersion(const Lattice& lattice, double window,
                                             const Config& cfg) {
    if (!(window > 0.0)) throw ValidationError("window half-width must be positive");
    return windowed_lattice_dispersion(lattice, Box::cube(lattice.dim(), -window, window), cfg);
}

DispersionResult windowed_lattice_dispersion(const Lattice& lattice, const Box& window,
                                             const Config& cfg) {
    const auto points = points_in_box(lattice, window, cfg);
    return largest_empty_box(points, window, cfg);
}

}  // namespace latdisp
