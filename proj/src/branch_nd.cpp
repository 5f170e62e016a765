#include <set>
#include <string>

#include "dispersion_detail.hpp"
#include "latdisp/dispersion.hpp"
#include "latdisp/errors.hpp"

namespace latdisp {

namespace {

class BranchSearch {
public:
    BranchSearch(std::vector<Point> points, std::size_t dim)
        : points_(std::move(points)), d_(dim) {}

    void explore(const Box& region, const std::vector<std::size_t>& candidates) {
        // A region smaller than the incumbent cannot contain a better box.
        if (region.volume() < best_.volume()) return;
        if (!visited_.insert(region).second) return;

        std::vector<std::size_t> inside;
        for (auto idx : candidates) {
            if (region.interior_contains(points_[idx])) inside.push_back(idx);
        }
        if (inside.empty()) {
            best_.offer(region);
            return;
        }

        // Any empty box inside the region lies on one side of the blocking
        // point along at least one axis.
        std::size_t pivot = inside.front();
        double best_dist = distance_to_center(region, points_[pivot]);
        for (auto idx : inside) {
            const double dist = distance_to_center(region, points_[idx]);
            if (dist < best_dist) {
                best_dist = dist;
                pivot = idx;
            }
        }
        const Point& p = points_[pivot];
        for (std::size_t j = 0; j < d_; ++j) {
            Point hi = region.upper();
            hi[j] = p[j];
            explore(Box(region.lower(), std::move(hi)), inside);
            Point lo = region.lower();
            lo[j] = p[j];
            explore(Box(std::move(lo), region.upper()), inside);
        }
    }

    const detail::BestBox& best() const { return best_; }

private:
    static double distance_to_center(const Box& region, const Point& p) {
        double s = 0.0;
        for (std::size_t j = 0; j < p.size(); ++j) {
            const double c = 0.5 * (region.lower()[j] + region.upper()[j]);
            s += (p[j] - c) * (p[j] - c);
        }
        return s;
    }

    std::vector<Point> points_;
    std::size_t d_;
    detail::BestBox best_;
    std::set<Box> visited_;
};

}  // namespace

DispersionResult largest_empty_box_branch(std::span<const Point> points, const Box& domain,
                                          const Config& cfg) {
    const std::size_t limit = domain.dim() == 2 ? cfg.max_points_2d : cfg.max_points_nd;
    if (points.size() > limit)
        throw BudgetError("branch_nd accepts at most " + std::to_string(limit) + " points in d = " +
                          std::to_string(domain.dim()));
    auto pts = detail::prepare_points(points, domain, cfg.membership_tol);
    std::vector<std::size_t> all(pts.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    BranchSearch search(std::move(pts), domain.dim());
    search.explore(domain, all);
    return {search.best().box(), search.best().volume(), DispersionAlgorithm::branch_nd, true};
}

}  // namespace latdisp
