#include <algorithm>
#include <string>

#include "dispersion_detail.hpp"
#include "latdisp/dispersion.hpp"
#include "latdisp/errors.hpp"

namespace latdisp {

// Every maximal empty rectangle has each side supported by a point or by the
// domain boundary. Four families cover all of them:
//   bottom = domain,  top = domain   full-height strips between distinct x
//   bottom = point p, top = point/domain   upward staircase scan from p
//   bottom = domain,  top = point q   downward column scan from q
// Points on a rectangle's boundary never block it.
DispersionResult largest_empty_box_sweep2d(std::span<const Point> points, const Box& domain,
                                           const Config& cfg) {
    if (domain.dim() != 2) throw ValidationError("sweep2d requires d = 2");
    if (points.size() > cfg.max_points_2d)
        throw BudgetError("sweep2d accepts at most " + std::to_string(cfg.max_points_2d) +
                          " points");
    auto pts = detail::prepare_points(points, domain, cfg.membership_tol);
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a[1] != b[1] ? a[1] < b[1] : a[0] < b[0];
    });

    const double xmin = domain.lower()[0], xmax = domain.upper()[0];
    const double ymin = domain.lower()[1], ymax = domain.upper()[1];
    detail::BestBox best;

    std::vector<double> xs{xmin, xmax};
    for (const auto& p : pts) xs.push_back(p[0]);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) best.offer({xs[k], ymin}, {xs[k + 1], ymax});

    const std::size_t n = pts.size();
    std::size_t above = 0;  // first index with y strictly above pts[i]
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = pts[i];
        if (p[1] >= ymax) continue;
        above = std::max(above, i + 1);
        while (above < n && pts[above][1] <= p[1]) ++above;

        double left = xmin, right = xmax;
        bool closed = false;
        for (std::size_t j = above; j < n; ++j) {
            const auto& q = pts[j];
            if (!(q[0] > left && q[0] < right)) continue;
            best.offer({left, p[1]}, {right, q[1]});
            if (q[0] < p[0]) {
                left = q[0];
            } else if (q[0] > p[0]) {
                right = q[0];
            } else {
                closed = true;
                break;
            }
        }
        if (!closed) best.offer({left, p[1]}, {right, ymax});
    }

    for (const auto& q : pts) {
        if (!(q[1] > ymin)) continue;
        double left = xmin, right = xmax;
        bool blocked = false;
        for (const auto& s : pts) {
            if (!(s[1] > ymin && s[1] < q[1])) continue;
            if (s[0] < q[0]) {
                left = std::max(left, s[0]);
            } else if (s[0] > q[0]) {
                right = std::min(right, s[0]);
            } else {
                blocked = true;
                break;
            }
        }
        if (!blocked) best.offer({left, ymin}, {right, q[1]});
    }

    return {best.box(), best.volume(), DispersionAlgorithm::sweep2d, true};
}

}  // namespace latdisp
