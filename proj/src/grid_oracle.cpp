#include <algorithm>
#include <cmath>
#include <cstdint>
#include <tuple>

#include "dispersion_detail.hpp"
#include "latdisp/dispersion.hpp"
#include "latdisp/errors.hpp"

namespace latdisp {

namespace {

// Integer model of the grid problem. Faces are indices 0..r. A coordinate is
// stored doubled: 2k on face k, 2k + 1 strictly inside cell k. A point is in
// the open interior of faces [a, b] on an axis iff 2a < q < 2b.
class GridSearch {
public:
    GridSearch(std::vector<std::vector<std::int64_t>> q, std::size_t dim, std::int64_t r)
        : q_(std::move(q)), d_(dim), r_(r), lo_(dim), hi_(dim), best_lo_(dim), best_hi_(dim) {}

    void run() {
        std::vector<std::size_t> all(q_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        search(0, all, 1);
    }

    std::int64_t best_units() const { return best_units_; }
    const std::vector<std::int64_t>& best_lo() const { return best_lo_; }
    const std::vector<std::int64_t>& best_hi() const { return best_hi_; }

private:
    void offer(std::int64_t units) {
        if (units > best_units_ ||
            (units == best_units_ && std::tie(lo_, hi_) < std::tie(best_lo_, best_hi_))) {
            best_units_ = units;
            best_lo_ = lo_;
            best_hi_ = hi_;
        }
    }

    // `active` holds the points interior to the faces chosen on axes < k.
    void search(std::size_t k, const std::vector<std::size_t>& active, std::int64_t acc) {
        std::int64_t rest = 1;
        for (std::size_t j = k + 1; j < d_; ++j) rest *= r_;

        // An optimal lower face sits at 0 or directly above some point.
        std::vector<std::int64_t> lowers{0};
        for (auto idx : active) lowers.push_back((q_[idx][k] + 1) / 2);
        std::sort(lowers.begin(), lowers.end());
        lowers.erase(std::unique(lowers.begin(), lowers.end()), lowers.end());

        for (auto a : lowers) {
            if (a >= r_) break;
            if (acc * (r_ - a) * rest < best_units_) continue;
            std::vector<std::size_t> above;
            for (auto idx : active) {
                if (q_[idx][k] > 2 * a) above.push_back(idx);
            }
            std::sort(above.begin(), above.end(), [&](std::size_t x, std::size_t y) {
                return q_[x][k] < q_[y][k];
            });
            lo_[k] = a;
            // Segment i: the first i points of `above` are interior, the
            // next one is not; the upper face is pushed as far as allowed.
            std::vector<std::size_t> included;
            for (std::size_t i = 0; i <= above.size(); ++i) {
                if (i > 0) included.push_back(above[i - 1]);
                if (k + 1 == d_ && i > 0) break;
                const std::int64_t b = i < above.size() ? q_[above[i]][k] / 2 : r_;
                if (b <= a) continue;
                if (i > 0 && 2 * b <= q_[above[i - 1]][k]) continue;
                const std::int64_t width = b - a;
                if (acc * width * rest < best_units_) continue;
                hi_[k] = b;
                if (k + 1 == d_) {
                    offer(acc * width);
                } else {
                    search(k + 1, included, acc * width);
                }
            }
        }
    }

    std::vector<std::vector<std::int64_t>> q_;
    std::size_t d_;
    std::int64_t r_;
    std::vector<std::int64_t> lo_, hi_;
    std::int64_t best_units_ = -1;
    std::vector<std::int64_t> best_lo_, best_hi_;
};

}  // namespace

DispersionResult grid_oracle(std::span<const Point> points, const Box& domain, int resolution) {
    const auto d = domain.dim();
    if (d > 3) throw BudgetError("grid_oracle supports d <= 3");
    if (resolution < 1 || resolution > 1024)
        throw BudgetError("grid_oracle resolution must lie in [1, 1024]");
    const auto pts = detail::prepare_points(points, domain, 0.0);
    const std::int64_t r = resolution;

    std::vector<std::vector<std::int64_t>> q;
    q.reserve(pts.size());
    for (const auto& p : pts) {
        std::vector<std::int64_t> row(d);
        for (std::size_t j = 0; j < d; ++j) {
            const double side = domain.side(j);
            if (side == 0.0) {
                row[j] = 0;
                continue;
            }
            const double u = (p[j] - domain.lower()[j]) / side * static_cast<double>(r);
            const double k = std::floor(u);
            row[j] = u == k ? 2 * static_cast<std::int64_t>(k) : 2 * static_cast<std::int64_t>(k) + 1;
            row[j] = std::clamp<std::int64_t>(row[j], 0, 2 * r);
        }
        q.push_back(std::move(row));
    }

    GridSearch search(std::move(q), d, r);
    search.run();

    auto face = [&](std::size_t j, std::int64_t idx) {
        if (idx == r) return domain.upper()[j];
        return domain.lower()[j] + domain.side(j) * static_cast<double>(idx) / static_cast<double>(r);
    };
    Point lower(d), upper(d);
    for (std::size_t j = 0; j < d; ++j) {
        lower[j] = face(j, search.best_lo()[j]);
        upper[j] = face(j, search.best_hi()[j]);
    }
    Box witness(std::move(lower), std::move(upper));
    const double volume = witness.volume();
    return {std::move(witness), volume, DispersionAlgorithm::grid_oracle, false};
}

}  // namespace latdisp
