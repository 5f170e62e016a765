#include "latdisp/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "latdisp/errors.hpp"

namespace latdisp {

namespace {

struct IntegerRange {
    std::vector<std::int64_t> lo, hi;
};

// Integer bounding box of the preimage parallelepiped, from the images of the
// 2^d box vertices under T^-1.
IntegerRange preimage_range(const Lattice& lattice, const Box& box) {
    const auto d = lattice.dim();
    if (box.dim() != d) throw ValidationError("box dimension does not match lattice");
    const auto& inv = lattice.inverse();
    std::vector<double> mn(d, std::numeric_limits<double>::infinity());
    std::vector<double> mx(d, -std::numeric_limits<double>::infinity());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        for (std::size_t i = 0; i < d; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                const double v = (mask >> j) & 1 ? box.upper()[j] : box.lower()[j];
                s += inv(i, j) * v;
            }
            mn[i] = std::min(mn[i], s);
            mx[i] = std::max(mx[i], s);
        }
    }
    IntegerRange r{std::vector<std::int64_t>(d), std::vector<std::int64_t>(d)};
    constexpr double limit = 1e15;
    for (std::size_t i = 0; i < d; ++i) {
        if (!(std::abs(mn[i]) < limit && std::abs(mx[i]) < limit))
            throw BudgetError("box preimage exceeds the representable integer range");
        // One unit of slack absorbs rounding in T^-1 and the membership tolerance.
        r.lo[i] = static_cast<std::int64_t>(std::floor(mn[i])) - 1;
        r.hi[i] = static_cast<std::int64_t>(std::ceil(mx[i])) + 1;
    }
    return r;
}

std::uint64_t range_size(const IntegerRange& r) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < r.lo.size(); ++i) {
        const auto n = static_cast<std::uint64_t>(r.hi[i] - r.lo[i] + 1);
        if (total > std::numeric_limits<std::uint64_t>::max() / n)
            return std::numeric_limits<std::uint64_t>::max();
        total *= n;
    }
    return total;
}

// Depth-first scan over z_{d-1}, ..., z_0. At each level the contribution of
// the still-free coordinates is bounded by interval arithmetic, and the
// branch is dropped once some coordinate can no longer reach the box.
class Scanner {
public:
    Scanner(const Lattice& lattice, const Box& box, const IntegerRange& range, double tol,
            std::vector<LatticePoint>& out)
        : lattice_(lattice), box_(box), range_(range), tol_(tol), out_(out), d_(lattice.dim()) {
        const auto& t = lattice.generator();
        // rest_lo[k][i], rest_hi[k][i]: range of sum_{j<k} T_ij z_j.
        rest_lo_.assign(d_ + 1, std::vector<double>(d_, 0.0));
        rest_hi_.assign(d_ + 1, std::vector<double>(d_, 0.0));
        for (std::size_t k = 1; k <= d_; ++k) {
            const std::size_t j = k - 1;
            for (std::size_t i = 0; i < d_; ++i) {
                const double a = t(i, j) * static_cast<double>(range_.lo[j]);
                const double b = t(i, j) * static_cast<double>(range_.hi[j]);
                rest_lo_[k][i] = rest_lo_[k - 1][i] + std::min(a, b);
                rest_hi_[k][i] = rest_hi_[k - 1][i] + std::max(a, b);
            }
        }
        z_.assign(d_, 0);
        partial_.assign(d_ + 1, std::vector<double>(d_, 0.0));
    }

    void run() { descend(d_); }

private:
    // `level` coordinates z_0..z_{level-1} are still free.
    void descend(std::size_t level) {
        const auto& partial = partial_[level];
        if (level == 0) {
            Point x = lattice_.map(z_);
            if (box_.contains(x, tol_)) out_.push_back({z_, std::move(x)});
            return;
        }
        const std::size_t j = level - 1;
        const auto& t = lattice_.generator();
        auto& next = partial_[j];
        for (std::int64_t v = range_.lo[j]; v <= range_.hi[j]; ++v) {
            z_[j] = v;
            bool feasible = true;
            for (std::size_t i = 0; i < d_; ++i) {
                next[i] = partial[i] + t(i, j) * static_cast<double>(v);
                const double slack = tol_ + 1e-9 * (1.0 + std::abs(next[i]));
                if (next[i] + rest_hi_[j][i] < box_.lower()[i] - slack ||
                    next[i] + rest_lo_[j][i] > box_.upper()[i] + slack) {
                    feasible = false;
                    break;
                }
            }
            if (feasible) descend(j);
        }
        z_[j] = 0;
    }

    const Lattice& lattice_;
    const Box& box_;
    const IntegerRange& range_;
    double tol_;
    std::vector<LatticePoint>& out_;
    std::size_t d_;
    std::vector<std::vector<double>> rest_lo_, rest_hi_;
    std::vector<std::vector<double>> partial_;
    IntVector z_;
};

}  // namespace

std::uint64_t candidate_count(const Lattice& lattice, const Box& box) {
    return range_size(preimage_range(lattice, box));
}

std::vector<LatticePoint> enumerate_box(const Lattice& lattice, const Box& box, const Config& cfg) {
    const auto range = preimage_range(lattice, box);
    const auto candidates = range_size(range);
    if (candidates > cfg.candidate_budget)
        throw BudgetError("box needs " + std::to_string(candidates) +
                          " enumeration candidates, budget is " +
                          std::to_string(cfg.candidate_budget));
    std::vector<LatticePoint> out;
    Scanner(lattice, box, range, cfg.membership_tol, out).run();
    std::sort(out.begin(), out.end(),
              [](const LatticePoint& a, const LatticePoint& b) { return a.x < b.x; });
    return out;
}

std::vector<Point> points_in_box(const Lattice& lattice, const Box& box, const Config& cfg) {
    auto pts = enumerate_box(lattice, box, cfg);
    std::vector<Point> out;
    out.reserve(pts.size());
    for (auto& p : pts) out.push_back(std::move(p.x));
    return out;
}

std::size_t count_in_box(const Lattice& lattice, const Box& box, const Config& cfg) {
    return enumerate_box(lattice, box, cfg).size();
}

double log_bound(double volume, std::size_t dim) {
    return std::pow(std::log(2.0 + volume), static_cast<double>(dim) - 1.0);
}

CountingReport counting_discrepancy(const Lattice& lattice, const Box& box, const Config& cfg) {
    CountingReport r;
    r.box = box;
    r.count = count_in_box(lattice, box, cfg);
    const double vol = box.volume();
    r.expected = vol / lattice.det_abs();
    r.discrepancy = std::abs(static_cast<double>(r.count) - r.expected);
    r.log_bound_ratio = r.discrepancy / log_bound(vol, lattice.dim());
    return r;
}

}  // namespace latdisp
