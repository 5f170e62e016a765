#pragma once

#include <span>
#include <vector>

#include "latdisp/box.hpp"
#include "latdisp/config.hpp"

namespace latdisp::detail {

// Running maximum with the (lower, upper) lexicographic tie-break.
class BestBox {
public:
    void offer(const Box& b) {
        const double v = b.volume();
        if (!found_ || v > volume_ || (v == volume_ && b < box_)) {
            box_ = b;
            volume_ = v;
            found_ = true;
        }
    }
    void offer(Point lower, Point upper) { offer(Box(std::move(lower), std::move(upper))); }

    bool found() const { return found_; }
    double volume() const { return found_ ? volume_ : -1.0; }
    const Box& box() const { return box_; }

private:
    Box box_;
    double volume_ = -1.0;
    bool found_ = false;
};

// Copies the points, snapping coordinates within tol of the domain onto it.
// Throws ValidationError for dimension mismatches or points outside the domain.
std::vector<Point> prepare_points(std::span<const Point> points, const Box& domain, double tol);

}  // namespace latdisp::detail
