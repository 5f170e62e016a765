#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace latdisp {

using Point = std::vector<double>;

// Axis-parallel box [lower_1, upper_1] x ... x [lower_d, upper_d].
class Box {
public:
    Box() = default;
    // Throws ValidationError if the corners differ in length, are empty, or
    // lower[j] > upper[j] for some j.
    Box(Point lower, Point upper);

    static Box cube(std::size_t dim, double lo, double hi);
    static Box unit_cube(std::size_t dim) { return cube(dim, 0.0, 1.0); }
    // x + [0, t]
    static Box anchored(std::span<const double> x, std::span<const double> t);

    std::size_t dim() const { return lower_.size(); }
    const Point& lower() const { return lower_; }
    const Point& upper() const { return upper_; }
    double side(std::size_t j) const { return upper_[j] - lower_[j]; }
    double volume() const;

    // Closed membership with per-coordinate slack.
    bool contains(std::span<const double> p, double tol = 0.0) const;
    // Strict interior membership.
    bool interior_contains(std::span<const double> p) const;
    bool contains_box(const Box& other) const;

    friend bool operator==(const Box&, const Box&) = default;
    // Lexicographic on (lower, upper); used as the witness tie-break.
    friend bool operator<(const Box& a, const Box& b) {
        if (a.lower_ != b.lower_) return a.lower_ < b.lower_;
        return a.upper_ < b.upper_;
    }

private:
    Point lower_;
    Point upper_;
};

}  // namespace latdisp
