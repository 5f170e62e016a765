#include "latdisp/box.hpp"

#include <string>

#include "latdisp/errors.hpp"

namespace latdisp {

Box::Box(Point lower, Point upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty() || lower_.size() != upper_.size())
        throw ValidationError("box corners must be non-empty and of equal dimension");
    for (std::size_t j = 0; j < lower_.size(); ++j) {
        if (!(lower_[j] <= upper_[j]))
            throw ValidationError("box has lower > upper on axis " + std::to_string(j));
    }
}

Box Box::cube(std::size_t dim, double lo, double hi) {
    return Box(Point(dim, lo), Point(dim, hi));
}

Box Box::anchored(std::span<const double> x, std::span<const double> t) {
    if (x.size() != t.size()) throw ValidationError("anchor and extent differ in dimension");
    Point lo(x.begin(), x.end()), hi(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) hi[j] = x[j] + t[j];
    return Box(std::move(lo), std::move(hi));
}

double Box::volume() const {
    double v = 1.0;
    for (std::size_t j = 0; j < lower_.size(); ++j) v *= upper_[j] - lower_[j];
    return v;
}

bool Box::contains(std::span<const double> p, double tol) const {
    for (std::size_t j = 0; j < lower_.size(); ++j) {
        if (p[j] < lower_[j] - tol || p[j] > upper_[j] + tol) return false;
    }
    return true;
}

bool Box::interior_contains(std::span<const double> p) const {
    for (std::size_t j = 0; j < lower_.size(); ++j) {
        if (!(p[j] > lower_[j] && p[j] < upper_[j])) return false;
    }
    return true;
}

bool Box::contains_box(const Box& other) const {
    for (std::size_t j = 0; j < lower_.size(); ++j) {
        if (other.lower_[j] < lower_[j] || other.upper_[j] > upper_[j]) return false;
    }
    return true;
}

}  // namespace latdisp
