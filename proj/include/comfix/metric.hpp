#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "comfix/errors.hpp"

namespace comfix {

/// A point of the ambient space: a d-dimensional real vector.
struct Point {
    std::vector<double> c;

    Point() = default;
    explicit Point(std::vector<double> coords) : c(std::move(coords)) {}
    Point(std::initializer_list<double> coords) : c(coords) {}

    std::size_t dim() const { return c.size(); }
    double& operator[](std::size_t i) { return c[i]; }
    double operator[](std::size_t i) const { return c[i]; }

    /// True when every coordinate is finite (no NaN/Inf).
    bool finite() const;

    bool operator==(const Point& other) const = default;
};

enum class MetricKind { euclidean, chebyshev, manhattan };

/// Accepts "euclidean", "chebyshev", "manhattan"; throws InputError otherwise.
MetricKind metric_kind_from_string(const std::string& s);
std::string to_string(MetricKind k);

struct Metric {
    MetricKind kind = MetricKind::euclidean;

    /// Distance between two points of equal dimension.
    /// euclidean = 2-norm, chebyshev = max-norm, manhattan = 1-norm of x - y.
    double dist(const Point& x, const Point& y) const;
};

/// Axis-aligned box in R^d; the concrete complete metric space everything
/// runs on. Degenerate zero-width axes are allowed.
struct BoxDomain {
    Point lower;
    Point upper;

    std::size_t dim() const { return lower.dim(); }

    /// Throws InputError unless dimensions match, bounds are finite, and
    /// lower_i <= upper_i for every axis.
    void validate() const;

    double diameter(const Metric& m) const { return m.dist(lower, upper); }
    Point center() const;
    double width(std::size_t axis) const { return upper[axis] - lower[axis]; }

    /// True iff lower_i - slack <= x_i <= upper_i + slack for all i.
    bool contains(const Point& x, double slack) const;

    /// Corner selected by bit mask: bit i set -> upper on axis i.
    Point corner(std::uint64_t mask) const;

    /// The box corner maximizing per-axis distance from `from` (farthest
    /// corner under any of the supported metrics).
    Point farthest_corner(const Point& from) const;
};

/// Deterministic point sample of the box. For a given (dom, n, seed) the
/// result is bitwise reproducible. When n >= 2^d + 1 the sample starts with
/// all 2^d corners followed by the center; the remainder is pseudo-random
/// uniform.
std::vector<Point> sample(const BoxDomain& dom, std::size_t n, std::uint64_t seed);

}  // namespace comfix
