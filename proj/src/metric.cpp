#include "comfix/metric.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace comfix {

bool Point::finite() const {
    return std::all_of(c.begin(), c.end(), [](double v) { return std::isfinite(v); });
}

MetricKind metric_kind_from_string(const std::string& s) {
    if (s == "euclidean") return MetricKind::euclidean;
    if (s == "chebyshev") return MetricKind::chebyshev;
    if (s == "manhattan") return MetricKind::manhattan;
    throw InputError("unknown metric kind '" + s + "' (expected euclidean, chebyshev or manhattan)");
}

std::string to_string(MetricKind k) {
    switch (k) {
        case MetricKind::euclidean: return "euclidean";
        case MetricKind::chebyshev: return "chebyshev";
        case MetricKind::manhattan: return "manhattan";
    }
    return "?";
}

double Metric::dist(const Point& x, const Point& y) const {
    if (x.dim() != y.dim())
        throw InputError("dist: dimension mismatch (" + std::to_string(x.dim()) + " vs " +
                         std::to_string(y.dim()) + ")");
    switch (kind) {
        case MetricKind::euclidean: {
            double s = 0;
            for (std::size_t i = 0; i < x.dim(); ++i) {
                const double d = x[i] - y[i];
                s += d * d;
            }
            return std::sqrt(s);
        }
        case MetricKind::chebyshev: {
            double m = 0;
            for (std::size_t i = 0; i < x.dim(); ++i)
                m = std::max(m, std::abs(x[i] - y[i]));
            return m;
        }
        case MetricKind::manhattan: {
            double s = 0;
            for (std::size_t i = 0; i < x.dim(); ++i)
                s += std::abs(x[i] - y[i]);
            return s;
        }
    }
    return 0;
}

void BoxDomain::validate() const {
    if (lower.dim() != upper.dim())
        throw InputError("box: lower and upper have different dimensions");
    if (lower.dim() == 0)
        throw InputError("box: dimension must be at least 1");
    if (!lower.finite() || !upper.finite())
        throw InputError("box: bounds must be finite");
    for (std::size_t i = 0; i < lower.dim(); ++i)
        if (lower[i] > upper[i])
            throw InputError("box: lower > upper on axis " + std::to_string(i + 1));
}

Point BoxDomain::center() const {
    Point p;
    p.c.resize(dim());
    for (std::size_t i = 0; i < dim(); ++i) p[i] = lower[i] + 0.5 * (upper[i] - lower[i]);
    return p;
}

bool BoxDomain::contains(const Point& x, double slack) const {
    if (x.dim() != dim())
        throw InputError("contains: dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!(x[i] >= lower[i] - slack && x[i] <= upper[i] + slack)) return false;
    }
    return true;
}

Point BoxDomain::corner(std::uint64_t mask) const {
    Point p;
    p.c.resize(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        p[i] = (mask >> i) & 1u ? upper[i] : lower[i];
    return p;
}

Point BoxDomain::farthest_corner(const Point& from) const {
    if (from.dim() != dim())
        throw InputError("farthest_corner: dimension mismatch");
    Point p;
    p.c.resize(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        // independent per axis for all supported metrics
        p[i] = (from[i] - lower[i] >= upper[i] - from[i]) ? lower[i] : upper[i];
    }
    return p;
}

namespace {

// Raw 53-bit mantissa draw; avoids std::uniform_real_distribution, whose
// output is implementation-defined and would break bitwise reproducibility.
double unit_draw(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

Point uniform_point(const BoxDomain& dom, std::mt19937_64& gen) {
    Point p;
    p.c.resize(dom.dim());
    for (std::size_t i = 0; i < dom.dim(); ++i)
        p[i] = dom.lower[i] + unit_draw(gen) * (dom.upper[i] - dom.lower[i]);
    return p;
}

}  // namespace

std::vector<Point> sample(const BoxDomain& dom, std::size_t n, std::uint64_t seed) {
    dom.validate();
    if (n == 0) throw InputError("sample: n must be >= 1");

    std::vector<Point> out;
    out.reserve(n);

    const std::size_t d = dom.dim();
    if (d < 63) {
        const std::uint64_t corners = std::uint64_t{1} << d;
        if (n >= corners + 1) {
            for (std::uint64_t mask = 0; mask < corners; ++mask)
                out.push_back(dom.corner(mask));
            out.push_back(dom.center());
        }
    }

    std::mt19937_64 gen(seed);
    while (out.size() < n) out.push_back(uniform_point(dom, gen));
    return out;
}

}  // namespace comfix
