#include "girg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace girg {

std::string to_string(GeometryKind kind) {
    return kind == GeometryKind::mcd ? "mcd" : "euclidean_max";
}

GeometryKind parse_geometry_kind(std::string_view text) {
    if (text == "mcd") return GeometryKind::mcd;
    if (text == "euclidean_max" || text == "euclidean") return GeometryKind::euclidean_max;
    throw std::invalid_argument("unknown geometry '" + std::string(text) + "'");
}

GeometrySpec::GeometrySpec(GeometryKind kind, int dimension, VolumeMode mode)
    : kind_(kind), dimension_(dimension), mode_(mode) {
    if (dimension < 1) throw std::invalid_argument("geometry dimension must be >= 1");
    if (kind == GeometryKind::euclidean_max && mode == VolumeMode::linearized)
        throw std::invalid_argument("linearized volume is only defined for mcd");
}

double GeometrySpec::reduce(std::span<const double> diffs) const {
    if (kind_ == GeometryKind::mcd) return *std::min_element(diffs.begin(), diffs.end());
    return *std::max_element(diffs.begin(), diffs.end());
}

double GeometrySpec::distance(std::span<const double> x, std::span<const double> y) const {
    if (x.size() != static_cast<std::size_t>(dimension_) || y.size() != x.size())
        throw std::invalid_argument("point dimension does not match geometry dimension");
    double acc = torus_diff(x[0], y[0]);
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double t = torus_diff(x[i], y[i]);
        acc = kind_ == GeometryKind::mcd ? std::min(acc, t) : std::max(acc, t);
    }
    return acc;
}

namespace {

double int_pow(double base, int exponent) {
    double out = 1.0;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

}  // namespace

double GeometrySpec::exact_volume(double r) const {
    const double rr = std::clamp(r, 0.0, 0.5);
    if (kind_ == GeometryKind::mcd) return 1.0 - int_pow(1.0 - 2.0 * rr, dimension_);
    return std::min(int_pow(2.0 * rr, dimension_), 1.0);
}

double wrap(double value) { return value - std::floor(value); }

double torus_diff(double a, double b) {
    const double diff = std::fabs(wrap(a) - wrap(b));
    return std::min(diff, 1.0 - diff);
}

TorusPoint::TorusPoint(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("torus point needs dimension >= 1");
    for (double& c : coords_) {
        c = wrap(c);
        // wrap() of a tiny negative value rounds to exactly 1.0
        if (c >= 1.0) c = 0.0;
    }
}

double distance(const GeometrySpec& geom, const TorusPoint& x, const TorusPoint& y) {
    return geom.distance(x.coords(), y.coords());
}

TorusPoint sample_point(int d, Rng& rng) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> coords(static_cast<std::size_t>(d));
    for (double& c : coords) c = unit(rng);
    return TorusPoint(std::move(coords));
}

double ball_acceptance_rate(const GeometrySpec& geom, double eps) {
    if (geom.kind() == GeometryKind::euclidean_max) return 1.0;
    return geom.exact_volume(eps);
}

TorusPoint sample_in_ball(const GeometrySpec& geom, const TorusPoint& center, double eps, Rng& rng, int budget) {
    if (!(eps > 0.0 && eps <= 0.5)) throw std::invalid_argument("ball radius must lie in (0, 1/2]");
    if (center.dimension() != geom.dimension())
        throw std::invalid_argument("center dimension does not match geometry dimension");
    const double rate = ball_acceptance_rate(geom, eps);
    if (!(rate > 0.0) || 1.0 / rate > budget)
        throw std::invalid_argument("ball radius " + std::to_string(eps) +
                                    " is too small for rejection sampling; use a larger eps");

    const auto d = static_cast<std::size_t>(geom.dimension());
    const double half_width = geom.kind() == GeometryKind::euclidean_max ? eps : 0.5;
    std::uniform_real_distribution<double> offset(-half_width, half_width);
    std::vector<double> coords(d);
    for (int attempt = 0; attempt < budget; ++attempt) {
        for (std::size_t i = 0; i < d; ++i) coords[i] = center[i] + offset(rng);
        TorusPoint candidate(coords);
        if (distance(geom, center, candidate) <= eps) return candidate;
    }
    throw std::runtime_error("ball sampling exceeded its rejection budget");
}

}  // namespace girg
