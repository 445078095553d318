#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "girg/random.hpp"

namespace girg {

enum class GeometryKind { euclidean_max, mcd };
enum class VolumeMode { exact, linearized };

std::string to_string(GeometryKind kind);
GeometryKind parse_geometry_kind(std::string_view text);

/// Distance function on the d-torus together with the ball-volume function V(r).
///
/// `euclidean_max` is the sup-norm torus metric (closed-form ball volume
/// (2r)^d). `mcd` is the minimum component distance, min_i |x_i - y_i|_T;
/// its volume is 1 - (1 - 2r)^d, or r under the linearized convention.
class GeometrySpec {
public:
    GeometrySpec(GeometryKind kind, int dimension, VolumeMode mode);

    static GeometrySpec euclidean(int dimension) {
        return {GeometryKind::euclidean_max, dimension, VolumeMode::exact};
    }
    static GeometrySpec mcd(int dimension, VolumeMode mode = VolumeMode::linearized) {
        return {GeometryKind::mcd, dimension, mode};
    }

    GeometryKind kind() const { return kind_; }
    int dimension() const { return dimension_; }
    VolumeMode volume_mode() const { return mode_; }

    /// Distance for a vector of per-component torus differences.
    double reduce(std::span<const double> component_diffs) const;

    double distance(std::span<const double> x, std::span<const double> y) const;

    /// V(r) under this geometry's volume mode.
    double volume(double r) const {
        if (kind_ == GeometryKind::mcd && mode_ == VolumeMode::linearized) return r < 0.0 ? 0.0 : (r > 0.5 ? 0.5 : r);
        return exact_volume(r);
    }

    /// Exact Lebesgue measure of the r-ball, ignoring the volume mode.
    double exact_volume(double r) const;

    bool operator==(const GeometrySpec&) const = default;

private:
    GeometryKind kind_;
    int dimension_;
    VolumeMode mode_;
};

/// Reduce a real coordinate onto [0,1).
double wrap(double value);

/// |a - b|_T = min{|a - b|, 1 - |a - b|}, after reducing both arguments mod 1.
double torus_diff(double a, double b);

/// A point of T^d; every coordinate lies in [0,1).
class TorusPoint {
public:
    explicit TorusPoint(std::vector<double> coords);

    int dimension() const { return static_cast<int>(coords_.size()); }
    std::span<const double> coords() const { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }

    bool operator==(const TorusPoint&) const = default;

private:
    std::vector<double> coords_;
};

double distance(const GeometrySpec& geom, const TorusPoint& x, const TorusPoint& y);

TorusPoint sample_point(int d, Rng& rng);

inline constexpr int kBallRejectionBudget = 10'000;

/// Uniform point of the eps-ball around `center`, by rejection from the
/// smallest axis-aligned box containing the ball (the whole torus for mcd).
/// Throws std::invalid_argument when the expected number of attempts
/// exceeds `budget`, and std::runtime_error if one sample actually does.
TorusPoint sample_in_ball(const GeometrySpec& geom, const TorusPoint& center, double eps, Rng& rng,
                          int budget = kBallRejectionBudget);

/// Acceptance probability of one rejection attempt in sample_in_ball.
double ball_acceptance_rate(const GeometrySpec& geom, double eps);

}  // namespace girg
