#pragma once

#include <span>
#include <vector>

namespace girg {

/// Kolmogorov-Smirnov distance of a sample from Uniform[0,1].
/// Sorts a copy of the data.
double ks_uniform_distance(std::span<const double> sample);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_se = 0.0;
    double slope_half_width = 0.0;  // 95% Student-t
};

/// Ordinary least squares y = intercept + slope x; needs >= 3 points.
LinearFit least_squares(std::span<const double> x, std::span<const double> y);

}  // namespace girg
