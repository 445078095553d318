#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "girg/random.hpp"

namespace girg {

/// Truncated Pareto weight law. `w_cap` defaults to n^{1/(beta-1)}.
struct PowerLawParams {
    double beta = 2.5;
    double w_min = 1.0;
    std::optional<double> w_cap;

    void validate() const;
    double cap_for(std::size_t n) const;
    /// E[w] of min{cap, w_min U^{-1/(beta-1)}}.
    double mean_for(std::size_t n) const;
};

struct WeightSequence {
    std::vector<double> weights;
    double total = 0.0;

    std::size_t size() const { return weights.size(); }
    double operator[](std::size_t i) const { return weights[i]; }
    static WeightSequence from(std::vector<double> weights);
};

/// Inverse-CDF draw of one truncated Pareto weight from u in (0,1].
double pareto_weight(const PowerLawParams& params, double cap, double u);

/// Weight v uses the counter stream (seed, weight, v).
WeightSequence sample_weights(const PowerLawParams& params, std::size_t n, const CounterRng& rng);
WeightSequence sample_weights(const PowerLawParams& params, std::size_t n, Rng& rng);

std::size_t tail_count(const WeightSequence& ws, double w);

struct TailFit {
    double exponent;
    double half_width;  // 95% normal-approximation half-width
    std::size_t tail_size;
};

inline constexpr std::size_t kMinTailSize = 100;

/// Hill (maximum-likelihood) estimate of the CCDF exponent of the values
/// >= cutoff. With `discrete`, integer data are handled with the usual
/// cutoff - 1/2 continuity correction.
/// Throws std::invalid_argument when fewer than kMinTailSize values reach
/// the cutoff or the tail is degenerate.
TailFit fit_tail_exponent(std::span<const double> values, double cutoff, bool discrete = false);

}  // namespace girg
