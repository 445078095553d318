#include "girg/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace girg {

void PowerLawParams::validate() const {
    if (!(beta > 2.0 && beta < 3.0)) throw std::invalid_argument("beta must lie in (2,3)");
    if (!(w_min > 0.0)) throw std::invalid_argument("w_min must be positive");
    if (w_cap && !(*w_cap >= w_min)) throw std::invalid_argument("w_cap must be >= w_min");
}

double PowerLawParams::cap_for(std::size_t n) const {
    if (w_cap) return *w_cap;
    return std::max(w_min, std::pow(static_cast<double>(n), 1.0 / (beta - 1.0)));
}

double PowerLawParams::mean_for(std::size_t n) const {
    // E[min(cap, X)] = integral_0^cap P[X > t] dt for X ~ Pareto(w_min, beta - 1)
    const double a = beta - 1.0;
    const double cap = cap_for(n);
    return w_min + w_min * (1.0 - std::pow(cap / w_min, 1.0 - a)) / (a - 1.0);
}

WeightSequence WeightSequence::from(std::vector<double> weights) {
    WeightSequence ws;
    ws.total = std::accumulate(weights.begin(), weights.end(), 0.0);
    ws.weights = std::move(weights);
    return ws;
}

double pareto_weight(const PowerLawParams& params, double cap, double u) {
    return std::min(cap, params.w_min * std::pow(u, -1.0 / (params.beta - 1.0)));
}

WeightSequence sample_weights(const PowerLawParams& params, std::size_t n, const CounterRng& rng) {
    params.validate();
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const double cap = params.cap_for(n);
    const StreamRng stream = rng.stream(Stream::weight);
    std::vector<double> w(n);
    for (std::size_t v = 0; v < n; ++v) w[v] = pareto_weight(params, cap, stream.uniform_open_closed(v));
    return WeightSequence::from(std::move(w));
}

WeightSequence sample_weights(const PowerLawParams& params, std::size_t n, Rng& rng) {
    params.validate();
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const double cap = params.cap_for(n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> w(n);
    for (double& x : w) x = pareto_weight(params, cap, 1.0 - unit(rng));
    return WeightSequence::from(std::move(w));
}

std::size_t tail_count(const WeightSequence& ws, double w) {
    return static_cast<std::size_t>(
        std::count_if(ws.weights.begin(), ws.weights.end(), [w](double x) { return x >= w; }));
}

TailFit fit_tail_exponent(std::span<const double> values, double cutoff, bool discrete) {
    if (!(cutoff > 0.0)) throw std::invalid_argument("tail cutoff must be positive");
    const double x_min = discrete ? cutoff - 0.5 : cutoff;
    if (!(x_min > 0.0)) throw std::invalid_argument("discrete tail cutoff must exceed 1/2");

    std::size_t k = 0;
    double log_sum = 0.0;
    double lo = INFINITY, hi = -INFINITY;
    for (double x : values) {
        if (x < cutoff) continue;
        ++k;
        log_sum += std::log(x / x_min);
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    if (k < kMinTailSize)
        throw std::invalid_argument("insufficient tail data: " + std::to_string(k) + " values >= cutoff");
    if (lo == hi || !(log_sum > 0.0)) throw std::invalid_argument("degenerate tail: all tail values are equal");

    const double exponent = static_cast<double>(k) / log_sum;
    return {exponent, 1.96 * exponent / std::sqrt(static_cast<double>(k)), k};
}

}  // namespace girg
