#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "girg/weights.hpp"

using namespace girg;

namespace {

std::vector<double> pareto_samples(double exponent, std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> out(count);
    for (double& x : out) x = std::pow(1.0 - unit(rng), -1.0 / exponent);
    return out;
}

}  // namespace

TEST(PowerLaw, ParetoTailProbability) {
    const PowerLawParams p{2.5, 1.0, std::nullopt};
    // inverse CDF: u is the CCDF value, so w >= 4 iff u <= 4^-1.5
    EXPECT_NEAR(pareto_weight(p, 1e9, 0.125), 4.0, 1e-12);
    EXPECT_GT(pareto_weight(p, 1e9, 0.124), 4.0);
    EXPECT_LT(pareto_weight(p, 1e9, 0.126), 4.0);
    EXPECT_DOUBLE_EQ(pareto_weight(p, 3.0, 1e-9), 3.0);
    EXPECT_DOUBLE_EQ(pareto_weight(p, 1e9, 1.0), 1.0);
}

TEST(PowerLaw, Validation) {
    EXPECT_THROW((PowerLawParams{2.0, 1.0, std::nullopt}.validate()), std::invalid_argument);
    EXPECT_THROW((PowerLawParams{3.0, 1.0, std::nullopt}.validate()), std::invalid_argument);
    EXPECT_THROW((PowerLawParams{2.5, 0.0, std::nullopt}.validate()), std::invalid_argument);
    EXPECT_THROW((PowerLawParams{2.5, 2.0, 1.0}.validate()), std::invalid_argument);
    EXPECT_NO_THROW((PowerLawParams{2.5, 1.0, std::nullopt}.validate()));
    EXPECT_NEAR((PowerLawParams{2.5, 1.0, std::nullopt}.cap_for(1000)), 100.0, 1e-9);
}

TEST(TailCount, Examples) {
    const auto ws = WeightSequence::from({1, 2, 3});
    EXPECT_EQ(tail_count(ws, 2), 2u);
    EXPECT_EQ(tail_count(ws, 10), 0u);
    EXPECT_EQ(tail_count(ws, 0.5), 3u);
    EXPECT_DOUBLE_EQ(ws.total, 6.0);
}

TEST(SampleWeights, TailConcentration) {
    const PowerLawParams p{2.5, 1.0, std::nullopt};
    const auto ws = sample_weights(p, 100000, CounterRng(9));
    EXPECT_NEAR(static_cast<double>(tail_count(ws, 4)), 12500, 3 * std::sqrt(12500.0));
    for (double w : ws.weights) EXPECT_GE(w, 1.0);
    std::size_t prev = ws.size() + 1;
    for (double w = 0.5; w < 400; w *= 1.3) {
        const std::size_t c = tail_count(ws, w);
        EXPECT_LE(c, prev);
        prev = c;
    }
}

TEST(SampleWeights, Deterministic) {
    const PowerLawParams p{2.5, 1.0, std::nullopt};
    EXPECT_EQ(sample_weights(p, 1000, CounterRng(4)).weights, sample_weights(p, 1000, CounterRng(4)).weights);
    EXPECT_NE(sample_weights(p, 1000, CounterRng(4)).weights, sample_weights(p, 1000, CounterRng(5)).weights);
    Rng a(1), b(1);
    EXPECT_EQ(sample_weights(p, 100, a).weights, sample_weights(p, 100, b).weights);
}

TEST(SampleWeights, TotalWithinBandOfAnalyticMean) {
    const PowerLawParams p{2.5, 1.0, std::nullopt};
    for (int k = 12; k <= 16; ++k) {
        const std::size_t n = std::size_t{1} << k;
        const double m = p.mean_for(n);
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const auto ws = sample_weights(p, n, CounterRng(seed));
            const double per = ws.total / static_cast<double>(n);
            EXPECT_GE(per, 0.8 * m);
            EXPECT_LE(per, 1.25 * m);
        }
    }
}

TEST(FitTail, RecoversParetoExponent) {
    const auto data = pareto_samples(1.5, 100000, 2);
    const TailFit fit = fit_tail_exponent(data, 2.0);
    EXPECT_NEAR(fit.exponent, 1.5, 0.05);
    EXPECT_GT(fit.tail_size, 100u);
}

TEST(FitTail, SelfConsistentOnSampledWeights) {
    const PowerLawParams p{2.5, 1.0, std::nullopt};
    const auto ws = sample_weights(p, 100000, CounterRng(17));
    EXPECT_NEAR(fit_tail_exponent(ws.weights, 4.0).exponent, 1.5, 0.1);
}

TEST(FitTail, Errors) {
    const std::vector<double> constant(1000, 3.0);
    EXPECT_THROW(fit_tail_exponent(constant, 1.0), std::invalid_argument);
    EXPECT_THROW(fit_tail_exponent(constant, 3.0), std::invalid_argument);
    const auto few = pareto_samples(1.5, 50, 1);
    EXPECT_THROW(fit_tail_exponent(few, 1.0), std::invalid_argument);
}

TEST(FitTail, ConfidenceCoverage) {
    int covered = 0;
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        const auto data = pareto_samples(1.5, 5000, 1000 + trial);
        const TailFit fit = fit_tail_exponent(data, 1.0);
        if (std::abs(fit.exponent - 1.5) <= fit.half_width) ++covered;
    }
    EXPECT_GE(covered, 90);
}
