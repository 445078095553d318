#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "girg/geometry.hpp"
#include "girg/graph.hpp"
#include "girg/random.hpp"
#include "girg/weights.hpp"

namespace girg {

struct ModelParams {
    int d = 2;
    std::size_t n = 1000;
    double alpha = 1.5;
    double beta = 2.5;
    double prefactor_c = 1.0;
    GeometrySpec geometry = GeometrySpec::mcd(2);
    PowerLawParams weight_params{};
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument on any violated model bound.
    void validate() const;
};

/// p_uv = c * min{1, (w_u w_v / (n V(dist)))^alpha}; c when V(dist) = 0.
double edge_probability(const ModelParams& params, double wu, double wv, double dist);

/// Lower bound p^L(r) with the linearized volume V(r) = r.
double p_lower(const ModelParams& params, double wu, double wv, double r);

/// Inverse of F(c) = 1 - sqrt(1 - c).
inline double split_inverse_cdf(double u) { return 1.0 - (1.0 - u) * (1.0 - u); }
inline double split_cdf(double c) { return 1.0 - std::sqrt(1.0 - c); }

struct PairRandomness {
    double y1;
    double y2;
    double min() const { return y1 < y2 ? y1 : y2; }
};

PairRandomness pair_randomness(const CounterRng& rng, std::uint64_t u, std::uint64_t v);

/// Edge insertion test y < c * min{1, ratio^alpha}, where ratio is
/// w_u w_v / (n V). Shared by both samplers so they agree bit for bit.
inline bool inserts_edge(double y, double c, double alpha, double ratio) {
    if (ratio >= 1.0) return y < c;
    // ratio^alpha <= ratio for ratio < 1, alpha > 1
    if (y >= c * ratio) return false;
    return y < c * std::pow(ratio, alpha);
}

/// Weights and all d coordinates from the counter streams of params.seed.
WeightSequence model_weights(const ModelParams& params);
Positions model_positions(const ModelParams& params, int known_dims);

struct SamplerOptions {
    /// Row blocks of the pair enumeration; results do not depend on this.
    std::size_t blocks = 1;
    std::size_t threads = 1;
};

/// Inserts {u,v} iff min{Y1, Y2} < p_uv for every pair; O(n^2).
GirgGraph sample_direct(const ModelParams& params, const SamplerOptions& options = {});

struct PhasedTrace {
    GirgGraph g1, g2, g3, g4;
    std::vector<Vertex> giant1;  // K^1_max, sorted
    std::vector<Vertex> f_set;   // F, sorted
    std::vector<Vertex> order;   // u_1..u_n of phases 4-6
    std::size_t phase4_end = 0;  // |V \ K^1_max|
    std::size_t phase5_end = 0;  // |V \ F|
    double f_param = 0.0;
    double b_prime = 0.0;
    double s_max = 0.0;          // observed |K^1_max| / n
    double inclusion_prob = 0.0; // min{1, 4f / s_max}
};

/// The six-phase uncovering procedure for MCD graphs. Requires mcd with
/// d >= 2 and the linearized volume, and 0 <= f < 1 (f = 0 gives F empty).
PhasedTrace sample_phased(const ModelParams& params, double f);

struct CoupledSample {
    GirgGraph direct;
    PhasedTrace phased;
};

CoupledSample sample_coupled(const ModelParams& params, double f, const SamplerOptions& options = {});

}  // namespace girg
