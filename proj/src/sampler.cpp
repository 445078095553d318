#include "girg/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "girg/graphstats.hpp"

namespace girg {

void ModelParams::validate() const {
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n > (std::size_t{1} << 31)) throw std::invalid_argument("n is too large for 32-bit vertex ids");
    if (!(alpha > 1.0)) throw std::invalid_argument("alpha must be > 1");
    if (!(beta > 2.0 && beta < 3.0)) throw std::invalid_argument("beta must lie in (2,3)");
    if (!(prefactor_c > 0.0 && prefactor_c <= 1.0)) throw std::invalid_argument("prefactor c must lie in (0,1]");
    if (geometry.dimension() != d) throw std::invalid_argument("geometry dimension does not match d");
    if (weight_params.beta != beta) throw std::invalid_argument("weight law beta does not match model beta");
    weight_params.validate();
}

namespace {

inline double weight_ratio(double wu, double wv, double n, double vol) { return wu * wv / (n * vol); }

inline double fast_torus_diff(double a, double b) {
    const double diff = std::fabs(a - b);
    return std::min(diff, 1.0 - diff);
}

/// Canonical per-pair distance from complete rows; must match the phased
/// sampler's two-stage evaluation exactly (min/max are order-free).
inline double pair_distance(GeometryKind kind, const double* x, const double* y, int d) {
    double acc = fast_torus_diff(x[0], y[0]);
    for (int i = 1; i < d; ++i) {
        const double t = fast_torus_diff(x[i], y[i]);
        acc = kind == GeometryKind::mcd ? std::min(acc, t) : std::max(acc, t);
    }
    return acc;
}

}  // namespace

double edge_probability(const ModelParams& params, double wu, double wv, double dist) {
    const double vol = params.geometry.volume(dist);
    if (vol <= 0.0) return params.prefactor_c;
    const double ratio = weight_ratio(wu, wv, static_cast<double>(params.n), vol);
    if (ratio >= 1.0) return params.prefactor_c;
    return params.prefactor_c * std::pow(ratio, params.alpha);
}

double p_lower(const ModelParams& params, double wu, double wv, double r) {
    const double vol = r;  // V(r) = r, unclamped, so p^L decays to 0
    if (vol <= 0.0) return params.prefactor_c;
    const double ratio = weight_ratio(wu, wv, static_cast<double>(params.n), vol);
    if (ratio >= 1.0) return params.prefactor_c;
    return params.prefactor_c * std::pow(ratio, params.alpha);
}

PairRandomness pair_randomness(const CounterRng& rng, std::uint64_t u, std::uint64_t v) {
    const std::uint64_t idx = pair_index(u, v);
    return {split_inverse_cdf(rng.stream(Stream::pair_y1).uniform(idx)),
            split_inverse_cdf(rng.stream(Stream::pair_y2).uniform(idx))};
}

WeightSequence model_weights(const ModelParams& params) {
    return sample_weights(params.weight_params, params.n, CounterRng(params.seed));
}

Positions model_positions(const ModelParams& params, int known_dims) {
    const CounterRng rng(params.seed);
    const StreamRng stream = rng.stream(Stream::position);
    Positions pos{params.d, known_dims, std::vector<double>(params.n * static_cast<std::size_t>(params.d), 0.0)};
    for (std::size_t v = 0; v < params.n; ++v)
        for (int i = 0; i < known_dims; ++i) {
            const std::size_t idx = v * static_cast<std::size_t>(params.d) + static_cast<std::size_t>(i);
            pos.coords[idx] = stream.uniform(idx);
        }
    return pos;
}

namespace {

struct PairKernel {
    const ModelParams& params;
    const WeightSequence& weights;
    const Positions& pos;
    StreamRng y1, y2;
    double n_real;

    PairKernel(const ModelParams& p, const WeightSequence& w, const Positions& x)
        : params(p), weights(w), pos(x), y1(CounterRng(p.seed).stream(Stream::pair_y1)),
          y2(CounterRng(p.seed).stream(Stream::pair_y2)), n_real(static_cast<double>(p.n)) {}

    double min_y(std::uint64_t idx) const {
        const double a = split_inverse_cdf(y1.uniform(idx));
        const double b = split_inverse_cdf(y2.uniform(idx));
        return a < b ? a : b;
    }

    /// EIC for the pair (u, v) given its full distance.
    bool eic(Vertex u, Vertex v, double dist) const {
        const double vol = params.geometry.volume(dist);
        const double y = min_y(pair_index(u, v));
        const double ratio = vol <= 0.0 ? INFINITY : weight_ratio(weights[u], weights[v], n_real, vol);
        return inserts_edge(y, params.prefactor_c, params.alpha, ratio);
    }
};

/// Coordinates transposed to one array per dimension, so the row loop
/// below vectorizes.
struct ColumnPositions {
    std::vector<std::vector<double>> column;

    explicit ColumnPositions(const Positions& pos) : column(static_cast<std::size_t>(pos.dimension)) {
        const std::size_t n = pos.coords.size() / static_cast<std::size_t>(pos.dimension);
        for (int i = 0; i < pos.dimension; ++i) {
            column[i].resize(n);
            for (std::size_t v = 0; v < n; ++v) column[i][v] = pos.coords[v * pos.dimension + i];
        }
    }
};

void direct_rows(const PairKernel& kernel, const ColumnPositions& cols, std::size_t row_begin, std::size_t row_end,
                 std::vector<Edge>& out) {
    constexpr std::size_t kChunk = 256;
    const int d = kernel.params.d;
    const GeometryKind kind = kernel.params.geometry.kind();
    const VolumeMode mode = kernel.params.geometry.volume_mode();
    const double* w = kernel.weights.weights.data();
    const double c = kernel.params.prefactor_c;
    alignas(64) double y[kChunk], dist[kChunk], vol[kChunk];
    alignas(64) unsigned char maybe[kChunk];

    for (std::size_t v = row_begin; v < row_end; ++v) {
        const std::uint64_t base = static_cast<std::uint64_t>(v) * (v - 1) / 2;  // pair_index(0, v)
        // y > c ratio >= p_uv rules a pair out; the margin dwarfs any rounding
        const double bound = c * w[v] * (1.0 + 1e-9);
        for (std::size_t u0 = 0; u0 < v; u0 += kChunk) {
            const std::size_t len = std::min(kChunk, v - u0);
            for (std::size_t i = 0; i < len; ++i) y[i] = kernel.min_y(base + u0 + i);
            {
                const double* x0 = cols.column[0].data() + u0;
                const double xv = cols.column[0][v];
                for (std::size_t i = 0; i < len; ++i) dist[i] = fast_torus_diff(x0[i], xv);
            }
            for (int k = 1; k < d; ++k) {
                const double* xk = cols.column[k].data() + u0;
                const double xv = cols.column[k][v];
                if (kind == GeometryKind::mcd)
                    for (std::size_t i = 0; i < len; ++i) dist[i] = std::min(dist[i], fast_torus_diff(xk[i], xv));
                else
                    for (std::size_t i = 0; i < len; ++i) dist[i] = std::max(dist[i], fast_torus_diff(xk[i], xv));
            }
            // volume for the prefilter only; the exact test recomputes it
            if (kind == GeometryKind::mcd && mode == VolumeMode::linearized) {
                for (std::size_t i = 0; i < len; ++i) vol[i] = std::clamp(dist[i], 0.0, 0.5);
            } else {
                const double sign = kind == GeometryKind::mcd ? -2.0 : 2.0;
                const double offset = kind == GeometryKind::mcd ? 1.0 : 0.0;
                double base_r[kChunk];
                for (std::size_t i = 0; i < len; ++i) {
                    base_r[i] = offset + sign * std::clamp(dist[i], 0.0, 0.5);
                    vol[i] = 1.0;
                }
                for (int k = 0; k < d; ++k)
                    for (std::size_t i = 0; i < len; ++i) vol[i] *= base_r[i];
                if (kind == GeometryKind::mcd)
                    for (std::size_t i = 0; i < len; ++i) vol[i] = 1.0 - vol[i];
            }
            for (std::size_t i = 0; i < len; ++i) maybe[i] = y[i] * (kernel.n_real * vol[i]) <= bound * w[u0 + i];
            for (std::size_t i = 0; i < len; ++i) {
                if (!maybe[i]) continue;
                const auto u = static_cast<Vertex>(u0 + i);
                if (kernel.eic(u, static_cast<Vertex>(v), dist[i])) out.emplace_back(u, static_cast<Vertex>(v));
            }
        }
    }
}

}  // namespace

GirgGraph sample_direct(const ModelParams& params, const SamplerOptions& options) {
    params.validate();
    WeightSequence weights = model_weights(params);
    Positions pos = model_positions(params, params.d);
    const PairKernel kernel(params, weights, pos);
    const ColumnPositions cols(pos);

    // row boundaries with roughly equal pair counts
    const std::size_t blocks = std::clamp<std::size_t>(options.blocks, 1, params.n);
    std::vector<std::size_t> bounds{0};
    const double total_pairs = 0.5 * static_cast<double>(params.n) * static_cast<double>(params.n);
    for (std::size_t b = 1; b < blocks; ++b) {
        const auto row = static_cast<std::size_t>(std::sqrt(2.0 * total_pairs * static_cast<double>(b) / blocks));
        bounds.push_back(std::clamp(row, bounds.back(), params.n));
    }
    bounds.push_back(params.n);

    std::vector<std::vector<Edge>> block_edges(blocks);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t b = next++; b < blocks; b = next++) direct_rows(kernel, cols, bounds[b], bounds[b + 1], block_edges[b]);
    };
    const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, blocks);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    std::vector<Edge> edges;
    for (auto& be : block_edges) edges.insert(edges.end(), be.begin(), be.end());
    return GirgGraph(params.n, std::move(weights), std::move(pos), std::move(edges));
}

PhasedTrace sample_phased(const ModelParams& params, double f) {
    params.validate();
    if (params.geometry.kind() != GeometryKind::mcd)
        throw std::invalid_argument("the phased sampler requires the mcd geometry");
    if (params.d < 2) throw std::invalid_argument("the phased sampler requires d >= 2 (LB1 is undefined for d = 1)");
    if (params.geometry.volume_mode() != VolumeMode::linearized)
        throw std::invalid_argument("the phased sampler requires the linearized mcd volume");
    if (!(f >= 0.0 && f < 1.0)) throw std::invalid_argument("f must lie in [0,1)");

    const std::size_t n = params.n;
    const int d = params.d;
    const int last = d - 1;
    const CounterRng rng(params.seed);
    const WeightSequence weights = model_weights(params);
    const Positions partial = model_positions(params, d - 1);
    const PairKernel kernel(params, weights, partial);
    const StreamRng y1 = rng.stream(Stream::pair_y1);
    const double n_real = static_cast<double>(n);

    auto first_components = [&](Vertex u, Vertex v) {
        const double* xu = partial.coords.data() + static_cast<std::size_t>(u) * d;
        const double* xv = partial.coords.data() + static_cast<std::size_t>(v) * d;
        return pair_distance(GeometryKind::mcd, xu, xv, d - 1);
    };

    PhasedTrace trace;
    trace.f_param = f;

    // Phase 1: first d-1 coordinates and Y1; LB1 edges form G1.
    std::vector<Edge> g1_edges;
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u) {
            const double r = std::min(first_components(u, v), 0.5);
            const double ratio = r <= 0.0 ? INFINITY : weight_ratio(weights[u], weights[v], n_real, r);
            const double y = split_inverse_cdf(y1.uniform(pair_index(u, v)));
            if (inserts_edge(y, params.prefactor_c, params.alpha, ratio)) g1_edges.emplace_back(u, v);
        }
    }
    trace.g1 = GirgGraph(n, weights, partial, g1_edges);
    const ComponentLabeling labels = connected_components(trace.g1);
    trace.giant1 = labels.members(labels.giant);
    trace.s_max = static_cast<double>(trace.giant1.size()) / n_real;

    // Phase 2: B' and F'.
    std::vector<double> giant_weights;
    for (Vertex v : trace.giant1) giant_weights.push_back(weights[v]);
    std::sort(giant_weights.begin(), giant_weights.end());
    const std::size_t half = (giant_weights.size() + 1) / 2;
    trace.b_prime = std::floor(giant_weights[half - 1]) + 1.0;
    trace.inclusion_prob = std::min(1.0, 4.0 * f / trace.s_max);
    const StreamRng inclusion = rng.stream(Stream::f_inclusion);
    std::vector<char> in_giant(n, 0), in_f(n, 0);
    for (Vertex v : trace.giant1) in_giant[v] = 1;
    for (Vertex v = 0; v < n; ++v)
        if (weights[v] < trace.b_prime && inclusion.uniform(v) < trace.inclusion_prob && in_giant[v]) in_f[v] = 1;

    // Phase 3: F and the enumeration V \ K1, K1 \ F, F.
    for (Vertex v = 0; v < n; ++v)
        if (!in_giant[v]) trace.order.push_back(v);
    trace.phase4_end = trace.order.size();
    for (Vertex v = 0; v < n; ++v)
        if (in_giant[v] && !in_f[v]) trace.order.push_back(v);
    trace.phase5_end = trace.order.size();
    for (Vertex v = 0; v < n; ++v)
        if (in_f[v]) {
            trace.order.push_back(v);
            trace.f_set.push_back(v);
        }

    // Phases 4-6: reveal the d-th coordinate and Y2 step by step.
    const StreamRng position = rng.stream(Stream::position);
    std::vector<double> last_coord(n, 0.0);
    std::vector<Edge> phase_edges[3];
    for (std::size_t k = 0; k < n; ++k) {
        const Vertex u = trace.order[k];
        last_coord[u] = position.uniform(static_cast<std::size_t>(u) * d + last);
        const int phase = k < trace.phase4_end ? 0 : (k < trace.phase5_end ? 1 : 2);
        for (std::size_t j = 0; j < k; ++j) {
            const Vertex w = trace.order[j];
            const double dist = std::min(first_components(u, w), fast_torus_diff(last_coord[u], last_coord[w]));
            if (kernel.eic(u, w, dist)) phase_edges[phase].emplace_back(u, w);
        }
    }

    Positions full = partial;
    full.known_dims = d;
    for (std::size_t v = 0; v < n; ++v) full.coords[v * d + last] = last_coord[v];

    std::vector<Edge> acc = std::move(g1_edges);
    auto snapshot = [&](int phase, const Positions& pos) {
        acc.insert(acc.end(), phase_edges[phase].begin(), phase_edges[phase].end());
        normalize_edges(acc);
        return GirgGraph(n, weights, pos, acc);
    };
    trace.g2 = snapshot(0, partial);
    trace.g3 = snapshot(1, partial);
    trace.g4 = snapshot(2, full);
    return trace;
}

CoupledSample sample_coupled(const ModelParams& params, double f, const SamplerOptions& options) {
    PhasedTrace phased = sample_phased(params, f);
    return {sample_direct(params, options), std::move(phased)};
}

}  // namespace girg
