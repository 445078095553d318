#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "girg/geometry.hpp"
#include "girg/graph.hpp"
#include "girg/weights.hpp"

namespace girg {

class UnionFind {
public:
    explicit UnionFind(std::size_t n);
    std::size_t find(std::size_t x);
    bool unite(std::size_t a, std::size_t b);

private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint8_t> rank_;
};

/// Components are labeled 0..k-1 in order of decreasing size, ties broken
/// by the smallest vertex id, so label 0 is always the giant.
struct ComponentLabeling {
    std::vector<std::uint32_t> label;
    std::vector<std::size_t> sizes;  // indexed by label, descending
    std::uint32_t giant = 0;

    std::size_t giant_size() const { return sizes.empty() ? 0 : sizes[giant]; }
    std::vector<Vertex> members(std::uint32_t component) const;
};

ComponentLabeling connected_components(const GirgGraph& g);

/// Vertices of the component containing `seed_vertex`, sorted.
std::vector<Vertex> component_of(const GirgGraph& g, Vertex seed_vertex);

struct ClusteringReport {
    std::vector<double> per_vertex;
    double mean = 0.0;
    std::size_t low_degree = 0;  // vertices with degree < 2
};

/// Triangles through each vertex by sorted-adjacency intersection.
std::vector<std::uint64_t> triangles_per_vertex(const GirgGraph& g);

ClusteringReport clustering_coefficient(const GirgGraph& g);

struct OccupancyReport {
    double l = 0.0;
    std::size_t bins = 0;  // M = ceil(n / l)
    std::vector<std::size_t> histogram;
    std::size_t top_count = 0;  // ceil(r n)
    std::size_t top_sum = 0;
    double threshold = 0.0;  // delta n / 2
    bool pass = false;       // top_sum < threshold
};

/// Occupancy of M = ceil(n/l) equal subintervals of [0,1); the heaviest set
/// of ceil(r n) subintervals is the ceil(r n) largest bins.
/// Throws std::invalid_argument if ceil(r n) > M.
OccupancyReport subinterval_occupancy(std::span<const double> coords, double l, double r, double delta,
                                      std::size_t n);

struct TriangleEstimate {
    double probability = 0.0;
    double half_width = 0.0;       // 95%
    double volume_ratio_mc = 0.0;  // Monte Carlo V(eps)/V(C eps)
    double volume_ratio_mc_half_width = 0.0;
    double volume_ratio_exact = 0.0;
    std::size_t samples = 0;
};

/// Pr[dist(x1, x2) <= C eps] for x1, x2 uniform in the eps-ball around the
/// origin, plus the volume ratio V(eps)/V(C eps) estimated by the fraction
/// of uniform (C eps)-ball points that land in the eps-ball.
TriangleEstimate stochastic_triangle_estimate(const GeometrySpec& geom, double eps, double C, std::size_t samples,
                                              Rng& rng);

struct DegreeReport {
    std::vector<std::size_t> degrees;
    std::vector<std::size_t> histogram;  // histogram[k] = #{v : deg v = k}
    std::size_t max_degree = 0;
    double mean_degree = 0.0;
    std::optional<TailFit> tail;  // empty when the fit was rejected
    std::string tail_error;
};

inline constexpr double kDegreeTailCutoff = 8.0;

/// Degree histogram plus the discrete Hill fit of the degree CCDF above
/// `cutoff`. A rejected fit leaves `tail` empty and records why.
DegreeReport degree_report(const GirgGraph& g, double cutoff = kDegreeTailCutoff);

}  // namespace girg
