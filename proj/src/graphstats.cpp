#include "girg/graphstats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace girg {

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

std::size_t UnionFind::find(std::size_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
}

std::vector<Vertex> ComponentLabeling::members(std::uint32_t component) const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < label.size(); ++v)
        if (label[v] == component) out.push_back(static_cast<Vertex>(v));
    return out;
}

ComponentLabeling connected_components(const GirgGraph& g) {
    const std::size_t n = g.num_vertices();
    UnionFind uf(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v) uf.unite(u, v);

    // roots in order of their smallest member
    std::vector<std::size_t> root_of(n), first_vertex, size;
    std::vector<std::int64_t> slot(n, -1);
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t r = uf.find(v);
        root_of[v] = r;
        if (slot[r] < 0) {
            slot[r] = static_cast<std::int64_t>(first_vertex.size());
            first_vertex.push_back(v);
            size.push_back(0);
        }
        ++size[static_cast<std::size_t>(slot[r])];
    }
    std::vector<std::size_t> order(first_vertex.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return size[a] > size[b]; });
    std::vector<std::uint32_t> rename(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) rename[order[i]] = static_cast<std::uint32_t>(i);

    ComponentLabeling out;
    out.label.resize(n);
    for (std::size_t v = 0; v < n; ++v) out.label[v] = rename[static_cast<std::size_t>(slot[root_of[v]])];
    for (std::size_t i : order) out.sizes.push_back(size[i]);
    out.giant = 0;
    return out;
}

std::vector<Vertex> component_of(const GirgGraph& g, Vertex seed_vertex) {
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<Vertex> stack{seed_vertex}, out;
    seen[seed_vertex] = 1;
    while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        out.push_back(u);
        for (Vertex v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> triangles_per_vertex(const GirgGraph& g) {
    const std::size_t n = g.num_vertices();
    // orient every edge toward the endpoint of higher (degree, id) rank
    auto before = [&](Vertex a, Vertex b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
    };
    std::vector<std::vector<Vertex>> out(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u))
            if (before(u, v)) out[u].push_back(v);  // stays sorted by id

    std::vector<std::uint64_t> tri(n, 0);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : out[u]) {
            const auto& a = out[u];
            const auto& b = out[v];
            std::size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] < b[j]) {
                    ++i;
                } else if (b[j] < a[i]) {
                    ++j;
                } else {
                    ++tri[u];
                    ++tri[v];
                    ++tri[a[i]];
                    ++i;
                    ++j;
                }
            }
        }
    }
    return tri;
}

ClusteringReport clustering_coefficient(const GirgGraph& g) {
    const std::size_t n = g.num_vertices();
    const auto tri = triangles_per_vertex(g);
    ClusteringReport report;
    report.per_vertex.assign(n, 0.0);
    double sum = 0.0;
    for (Vertex v = 0; v < n; ++v) {
        const double k = static_cast<double>(g.degree(v));
        if (g.degree(v) < 2) {
            ++report.low_degree;
            continue;
        }
        report.per_vertex[v] = static_cast<double>(tri[v]) / (k * (k - 1.0) / 2.0);
        sum += report.per_vertex[v];
    }
    report.mean = n == 0 ? 0.0 : sum / static_cast<double>(n);
    return report;
}

namespace {

std::size_t ceil_count(double x) { return static_cast<std::size_t>(std::ceil(x - 1e-9)); }

}  // namespace

OccupancyReport subinterval_occupancy(std::span<const double> coords, double l, double r, double delta,
                                      std::size_t n) {
    if (!(l > 0.0)) throw std::invalid_argument("subinterval parameter l must be positive");
    if (!(r > 0.0 && r < 1.0) || !(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("r and delta must lie in (0,1)");
    OccupancyReport rep;
    rep.l = l;
    rep.bins = std::max<std::size_t>(1, ceil_count(static_cast<double>(n) / l));
    rep.top_count = ceil_count(r * static_cast<double>(n));
    if (rep.top_count > rep.bins)
        throw std::invalid_argument("ceil(r n) = " + std::to_string(rep.top_count) + " exceeds the " +
                                    std::to_string(rep.bins) + " subintervals");
    rep.histogram.assign(rep.bins, 0);
    const double m = static_cast<double>(rep.bins);
    for (double c : coords) {
        const auto bin = std::min(rep.bins - 1, static_cast<std::size_t>(wrap(c) * m));
        ++rep.histogram[bin];
    }
    std::vector<std::size_t> sorted = rep.histogram;
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(rep.top_count), sorted.end(),
                     std::greater<>());
    rep.top_sum = std::accumulate(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(rep.top_count),
                                  std::size_t{0});
    rep.threshold = delta * static_cast<double>(n) / 2.0;
    rep.pass = static_cast<double>(rep.top_sum) < rep.threshold;
    return rep;
}

TriangleEstimate stochastic_triangle_estimate(const GeometrySpec& geom, double eps, double C, std::size_t samples,
                                              Rng& rng) {
    if (!(C > 0.0)) throw std::invalid_argument("C must be positive");
    if (samples == 0) throw std::invalid_argument("need at least one sample");
    const TorusPoint origin(std::vector<double>(static_cast<std::size_t>(geom.dimension()), 0.0));
    TriangleEstimate est;
    est.samples = samples;

    std::size_t close = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const TorusPoint a = sample_in_ball(geom, origin, eps, rng);
        const TorusPoint b = sample_in_ball(geom, origin, eps, rng);
        if (distance(geom, a, b) <= C * eps) ++close;
    }
    const double s = static_cast<double>(samples);
    est.probability = static_cast<double>(close) / s;
    est.half_width = 1.96 * std::sqrt(est.probability * (1.0 - est.probability) / s);

    const double big = std::min(C * eps, 0.5);
    std::size_t inner = 0;
    for (std::size_t i = 0; i < samples; ++i)
        if (distance(geom, origin, sample_in_ball(geom, origin, big, rng)) <= eps) ++inner;
    est.volume_ratio_mc = static_cast<double>(inner) / s;
    est.volume_ratio_mc_half_width = 1.96 * std::sqrt(est.volume_ratio_mc * (1.0 - est.volume_ratio_mc) / s);
    est.volume_ratio_exact = geom.exact_volume(eps) / geom.exact_volume(big);
    return est;
}

DegreeReport degree_report(const GirgGraph& g, double cutoff) {
    DegreeReport rep;
    const std::size_t n = g.num_vertices();
    rep.degrees.resize(n);
    std::size_t total = 0;
    for (Vertex v = 0; v < n; ++v) {
        rep.degrees[v] = g.degree(v);
        rep.max_degree = std::max(rep.max_degree, rep.degrees[v]);
        total += rep.degrees[v];
    }
    rep.histogram.assign(rep.max_degree + 1, 0);
    for (std::size_t k : rep.degrees) ++rep.histogram[k];
    rep.mean_degree = n == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(n);

    std::vector<double> values(rep.degrees.begin(), rep.degrees.end());
    try {
        rep.tail = fit_tail_exponent(values, cutoff, /*discrete=*/true);
    } catch (const std::invalid_argument& e) {
        rep.tail_error = e.what();
    }
    return rep;
}

}  // namespace girg
