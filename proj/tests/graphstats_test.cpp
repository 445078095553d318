#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "girg/graphstats.hpp"
#include "girg/sampler.hpp"

using namespace girg;

namespace {

GirgGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            if (coin(rng)) edges.emplace_back(u, v);
    return GirgGraph::from_edges(n, std::move(edges));
}

}  // namespace

TEST(Components, EmptyAndPath) {
    const auto empty = connected_components(GirgGraph::from_edges(5, {}));
    EXPECT_EQ(empty.sizes, (std::vector<std::size_t>{1, 1, 1, 1, 1}));
    EXPECT_EQ(empty.members(empty.giant), (std::vector<Vertex>{0}));

    const auto path = connected_components(GirgGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));
    EXPECT_EQ(path.sizes, (std::vector<std::size_t>{4}));
    EXPECT_EQ(path.giant_size(), 4u);
}

TEST(Components, TieBreakBySmallestVertex) {
    // components {1,4} and {0,3} both of size 2; {0,3} holds the smaller id
    const auto c = connected_components(GirgGraph::from_edges(6, {{1, 4}, {0, 3}}));
    EXPECT_EQ(c.members(0), (std::vector<Vertex>{0, 3}));
    EXPECT_EQ(c.members(1), (std::vector<Vertex>{1, 4}));
    EXPECT_EQ(c.label[2], 2u);
    EXPECT_EQ(c.label[5], 3u);
}

TEST(Components, PartitionProperties) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const GirgGraph g = random_graph(80, 0.02, seed);
        const auto c = connected_components(g);
        EXPECT_EQ(std::accumulate(c.sizes.begin(), c.sizes.end(), std::size_t{0}), g.num_vertices());
        EXPECT_TRUE(std::is_sorted(c.sizes.rbegin(), c.sizes.rend()));
        for (const auto& [u, v] : g.edges()) EXPECT_EQ(c.label[u], c.label[v]);
        EXPECT_EQ(component_of(g, c.members(0).front()), c.members(0));
    }
}

TEST(Components, GiantStableAcrossSeeds) {
    ModelParams p;
    p.n = 20000;
    std::vector<double> fractions;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        p.seed = seed;
        fractions.push_back(static_cast<double>(connected_components(sample_direct(p)).giant_size()) / 20000.0);
    }
    for (double f : fractions) {
        EXPECT_GT(f, 0.05);
        EXPECT_NEAR(f, fractions[0], 0.1 * fractions[0]);
    }
}

TEST(Clustering, Examples) {
    const auto k3 = clustering_coefficient(GirgGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}));
    EXPECT_EQ(k3.per_vertex, (std::vector<double>{1, 1, 1}));
    EXPECT_DOUBLE_EQ(k3.mean, 1.0);

    const auto star = clustering_coefficient(GirgGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}));
    EXPECT_DOUBLE_EQ(star.mean, 0.0);
    EXPECT_EQ(star.low_degree, 3u);

    // K4 without {2,3}: the degree-3 vertices sit in 2 of their 3 possible triangles
    const auto k4m = clustering_coefficient(GirgGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    EXPECT_NEAR(k4m.per_vertex[0], 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(k4m.per_vertex[1], 2.0 / 3.0, 1e-15);
    EXPECT_DOUBLE_EQ(k4m.per_vertex[2], 1.0);
    EXPECT_DOUBLE_EQ(k4m.per_vertex[3], 1.0);
    EXPECT_NEAR(k4m.mean, 5.0 / 6.0, 1e-15);
}

TEST(Clustering, TrianglesMatchBruteForce) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t n = 10 + seed;
        const GirgGraph g = random_graph(n, 0.3, seed);
        std::vector<std::uint64_t> brute(n, 0);
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                for (Vertex c = b + 1; c < n; ++c)
                    if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
                        ++brute[a];
                        ++brute[b];
                        ++brute[c];
                    }
        EXPECT_EQ(triangles_per_vertex(g), brute);
        for (double cc : clustering_coefficient(g).per_vertex) {
            EXPECT_GE(cc, 0.0);
            EXPECT_LE(cc, 1.0);
        }
    }
}

TEST(Clustering, TriangleFreeIsZero) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = 5; v < 10; ++v) edges.emplace_back(u, v);
    EXPECT_EQ(clustering_coefficient(GirgGraph::from_edges(10, edges)).mean, 0.0);
}

TEST(Occupancy, Examples) {
    const std::vector<double> same(50, 0.123);
    const auto one_bin = subinterval_occupancy(same, 1.0, 0.05, 0.1, 50);
    EXPECT_EQ(one_bin.bins, 50u);
    EXPECT_EQ(one_bin.top_sum, 50u);
    EXPECT_FALSE(one_bin.pass);

    // 2 points per bin, 40 bins
    std::vector<double> even;
    for (int b = 0; b < 40; ++b) {
        even.push_back((b + 0.25) / 40.0);
        even.push_back((b + 0.75) / 40.0);
    }
    const auto flat = subinterval_occupancy(even, 2.0, 0.1, 0.5, 80);
    EXPECT_EQ(flat.bins, 40u);
    EXPECT_EQ(flat.top_count, 8u);
    EXPECT_EQ(flat.top_sum, 16u);
    EXPECT_TRUE(flat.pass);  // 16 < 20
    EXPECT_EQ(std::accumulate(flat.histogram.begin(), flat.histogram.end(), std::size_t{0}), 80u);
}

TEST(Occupancy, UniformPassesAndMonotoneInR) {
    Rng rng(31);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> xs(100000);
    for (double& x : xs) x = unit(rng);
    EXPECT_TRUE(subinterval_occupancy(xs, 1.0, 0.01, 0.1, xs.size()).pass);
    std::size_t prev = 0;
    for (double r : {0.001, 0.005, 0.01, 0.05, 0.2}) {
        const auto rep = subinterval_occupancy(xs, 1.0, r, 0.1, xs.size());
        EXPECT_GE(rep.top_sum, prev);
        prev = rep.top_sum;
    }
}

TEST(Occupancy, TooManySubintervalsThrows) {
    const std::vector<double> xs(10, 0.5);
    EXPECT_THROW(subinterval_occupancy(xs, 5.0, 0.5, 0.1, 10), std::invalid_argument);
}

TEST(TriangleEstimate, EuclideanIsExactlyOne) {
    Rng rng(1);
    for (double eps : {0.001, 0.01, 0.1, 0.25}) {
        const auto est = stochastic_triangle_estimate(GeometrySpec::euclidean(2), eps, 2.0, 2000, rng);
        EXPECT_EQ(est.probability, 1.0);
    }
}

TEST(TriangleEstimate, McdAtLeastOneOverD) {
    Rng rng(2);
    const auto est = stochastic_triangle_estimate(GeometrySpec::mcd(2), 0.005, 2.0, 20000, rng);
    EXPECT_GE(est.probability, 0.5 - 0.02);
    EXPECT_NEAR(est.volume_ratio_exact, (1 - 0.99 * 0.99) / (1 - 0.98 * 0.98), 1e-12);
    EXPECT_NEAR(est.volume_ratio_mc, est.volume_ratio_exact, 0.02);
    EXPECT_EQ(est.samples, 20000u);
}

TEST(TriangleEstimate, TinyEpsPropagatesError) {
    Rng rng(3);
    EXPECT_THROW(stochastic_triangle_estimate(GeometrySpec::mcd(2), 1e-7, 2.0, 1000, rng), std::invalid_argument);
}

TEST(DegreeReport, RegularAndEmpty) {
    // circulant 3-regular graph on 200 vertices
    std::vector<Edge> edges;
    for (Vertex v = 0; v < 200; ++v) edges.emplace_back(v, (v + 1) % 200);
    for (Vertex v = 0; v < 100; ++v) edges.emplace_back(v, v + 100);
    const auto reg = degree_report(GirgGraph::from_edges(200, edges), 2.0);
    EXPECT_FALSE(reg.tail.has_value());
    EXPECT_FALSE(reg.tail_error.empty());
    EXPECT_EQ(reg.histogram[3], 200u);
    EXPECT_EQ(reg.max_degree, 3u);

    const auto empty = degree_report(GirgGraph::from_edges(7, {}));
    EXPECT_EQ(empty.degrees, std::vector<std::size_t>(7, 0));
    EXPECT_EQ(empty.max_degree, 0u);
    EXPECT_FALSE(empty.tail.has_value());
}
