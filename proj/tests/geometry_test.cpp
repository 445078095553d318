#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "girg/geometry.hpp"
#include "girg/stats.hpp"

using namespace girg;

TEST(TorusDiff, Examples) {
    EXPECT_NEAR(torus_diff(0.1, 0.9), 0.2, 1e-15);
    EXPECT_EQ(torus_diff(0.3, 0.3), 0.0);
    EXPECT_EQ(torus_diff(0.0, 0.5), 0.5);
}

TEST(TorusDiff, ReducesOutOfRangeInputs) {
    EXPECT_NEAR(torus_diff(1.1, -0.1), 0.2, 1e-12);
    EXPECT_NEAR(torus_diff(2.3, 0.3), 0.0, 1e-12);
}

TEST(Distance, Examples) {
    const std::vector<double> x{0.1, 0.4}, y{0.3, 0.45};
    EXPECT_NEAR(GeometrySpec::mcd(2).distance(x, y), 0.05, 1e-15);
    EXPECT_NEAR(GeometrySpec::euclidean(2).distance(x, y), 0.2, 1e-15);
    const std::vector<double> a{0.1}, b{0.9};
    EXPECT_NEAR(GeometrySpec::mcd(1).distance(a, b), 0.2, 1e-15);
}

TEST(Distance, DimensionMismatchThrows) {
    const std::vector<double> x{0.1, 0.4}, y{0.3};
    EXPECT_THROW(GeometrySpec::mcd(2).distance(x, y), std::invalid_argument);
    EXPECT_THROW(GeometrySpec::mcd(3).distance(x, x), std::invalid_argument);
}

TEST(Volume, Examples) {
    EXPECT_DOUBLE_EQ(GeometrySpec::mcd(2, VolumeMode::exact).volume(0.25), 0.75);
    for (int d : {1, 2, 5}) EXPECT_DOUBLE_EQ(GeometrySpec::mcd(d).volume(0.3), 0.3);
    EXPECT_DOUBLE_EQ(GeometrySpec::euclidean(2).volume(0.25), 0.25);
    EXPECT_DOUBLE_EQ(GeometrySpec::euclidean(2).volume(0.7), 1.0);
    EXPECT_DOUBLE_EQ(GeometrySpec::mcd(2).volume(0.9), 0.5);
}

TEST(GeometrySpec, RejectsLinearizedEuclidean) {
    EXPECT_THROW(GeometrySpec(GeometryKind::euclidean_max, 2, VolumeMode::linearized), std::invalid_argument);
    EXPECT_THROW(GeometrySpec::mcd(0), std::invalid_argument);
    EXPECT_EQ(parse_geometry_kind("mcd"), GeometryKind::mcd);
    EXPECT_EQ(parse_geometry_kind("euclidean_max"), GeometryKind::euclidean_max);
    EXPECT_THROW(parse_geometry_kind("l2"), std::invalid_argument);
}

TEST(TorusPoint, WrapsIntoUnitInterval) {
    const TorusPoint p({1.25, -0.25, -1e-18});
    EXPECT_DOUBLE_EQ(p[0], 0.25);
    EXPECT_DOUBLE_EQ(p[1], 0.75);
    EXPECT_GE(p[2], 0.0);
    EXPECT_LT(p[2], 1.0);
    EXPECT_THROW(TorusPoint({}), std::invalid_argument);
}

TEST(DistanceProperties, SymmetryIdentityAndOrdering) {
    Rng rng(7);
    for (int d : {1, 2, 3, 5}) {
        const auto m = GeometrySpec::mcd(d);
        const auto e = GeometrySpec::euclidean(d);
        for (int i = 0; i < 2000; ++i) {
            const TorusPoint x = sample_point(d, rng), y = sample_point(d, rng);
            EXPECT_EQ(distance(m, x, y), distance(m, y, x));
            EXPECT_EQ(distance(e, x, y), distance(e, y, x));
            EXPECT_EQ(distance(m, x, x), 0.0);
            EXPECT_EQ(distance(e, x, x), 0.0);
            EXPECT_LE(distance(m, x, y), distance(e, x, y));
            EXPECT_LE(distance(m, x, y), 0.5);
        }
    }
}

TEST(DistanceProperties, OneDimensionalKindsAgreeOnGrid) {
    const auto m = GeometrySpec::mcd(1);
    const auto e = GeometrySpec::euclidean(1);
    for (int i = 0; i < 100; ++i)
        for (int j = 0; j < 100; ++j) {
            const std::vector<double> x{i / 100.0}, y{j / 100.0 + 0.003};
            EXPECT_EQ(m.distance(x, y), e.distance(x, y));
        }
}

TEST(VolumeProperties, MonotoneAndBracketed) {
    for (int d : {1, 2, 3, 4}) {
        const auto exact = GeometrySpec::mcd(d, VolumeMode::exact);
        const auto euc = GeometrySpec::euclidean(d);
        EXPECT_EQ(exact.volume(0.0), 0.0);
        EXPECT_EQ(euc.volume(0.0), 0.0);
        double prev_m = 0.0, prev_e = 0.0;
        for (int k = 1; k <= 500; ++k) {
            const double r = k / 1000.0;
            const double vm = exact.volume(r), ve = euc.volume(r);
            EXPECT_GE(vm, prev_m);
            EXPECT_GE(ve, prev_e);
            EXPECT_GE(vm, 2 * r - 1e-15);
            EXPECT_LE(vm, 2 * d * r + 1e-15);
            prev_m = vm;
            prev_e = ve;
        }
    }
}

TEST(SamplePoint, DeterministicForSeed) {
    Rng a(42), b(42);
    EXPECT_EQ(sample_point(2, a), sample_point(2, b));
    EXPECT_THROW(sample_point(0, a), std::invalid_argument);
}

TEST(SamplePoint, UniformCoordinates) {
    Rng rng(3);
    double sum = 0.0;
    for (int i = 0; i < 100000; ++i) sum += sample_point(1, rng)[0];
    EXPECT_NEAR(sum / 100000, 0.5, 0.01);

    std::vector<double> c0, c1;
    for (int i = 0; i < 100000; ++i) {
        const TorusPoint p = sample_point(2, rng);
        c0.push_back(p[0]);
        c1.push_back(p[1]);
    }
    EXPECT_LT(ks_uniform_distance(c0), 0.01);
    EXPECT_LT(ks_uniform_distance(c1), 0.01);
}

TEST(SampleInBall, AcceptanceRate) {
    EXPECT_NEAR(ball_acceptance_rate(GeometrySpec::mcd(2), 0.01), 1 - 0.98 * 0.98, 1e-12);
    EXPECT_NEAR(ball_acceptance_rate(GeometrySpec::mcd(2), 0.01), 0.0396, 1e-12);
}

TEST(SampleInBall, PointsLieInBall) {
    Rng rng(11);
    const TorusPoint center({0.995, 0.002, 0.5});
    for (const auto& geom : {GeometrySpec::mcd(3), GeometrySpec::euclidean(3)})
        for (double eps : {0.001, 0.01, 0.1, 0.5})
            for (int i = 0; i < 500; ++i) EXPECT_LE(distance(geom, center, sample_in_ball(geom, center, eps, rng)), eps);
}

TEST(SampleInBall, SlabSymmetry) {
    // the MCD ball is the union of two slabs; half of it lies in the first one
    Rng rng(5);
    const auto geom = GeometrySpec::mcd(2);
    const TorusPoint center({0.3, 0.8});
    int hits = 0;
    for (int i = 0; i < 10000; ++i)
        if (torus_diff(sample_in_ball(geom, center, 0.01, rng)[0], center[0]) <= 0.01) ++hits;
    EXPECT_NEAR(hits / 10000.0, 0.5, 0.03);
}

TEST(SampleInBall, TinyRadiusRejected) {
    Rng rng(1);
    const auto geom = GeometrySpec::mcd(2);
    const TorusPoint center({0.5, 0.5});
    EXPECT_THROW(sample_in_ball(geom, center, 1e-6, rng), std::invalid_argument);
    EXPECT_THROW(sample_in_ball(geom, center, 0.0, rng), std::invalid_argument);
    EXPECT_THROW(sample_in_ball(geom, center, 0.6, rng), std::invalid_argument);
    EXPECT_THROW(sample_in_ball(GeometrySpec::mcd(3), center, 0.1, rng), std::invalid_argument);
}
