#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rangekm/kmeans.hpp"

using namespace rangekm;

namespace {

const NumericDataset four_points({{0, 0}, {0, 1}, {10, 0}, {10, 1}});

KMeansConfig config_for(std::size_t k, InitStrategy s, std::uint64_t seed = 0) {
    KMeansConfig c;
    c.k = k;
    c.init_strategy = s;
    c.seed = seed;
    return c;
}

} // namespace

TEST(AssignPoints, NearestAndTies) {
    const NumericDataset data({{3}, {5}, {-1}, {12}});
    const Centroids centres(std::vector<Point>{{0}, {10}});
    EXPECT_EQ(assign_points(data, centres).cluster_of, (std::vector<std::size_t>{0, 0, 0, 1}));
}

TEST(AssignPoints, DimensionMismatch) {
    EXPECT_THROW(assign_points(four_points, Centroids(std::vector<Point>{{1, 2, 3}})), DimensionMismatch);
}

TEST(AssignPoints, MatchesExhaustiveScan) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const auto points = oracle::random_rows(rng, 100, 3);
        const auto centres = oracle::random_rows(rng, 5, 3);
        const auto got = assign_points(NumericDataset(points), Centroids(centres));
        EXPECT_EQ(got.cluster_of, oracle::nearest_scan(points, centres));
        EXPECT_EQ(got.k, 5u);
    }
}

TEST(UpdateCentroids, Means) {
    const NumericDataset data({{0, 0}, {2, 2}, {5, 7}});
    const Assignment a{{0, 0, 1}, 2};
    const auto c = update_centroids(data, a, 2, Centroids(2, 2));
    EXPECT_EQ(c.point(0), (Point{1, 1}));
    EXPECT_EQ(c.point(1), (Point{5, 7}));
}

TEST(UpdateCentroids, EmptyClusterTakesFarthestEligibleRow) {
    // (1,0) is the only member of cluster 0 and may not be taken; (9,0) is farthest from the origin.
    const NumericDataset data({{1, 0}, {9, 0}, {8, 0}});
    const Assignment a{{0, 1, 1}, 3};
    const Centroids previous(std::vector<Point>{{1, 0}, {8.5, 0}, {0, 0}});
    const auto c = update_centroids(data, a, 3, previous);
    EXPECT_EQ(c.point(2), (Point{9, 0}));
    EXPECT_EQ(c.point(1), (Point{8.5, 0}));
}

TEST(UpdateCentroids, SoleMemberIsNeverStolen) {
    const NumericDataset data({{1, 0}, {9, 0}});
    const Assignment a{{0, 1}, 3};
    const Centroids previous(std::vector<Point>{{1, 0}, {9, 0}, {4, 4}});
    const auto c = update_centroids(data, a, 3, previous);
    EXPECT_EQ(c.point(2), (Point{4, 4}));
}

TEST(UpdateCentroids, TwoEmptyClustersClaimDifferentRows) {
    const NumericDataset data({{0}, {1}, {2}, {3}});
    const Assignment a{{0, 0, 0, 0}, 3};
    const Centroids previous(std::vector<Point>{{1.5}, {-10}, {-10}});
    const auto c = update_centroids(data, a, 3, previous);
    EXPECT_EQ(c.point(1), (Point{3}));
    EXPECT_EQ(c.point(2), (Point{2}));
}

TEST(UpdateCentroids, RejectsBadAssignment) {
    const Centroids prev(2, 2);
    EXPECT_THROW(update_centroids(four_points, Assignment{{0, 1}, 2}, 2, prev), ShapeError);
    EXPECT_THROW(update_centroids(four_points, Assignment{{0, 1, 2, 0}, 2}, 2, prev), IndexError);
}

TEST(RunKMeans, FourPointExampleIsGlobalOptimum) {
    const auto best = oracle::best_two_partition(oracle::to_rows(four_points));
    ASSERT_EQ(best.optimal_count, 1u);
    ASSERT_DOUBLE_EQ(best.sse, 1.0);

    const auto r = run_kmeans(four_points, config_for(2, InitStrategy::ImprovedRange));
    EXPECT_EQ(r.assignment.cluster_of, (std::vector<std::size_t>{0, 0, 1, 1}));
    EXPECT_EQ(r.centroids.point(0), (Point{0, 0.5}));
    EXPECT_EQ(r.centroids.point(1), (Point{10, 0.5}));
    EXPECT_DOUBLE_EQ(r.final_sse(), best.sse);
}

TEST(RunKMeans, SingleClusterIsTheMean) {
    std::mt19937_64 rng(7);
    const NumericDataset data(oracle::random_rows(rng, 37, 3));
    for (auto s : {InitStrategy::ImprovedRange, InitStrategy::Random}) {
        const auto r = run_kmeans(data, config_for(1, s, 99));
        EXPECT_LE(r.iterations, 2u);
        EXPECT_EQ(r.assignment.cluster_sizes(), (std::vector<std::size_t>{37}));
        for (std::size_t j = 0; j < 3; ++j) {
            double mean = 0;
            for (std::size_t i = 0; i < data.rows(); ++i) {
                mean += data.at(i, j);
            }
            EXPECT_NEAR(r.centroids[0][j], mean / 37, 1e-12);
        }
    }
}

TEST(RunKMeans, ImprovedIsDeterministic) {
    std::mt19937_64 rng(8);
    const NumericDataset data(oracle::random_rows(rng, 200, 4));
    const auto a = run_kmeans(data, config_for(6, InitStrategy::ImprovedRange, 1));
    const auto b = run_kmeans(data, config_for(6, InitStrategy::ImprovedRange, 2));
    EXPECT_EQ(a.assignment, b.assignment);
    EXPECT_EQ(a.centroids, b.centroids);
    EXPECT_EQ(a.sse_trace, b.sse_trace);
}

TEST(RunKMeans, InvalidConfig) {
    EXPECT_THROW(run_kmeans(four_points, config_for(0, InitStrategy::ImprovedRange)), InvalidK);
    EXPECT_THROW(run_kmeans(four_points, config_for(5, InitStrategy::Random)), InvalidK);
    auto c = config_for(2, InitStrategy::ImprovedRange);
    c.max_iterations = 0;
    EXPECT_THROW(run_kmeans(four_points, c), InvalidConfig);
    c.max_iterations = 10;
    c.tolerance = -1;
    EXPECT_THROW(run_kmeans(four_points, c), InvalidConfig);
}

TEST(RunKMeans, IterationCapIsHonoured) {
    std::mt19937_64 rng(9);
    const NumericDataset data(oracle::random_rows(rng, 500, 2));
    auto c = config_for(20, InitStrategy::Random, 3);
    c.max_iterations = 2;
    const auto r = run_kmeans(data, c);
    EXPECT_EQ(r.iterations, 2u);
    EXPECT_EQ(r.sse_trace.size(), 3u);
}

// Lloyd invariants over randomized inputs, including duplicate rows that force empty clusters.
TEST(RunKMeans, MonotoneTraceFixedPointAndBounds) {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        auto rows = oracle::random_rows(rng, 5 + trial * 3, 1 + trial % 4);
        if (trial % 5 == 0) {
            for (std::size_t i = 1; i < rows.size(); i += 2) {
                rows[i] = rows[0];
            }
        }
        const NumericDataset data(rows);
        const std::size_t k = 1 + (trial * 7) % std::min<std::size_t>(data.rows(), 12);
        const auto s = trial % 2 ? InitStrategy::Random : InitStrategy::ImprovedRange;
        const auto r = run_kmeans(data, config_for(k, s, static_cast<std::uint64_t>(trial)));

        for (std::size_t t = 1; t < r.sse_trace.size(); ++t) {
            EXPECT_LE(r.sse_trace[t], r.sse_trace[t - 1] + 1e-9) << "trial " << trial << " step " << t;
        }
        EXPECT_EQ(assign_points(data, r.centroids), r.assignment);
        EXPECT_NEAR(sum_squared_error(data, r.assignment, r.centroids), r.final_sse(), 1e-9);
        for (std::size_t x = 0; x < data.cols(); ++x) {
            const auto range = column_range(data, x);
            for (std::size_t c = 0; c < k; ++c) {
                EXPECT_GE(r.centroids[c][x], range.min - 1e-9);
                EXPECT_LE(r.centroids[c][x], range.max + 1e-9);
            }
        }
    }
}

TEST(RunKMeans, NeverBeatsExhaustiveOptimum) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const auto rows = oracle::random_rows(rng, 2 + trial % 9, 1 + trial % 3);
        const auto best = oracle::best_two_partition(rows);
        const auto r = run_kmeans(NumericDataset(rows), config_for(2, InitStrategy::ImprovedRange));
        EXPECT_GE(r.final_sse(), best.sse - 1e-9);
    }
}
