#include "convert.hpp"
#include "oracles.hpp"

#include "umato/error.hpp"
#include "umato/knn_graph.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

using namespace umato;
using testing_support::to_matrix;

namespace {

Dataset line(std::initializer_list<double> xs) {
    Matrix m(static_cast<Eigen::Index>(xs.size()), 1);
    Eigen::Index i = 0;
    for (double x : xs) m(i++, 0) = x;
    return Dataset(m);
}

} // namespace

TEST(KnnGraph, OneDimensionalExample) {
    const auto t = build_knn_graph(line({0, 1, 10}), 1);
    EXPECT_EQ(t.indices, (std::vector<Index>{1, 0, 1}));
    EXPECT_EQ(t.distances, (std::vector<double>{1, 1, 9}));
}

TEST(KnnGraph, TiesGoToLowerIndex) {
    const auto t = build_knn_graph(line({0, -1, 1, 5}), 2);
    EXPECT_EQ(t.row_indices(0)[0], 1);
    EXPECT_EQ(t.row_indices(0)[1], 2);
}

TEST(KnnGraph, FullNeighborhoodIsAPermutation) {
    std::mt19937_64 rng(3);
    const auto pts = oracle::random_points(12, 3, rng);
    const auto t = build_knn_graph(Dataset(to_matrix(pts)), 11);
    for (std::size_t i = 0; i < 12; ++i) {
        std::set<Index> row(t.row_indices(i).begin(), t.row_indices(i).end());
        EXPECT_EQ(row.size(), 11u);
        EXPECT_FALSE(row.count(static_cast<Index>(i)));
    }
}

TEST(KnnGraph, MatchesFullSortOracle) {
    std::mt19937_64 rng(11);
    const auto pts = oracle::random_points(50, 5, rng);
    const auto t = build_knn_graph(Dataset(to_matrix(pts)), 7);
    const auto ref = oracle::knn(pts, 7);
    for (std::size_t i = 0; i < 50; ++i) {
        for (std::size_t r = 0; r < 7; ++r) {
            EXPECT_EQ(static_cast<std::size_t>(t.row_indices(i)[r]), ref.idx[i][r]);
            EXPECT_NEAR(t.row_distances(i)[r], ref.d[i][r], 1e-12);
        }
    }
}

TEST(KnnGraph, ThreadCountDoesNotChangeResult) {
    std::mt19937_64 rng(5);
    const Dataset d(to_matrix(oracle::random_points(200, 4, rng)));
    const auto a = build_knn_graph(d, 9, 1);
    const auto b = build_knn_graph(d, 9, 3);
    EXPECT_EQ(a.indices, b.indices);
    EXPECT_EQ(a.distances, b.distances);
}

TEST(KnnGraph, RejectsBadK) {
    const auto d = line({0, 1, 2});
    EXPECT_THROW(build_knn_graph(d, 3), InvalidParameter);
    EXPECT_THROW(build_knn_graph(d, 0), InvalidParameter);
}

TEST(KnnGraph, RejectsNonFiniteData) {
    Matrix m(2, 1);
    m << 0.0, std::nan("");
    EXPECT_THROW(Dataset{m}, InvalidData);
}

TEST(Rho, Examples) {
    EXPECT_EQ(compute_rho(std::vector<double>{2, 3, 5}), 2.0);
    EXPECT_EQ(compute_rho(std::vector<double>{0, 0, 1.5}), 1.5);
    EXPECT_EQ(compute_rho(std::vector<double>{0, 0, 0}), 0.0);
}

TEST(Sigma, SolvesTheThreeNeighborExample) {
    // Adjusted distances [0, 1, 1]: 1 + 2 exp(-1/sigma) = log2(3).
    const double expected = -1.0 / std::log((std::log2(3.0) - 1.0) / 2.0);
    EXPECT_NEAR(expected, 0.8133, 5e-4);
    const std::vector<double> d{1, 2, 2};
    const auto r = compute_sigma(d, 1.0, 3);
    EXPECT_FALSE(r.unattainable);
    EXPECT_NEAR(r.sigma, expected, 1e-4);
    EXPECT_NEAR(oracle::membership_sum(d, 1.0, r.sigma), std::log2(3.0), 1e-5);
}

TEST(Sigma, ConstantRowIsUnattainable) {
    const std::vector<double> d{1, 1, 1};
    const auto r = compute_sigma(d, 1.0, 3);
    EXPECT_TRUE(r.unattainable);
    EXPECT_DOUBLE_EQ(r.sigma, 1e-3 * 1.0);
}

TEST(Sigma, TwoNeighborLimitIsUnattainable) {
    const std::vector<double> d{1, 2};
    const auto r = compute_sigma(d, 1.0, 2);
    EXPECT_TRUE(r.unattainable);
    EXPECT_DOUBLE_EQ(r.sigma, 1e-3 * 1.5);
}

TEST(Sigma, RandomRowsHitTheTarget) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> kd(2, 60);
    std::exponential_distribution<double> gap(1.0);
    int attained = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto k = static_cast<std::size_t>(kd(rng));
        std::vector<double> d(k);
        double acc = 0.0;
        for (auto& x : d) x = (acc += gap(rng));
        const double rho = compute_rho(d);
        const auto r = compute_sigma(d, rho, k);
        if (!r.unattainable) {
            ++attained;
            EXPECT_LE(std::abs(oracle::membership_sum(d, rho, r.sigma) - std::log2(static_cast<double>(k))), 1e-4);
        }
    }
    EXPECT_GT(attained, 250);
}

TEST(DirectedWeight, Examples) {
    EXPECT_EQ(directed_weight(2.0, 2.0, 0.7), 1.0);
    EXPECT_NEAR(directed_weight(3.5, 2.0, 1.5), std::exp(-1.0), 1e-15);
    EXPECT_EQ(directed_weight(1.0, 2.0, 0.7), 1.0);
}

TEST(Symmetrize, UnionExamples) {
    {
        const auto t = testing_support::make_table({{1}, {0}});
        const std::vector<double> w{1.0, 0.0};
        EXPECT_DOUBLE_EQ(symmetrize(t, w).at(0, 1), 1.0);
    }
    {
        const auto t = testing_support::make_table({{1}, {0}});
        const std::vector<double> w{0.5, 0.5};
        const auto s = symmetrize(t, w);
        EXPECT_DOUBLE_EQ(s.at(0, 1), 0.75);
        EXPECT_DOUBLE_EQ(s.at(1, 0), 0.75);
    }
    {
        const auto t = testing_support::make_table({{1}, {2}, {1}});
        const std::vector<double> w{0.3, 0.4, 0.4};
        const auto s = symmetrize(t, w);
        EXPECT_DOUBLE_EQ(s.at(0, 1), 0.3);
        EXPECT_DOUBLE_EQ(s.at(1, 0), 0.3);
        EXPECT_FALSE(s.contains(0, 2));
    }
}

TEST(NeighborGraph, WeightsAreSymmetricAndBounded) {
    std::mt19937_64 rng(23);
    const Dataset d(to_matrix(oracle::random_points(120, 6, rng)));
    const auto g = build_neighbor_graph(d, 10);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto cols = g.sym_weights.row_columns(i);
        const auto vals = g.sym_weights.row_values(i);
        for (std::size_t e = 0; e < cols.size(); ++e) {
            EXPECT_GT(vals[e], 0.0);
            EXPECT_LE(vals[e], 1.0);
            EXPECT_EQ(g.sym_weights.at(static_cast<std::size_t>(cols[e]), i), vals[e]);
        }
        // The nearest neighbor always has full membership.
        EXPECT_DOUBLE_EQ(g.row_weights(i)[0], 1.0);
    }
}

TEST(SparseWeights, RestrictRenumbers) {
    const auto t = testing_support::make_table({{1, 2}, {0, 2}, {0, 1}});
    const std::vector<double> w{0.5, 0.2, 0.5, 0.7, 0.2, 0.7};
    const auto s = symmetrize(t, w);
    const std::vector<Index> keep{2, 1};
    const auto r = s.restrict_to(keep);
    EXPECT_EQ(r.size(), 2u);
    EXPECT_DOUBLE_EQ(r.at(0, 1), s.at(2, 1));
}
