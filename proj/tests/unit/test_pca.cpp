#include "convert.hpp"

#include "umato/diagnostics.hpp"
#include "umato/pca.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace umato;

namespace {

// Cyclic Jacobi rotations on a small symmetric matrix; returns eigenvalues
// in descending order.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (std::size_t r = 0; r < n; ++r) {
                    const double arp = a[r][p], arq = a[r][q];
                    a[r][p] = c * arp - s * arq;
                    a[r][q] = s * arp + c * arq;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const double apr = a[p][r], aqr = a[q][r];
                    a[p][r] = c * apr - s * aqr;
                    a[q][r] = s * apr + c * aqr;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    std::sort(ev.rbegin(), ev.rend());
    return ev;
}

double column_variance(const Matrix& m, Eigen::Index c) {
    const double mean = m.col(c).mean();
    return (m.col(c).array() - mean).square().sum() / static_cast<double>(m.rows() - 1);
}

} // namespace

TEST(Pca, DiagonalCovarianceIsIdentityBasis) {
    const double a = std::sqrt(6.0), b = std::sqrt(1.5);
    Matrix x(4, 2);
    // Column 0 has variance 1, column 1 variance 4.
    x << 0, a, 0, -a, b, 0, -b, 0;
    const auto r = pca(Dataset(x), 2);
    EXPECT_NEAR(r.eigenvalues(0), 4.0, 1e-12);
    EXPECT_NEAR(r.eigenvalues(1), 1.0, 1e-12);
    for (Eigen::Index i = 0; i < 4; ++i) {
        EXPECT_NEAR(r.projection(i, 0), x(i, 1), 1e-12);
        EXPECT_NEAR(r.projection(i, 1), x(i, 0), 1e-12);
    }
}

TEST(Pca, IdenticalPointsProjectToZeroWithWarning) {
    std::vector<std::string> warnings;
    auto prev = set_warning_handler([&](const std::string& m) { warnings.push_back(m); });
    Matrix x = Matrix::Constant(5, 3, 2.5);
    const auto r = pca(Dataset(x), 2);
    set_warning_handler(prev);
    EXPECT_TRUE(r.rank_deficient);
    EXPECT_EQ(warnings.size(), 1u);
    EXPECT_TRUE(r.projection.isZero(0.0));
}

TEST(Pca, VariancesMatchJacobiEigenvalues) {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix x(30, 6);
    for (Eigen::Index i = 0; i < 30; ++i)
        for (Eigen::Index c = 0; c < 6; ++c) x(i, c) = g(rng) * static_cast<double>(c + 1);
    std::vector<std::vector<double>> cov(6, std::vector<double>(6, 0.0));
    std::vector<double> mean(6, 0.0);
    for (Eigen::Index i = 0; i < 30; ++i)
        for (std::size_t c = 0; c < 6; ++c) mean[c] += x(i, static_cast<Eigen::Index>(c)) / 30.0;
    for (Eigen::Index i = 0; i < 30; ++i)
        for (std::size_t p = 0; p < 6; ++p)
            for (std::size_t q = 0; q < 6; ++q)
                cov[p][q] += (x(i, static_cast<Eigen::Index>(p)) - mean[p]) *
                             (x(i, static_cast<Eigen::Index>(q)) - mean[q]) / 29.0;
    const auto ev = jacobi_eigenvalues(cov);

    const auto r = pca(Dataset(x), 3);
    for (Eigen::Index c = 0; c < 3; ++c) {
        EXPECT_NEAR(column_variance(r.projection, c), ev[static_cast<std::size_t>(c)], 1e-8);
        EXPECT_NEAR(r.eigenvalues(c), ev[static_cast<std::size_t>(c)], 1e-8);
    }
    const Eigen::MatrixXd gram = r.components.transpose() * r.components;
    EXPECT_TRUE(gram.isIdentity(1e-10));
    for (Eigen::Index c = 0; c < 3; ++c) {
        Eigen::Index arg = 0;
        r.components.col(c).cwiseAbs().maxCoeff(&arg);
        EXPECT_GE(r.components(arg, c), 0.0);
    }
}

TEST(Pca, PadsWhenDimensionIsTooSmall) {
    std::vector<std::string> warnings;
    auto prev = set_warning_handler([&](const std::string& m) { warnings.push_back(m); });
    Matrix x(4, 1);
    x << 1, 2, 3, 5;
    const Matrix p = pca_project(Dataset(x), 2);
    set_warning_handler(prev);
    EXPECT_EQ(p.cols(), 2);
    EXPECT_TRUE(p.col(1).isZero(0.0));
    EXPECT_FALSE(warnings.empty());
}
