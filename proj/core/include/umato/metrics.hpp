#pragma once

#include "umato/dataset.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace umato {

/// Gaussian-kernel density of every point within its own set:
/// f(x) = sum_y exp(-(dist(x, y) / distance_scale)^2 / sigma), self included.
std::vector<double> density_estimate(const Matrix& points, double sigma, double distance_scale = 1.0,
                                     std::size_t threads = 1);

/// Largest pairwise Euclidean distance (0 for a single point).
double max_pairwise_distance(const Matrix& points, std::size_t threads = 1);

struct DensityOptions {
    /// Divide distances by the largest pairwise distance of their own space
    /// before applying the kernel.
    bool normalize_distances = true;
    std::size_t threads = 1;
};

/// Sum over points of |p_X - p_Z|, where p are the densities of the data
/// and the embedding normalized to probability vectors.
double dtm(const Matrix& data, const Matrix& embedding, double sigma, const DensityOptions& options = {});

/// KL(p_X || p_Z) of the normalized densities.
double kl_density(const Matrix& data, const Matrix& embedding, double sigma, const DensityOptions& options = {});

/// ranks[i*n + j] = position of j among all other points by ascending
/// distance from i (1 = nearest, ties by index). Diagonal entries are 0.
struct RankMatrix {
    std::size_t n = 0;
    std::vector<Index> ranks;

    Index at(std::size_t i, std::size_t j) const { return ranks[i * n + j]; }
};

RankMatrix rank_matrix(const Matrix& points);

/// Venna-Kaski trustworthiness; throws `InvalidParameter` unless 1 <= k < n/2.
double trustworthiness(const Matrix& data, const Matrix& embedding, std::size_t k, std::size_t threads = 1);

/// Venna-Kaski continuity, i.e. trustworthiness with the roles swapped.
double continuity(const Matrix& data, const Matrix& embedding, std::size_t k, std::size_t threads = 1);

struct MrreResult {
    double mrre_x = 0.0; ///< 1 - relative rank error over data neighborhoods
    double mrre_z = 0.0; ///< 1 - relative rank error over embedding neighborhoods
};

/// Lee-Verleysen mean relative rank errors, reported as 1 - error.
MrreResult mrre(const Matrix& data, const Matrix& embedding, std::size_t k, std::size_t threads = 1);

struct MetricParams {
    std::size_t k = 5;
    std::vector<double> sigmas{0.01, 0.1, 1.0};
    bool normalize_distances = true;
    std::size_t threads = 0;
};

struct MetricReport {
    std::map<double, double> dtm;
    std::map<double, double> kl;
    double trustworthiness = 0.0;
    double continuity = 0.0;
    double mrre_x = 0.0;
    double mrre_z = 0.0;
    MetricParams params;
};

/// All metrics in two streaming passes over the rows; memory stays O(n)
/// per worker.
MetricReport evaluate(const Matrix& data, const Matrix& embedding, const MetricParams& params = {});

} // namespace umato
