#pragma once

#include "umato/classify.hpp"
#include "umato/dataset.hpp"
#include "umato/knn_graph.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace umato {

/// Dimensionality of the produced embedding.
inline constexpr std::size_t kEmbeddingDim = 2;

/// Hyperparameters of the two-phase layout. Defaults reproduce the settings
/// used for the Spheres benchmark.
struct OptimizationConfig {
    std::size_t k = 50;
    double a = 1.0;
    double b = 1.0;
    std::size_t global_epochs = 100;
    std::size_t local_epochs = 200;
    double global_learning_rate = 0.01;
    double local_learning_rate = 0.1;
    std::size_t negative_samples = 5;
    double gamma = 1.0;
    /// Weight on the attractive update of the far endpoint when it is a hub.
    double hub_penalty = 0.1;
    /// Multiplier on repulsive updates during the local phase.
    double repulsion_penalty = 0.1;
    std::size_t enn_init_neighbors = 10;
    /// Half-width of the uniform jitter for eNN and outlier placement. Unset
    /// means 0.05 times the span of the globally optimized hub layout.
    std::optional<double> enn_init_noise;
    std::uint64_t seed = 0;
    double epsilon = 1e-3;
    double grad_clip = 4.0;
    /// Worker threads for the kNN search (0: UMATO_THREADS or 1). Never
    /// changes the result.
    std::size_t threads = 0;

    /// Throws `InvalidParameter` on nonpositive rates, epochs, a, b or
    /// clip, M < 1, or penalties outside [0, 1].
    void validate() const;
};

/// (1 + a * |yi - yj|^(2b))^-1.
double low_dim_similarity(const Eigen::Ref<const Eigen::RowVectorXd>& yi,
                          const Eigen::Ref<const Eigen::RowVectorXd>& yj, double a, double b);

/// Fuzzy-set cross entropy between the high-dimensional weights `v` (absent
/// pairs are 0) and the low-dimensional similarities of `positions`, summed
/// over unordered pairs. w is clamped to [1e-12, 1 - 1e-12].
double cross_entropy_loss(const SparseWeights& v, const Matrix& positions, double a, double b);

/// Gradient of `cross_entropy_loss` with respect to every position, built
/// from per-pair attractive and repulsive terms. `epsilon` regularizes the
/// repulsive denominator (0 gives the exact gradient). When `clip` is set,
/// each coordinate of each pair term is clipped to [-clip, clip] before
/// summation.
Matrix cross_entropy_gradient(const SparseWeights& v, const Matrix& positions, double a, double b,
                              double epsilon, std::optional<double> clip = std::nullopt,
                              std::size_t threads = 1);

/// Full-batch gradient descent on the hub cross entropy (no negative
/// sampling), linear learning-rate decay to zero. If `loss_trace` is given,
/// the loss before each epoch and after the last one is appended.
Matrix global_optimize(const SparseWeights& hub_weights, Matrix init, const OptimizationConfig& cfg,
                       std::vector<double>* loss_trace = nullptr);

/// Affine per-axis rescale so every column spans [-half_width, half_width].
/// Constant columns become zero.
Matrix rescale_to_box(const Matrix& positions, double half_width = 10.0);

/// Jitter half-width: the configured value, or 0.05 x the largest axis span
/// of `hub_positions`.
double resolve_placement_noise(const OptimizationConfig& cfg, const Matrix& hub_positions);

/// Places every eNN point, in BFS order, at the mean of its (up to)
/// `cfg.enn_init_neighbors` nearest already-positioned neighbors plus
/// uniform jitter in [-noise, noise]. Neighbors are taken from the
/// undirected kNN graph. Returns an n x dim matrix with hub rows copied from
/// `hub_positions` (ordered as `cls.hubs`) and outlier rows zero.
Matrix init_enn_positions(const Matrix& hub_positions, const PointClassification& cls, const NeighborTable& table,
                          std::size_t m, double noise, std::mt19937_64& rng);

/// Replaces outliers in hub/eNN rows with the next-nearest non-outliers and
/// recalibrates the modified rows. Outlier rows drop out of the symmetric
/// weights. If fewer than k+1 non-outliers exist, k shrinks (with a warning)
/// and every row is rebuilt.
NeighborGraph rebuild_knn_without_outliers(const NeighborGraph& graph, const PointClassification& cls,
                                           const Dataset& data, std::size_t threads = 0);

/// Movement bookkeeping for the local phase.
struct LocalStats {
    double hub_path_length = 0.0;  ///< sum of step lengths applied to hubs
    double enn_path_length = 0.0;  ///< sum of step lengths applied to eNN points
    double hub_net_displacement = 0.0;
    double enn_net_displacement = 0.0;
    double max_abs_step_component = 0.0; ///< largest clipped gradient component applied
    std::size_t edge_updates = 0;
    std::size_t negative_updates = 0;
};

/// Negative-sampling SGD over hubs and eNN. Edges (i, j) have i in eNN;
/// stronger edges are sampled more often. Attraction moves i fully and j by
/// `hub_penalty` if j is a hub. Each processed edge draws M negatives from
/// deg^(3/4) and pushes i away from them with weight gamma x
/// repulsion_penalty. Hubs are only moved through penalized attraction.
Matrix local_optimize(const SparseWeights& weights, Matrix positions, const PointClassification& cls,
                      const OptimizationConfig& cfg, LocalStats* stats = nullptr);

/// Copies each outlier from the HD-nearest hub/eNN point of its connected
/// component, plus uniform jitter.
Matrix place_outliers(Matrix positions, const PointClassification& cls, const Dataset& data, double noise,
                      std::mt19937_64& rng);

/// Intermediate products of a full run, for instrumentation.
struct EmbedResult {
    Matrix embedding;
    PointClassification classification;
    Matrix hub_init;        ///< rescaled PCA positions of the hubs
    Matrix hub_global;      ///< hubs after the global phase
    Matrix before_local;    ///< hubs and eNN entering the local phase
    LocalStats local_stats;
    std::size_t local_k = 0;
    double placement_noise = 0.0;
};

EmbedResult umato_embed_detailed(const Dataset& data, const OptimizationConfig& cfg);

/// kNN graph -> classification -> PCA hub init -> global phase -> eNN init
/// -> outlier-free graph -> local phase -> outlier placement. Deterministic
/// for a fixed `cfg.seed`.
Matrix umato_embed(const Dataset& data, const OptimizationConfig& cfg);

} // namespace umato
