#pragma once

#include "umato/dataset.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace umato {

/// Row-major n x k table of neighbor indices and distances. Row i lists the
/// k nearest points to i in ascending distance order (ties by ascending
/// index); i itself never appears in its row.
struct NeighborTable {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<Index> indices;
    std::vector<double> distances;

    NeighborTable() = default;
    NeighborTable(std::size_t n_points, std::size_t n_neighbors)
        : n(n_points), k(n_neighbors), indices(n_points * n_neighbors), distances(n_points * n_neighbors) {}

    std::span<const Index> row_indices(std::size_t i) const { return {indices.data() + i * k, k}; }
    std::span<Index> row_indices(std::size_t i) { return {indices.data() + i * k, k}; }
    std::span<const double> row_distances(std::size_t i) const { return {distances.data() + i * k, k}; }
    std::span<double> row_distances(std::size_t i) { return {distances.data() + i * k, k}; }
};

/// Symmetric sparse matrix in CSR form; column indices within a row are
/// strictly increasing. Entries absent from the structure are zero.
class SparseWeights {
public:
    SparseWeights() = default;
    SparseWeights(std::size_t n, std::vector<std::size_t> offsets, std::vector<Index> columns,
                  std::vector<double> values);

    std::size_t size() const noexcept { return n_; }
    std::size_t nonzeros() const noexcept { return values_.size(); }

    std::span<const Index> row_columns(std::size_t i) const {
        return {columns_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }
    std::span<const double> row_values(std::size_t i) const {
        return {values_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }
    std::size_t degree(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }

    /// Value at (i, j), zero if the entry is not stored.
    double at(std::size_t i, std::size_t j) const;
    bool contains(std::size_t i, std::size_t j) const;

    double max_value() const;

    /// Restriction to the given vertices, renumbered 0..vertices.size()-1 in
    /// the order given.
    SparseWeights restrict_to(std::span<const Index> vertices) const;

private:
    std::size_t n_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<Index> columns_;
    std::vector<double> values_;
};

/// Calibrated neighbor graph: the raw table plus per-point rho/sigma, the
/// directed membership strengths v_{j|i} (aligned with the table) and their
/// fuzzy union.
struct NeighborGraph {
    NeighborTable table;
    std::vector<double> rho;
    std::vector<double> sigma;
    std::vector<double> directed_weights;
    std::vector<unsigned char> sigma_unattainable;
    SparseWeights sym_weights;

    std::size_t size() const noexcept { return table.n; }
    std::size_t k() const noexcept { return table.k; }
    std::span<const double> row_weights(std::size_t i) const {
        return {directed_weights.data() + i * table.k, table.k};
    }
};

struct SigmaSearchOptions {
    double tolerance = 1e-5;
    int max_iterations = 64;
    double lower_scale = 1e-3; ///< sigma_min = lower_scale * mean row distance
    double upper_scale = 1e3;  ///< sigma_max = upper_scale * mean row distance
};

struct SigmaResult {
    double sigma = 0.0;
    /// Set when no sigma in [sigma_min, sigma_max] brings the membership sum
    /// within tolerance of log2(k); sigma is then the clamped boundary.
    bool unattainable = false;
};

/// Exact brute-force kNN under the Euclidean metric. Throws
/// `InvalidParameter` unless 1 <= k <= n-1. Rows are computed independently,
/// so the result is the same for any `threads`.
NeighborTable build_knn_graph(const Dataset& data, std::size_t k, std::size_t threads = 0);

/// Smallest strictly positive entry of an ascending row, 0 if there is none.
double compute_rho(std::span<const double> sorted_distances);

/// Bisection for the bandwidth at which the row's membership strengths sum
/// to log2(k).
SigmaResult compute_sigma(std::span<const double> sorted_distances, double rho, std::size_t k,
                          const SigmaSearchOptions& options = {});

/// exp(-max(0, dist - rho) / sigma).
double directed_weight(double dist, double rho, double sigma);

/// Probabilistic union v_ij = a + b - a*b of the directed strengths, with a
/// missing direction counted as zero. Zero-weight edges are dropped.
SparseWeights symmetrize(const NeighborTable& table, std::span<const double> directed_weights);

/// Fills rho, sigma, directed weights and the symmetric weights of `table`.
NeighborGraph calibrate(NeighborTable table, const SigmaSearchOptions& options = {}, std::size_t threads = 0);

/// build_knn_graph followed by calibrate.
NeighborGraph build_neighbor_graph(const Dataset& data, std::size_t k, std::size_t threads = 0);

} // namespace umato
