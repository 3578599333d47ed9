#pragma once

#include "umato/dataset.hpp"

#include <Eigen/Core>

#include <cstddef>

namespace umato {

struct PcaResult {
    /// n x out_dim scores of the mean-centered data.
    Matrix projection;
    /// Covariance eigenvalues (n-1 normalization) of the retained components,
    /// descending; zero for padded components.
    Eigen::VectorXd eigenvalues;
    /// d x out_dim loadings, one unit column per component.
    Eigen::MatrixXd components;
    bool rank_deficient = false;
};

/// Principal component analysis through the eigen-decomposition of the
/// sample covariance. Each loading is flipped so that its largest-magnitude
/// entry is nonnegative. When the data has fewer than `out_dim` nonzero
/// principal directions, the missing columns are zero and a warning is
/// emitted.
PcaResult pca(const Dataset& data, std::size_t out_dim);

/// Projection part of `pca`.
Matrix pca_project(const Dataset& data, std::size_t out_dim);

} // namespace umato
