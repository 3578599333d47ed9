#include "umato/pca.hpp"

#include "umato/diagnostics.hpp"
#include "umato/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

namespace umato {

PcaResult pca(const Dataset& data, std::size_t out_dim) {
    const auto n = static_cast<Eigen::Index>(data.size());
    const auto d = static_cast<Eigen::Index>(data.dim());
    const auto m = static_cast<Eigen::Index>(out_dim);
    if (out_dim < 1) {
        throw InvalidParameter("PCA output dimension must be at least 1");
    }

    const Eigen::RowVectorXd mean = data.points().colwise().mean();
    const Eigen::MatrixXd centered = data.points().rowwise() - mean;
    const Eigen::MatrixXd cov = (centered.transpose() * centered) / static_cast<double>(std::max<Eigen::Index>(n - 1, 1));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success) {
        throw InternalError("covariance eigen-decomposition failed");
    }
    const Eigen::VectorXd& evals = solver.eigenvalues(); // ascending
    const Eigen::MatrixXd& evecs = solver.eigenvectors();
    const double top = std::max(evals(d - 1), 0.0);
    const double cutoff = top * 1e-12 * static_cast<double>(d);

    PcaResult out;
    out.components = Eigen::MatrixXd::Zero(d, m);
    out.eigenvalues = Eigen::VectorXd::Zero(m);
    for (Eigen::Index c = 0; c < m; ++c) {
        const Eigen::Index src = d - 1 - c;
        if (src < 0 || !(evals(src) > cutoff) || top == 0.0) {
            out.rank_deficient = true;
            continue;
        }
        Eigen::VectorXd v = evecs.col(src);
        Eigen::Index arg = 0;
        v.cwiseAbs().maxCoeff(&arg);
        if (v(arg) < 0) {
            v = -v;
        }
        out.components.col(c) = v;
        out.eigenvalues(c) = evals(src);
    }
    if (out.rank_deficient) {
        warn("PCA: data rank is below the requested " + std::to_string(out_dim) +
             " components; padding with zero columns");
    }
    out.projection = centered * out.components;
    return out;
}

Matrix pca_project(const Dataset& data, std::size_t out_dim) { return pca(data, out_dim).projection; }

} // namespace umato
