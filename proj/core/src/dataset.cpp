#include "umato/dataset.hpp"

#include "umato/error.hpp"

#include <cmath>
#include <string>

namespace umato {

void require_finite(const Matrix& m, const char* what) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (!std::isfinite(m(i, j))) {
                throw InvalidData(std::string(what) + ": non-finite value at row " + std::to_string(i) +
                                  ", column " + std::to_string(j));
            }
        }
    }
}

Dataset::Dataset(Matrix points, std::optional<Labels> labels)
    : points_(std::move(points)), labels_(std::move(labels)) {
    if (points_.rows() < 1 || points_.cols() < 1) {
        throw InvalidData("dataset must have at least one point and one dimension");
    }
    require_finite(points_, "dataset");
    if (labels_ && labels_->size() != static_cast<std::size_t>(points_.rows())) {
        throw InvalidData("label count " + std::to_string(labels_->size()) + " does not match point count " +
                          std::to_string(points_.rows()));
    }
}

Dataset Dataset::select(const std::vector<Index>& rows) const {
    Matrix out(static_cast<Eigen::Index>(rows.size()), points_.cols());
    std::optional<Labels> lab;
    if (labels_) {
        lab.emplace();
        lab->reserve(rows.size());
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out.row(static_cast<Eigen::Index>(r)) = points_.row(rows[r]);
        if (lab) {
            lab->push_back((*labels_)[static_cast<std::size_t>(rows[r])]);
        }
    }
    return Dataset(std::move(out), std::move(lab));
}

} // namespace umato
