#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace umato {

/// Row-major dense matrix; one row per point.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Point index type shared by every module.
using Index = std::int32_t;

using Labels = std::vector<std::int32_t>;

/// Dense n x d point set with optional per-point class labels.
///
/// Construction validates that every entry is finite, n >= 1, d >= 1 and
/// that labels (when given) have exactly n entries; violations throw
/// `InvalidData`.
class Dataset {
public:
    Dataset() = default;
    explicit Dataset(Matrix points, std::optional<Labels> labels = std::nullopt);

    const Matrix& points() const noexcept { return points_; }
    const std::optional<Labels>& labels() const noexcept { return labels_; }
    bool has_labels() const noexcept { return labels_.has_value(); }

    std::size_t size() const noexcept { return static_cast<std::size_t>(points_.rows()); }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(points_.cols()); }

    /// New dataset holding the given rows (and their labels) in that order.
    Dataset select(const std::vector<Index>& rows) const;

private:
    Matrix points_;
    std::optional<Labels> labels_;
};

/// Throws `InvalidData` if any entry of `m` is NaN or infinite.
void require_finite(const Matrix& m, const char* what);

/// Squared Euclidean distance between rows `i` of `a` and `j` of `b`.
inline double squared_distance(const Matrix& a, Eigen::Index i, const Matrix& b, Eigen::Index j) {
    return (a.row(i) - b.row(j)).squaredNorm();
}

} // namespace umato
