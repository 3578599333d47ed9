#pragma once

#include "umato/dataset.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace umato {

/// A dataset with a human-readable name. Generators and labeled loaders set
/// `data.labels()`.
struct LabeledDataset {
    Dataset data;
    std::string name;
};

/// Nested-spheres benchmark: small spheres with Gaussian-shifted centers
/// enclosed by one large origin-centered sphere. Points are drawn uniformly
/// on each sphere surface (normalized isotropic Gaussians). Labels 0..9 are
/// the inner spheres, 10 the enclosing one.
struct SpheresOptions {
    std::size_t inner_spheres = 10;
    std::size_t inner_points = 500;
    std::size_t outer_points = 5000;
    std::size_t ambient_dim = 101;
    double inner_radius = 5.0;
    double outer_radius = 25.0;
    /// Per-coordinate std of the inner centers; unset means 10 / sqrt(ambient_dim).
    std::optional<double> center_std;
};

/// If `centers` is given it receives the inner-sphere centers, one per row.
LabeledDataset generate_spheres(std::uint64_t seed, const SpheresOptions& options = {}, Matrix* centers = nullptr);

/// Reads an IDX3 image file (magic 0x00000803) and IDX1 label file (magic
/// 0x00000801), both big-endian. Pixels are flattened row-major and scaled
/// to [0, 1]. Malformed input throws `FormatError` with a byte offset.
LabeledDataset load_idx(const std::filesystem::path& images_path, const std::filesystem::path& labels_path);

/// Reads a rectangular numeric CSV. A first line containing a non-numeric
/// cell is treated as a header. With `has_labels` the last column holds
/// integer class ids. Ragged rows, bad cells and empty files throw
/// `FormatError` with a 1-based line number.
LabeledDataset load_csv(const std::filesystem::path& path, bool has_labels);

/// Writes an n x 2 embedding as "x,y,label" (or "x,y" without labels) with
/// 12 significant digits.
void save_embedding(const Matrix& embedding, const std::optional<Labels>& labels, const std::filesystem::path& path);

/// Writes a dataset as CSV with header f0..f{d-1}[,label], 17 significant
/// digits, so `load_csv` reproduces it exactly.
void save_dataset(const Dataset& data, const std::filesystem::path& path);

/// Row indices (ascending) of a class-stratified random sample of m points.
/// Per-class quotas use largest remainders. Unlabeled data is sampled
/// uniformly. Throws `InvalidParameter` if m > n.
std::vector<Index> subsample_indices(const Dataset& data, std::size_t m, std::uint64_t seed);

LabeledDataset subsample(const LabeledDataset& dataset, std::size_t m, std::uint64_t seed);

} // namespace umato
