#pragma once

#include "umato/datasets.hpp"
#include "umato/metrics.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace umato::cli {

/// Runs the command line; returns the process exit code (0 ok, 1 data or
/// runtime error, 2 usage error).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Where the input points come from.
struct DataSpec {
    std::string dataset = "spheres"; ///< "spheres" or a CSV path
    bool csv_labels = false;
    std::string idx_images;
    std::string idx_labels;
    std::uint64_t data_seed = 0;
    std::size_t subsample = 0; ///< 0 keeps every point
    std::uint64_t subsample_seed = 0;
};

LabeledDataset load_data(const DataSpec& spec);
nlohmann::json describe(const DataSpec& spec, const LabeledDataset& data);

/// Reads an embedding CSV; a third column is taken as labels.
LabeledDataset load_embedding(const std::filesystem::path& path);

nlohmann::json report_json(const MetricReport& report, std::size_t n);
std::string report_table(const MetricReport& report);

/// Metric columns in table order, e.g. "DTM_0.1", "T", "MRRE_Z".
std::vector<std::string> metric_columns(const MetricReport& report);
std::vector<double> metric_values(const MetricReport& report);
/// True for columns where smaller is better.
bool lower_is_better(const std::string& column);

struct SvgOptions {
    double width = 640.0;
    double height = 640.0;
    double margin = 20.0;
    double radius = 2.0;
};

/// Scatter plot with one circle per point, colored by label from an
/// 11-color palette, equal scale on both axes.
std::string render_svg(const Matrix& points, const std::optional<Labels>& labels, const SvgOptions& options = {});

/// Thread count after applying UMATO_THREADS, which wins over the flag.
std::size_t effective_threads(std::size_t flag_value);

std::string format_double(double v, int digits);

} // namespace umato::cli
