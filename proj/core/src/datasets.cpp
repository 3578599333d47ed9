#include "umato/datasets.hpp"

#include "umato/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace umato {
namespace {

void fill_sphere_points(Matrix& out, Eigen::Index first, std::size_t count, double radius,
                        const Eigen::RowVectorXd& center, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const auto d = out.cols();
    for (std::size_t p = 0; p < count; ++p) {
        Eigen::RowVectorXd v(d);
        double norm2 = 0.0;
        do {
            for (Eigen::Index c = 0; c < d; ++c) {
                v(c) = normal(rng);
            }
            norm2 = v.squaredNorm();
        } while (norm2 == 0.0);
        out.row(first + static_cast<Eigen::Index>(p)) = v * (radius / std::sqrt(norm2)) + center;
    }
}

std::vector<unsigned char> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint32_t read_be32(const std::vector<unsigned char>& bytes, std::size_t offset, const std::string& file) {
    if (offset + 4 > bytes.size()) {
        throw FormatError(file + ": truncated header at byte " + std::to_string(offset), offset);
    }
    return (std::uint32_t{bytes[offset]} << 24) | (std::uint32_t{bytes[offset + 1]} << 16) |
           (std::uint32_t{bytes[offset + 2]} << 8) | std::uint32_t{bytes[offset + 3]};
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_cells(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return cells;
}

bool parse_double(std::string_view cell, double& out) {
    if (cell.empty()) {
        return false;
    }
    if (cell.front() == '+') {
        cell.remove_prefix(1);
    }
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), out);
    return ec == std::errc() && ptr == cell.data() + cell.size() && std::isfinite(out);
}

std::ofstream open_for_writing(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot write " + path.string());
    }
    return out;
}

std::string format_number(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

} // namespace

LabeledDataset generate_spheres(std::uint64_t seed, const SpheresOptions& o, Matrix* centers_out) {
    const std::size_t n = o.inner_spheres * o.inner_points + o.outer_points;
    const auto d = static_cast<Eigen::Index>(o.ambient_dim);
    const double center_std = o.center_std.value_or(10.0 / std::sqrt(static_cast<double>(o.ambient_dim)));

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> shift(0.0, center_std);
    Matrix centers(static_cast<Eigen::Index>(o.inner_spheres), d);
    for (Eigen::Index s = 0; s < centers.rows(); ++s) {
        for (Eigen::Index c = 0; c < d; ++c) {
            centers(s, c) = shift(rng);
        }
    }

    Matrix points(static_cast<Eigen::Index>(n), d);
    Labels labels(n);
    Eigen::Index row = 0;
    for (std::size_t s = 0; s < o.inner_spheres; ++s) {
        fill_sphere_points(points, row, o.inner_points, o.inner_radius, centers.row(static_cast<Eigen::Index>(s)), rng);
        std::fill_n(labels.begin() + row, o.inner_points, static_cast<std::int32_t>(s));
        row += static_cast<Eigen::Index>(o.inner_points);
    }
    fill_sphere_points(points, row, o.outer_points, o.outer_radius, Eigen::RowVectorXd::Zero(d), rng);
    std::fill_n(labels.begin() + row, o.outer_points, static_cast<std::int32_t>(o.inner_spheres));
    if (centers_out != nullptr) {
        *centers_out = centers;
    }

    return {Dataset(std::move(points), std::move(labels)), "spheres"};
}

LabeledDataset load_idx(const std::filesystem::path& images_path, const std::filesystem::path& labels_path) {
    const auto img = read_file(images_path);
    const auto lab = read_file(labels_path);
    const std::string img_name = images_path.string();
    const std::string lab_name = labels_path.string();

    const std::uint32_t img_magic = read_be32(img, 0, img_name);
    if (img_magic != 0x00000803u) {
        throw FormatError(img_name + ": bad image magic number at byte 0", 0);
    }
    const std::uint32_t count = read_be32(img, 4, img_name);
    const std::uint32_t rows = read_be32(img, 8, img_name);
    const std::uint32_t cols = read_be32(img, 12, img_name);
    const std::size_t pixels = std::size_t{rows} * cols;
    const std::size_t needed = 16 + std::size_t{count} * pixels;
    if (img.size() < needed) {
        throw FormatError(img_name + ": truncated pixel data at byte " + std::to_string(img.size()) + " (expected " +
                              std::to_string(needed) + " bytes)",
                          img.size());
    }

    const std::uint32_t lab_magic = read_be32(lab, 0, lab_name);
    if (lab_magic != 0x00000801u) {
        throw FormatError(lab_name + ": bad label magic number at byte 0", 0);
    }
    const std::uint32_t lab_count = read_be32(lab, 4, lab_name);
    if (lab_count != count) {
        throw FormatError(lab_name + ": label count " + std::to_string(lab_count) + " at byte 4 does not match image count " +
                              std::to_string(count),
                          4);
    }
    if (lab.size() < 8 + std::size_t{lab_count}) {
        throw FormatError(lab_name + ": truncated label data at byte " + std::to_string(lab.size()), lab.size());
    }
    if (count == 0 || pixels == 0) {
        throw FormatError(img_name + ": empty image set at byte 4", 4);
    }

    Matrix points(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(pixels));
    Labels labels(count);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t p = 0; p < pixels; ++p) {
            points(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(p)) = img[16 + i * pixels + p] / 255.0;
        }
        labels[i] = lab[8 + i];
    }
    return {Dataset(std::move(points), std::move(labels)), images_path.stem().string()};
}

LabeledDataset load_csv(const std::filesystem::path& path, bool has_labels) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    const std::string name = path.string();
    std::vector<std::vector<double>> rows;
    Labels labels;
    std::size_t width = 0;
    std::size_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        const auto cells = split_cells(line);
        std::vector<double> values(cells.size());
        bool numeric = true;
        for (std::size_t c = 0; c < cells.size() && numeric; ++c) {
            numeric = parse_double(cells[c], values[c]);
        }
        if (!numeric) {
            if (line_no == 1) {
                continue; // header
            }
            throw FormatError(name + ":" + std::to_string(line_no) + ": non-numeric cell", line_no);
        }
        if (width == 0) {
            width = values.size();
            if (has_labels && width < 2) {
                throw FormatError(name + ":" + std::to_string(line_no) + ": need a feature column and a label column",
                                  line_no);
            }
        } else if (values.size() != width) {
            throw FormatError(name + ":" + std::to_string(line_no) + ": expected " + std::to_string(width) +
                                  " columns, found " + std::to_string(values.size()),
                              line_no);
        }
        if (has_labels) {
            const double l = values.back();
            if (l != std::floor(l) || l < 0 || l > 2147483647.0) {
                throw FormatError(name + ":" + std::to_string(line_no) + ": label is not a nonnegative integer",
                                  line_no);
            }
            labels.push_back(static_cast<std::int32_t>(l));
            values.pop_back();
        }
        rows.push_back(std::move(values));
    }
    if (rows.empty()) {
        throw FormatError(name + ": no data rows", std::max<std::size_t>(line_no, 1));
    }
    Matrix points(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            points(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
        }
    }
    std::optional<Labels> lab;
    if (has_labels) {
        lab = std::move(labels);
    }
    return {Dataset(std::move(points), std::move(lab)), path.stem().string()};
}

void save_embedding(const Matrix& embedding, const std::optional<Labels>& labels, const std::filesystem::path& path) {
    if (embedding.cols() != 2) {
        throw InvalidParameter("embeddings are saved as two columns");
    }
    if (labels && labels->size() != static_cast<std::size_t>(embedding.rows())) {
        throw InvalidParameter("label count does not match the embedding");
    }
    auto out = open_for_writing(path);
    out << (labels ? "x,y,label\n" : "x,y\n");
    for (Eigen::Index i = 0; i < embedding.rows(); ++i) {
        out << format_number(embedding(i, 0), 12) << ',' << format_number(embedding(i, 1), 12);
        if (labels) {
            out << ',' << (*labels)[static_cast<std::size_t>(i)];
        }
        out << '\n';
    }
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

void save_dataset(const Dataset& data, const std::filesystem::path& path) {
    auto out = open_for_writing(path);
    const auto& x = data.points();
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
        out << (c ? ",f" : "f") << c;
    }
    out << (data.has_labels() ? ",label\n" : "\n");
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index c = 0; c < x.cols(); ++c) {
            if (c) out << ',';
            out << format_number(x(i, c), 17);
        }
        if (data.has_labels()) {
            out << ',' << (*data.labels())[static_cast<std::size_t>(i)];
        }
        out << '\n';
    }
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

std::vector<Index> subsample_indices(const Dataset& data, std::size_t m, std::uint64_t seed) {
    const std::size_t n = data.size();
    if (m > n) {
        throw InvalidParameter("cannot subsample " + std::to_string(m) + " points from " + std::to_string(n));
    }
    std::mt19937_64 rng(seed);
    std::vector<Index> picked;

    auto take_random = [&](std::vector<Index> pool, std::size_t count) {
        // Partial Fisher-Yates with our own index draw so results do not
        // depend on the standard library's distribution implementation.
        for (std::size_t t = 0; t < count; ++t) {
            const std::size_t r = t + static_cast<std::size_t>(rng() % (pool.size() - t));
            std::swap(pool[t], pool[r]);
            picked.push_back(pool[t]);
        }
    };

    if (!data.has_labels()) {
        std::vector<Index> all(n);
        std::iota(all.begin(), all.end(), 0);
        take_random(std::move(all), m);
    } else {
        std::map<std::int32_t, std::vector<Index>> by_class;
        for (std::size_t i = 0; i < n; ++i) {
            by_class[(*data.labels())[i]].push_back(static_cast<Index>(i));
        }
        // Largest-remainder apportionment of m across classes.
        struct Quota {
            std::int32_t label;
            std::size_t base;
            double remainder;
        };
        std::vector<Quota> quotas;
        std::size_t assigned = 0;
        for (const auto& [label, members] : by_class) {
            const double exact = static_cast<double>(m) * static_cast<double>(members.size()) / static_cast<double>(n);
            const auto base = static_cast<std::size_t>(std::floor(exact));
            quotas.push_back({label, base, exact - static_cast<double>(base)});
            assigned += base;
        }
        std::vector<std::size_t> order(quotas.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return quotas[a].remainder > quotas[b].remainder; });
        for (std::size_t r = 0; assigned < m; ++r) {
            auto& q = quotas[order[r % order.size()]];
            if (q.base < by_class[q.label].size()) {
                ++q.base;
                ++assigned;
            }
        }
        for (const auto& q : quotas) {
            take_random(by_class[q.label], q.base);
        }
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

LabeledDataset subsample(const LabeledDataset& dataset, std::size_t m, std::uint64_t seed) {
    return {dataset.data.select(subsample_indices(dataset.data, m, seed)), dataset.name};
}

} // namespace umato
