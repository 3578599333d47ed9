#include "umato/knn_graph.hpp"

#include "umato/error.hpp"
#include "umato/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>
#include <utility>

namespace umato {

SparseWeights::SparseWeights(std::size_t n, std::vector<std::size_t> offsets, std::vector<Index> columns,
                             std::vector<double> values)
    : n_(n), offsets_(std::move(offsets)), columns_(std::move(columns)), values_(std::move(values)) {
    if (offsets_.size() != n_ + 1 || columns_.size() != values_.size() || offsets_.back() != values_.size()) {
        throw InvalidData("inconsistent CSR structure");
    }
}

double SparseWeights::at(std::size_t i, std::size_t j) const {
    const auto cols = row_columns(i);
    const auto it = std::lower_bound(cols.begin(), cols.end(), static_cast<Index>(j));
    if (it == cols.end() || *it != static_cast<Index>(j)) {
        return 0.0;
    }
    return values_[offsets_[i] + static_cast<std::size_t>(it - cols.begin())];
}

bool SparseWeights::contains(std::size_t i, std::size_t j) const {
    const auto cols = row_columns(i);
    return std::binary_search(cols.begin(), cols.end(), static_cast<Index>(j));
}

double SparseWeights::max_value() const {
    return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

SparseWeights SparseWeights::restrict_to(std::span<const Index> vertices) const {
    std::vector<Index> remap(n_, -1);
    for (std::size_t r = 0; r < vertices.size(); ++r) {
        remap[static_cast<std::size_t>(vertices[r])] = static_cast<Index>(r);
    }
    std::vector<std::size_t> offsets{0};
    std::vector<Index> cols;
    std::vector<double> vals;
    std::vector<std::pair<Index, double>> row;
    for (const Index v : vertices) {
        row.clear();
        const auto c = row_columns(static_cast<std::size_t>(v));
        const auto w = row_values(static_cast<std::size_t>(v));
        for (std::size_t e = 0; e < c.size(); ++e) {
            const Index mapped = remap[static_cast<std::size_t>(c[e])];
            if (mapped >= 0) {
                row.emplace_back(mapped, w[e]);
            }
        }
        std::sort(row.begin(), row.end());
        for (const auto& [col, val] : row) {
            cols.push_back(col);
            vals.push_back(val);
        }
        offsets.push_back(cols.size());
    }
    return SparseWeights(vertices.size(), std::move(offsets), std::move(cols), std::move(vals));
}

NeighborTable build_knn_graph(const Dataset& data, std::size_t k, std::size_t threads) {
    const std::size_t n = data.size();
    if (k < 1 || k >= n) {
        throw InvalidParameter("k must satisfy 1 <= k <= n-1 (k=" + std::to_string(k) + ", n=" +
                               std::to_string(n) + ")");
    }
    require_finite(data.points(), "dataset");

    const Matrix& x = data.points();
    NeighborTable table(n, k);
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        std::vector<std::pair<double, Index>> cand(n - 1);
        for (std::size_t i = begin; i < end; ++i) {
            std::size_t c = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) {
                    cand[c++] = {squared_distance(x, static_cast<Eigen::Index>(i), x, static_cast<Eigen::Index>(j)),
                                 static_cast<Index>(j)};
                }
            }
            // (distance, index) is a total order, so ties resolve by index.
            std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(k), cand.end());
            auto idx = table.row_indices(i);
            auto dst = table.row_distances(i);
            for (std::size_t r = 0; r < k; ++r) {
                idx[r] = cand[r].second;
                dst[r] = std::sqrt(cand[r].first);
            }
        }
    });
    return table;
}

double compute_rho(std::span<const double> sorted_distances) {
    for (const double d : sorted_distances) {
        if (d > 0.0) {
            return d;
        }
    }
    return 0.0;
}

namespace {

double membership_sum(std::span<const double> distances, double rho, double sigma) {
    double s = 0.0;
    for (const double d : distances) {
        s += std::exp(-std::max(0.0, d - rho) / sigma);
    }
    return s;
}

} // namespace

SigmaResult compute_sigma(std::span<const double> sorted_distances, double rho, std::size_t k,
                          const SigmaSearchOptions& options) {
    double mean = 0.0;
    for (const double d : sorted_distances) {
        mean += d;
    }
    mean = sorted_distances.empty() ? 0.0 : mean / static_cast<double>(sorted_distances.size());
    if (mean <= 0.0) {
        mean = 1.0;
    }
    const double sigma_min = options.lower_scale * mean;
    const double sigma_max = options.upper_scale * mean;
    const double target = std::log2(static_cast<double>(k));

    // The sum rises monotonically from the number of zero-adjusted distances
    // (sigma -> 0) towards k (sigma -> inf); a target at or below that floor
    // has no finite root.
    std::size_t at_rho = 0;
    for (const double d : sorted_distances) {
        if (d - rho <= 0.0) {
            ++at_rho;
        }
    }
    if (static_cast<double>(at_rho) >= target) {
        return {sigma_min, true};
    }
    if (membership_sum(sorted_distances, rho, sigma_min) > target + options.tolerance) {
        return {sigma_min, true};
    }
    if (membership_sum(sorted_distances, rho, sigma_max) < target - options.tolerance) {
        return {sigma_max, true};
    }

    double lo = sigma_min;
    double hi = sigma_max;
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < options.max_iterations; ++it) {
        mid = 0.5 * (lo + hi);
        const double s = membership_sum(sorted_distances, rho, mid);
        if (std::abs(s - target) < options.tolerance) {
            return {mid, false};
        }
        if (s > target) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    const bool ok = std::abs(membership_sum(sorted_distances, rho, mid) - target) <= options.tolerance;
    return {mid, !ok};
}

double directed_weight(double dist, double rho, double sigma) {
    return std::exp(-std::max(0.0, dist - rho) / sigma);
}

SparseWeights symmetrize(const NeighborTable& table, std::span<const double> directed_weights) {
    if (directed_weights.size() != table.n * table.k) {
        throw InvalidParameter("directed weight count does not match the neighbor table");
    }
    // (row, col, forward?, weight): each directed edge i->j contributes a
    // forward entry at (i, j) and a reverse entry at (j, i).
    std::vector<std::tuple<Index, Index, bool, double>> entries;
    entries.reserve(2 * directed_weights.size());
    for (std::size_t i = 0; i < table.n; ++i) {
        const auto idx = table.row_indices(i);
        for (std::size_t r = 0; r < table.k; ++r) {
            const double w = directed_weights[i * table.k + r];
            if (w <= 0.0) {
                continue;
            }
            entries.emplace_back(static_cast<Index>(i), idx[r], true, w);
            entries.emplace_back(idx[r], static_cast<Index>(i), false, w);
        }
    }
    std::sort(entries.begin(), entries.end());

    std::vector<std::size_t> offsets(table.n + 1, 0);
    std::vector<Index> cols;
    std::vector<double> vals;
    cols.reserve(entries.size());
    vals.reserve(entries.size());
    for (std::size_t e = 0; e < entries.size();) {
        const auto [row, col, fwd, w] = entries[e];
        double forward = 0.0;
        double reverse = 0.0;
        std::size_t f = e;
        for (; f < entries.size() && std::get<0>(entries[f]) == row && std::get<1>(entries[f]) == col; ++f) {
            (std::get<2>(entries[f]) ? forward : reverse) = std::get<3>(entries[f]);
        }
        const double v = forward + reverse - forward * reverse;
        if (v > 0.0) {
            cols.push_back(col);
            vals.push_back(std::min(v, 1.0));
            ++offsets[static_cast<std::size_t>(row) + 1];
        }
        e = f;
    }
    for (std::size_t i = 0; i < table.n; ++i) {
        offsets[i + 1] += offsets[i];
    }
    return SparseWeights(table.n, std::move(offsets), std::move(cols), std::move(vals));
}

NeighborGraph calibrate(NeighborTable table, const SigmaSearchOptions& options, std::size_t threads) {
    NeighborGraph g;
    const std::size_t n = table.n;
    const std::size_t k = table.k;
    g.rho.assign(n, 0.0);
    g.sigma.assign(n, 0.0);
    g.sigma_unattainable.assign(n, 0);
    g.directed_weights.assign(n * k, 0.0);
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto dist = table.row_distances(i);
            const double rho = compute_rho(dist);
            const SigmaResult s = compute_sigma(dist, rho, k, options);
            g.rho[i] = rho;
            g.sigma[i] = s.sigma;
            g.sigma_unattainable[i] = s.unattainable ? 1 : 0;
            for (std::size_t r = 0; r < k; ++r) {
                g.directed_weights[i * k + r] = directed_weight(dist[r], rho, s.sigma);
            }
        }
    });
    g.table = std::move(table);
    g.sym_weights = symmetrize(g.table, g.directed_weights);
    return g;
}

NeighborGraph build_neighbor_graph(const Dataset& data, std::size_t k, std::size_t threads) {
    return calibrate(build_knn_graph(data, k, threads), {}, threads);
}

} // namespace umato
