#include "umato/optimize.hpp"

#include "umato/diagnostics.hpp"
#include "umato/error.hpp"
#include "umato/parallel.hpp"
#include "umato/pca.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>
#include <utility>

namespace umato {
namespace {

constexpr double kSimilarityClamp = 1e-12;

std::mt19937_64 make_rng(std::uint64_t seed, std::uint32_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream};
    return std::mt19937_64(seq);
}

/// Uniform double in [0, 1) from the top 53 bits; independent of the
/// standard library's distribution implementation.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double clip(double g, double limit) { return std::clamp(g, -limit, limit); }

/// Coefficient c with dCE_pair/dy_i = c * (y_i - y_j) for one unordered
/// pair: the attractive part is weighted by v, the repulsive part by 1 - v.
double pair_gradient_coefficient(double d2, double v, double a, double b, double epsilon) {
    if (d2 <= 0.0) {
        return 0.0;
    }
    // b == 1 is the common case; pow(x, 1) and pow(x, 0) are exact, so the
    // shortcut does not change results.
    const bool unit_b = b == 1.0;
    const double d2b = unit_b ? d2 : std::pow(d2, b);
    const double denom = 1.0 + a * d2b;
    double c = 0.0;
    if (v > 0.0) {
        c += v * 2.0 * a * b * (unit_b ? 1.0 : std::pow(d2, b - 1.0)) / denom;
    }
    if (v < 1.0) {
        c -= (1.0 - v) * 2.0 * b / ((epsilon + d2) * denom);
    }
    return c;
}

void require_finite_positions(const Matrix& y, const char* phase) {
    if (!y.allFinite()) {
        throw InternalError(std::string(phase) + " produced a non-finite position");
    }
}

/// Undirected kNN adjacency sorted by (distance, index), duplicates removed.
std::vector<std::vector<std::pair<double, Index>>> undirected_neighbors(const NeighborTable& table) {
    std::vector<std::vector<std::pair<double, Index>>> adj(table.n);
    for (std::size_t i = 0; i < table.n; ++i) {
        const auto idx = table.row_indices(i);
        const auto dst = table.row_distances(i);
        for (std::size_t r = 0; r < table.k; ++r) {
            adj[i].emplace_back(dst[r], idx[r]);
            adj[static_cast<std::size_t>(idx[r])].emplace_back(dst[r], static_cast<Index>(i));
        }
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end(),
                               [](const auto& x, const auto& y) { return x.second == y.second; }),
                   list.end());
    }
    return adj;
}

} // namespace

void OptimizationConfig::validate() const {
    auto fail = [](const std::string& what) { throw InvalidParameter("invalid configuration: " + what); };
    if (k < 1) fail("k must be >= 1");
    if (!(a > 0.0) || !(b > 0.0)) fail("a and b must be positive");
    if (global_epochs < 1 || local_epochs < 1) fail("epoch counts must be positive");
    if (!(global_learning_rate > 0.0) || !(local_learning_rate > 0.0)) fail("learning rates must be positive");
    if (negative_samples < 1) fail("negative_samples must be >= 1");
    if (!(gamma >= 0.0)) fail("gamma must be nonnegative");
    if (!(hub_penalty >= 0.0 && hub_penalty <= 1.0)) fail("hub_penalty must be in [0, 1]");
    if (!(repulsion_penalty >= 0.0 && repulsion_penalty <= 1.0)) fail("repulsion_penalty must be in [0, 1]");
    if (enn_init_neighbors < 1) fail("enn_init_neighbors must be >= 1");
    if (enn_init_noise && !(*enn_init_noise >= 0.0)) fail("enn_init_noise must be nonnegative");
    if (!(epsilon > 0.0)) fail("epsilon must be positive");
    if (!(grad_clip > 0.0)) fail("grad_clip must be positive");
}

double low_dim_similarity(const Eigen::Ref<const Eigen::RowVectorXd>& yi,
                          const Eigen::Ref<const Eigen::RowVectorXd>& yj, double a, double b) {
    const double d2 = (yi - yj).squaredNorm();
    return 1.0 / (1.0 + a * std::pow(d2, b));
}

double cross_entropy_loss(const SparseWeights& v, const Matrix& positions, double a, double b) {
    const auto n = static_cast<std::size_t>(positions.rows());
    if (v.size() != n) {
        throw InvalidParameter("weight matrix and positions disagree on the point count");
    }
    std::vector<double> row(n, 0.0);
    double loss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto cols = v.row_columns(i);
        const auto vals = v.row_values(i);
        for (std::size_t e = 0; e < cols.size(); ++e) {
            row[static_cast<std::size_t>(cols[e])] = vals[e];
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            const double vij = row[j];
            const double d2 = (positions.row(static_cast<Eigen::Index>(i)) - positions.row(static_cast<Eigen::Index>(j)))
                                  .squaredNorm();
            double w = 1.0 / (1.0 + a * std::pow(d2, b));
            w = std::clamp(w, kSimilarityClamp, 1.0 - kSimilarityClamp);
            if (vij > 0.0) {
                loss += vij * std::log(vij / w);
            }
            if (vij < 1.0) {
                loss += (1.0 - vij) * std::log((1.0 - vij) / (1.0 - w));
            }
        }
        for (const Index c : cols) {
            row[static_cast<std::size_t>(c)] = 0.0;
        }
    }
    return loss;
}

Matrix cross_entropy_gradient(const SparseWeights& v, const Matrix& positions, double a, double b, double epsilon,
                              std::optional<double> clip_limit, std::size_t threads) {
    const auto n = static_cast<std::size_t>(positions.rows());
    const auto dim = positions.cols();
    if (v.size() != n) {
        throw InvalidParameter("weight matrix and positions disagree on the point count");
    }
    Matrix grad = Matrix::Zero(positions.rows(), dim);
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        std::vector<double> row(n, 0.0);
        Eigen::RowVectorXd acc(dim);
        Eigen::RowVectorXd diff(dim);
        for (std::size_t i = begin; i < end; ++i) {
            const auto cols = v.row_columns(i);
            const auto vals = v.row_values(i);
            for (std::size_t e = 0; e < cols.size(); ++e) {
                row[static_cast<std::size_t>(cols[e])] = vals[e];
            }
            if (dim == 2) {
                // Same arithmetic as the generic loop below, on raw coordinates.
                const double* y = positions.data();
                const double xi = y[2 * i];
                const double yi = y[2 * i + 1];
                double gx = 0.0;
                double gy = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == i) {
                        continue;
                    }
                    const double dx = xi - y[2 * j];
                    const double dy = yi - y[2 * j + 1];
                    const double c = pair_gradient_coefficient(dx * dx + dy * dy, row[j], a, b, epsilon);
                    if (clip_limit) {
                        gx += clip(c * dx, *clip_limit);
                        gy += clip(c * dy, *clip_limit);
                    } else {
                        gx += c * dx;
                        gy += c * dy;
                    }
                }
                grad(static_cast<Eigen::Index>(i), 0) = gx;
                grad(static_cast<Eigen::Index>(i), 1) = gy;
                for (const Index c : cols) {
                    row[static_cast<std::size_t>(c)] = 0.0;
                }
                continue;
            }
            acc.setZero();
            const auto yi = positions.row(static_cast<Eigen::Index>(i));
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) {
                    continue;
                }
                diff = yi - positions.row(static_cast<Eigen::Index>(j));
                const double c = pair_gradient_coefficient(diff.squaredNorm(), row[j], a, b, epsilon);
                if (clip_limit) {
                    for (Eigen::Index q = 0; q < dim; ++q) {
                        acc(q) += clip(c * diff(q), *clip_limit);
                    }
                } else {
                    acc += c * diff;
                }
            }
            grad.row(static_cast<Eigen::Index>(i)) = acc;
            for (const Index c : cols) {
                row[static_cast<std::size_t>(c)] = 0.0;
            }
        }
    });
    return grad;
}

Matrix global_optimize(const SparseWeights& hub_weights, Matrix y, const OptimizationConfig& cfg,
                       std::vector<double>* loss_trace) {
    if (hub_weights.size() != static_cast<std::size_t>(y.rows())) {
        throw InvalidParameter("hub weights and initial positions disagree on the hub count");
    }
    const std::size_t epochs = cfg.global_epochs;
    for (std::size_t e = 0; e < epochs; ++e) {
        if (loss_trace) {
            loss_trace->push_back(cross_entropy_loss(hub_weights, y, cfg.a, cfg.b));
        }
        const double lr =
            cfg.global_learning_rate * (1.0 - static_cast<double>(e) / static_cast<double>(epochs));
        const Matrix g = cross_entropy_gradient(hub_weights, y, cfg.a, cfg.b, cfg.epsilon, cfg.grad_clip, cfg.threads);
        y -= lr * g;
        require_finite_positions(y, "global optimization");
    }
    if (loss_trace) {
        loss_trace->push_back(cross_entropy_loss(hub_weights, y, cfg.a, cfg.b));
    }
    return y;
}

Matrix rescale_to_box(const Matrix& positions, double half_width) {
    Matrix out = Matrix::Zero(positions.rows(), positions.cols());
    if (positions.rows() == 0) {
        return out;
    }
    for (Eigen::Index c = 0; c < positions.cols(); ++c) {
        const double lo = positions.col(c).minCoeff();
        const double hi = positions.col(c).maxCoeff();
        if (hi > lo) {
            out.col(c) = ((positions.col(c).array() - lo) / (hi - lo) * 2.0 - 1.0) * half_width;
        }
    }
    return out;
}

double resolve_placement_noise(const OptimizationConfig& cfg, const Matrix& hub_positions) {
    if (cfg.enn_init_noise) {
        return *cfg.enn_init_noise;
    }
    double span = 0.0;
    if (hub_positions.rows() > 0) {
        span = (hub_positions.colwise().maxCoeff() - hub_positions.colwise().minCoeff()).maxCoeff();
    }
    return 0.05 * span;
}

Matrix init_enn_positions(const Matrix& hub_positions, const PointClassification& cls, const NeighborTable& table,
                          std::size_t m, double noise, std::mt19937_64& rng) {
    if (static_cast<std::size_t>(hub_positions.rows()) != cls.hubs.size()) {
        throw InvalidParameter("hub position count does not match the hub list");
    }
    const auto dim = hub_positions.cols();
    Matrix y = Matrix::Zero(static_cast<Eigen::Index>(table.n), dim);
    std::vector<unsigned char> placed(table.n, 0);
    for (std::size_t h = 0; h < cls.hubs.size(); ++h) {
        y.row(cls.hubs[h]) = hub_positions.row(static_cast<Eigen::Index>(h));
        placed[static_cast<std::size_t>(cls.hubs[h])] = 1;
    }

    const auto adj = undirected_neighbors(table);
    Eigen::RowVectorXd acc(dim);
    for (const Index p : cls.enn) {
        acc.setZero();
        std::size_t used = 0;
        for (const auto& [dist, q] : adj[static_cast<std::size_t>(p)]) {
            if (used == m) {
                break;
            }
            if (placed[static_cast<std::size_t>(q)]) {
                acc += y.row(q);
                ++used;
            }
        }
        if (used == 0) {
            throw InternalError("eNN point " + std::to_string(p) + " has no positioned neighbor");
        }
        y.row(p) = acc / static_cast<double>(used);
        if (noise > 0.0) {
            for (Eigen::Index q = 0; q < dim; ++q) {
                y(p, q) += noise * (2.0 * unit_uniform(rng) - 1.0);
            }
        }
        placed[static_cast<std::size_t>(p)] = 1;
    }
    return y;
}

NeighborGraph rebuild_knn_without_outliers(const NeighborGraph& graph, const PointClassification& cls,
                                           const Dataset& data, std::size_t threads) {
    const std::size_t n = graph.size();
    const std::size_t k = graph.k();
    if (cls.size() != n || data.size() != n) {
        throw InvalidParameter("graph, classification and data disagree on the point count");
    }
    std::vector<Index> keep;
    for (std::size_t i = 0; i < n; ++i) {
        if (!cls.is_outlier(static_cast<Index>(i))) {
            keep.push_back(static_cast<Index>(i));
        }
    }
    if (cls.outliers.empty()) {
        return graph;
    }
    std::size_t k_new = k;
    if (keep.size() < k + 1) {
        k_new = keep.empty() ? 0 : keep.size() - 1;
        warn("only " + std::to_string(keep.size()) + " non-outlier points; reducing k from " + std::to_string(k) +
             " to " + std::to_string(k_new) + " for the local phase");
    }

    NeighborTable table(n, k_new);
    std::vector<unsigned char> rebuilt(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto idx = graph.table.row_indices(i);
        const auto dst = graph.table.row_distances(i);
        const bool dirty = !cls.is_outlier(static_cast<Index>(i)) &&
                           (k_new != k || std::any_of(idx.begin(), idx.end(), [&](Index j) { return cls.is_outlier(j); }));
        rebuilt[i] = dirty ? 1 : 0;
        if (!dirty) {
            std::copy_n(idx.begin(), k_new, table.row_indices(i).begin());
            std::copy_n(dst.begin(), k_new, table.row_distances(i).begin());
        }
    }

    const Matrix& x = data.points();
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        std::vector<std::pair<double, Index>> cand;
        for (std::size_t i = begin; i < end; ++i) {
            if (!rebuilt[i]) {
                continue;
            }
            cand.clear();
            for (const Index j : keep) {
                if (static_cast<std::size_t>(j) != i) {
                    cand.emplace_back(squared_distance(x, static_cast<Eigen::Index>(i), x, j), j);
                }
            }
            std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(k_new), cand.end());
            auto idx = table.row_indices(i);
            auto dst = table.row_distances(i);
            for (std::size_t r = 0; r < k_new; ++r) {
                idx[r] = cand[r].second;
                dst[r] = std::sqrt(cand[r].first);
            }
        }
    });

    NeighborGraph out;
    out.rho = graph.rho;
    out.sigma = graph.sigma;
    out.sigma_unattainable = graph.sigma_unattainable;
    out.directed_weights.assign(n * k_new, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (cls.is_outlier(static_cast<Index>(i)) || k_new == 0) {
            continue;
        }
        const auto dst = table.row_distances(i);
        if (rebuilt[i]) {
            out.rho[i] = compute_rho(dst);
            const SigmaResult s = compute_sigma(dst, out.rho[i], k_new);
            out.sigma[i] = s.sigma;
            out.sigma_unattainable[i] = s.unattainable ? 1 : 0;
            for (std::size_t r = 0; r < k_new; ++r) {
                out.directed_weights[i * k_new + r] = directed_weight(dst[r], out.rho[i], out.sigma[i]);
            }
        } else {
            std::copy_n(graph.row_weights(i).begin(), k_new, out.directed_weights.begin() + static_cast<std::ptrdiff_t>(i * k_new));
        }
    }
    out.table = std::move(table);
    out.sym_weights = symmetrize(out.table, out.directed_weights);
    return out;
}

Matrix local_optimize(const SparseWeights& weights, Matrix y, const PointClassification& cls,
                      const OptimizationConfig& cfg, LocalStats* stats) {
    const auto n = static_cast<std::size_t>(y.rows());
    const auto dim = y.cols();
    if (weights.size() != n || cls.size() != n) {
        throw InvalidParameter("weights, positions and classification disagree on the point count");
    }
    LocalStats local;
    const Matrix start = y;

    struct Edge {
        Index head;
        Index tail;
        double epochs_per_sample;
        double next_epoch;
    };
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        if (!cls.is_enn(static_cast<Index>(i))) {
            continue;
        }
        const auto cols = weights.row_columns(i);
        const auto vals = weights.row_values(i);
        for (std::size_t e = 0; e < cols.size(); ++e) {
            if (cols[e] != static_cast<Index>(i) && !cls.is_outlier(cols[e]) && vals[e] > 0.0) {
                edges.push_back({static_cast<Index>(i), cols[e], vals[e], 0.0});
            }
        }
    }
    double vmax = 0.0;
    for (const auto& e : edges) {
        vmax = std::max(vmax, e.epochs_per_sample);
    }
    for (auto& e : edges) {
        e.epochs_per_sample = vmax / e.epochs_per_sample;
        e.next_epoch = e.epochs_per_sample;
    }

    // Negative-sample distribution over hubs and eNN, proportional to deg^(3/4).
    std::vector<Index> pool;
    std::vector<double> cdf;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (cls.is_outlier(static_cast<Index>(i)) || weights.degree(i) == 0) {
            continue;
        }
        total += std::pow(static_cast<double>(weights.degree(i)), 0.75);
        pool.push_back(static_cast<Index>(i));
        cdf.push_back(total);
    }

    auto rng = make_rng(cfg.seed, 0x10ca1u);
    auto draw_negative = [&]() -> Index {
        const double u = unit_uniform(rng) * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) {
            --it;
        }
        return pool[static_cast<std::size_t>(it - cdf.begin())];
    };

    constexpr int kMaxRedraws = 5;
    const double clip_limit = cfg.grad_clip;
    const double repulsion_weight = cfg.gamma * cfg.repulsion_penalty;
    Eigen::RowVectorXd diff(dim);
    Eigen::RowVectorXd g(dim);
    const std::size_t epochs = cfg.local_epochs;

    for (std::size_t ep = 0; ep < epochs; ++ep) {
        const double lr = cfg.local_learning_rate * (1.0 - static_cast<double>(ep) / static_cast<double>(epochs));
        const double horizon = static_cast<double>(ep + 1);
        for (auto& edge : edges) {
            if (edge.next_epoch > horizon) {
                continue;
            }
            const Index i = edge.head;
            const Index j = edge.tail;

            diff = y.row(i) - y.row(j);
            const double d2 = diff.squaredNorm();
            if (d2 > 0.0) {
                const double d2b = std::pow(d2, cfg.b);
                const double c = 2.0 * cfg.a * cfg.b * std::pow(d2, cfg.b - 1.0) / (1.0 + cfg.a * d2b);
                for (Eigen::Index q = 0; q < dim; ++q) {
                    g(q) = clip(c * diff(q), clip_limit);
                    local.max_abs_step_component = std::max(local.max_abs_step_component, std::abs(g(q)));
                }
                y.row(i) -= lr * g;
                local.enn_path_length += lr * g.norm();
                const double factor = cls.is_hub(j) ? cfg.hub_penalty : 1.0;
                if (factor != 0.0) {
                    y.row(j) += factor * lr * g;
                    (cls.is_hub(j) ? local.hub_path_length : local.enn_path_length) += factor * lr * g.norm();
                }
            }
            ++local.edge_updates;

            for (std::size_t s = 0; s < cfg.negative_samples && !pool.empty(); ++s) {
                Index neg = -1;
                for (int attempt = 0; attempt <= kMaxRedraws; ++attempt) {
                    const Index cand = draw_negative();
                    if (cand != i && !weights.contains(static_cast<std::size_t>(i), static_cast<std::size_t>(cand))) {
                        neg = cand;
                        break;
                    }
                }
                if (neg < 0) {
                    continue;
                }
                diff = y.row(i) - y.row(neg);
                const double nd2 = diff.squaredNorm();
                const double c = -repulsion_weight * 2.0 * cfg.b /
                                 ((cfg.epsilon + nd2) * (1.0 + cfg.a * std::pow(nd2, cfg.b)));
                for (Eigen::Index q = 0; q < dim; ++q) {
                    g(q) = clip(c * diff(q), clip_limit);
                    local.max_abs_step_component = std::max(local.max_abs_step_component, std::abs(g(q)));
                }
                y.row(i) -= lr * g;
                local.enn_path_length += lr * g.norm();
                ++local.negative_updates;
            }
            edge.next_epoch += edge.epochs_per_sample;
        }
        require_finite_positions(y, "local optimization");
    }

    for (std::size_t i = 0; i < n; ++i) {
        const double moved = (y.row(static_cast<Eigen::Index>(i)) - start.row(static_cast<Eigen::Index>(i))).norm();
        if (cls.is_hub(static_cast<Index>(i))) {
            local.hub_net_displacement += moved;
        } else if (cls.is_enn(static_cast<Index>(i))) {
            local.enn_net_displacement += moved;
        }
    }
    if (stats) {
        *stats = local;
    }
    return y;
}

Matrix place_outliers(Matrix y, const PointClassification& cls, const Dataset& data, double noise,
                      std::mt19937_64& rng) {
    const std::size_t n = cls.size();
    if (static_cast<std::size_t>(y.rows()) != n || data.size() != n) {
        throw InvalidParameter("positions, classification and data disagree on the point count");
    }
    if (cls.outliers.empty()) {
        return y;
    }
    // Embedded points grouped by component.
    std::vector<std::pair<Index, Index>> by_component;
    for (std::size_t i = 0; i < n; ++i) {
        if (!cls.is_outlier(static_cast<Index>(i))) {
            by_component.emplace_back(cls.component_id[i], static_cast<Index>(i));
        }
    }
    std::sort(by_component.begin(), by_component.end());

    const Matrix& x = data.points();
    for (const Index o : cls.outliers) {
        const Index comp = cls.component_id[static_cast<std::size_t>(o)];
        auto lo = std::lower_bound(by_component.begin(), by_component.end(), std::make_pair(comp, Index{-1}));
        Index anchor = -1;
        double best = 0.0;
        for (auto it = lo; it != by_component.end() && it->first == comp; ++it) {
            const double d2 = squared_distance(x, o, x, it->second);
            if (anchor < 0 || d2 < best) {
                best = d2;
                anchor = it->second;
            }
        }
        if (anchor < 0) {
            throw InternalError("outlier " + std::to_string(o) + " has no embedded point in its component");
        }
        y.row(o) = y.row(anchor);
        if (noise > 0.0) {
            for (Eigen::Index q = 0; q < y.cols(); ++q) {
                y(o, q) += noise * (2.0 * unit_uniform(rng) - 1.0);
            }
        }
    }
    return y;
}

EmbedResult umato_embed_detailed(const Dataset& data, const OptimizationConfig& cfg) {
    cfg.validate();
    EmbedResult out;

    const NeighborGraph graph = build_neighbor_graph(data, cfg.k, cfg.threads);
    out.classification = classify_points(graph);
    const auto& cls = out.classification;

    const Matrix projection = pca_project(data, kEmbeddingDim);
    Matrix hub_pca(static_cast<Eigen::Index>(cls.hubs.size()), static_cast<Eigen::Index>(kEmbeddingDim));
    for (std::size_t h = 0; h < cls.hubs.size(); ++h) {
        hub_pca.row(static_cast<Eigen::Index>(h)) = projection.row(cls.hubs[h]);
    }
    out.hub_init = rescale_to_box(hub_pca);

    const SparseWeights hub_weights = graph.sym_weights.restrict_to(cls.hubs);
    out.hub_global = global_optimize(hub_weights, out.hub_init, cfg);

    auto rng = make_rng(cfg.seed, 0x1a17u);
    out.placement_noise = resolve_placement_noise(cfg, out.hub_global);
    out.before_local = init_enn_positions(out.hub_global, cls, graph.table, cfg.enn_init_neighbors,
                                          out.placement_noise, rng);

    const NeighborGraph local_graph = rebuild_knn_without_outliers(graph, cls, data, cfg.threads);
    out.local_k = local_graph.k();
    Matrix y = local_optimize(local_graph.sym_weights, out.before_local, cls, cfg, &out.local_stats);

    out.embedding = place_outliers(std::move(y), cls, data, out.placement_noise, rng);
    require_finite_positions(out.embedding, "embedding");
    return out;
}

Matrix umato_embed(const Dataset& data, const OptimizationConfig& cfg) {
    return umato_embed_detailed(data, cfg).embedding;
}

} // namespace umato
