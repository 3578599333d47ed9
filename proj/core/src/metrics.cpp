#include "umato/metrics.hpp"

#include "umato/error.hpp"
#include "umato/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace umato {
namespace {

void require_aligned(const Matrix& data, const Matrix& embedding) {
    if (data.rows() != embedding.rows()) {
        throw InvalidParameter("data has " + std::to_string(data.rows()) + " rows but the embedding has " +
                               std::to_string(embedding.rows()));
    }
    if (data.rows() < 1) {
        throw InvalidParameter("metrics need at least one point");
    }
}

void require_neighborhood(std::size_t n, std::size_t k) {
    if (k < 1 || 2 * k >= n) {
        throw InvalidParameter("k must satisfy 1 <= k < n/2 (k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                               ")");
    }
}

void squared_distances_from(const Matrix& points, std::size_t i, std::vector<double>& out) {
    const auto n = static_cast<std::size_t>(points.rows());
    out.resize(n);
    for (std::size_t l = 0; l < n; ++l) {
        out[l] = squared_distance(points, static_cast<Eigen::Index>(i), points, static_cast<Eigen::Index>(l));
    }
}

/// Rank of `j` in row `i`: 1 + number of other points strictly before it in
/// (distance, index) order.
Index rank_of(const std::vector<double>& d2, std::size_t i, std::size_t j) {
    const double dj = d2[j];
    Index r = 1;
    for (std::size_t l = 0; l < d2.size(); ++l) {
        if (l != i && l != j && (d2[l] < dj || (d2[l] == dj && l < j))) {
            ++r;
        }
    }
    return r;
}

/// The k points nearest to i in (distance, index) order.
void nearest(const std::vector<double>& d2, std::size_t i, std::size_t k, std::vector<Index>& order,
             std::vector<Index>& out) {
    order.clear();
    for (std::size_t l = 0; l < d2.size(); ++l) {
        if (l != i) {
            order.push_back(static_cast<Index>(l));
        }
    }
    auto less = [&](Index a, Index b) {
        const double da = d2[static_cast<std::size_t>(a)];
        const double db = d2[static_cast<std::size_t>(b)];
        return da < db || (da == db && a < b);
    };
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(), less);
    out.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
}

struct RowRankTerms {
    double trust = 0.0;
    double cont = 0.0;
    double err_x = 0.0;
    double err_z = 0.0;
};

struct LocalTotals {
    double trust = 0.0;
    double cont = 0.0;
    double err_x = 0.0;
    double err_z = 0.0;
    double max_dx = 0.0;
    double max_dz = 0.0;
};

/// Per-row rank statistics, summed in row order so the result does not
/// depend on the thread count.
LocalTotals local_terms(const Matrix& x, const Matrix& z, std::size_t k, std::size_t threads) {
    const auto n = static_cast<std::size_t>(x.rows());
    std::vector<RowRankTerms> rows(n);
    std::vector<double> row_max_x(n, 0.0), row_max_z(n, 0.0);
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        std::vector<double> dx, dz;
        std::vector<Index> order, nx, nz;
        for (std::size_t i = begin; i < end; ++i) {
            squared_distances_from(x, i, dx);
            squared_distances_from(z, i, dz);
            row_max_x[i] = *std::max_element(dx.begin(), dx.end());
            row_max_z[i] = *std::max_element(dz.begin(), dz.end());
            nearest(dx, i, k, order, nx);
            nearest(dz, i, k, order, nz);
            RowRankTerms t;
            for (std::size_t p = 0; p < k; ++p) {
                // j among the embedding neighbors: rank in Z is p+1.
                const auto jz = static_cast<std::size_t>(nz[p]);
                const double rx = rank_of(dx, i, jz);
                const double rz_pos = static_cast<double>(p + 1);
                if (rx > static_cast<double>(k)) {
                    t.trust += rx - static_cast<double>(k);
                }
                t.err_z += std::abs(rx - rz_pos) / rz_pos;

                const auto jx = static_cast<std::size_t>(nx[p]);
                const double rz = rank_of(dz, i, jx);
                const double rx_pos = static_cast<double>(p + 1);
                if (rz > static_cast<double>(k)) {
                    t.cont += rz - static_cast<double>(k);
                }
                t.err_x += std::abs(rx_pos - rz) / rx_pos;
            }
            rows[i] = t;
        }
    });
    LocalTotals tot;
    for (std::size_t i = 0; i < n; ++i) {
        tot.trust += rows[i].trust;
        tot.cont += rows[i].cont;
        tot.err_x += rows[i].err_x;
        tot.err_z += rows[i].err_z;
        tot.max_dx = std::max(tot.max_dx, row_max_x[i]);
        tot.max_dz = std::max(tot.max_dz, row_max_z[i]);
    }
    tot.max_dx = std::sqrt(tot.max_dx);
    tot.max_dz = std::sqrt(tot.max_dz);
    return tot;
}

double tc_normalizer(std::size_t n, std::size_t k) {
    const double nn = static_cast<double>(n);
    const double kk = static_cast<double>(k);
    return 2.0 / (nn * kk * (2.0 * nn - 3.0 * kk - 1.0));
}

double mrre_normalizer(std::size_t n, std::size_t k) {
    double s = 0.0;
    for (std::size_t l = 1; l <= k; ++l) {
        s += std::abs(static_cast<double>(n) - 2.0 * static_cast<double>(l) + 1.0) / static_cast<double>(l);
    }
    return static_cast<double>(n) * s;
}

std::vector<double> normalized(std::vector<double> f) {
    const double s = std::accumulate(f.begin(), f.end(), 0.0);
    for (auto& v : f) {
        v /= s;
    }
    return f;
}

double dtm_from(const std::vector<double>& p, const std::vector<double>& q) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        s += std::abs(p[i] - q[i]);
    }
    return s;
}

double kl_from(const std::vector<double>& p, const std::vector<double>& q) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        s += p[i] * std::log(p[i] / q[i]);
    }
    return s;
}

double density_scale(const Matrix& points, const DensityOptions& options) {
    if (!options.normalize_distances) {
        return 1.0;
    }
    const double m = max_pairwise_distance(points, options.threads);
    return m > 0.0 ? m : 1.0;
}

} // namespace

std::vector<double> density_estimate(const Matrix& points, double sigma, double distance_scale, std::size_t threads) {
    if (!(sigma > 0.0) || !(distance_scale > 0.0)) {
        throw InvalidParameter("density bandwidth and distance scale must be positive");
    }
    const auto n = static_cast<std::size_t>(points.rows());
    const double inv = 1.0 / (sigma * distance_scale * distance_scale);
    std::vector<double> f(n, 0.0);
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            double s = 0.0;
            for (std::size_t l = 0; l < n; ++l) {
                s += std::exp(-squared_distance(points, static_cast<Eigen::Index>(i), points,
                                                static_cast<Eigen::Index>(l)) * inv);
            }
            f[i] = s;
        }
    });
    return f;
}

double max_pairwise_distance(const Matrix& points, std::size_t threads) {
    const auto n = static_cast<std::size_t>(points.rows());
    std::vector<double> row_max(n, 0.0);
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            double m = 0.0;
            for (std::size_t l = i + 1; l < n; ++l) {
                m = std::max(m, squared_distance(points, static_cast<Eigen::Index>(i), points,
                                                 static_cast<Eigen::Index>(l)));
            }
            row_max[i] = m;
        }
    });
    return std::sqrt(row_max.empty() ? 0.0 : *std::max_element(row_max.begin(), row_max.end()));
}

double dtm(const Matrix& data, const Matrix& embedding, double sigma, const DensityOptions& options) {
    require_aligned(data, embedding);
    const auto p = normalized(density_estimate(data, sigma, density_scale(data, options), options.threads));
    const auto q = normalized(density_estimate(embedding, sigma, density_scale(embedding, options), options.threads));
    return dtm_from(p, q);
}

double kl_density(const Matrix& data, const Matrix& embedding, double sigma, const DensityOptions& options) {
    require_aligned(data, embedding);
    const auto p = normalized(density_estimate(data, sigma, density_scale(data, options), options.threads));
    const auto q = normalized(density_estimate(embedding, sigma, density_scale(embedding, options), options.threads));
    return kl_from(p, q);
}

RankMatrix rank_matrix(const Matrix& points) {
    const auto n = static_cast<std::size_t>(points.rows());
    RankMatrix rm{n, std::vector<Index>(n * n, 0)};
    std::vector<double> d2;
    std::vector<Index> order;
    for (std::size_t i = 0; i < n; ++i) {
        squared_distances_from(points, i, d2);
        order.clear();
        for (std::size_t l = 0; l < n; ++l) {
            if (l != i) {
                order.push_back(static_cast<Index>(l));
            }
        }
        std::sort(order.begin(), order.end(), [&](Index a, Index b) {
            const double da = d2[static_cast<std::size_t>(a)];
            const double db = d2[static_cast<std::size_t>(b)];
            return da < db || (da == db && a < b);
        });
        for (std::size_t r = 0; r < order.size(); ++r) {
            rm.ranks[i * n + static_cast<std::size_t>(order[r])] = static_cast<Index>(r + 1);
        }
    }
    return rm;
}

double trustworthiness(const Matrix& data, const Matrix& embedding, std::size_t k, std::size_t threads) {
    require_aligned(data, embedding);
    const auto n = static_cast<std::size_t>(data.rows());
    require_neighborhood(n, k);
    return 1.0 - tc_normalizer(n, k) * local_terms(data, embedding, k, threads).trust;
}

double continuity(const Matrix& data, const Matrix& embedding, std::size_t k, std::size_t threads) {
    require_aligned(data, embedding);
    const auto n = static_cast<std::size_t>(data.rows());
    require_neighborhood(n, k);
    return 1.0 - tc_normalizer(n, k) * local_terms(data, embedding, k, threads).cont;
}

MrreResult mrre(const Matrix& data, const Matrix& embedding, std::size_t k, std::size_t threads) {
    require_aligned(data, embedding);
    const auto n = static_cast<std::size_t>(data.rows());
    require_neighborhood(n, k);
    const LocalTotals t = local_terms(data, embedding, k, threads);
    const double c = mrre_normalizer(n, k);
    return {1.0 - t.err_x / c, 1.0 - t.err_z / c};
}

MetricReport evaluate(const Matrix& data, const Matrix& embedding, const MetricParams& params) {
    require_aligned(data, embedding);
    const auto n = static_cast<std::size_t>(data.rows());
    require_neighborhood(n, params.k);
    for (const double s : params.sigmas) {
        if (!(s > 0.0)) {
            throw InvalidParameter("density bandwidths must be positive");
        }
    }

    MetricReport report;
    report.params = params;

    const LocalTotals t = local_terms(data, embedding, params.k, params.threads);
    const double tc = tc_normalizer(n, params.k);
    const double mc = mrre_normalizer(n, params.k);
    report.trustworthiness = 1.0 - tc * t.trust;
    report.continuity = 1.0 - tc * t.cont;
    report.mrre_x = 1.0 - t.err_x / mc;
    report.mrre_z = 1.0 - t.err_z / mc;

    const double scale_x = params.normalize_distances && t.max_dx > 0.0 ? t.max_dx : 1.0;
    const double scale_z = params.normalize_distances && t.max_dz > 0.0 ? t.max_dz : 1.0;
    const std::size_t ns = params.sigmas.size();
    // Row-major n x |sigmas| density tables, filled in one distance pass.
    std::vector<double> fx(n * ns, 0.0), fz(n * ns, 0.0);
    parallel_for(n, params.threads, [&](std::size_t begin, std::size_t end) {
        std::vector<double> dx, dz;
        for (std::size_t i = begin; i < end; ++i) {
            squared_distances_from(data, i, dx);
            squared_distances_from(embedding, i, dz);
            for (std::size_t s = 0; s < ns; ++s) {
                const double ix = 1.0 / (params.sigmas[s] * scale_x * scale_x);
                const double iz = 1.0 / (params.sigmas[s] * scale_z * scale_z);
                double sx = 0.0, sz = 0.0;
                for (std::size_t l = 0; l < n; ++l) {
                    sx += std::exp(-dx[l] * ix);
                    sz += std::exp(-dz[l] * iz);
                }
                fx[i * ns + s] = sx;
                fz[i * ns + s] = sz;
            }
        }
    });
    for (std::size_t s = 0; s < ns; ++s) {
        std::vector<double> p(n), q(n);
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = fx[i * ns + s];
            q[i] = fz[i * ns + s];
        }
        p = normalized(std::move(p));
        q = normalized(std::move(q));
        report.dtm[params.sigmas[s]] = dtm_from(p, q);
        report.kl[params.sigmas[s]] = kl_from(p, q);
    }
    return report;
}

} // namespace umato
