#pragma once

#include "oracles.hpp"
#include "umato/dataset.hpp"
#include "umato/knn_graph.hpp"

namespace testing_support {

inline umato::Matrix to_matrix(const oracle::Points& p) {
    umato::Matrix m(static_cast<Eigen::Index>(p.size()), static_cast<Eigen::Index>(p.empty() ? 0 : p[0].size()));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t c = 0; c < p[i].size(); ++c) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = p[i][c];
    return m;
}

inline oracle::Points to_points(const umato::Matrix& m) {
    oracle::Points p(static_cast<std::size_t>(m.rows()), std::vector<double>(static_cast<std::size_t>(m.cols())));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index c = 0; c < m.cols(); ++c) p[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = m(i, c);
    return p;
}

/// Table with the given rows; distances are filled with the row position so
/// the rows stay sorted.
inline umato::NeighborTable make_table(const std::vector<std::vector<std::size_t>>& rows) {
    const std::size_t k = rows.empty() ? 0 : rows[0].size();
    umato::NeighborTable t(rows.size(), k);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t r = 0; r < k; ++r) {
            t.indices[i * k + r] = static_cast<umato::Index>(rows[i][r]);
            t.distances[i * k + r] = static_cast<double>(r + 1);
        }
    return t;
}

inline std::vector<std::vector<std::size_t>> table_rows(const umato::NeighborTable& t) {
    std::vector<std::vector<std::size_t>> rows(t.n);
    for (std::size_t i = 0; i < t.n; ++i)
        for (auto j : t.row_indices(i)) rows[i].push_back(static_cast<std::size_t>(j));
    return rows;
}

/// Random table: each row holds k distinct indices other than i.
inline std::vector<std::vector<std::size_t>> random_table(std::size_t n, std::size_t k, std::mt19937_64& rng) {
    std::vector<std::vector<std::size_t>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) others.push_back(j);
        std::shuffle(others.begin(), others.end(), rng);
        others.resize(k);
        rows[i] = others;
    }
    return rows;
}

} // namespace testing_support
