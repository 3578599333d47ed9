#pragma once

#include "umato/dataset.hpp"
#include "umato/knn_graph.hpp"

#include <cstdint>
#include <vector>

namespace umato {

enum class PointRole : std::uint8_t { Hub, ExpandedNeighbor, Outlier };

/// Disjoint split of the points into hubs, expanded nearest neighbors and
/// outliers.
struct PointClassification {
    /// In selection order.
    std::vector<Index> hubs;
    /// In breadth-first discovery order from the hubs.
    std::vector<Index> enn;
    /// Ascending.
    std::vector<Index> outliers;
    std::vector<PointRole> role;
    /// Connected component of each point in the undirected kNN graph;
    /// components are numbered by their smallest member.
    std::vector<Index> component_id;

    std::size_t size() const noexcept { return role.size(); }
    bool is_hub(Index i) const { return role[static_cast<std::size_t>(i)] == PointRole::Hub; }
    bool is_enn(Index i) const { return role[static_cast<std::size_t>(i)] == PointRole::ExpandedNeighbor; }
    bool is_outlier(Index i) const { return role[static_cast<std::size_t>(i)] == PointRole::Outlier; }
};

/// Points by descending number of appearances in the table, ties by index.
std::vector<Index> frequency_rank(const NeighborTable& table);

/// Greedy hub selection: repeatedly take the best-ranked point that is
/// neither a hub nor removed, then remove its kNN row from the candidates.
std::vector<Index> select_hubs(const std::vector<Index>& ranked, const NeighborTable& table);

/// Points reachable from the hubs along directed kNN edges, excluding the
/// hubs, in BFS order.
std::vector<Index> expand_enn(const std::vector<Index>& hubs, const NeighborTable& table);

/// Component ids of the undirected graph induced by the table.
std::vector<Index> connected_components(const NeighborTable& table);

PointClassification classify_points(const NeighborTable& table);

inline PointClassification classify_points(const NeighborGraph& graph) { return classify_points(graph.table); }

} // namespace umato
