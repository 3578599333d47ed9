#include "umato/classify.hpp"

#include "umato/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace umato {

std::vector<Index> frequency_rank(const NeighborTable& table) {
    std::vector<std::size_t> freq(table.n, 0);
    for (const Index j : table.indices) {
        ++freq[static_cast<std::size_t>(j)];
    }
    std::vector<Index> order(table.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
        return freq[static_cast<std::size_t>(a)] > freq[static_cast<std::size_t>(b)];
    });
    return order;
}

std::vector<Index> select_hubs(const std::vector<Index>& ranked, const NeighborTable& table) {
    if (ranked.size() != table.n) {
        throw InvalidParameter("ranking must cover every point");
    }
    std::vector<unsigned char> taken(table.n, 0);
    std::vector<Index> hubs;
    for (const Index p : ranked) {
        if (taken[static_cast<std::size_t>(p)]) {
            continue;
        }
        hubs.push_back(p);
        taken[static_cast<std::size_t>(p)] = 1;
        for (const Index q : table.row_indices(static_cast<std::size_t>(p))) {
            taken[static_cast<std::size_t>(q)] = 1;
        }
    }
    return hubs;
}

std::vector<Index> expand_enn(const std::vector<Index>& hubs, const NeighborTable& table) {
    std::vector<unsigned char> seen(table.n, 0);
    for (const Index h : hubs) {
        seen[static_cast<std::size_t>(h)] = 1;
    }
    std::deque<Index> queue(hubs.begin(), hubs.end());
    std::vector<Index> enn;
    while (!queue.empty()) {
        const Index p = queue.front();
        queue.pop_front();
        for (const Index q : table.row_indices(static_cast<std::size_t>(p))) {
            if (!seen[static_cast<std::size_t>(q)]) {
                seen[static_cast<std::size_t>(q)] = 1;
                enn.push_back(q);
                queue.push_back(q);
            }
        }
    }
    return enn;
}

namespace {

Index find_root(std::vector<Index>& parent, Index x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

} // namespace

std::vector<Index> connected_components(const NeighborTable& table) {
    std::vector<Index> parent(table.n);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t i = 0; i < table.n; ++i) {
        for (const Index j : table.row_indices(i)) {
            const Index a = find_root(parent, static_cast<Index>(i));
            const Index b = find_root(parent, j);
            if (a != b) {
                // Keep the smaller index as root so ids are canonical.
                parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
    }
    std::vector<Index> comp(table.n);
    for (std::size_t i = 0; i < table.n; ++i) {
        comp[i] = find_root(parent, static_cast<Index>(i));
    }
    return comp;
}

PointClassification classify_points(const NeighborTable& table) {
    PointClassification c;
    c.hubs = select_hubs(frequency_rank(table), table);
    c.enn = expand_enn(c.hubs, table);
    c.role.assign(table.n, PointRole::Outlier);
    for (const Index h : c.hubs) {
        c.role[static_cast<std::size_t>(h)] = PointRole::Hub;
    }
    for (const Index e : c.enn) {
        c.role[static_cast<std::size_t>(e)] = PointRole::ExpandedNeighbor;
    }
    for (std::size_t i = 0; i < table.n; ++i) {
        if (c.role[i] == PointRole::Outlier) {
            c.outliers.push_back(static_cast<Index>(i));
        }
    }
    c.component_id = connected_components(table);
    return c;
}

} // namespace umato
