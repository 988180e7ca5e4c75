#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace isingbp {

// Simple connected undirected graph with a dense directed-edge index.
// Directed edge (i->j) over undirected edge e=(a,b) gets index
// 2e (when i==a) or 2e+1 (when i==b); the index order is the update
// order used by the round-robin scheduler and the Jacobian rows.
struct Graph {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;
    // adjacency[i] = list of (neighbor, edge id)
    std::vector<std::vector<std::pair<int, int>>> adjacency;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int directed_count() const { return 2 * edge_count(); }
    int degree(int i) const { return static_cast<int>(adjacency[i].size()); }

    int directed_index(int from, int to) const;
    // (source, target) of directed edge m
    std::pair<int, int> directed_endpoints(int m) const {
        const auto& e = edges[m / 2];
        return (m % 2 == 0) ? e : std::pair<int, int>{e.second, e.first};
    }

    // Builds adjacency and validates that the edge list forms a simple
    // connected graph.
    static Graph from_edges(int node_count, std::vector<std::pair<int, int>> edges);
};

Graph build_grid(int rows, int cols, bool periodic = false);
Graph build_complete(int n);
Graph build_random(int n, double avg_degree, std::uint64_t seed);

bool is_bipartite(const Graph& g);

}  // namespace isingbp
