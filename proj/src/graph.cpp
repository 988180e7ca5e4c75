#include "isingbp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "isingbp/core.hpp"

namespace isingbp {

int Graph::directed_index(int from, int to) const {
    for (const auto& [nbr, e] : adjacency[from]) {
        if (nbr == to) return 2 * e + (edges[e].first == from ? 0 : 1);
    }
    throw std::invalid_argument("directed_index: no edge between nodes");
}

Graph Graph::from_edges(int node_count, std::vector<std::pair<int, int>> edge_list) {
    if (node_count < 1) throw std::invalid_argument("graph needs at least one node");
    Graph g;
    g.node_count = node_count;
    g.edges = std::move(edge_list);
    g.adjacency.assign(node_count, {});
    std::set<std::pair<int, int>> seen;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [i, j] = g.edges[e];
        if (i < 0 || j < 0 || i >= node_count || j >= node_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (i == j) throw std::invalid_argument("self-loop");
        if (!seen.insert({std::min(i, j), std::max(i, j)}).second)
            throw std::invalid_argument("parallel edge");
        g.adjacency[i].push_back({j, e});
        g.adjacency[j].push_back({i, e});
    }
    // connectivity: BFS from node 0
    std::vector<char> vis(node_count, 0);
    std::vector<int> stack = {0};
    vis[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& [v, e] : g.adjacency[u]) {
            if (!vis[v]) {
                vis[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    if (reached != node_count) throw std::invalid_argument("graph not connected");
    return g;
}

Graph build_grid(int rows, int cols, bool periodic) {
    if (rows < 2 || cols < 2) throw std::invalid_argument("grid dimensions must be >= 2");
    if (periodic && (rows < 3 || cols < 3))
        throw std::invalid_argument("periodic grid needs both dimensions >= 3");
    auto idx = [cols](int r, int c) { return r * cols + c; };
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols)
                edges.push_back({idx(r, c), idx(r, c + 1)});
            else if (periodic)
                edges.push_back({idx(r, c), idx(r, 0)});
            if (r + 1 < rows)
                edges.push_back({idx(r, c), idx(r + 1, c)});
            else if (periodic)
                edges.push_back({idx(r, c), idx(0, c)});
        }
    }
    return Graph::from_edges(rows * cols, std::move(edges));
}

Graph build_complete(int n) {
    if (n < 2) throw std::invalid_argument("complete graph needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph::from_edges(n, std::move(edges));
}

Graph build_random(int n, double avg_degree, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random graph needs n >= 2");
    const long long want = std::llround(avg_degree * n / 2.0);
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (want < n - 1 || want > max_edges)
        throw std::invalid_argument("edge count not achievable on a connected simple graph");

    Rng rng(seed);
    // random spanning tree: attach each node to a uniformly chosen earlier one
    std::set<std::pair<int, int>> present;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng.below(v));
        edges.push_back({u, v});
        present.insert({u, v});
    }
    // fill the remainder uniformly over missing pairs
    while (static_cast<long long>(edges.size()) < want) {
        int i = static_cast<int>(rng.below(n));
        int j = static_cast<int>(rng.below(n));
        if (i == j) continue;
        auto key = std::pair{std::min(i, j), std::max(i, j)};
        if (present.insert(key).second) edges.push_back(key);
    }
    return Graph::from_edges(n, std::move(edges));
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.node_count, -1);
    std::vector<int> queue = {0};
    color[0] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
        int u = queue[q];
        for (const auto& [v, e] : g.adjacency[u]) {
            if (color[v] == -1) {
                color[v] = 1 - color[u];
                queue.push_back(v);
            } else if (color[v] == color[u]) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace isingbp
