#include "isingbp/model.hpp"

#include <stdexcept>

#include "isingbp/core.hpp"

namespace isingbp {

namespace {

std::vector<double> realize(const PotentialSpec& spec, std::size_t n, Rng& rng,
                            const char* what) {
    switch (spec.kind) {
        case PotentialSpec::Kind::Uniform:
            return std::vector<double>(n, spec.value);
        case PotentialSpec::Kind::Explicit:
            if (spec.values.size() != n)
                throw std::invalid_argument(std::string(what) + ": explicit list length mismatch");
            return spec.values;
        case PotentialSpec::Kind::UniformRandom: {
            std::vector<double> out(n);
            for (auto& v : out) v = rng.uniform(spec.lo, spec.hi);
            return out;
        }
    }
    throw std::invalid_argument("unknown potential spec");
}

}  // namespace

IsingModel make_ising(Graph graph, const PotentialSpec& coupling_spec,
                      const PotentialSpec& field_spec, std::uint64_t seed) {
    Rng rng(seed);
    IsingModel m;
    m.couplings = realize(coupling_spec, graph.edges.size(), rng, "couplings");
    m.fields = realize(field_spec, static_cast<std::size_t>(graph.node_count), rng, "fields");
    m.graph = std::move(graph);
    return m;
}

void PatchLayout::validate(const Graph& g) const {
    if (static_cast<int>(patch_assignment.size()) != g.node_count)
        throw std::invalid_argument("patch assignment must cover every node");
    const int np = patch_count();
    for (int p : patch_assignment)
        if (p < 0 || p >= np) throw std::invalid_argument("patch id out of range");
    for (int s : patch_sign)
        if (s != 1 && s != -1) throw std::invalid_argument("patch sign must be +-1");
    // each patch induces a connected subgraph
    for (int p = 0; p < np; ++p) {
        int start = -1, members = 0;
        for (int i = 0; i < g.node_count; ++i) {
            if (patch_assignment[i] == p) {
                ++members;
                if (start < 0) start = i;
            }
        }
        if (members == 0) throw std::invalid_argument("empty patch");
        std::vector<char> vis(g.node_count, 0);
        std::vector<int> stack = {start};
        vis[start] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (const auto& [v, e] : g.adjacency[u]) {
                if (!vis[v] && patch_assignment[v] == p) {
                    vis[v] = 1;
                    ++reached;
                    stack.push_back(v);
                }
            }
        }
        if (reached != members) throw std::invalid_argument("disconnected patch");
    }
}

PatchLayout two_half_layout(int rows, int cols) {
    PatchLayout layout;
    layout.patch_assignment.resize(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            layout.patch_assignment[r * cols + c] = (c < cols / 2) ? 0 : 1;
    layout.patch_sign = {+1, -1};
    return layout;
}

IsingModel make_patch_model(int rows, int cols, const PatchLayout& layout, double coupling,
                            double field) {
    if (coupling <= 0.0 || field <= 0.0)
        throw std::invalid_argument("patch model needs J > 0 and theta > 0");
    Graph g = build_grid(rows, cols, false);
    layout.validate(g);
    IsingModel m;
    m.couplings.assign(g.edges.size(), coupling);
    m.fields.resize(g.node_count);
    for (int i = 0; i < g.node_count; ++i)
        m.fields[i] = layout.patch_sign[layout.patch_assignment[i]] * field;
    m.graph = std::move(g);
    return m;
}

IsingModel scale_couplings(const IsingModel& model, double zeta) {
    if (zeta < 0.0 || zeta > 1.0) throw std::invalid_argument("zeta must lie in [0,1]");
    IsingModel scaled = model;
    for (auto& j : scaled.couplings) j *= zeta;
    return scaled;
}

}  // namespace isingbp
