#include "isingbp/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "isingbp/core.hpp"

namespace isingbp {

namespace {

double state_score(const IsingModel& m, std::uint32_t state) {
    // spin of node i: +1 when bit set
    double s = 0.0;
    for (int i = 0; i < m.graph.node_count; ++i)
        s += ((state >> i) & 1u) ? m.fields[i] : -m.fields[i];
    for (int e = 0; e < m.graph.edge_count(); ++e) {
        auto [i, j] = m.graph.edges[e];
        bool same = (((state >> i) ^ (state >> j)) & 1u) == 0;
        s += same ? m.couplings[e] : -m.couplings[e];
    }
    return s;
}

}  // namespace

ExactSummary brute_force(const IsingModel& model) {
    const int n = model.graph.node_count;
    if (n > 22) throw size_limit_error("brute_force limited to N <= 22");
    const std::uint32_t total = 1u << n;

    double best = -std::numeric_limits<double>::infinity();
    for (std::uint32_t s = 0; s < total; ++s) best = std::max(best, state_score(model, s));

    ExactSummary out;
    out.singleton_plus.assign(n, 0.0);
    out.pairwise.assign(model.graph.edge_count(), {0.0, 0.0, 0.0, 0.0});
    double z = 0.0;
    for (std::uint32_t s = 0; s < total; ++s) {
        double w = std::exp(state_score(model, s) - best);
        z += w;
        for (int i = 0; i < n; ++i)
            if ((s >> i) & 1u) out.singleton_plus[i] += w;
        for (int e = 0; e < model.graph.edge_count(); ++e) {
            auto [i, j] = model.graph.edges[e];
            int cell = (((s >> i) & 1u) ? 0 : 2) + (((s >> j) & 1u) ? 0 : 1);
            out.pairwise[e][cell] += w;
        }
    }
    for (auto& p : out.singleton_plus) p /= z;
    for (auto& t : out.pairwise)
        for (auto& v : t) v /= z;
    out.log_partition = best + std::log(z);
    return out;
}

namespace {

struct GridIndex {
    int rows, cols;
    std::vector<int> h_edge;  // (r, c) -> edge id of (r,c)-(r,c+1)
    std::vector<int> v_edge;  // (r, c) -> edge id of (r,c)-(r+1,c)
};

GridIndex map_grid_edges(const IsingModel& m, int rows, int cols) {
    if (m.graph.node_count != rows * cols)
        throw std::invalid_argument("transfer_matrix_grid: node count mismatch");
    GridIndex gi{rows, cols, std::vector<int>(rows * cols, -1), std::vector<int>(rows * cols, -1)};
    auto idx = [cols](int r, int c) { return r * cols + c; };
    int mapped = 0;
    for (int e = 0; e < m.graph.edge_count(); ++e) {
        auto [a, b] = m.graph.edges[e];
        int ra = a / cols, ca = a % cols, rb = b / cols, cb = b % cols;
        if (ra == rb && std::abs(ca - cb) == 1) {
            gi.h_edge[idx(ra, std::min(ca, cb))] = e;
            ++mapped;
        } else if (ca == cb && std::abs(ra - rb) == 1) {
            gi.v_edge[idx(std::min(ra, rb), ca)] = e;
            ++mapped;
        } else {
            throw std::invalid_argument("transfer_matrix_grid: not a grid edge");
        }
    }
    if (mapped != rows * (cols - 1) + cols * (rows - 1))
        throw std::invalid_argument("transfer_matrix_grid: edge set is not the full grid");
    return gi;
}

// one scaled column weight vector: log offset + linear part
struct Scaled {
    std::vector<double> v;
    double log_off = 0.0;
};

}  // namespace

ExactSummary transfer_matrix_grid(const IsingModel& model, int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("transfer_matrix_grid: bad shape");
    if (rows > 16) throw size_limit_error("transfer_matrix_grid limited to rows <= 16");
    const GridIndex gi = map_grid_edges(model, rows, cols);
    const int S = 1 << rows;
    auto idx = [cols](int r, int c) { return r * cols + c; };
    auto spin = [](int s, int r) { return ((s >> r) & 1) ? 1.0 : -1.0; };

    // intra-column score: fields plus vertical couplings
    auto col_score = [&](int c, int s) {
        double w = 0.0;
        for (int r = 0; r < rows; ++r) w += model.fields[idx(r, c)] * spin(s, r);
        for (int r = 0; r + 1 < rows; ++r)
            w += model.couplings[gi.v_edge[idx(r, c)]] * spin(s, r) * spin(s, r + 1);
        return w;
    };

    // Applies the inter-column transfer between c and c+1 as a sequence of
    // row-wise 2x2 contractions, rescaling to keep values bounded.
    auto apply_transfer = [&](Scaled x, int c) {
        for (int r = 0; r < rows; ++r) {
            const double J = model.couplings[gi.h_edge[idx(r, c)]];
            const double ep = std::exp(J), en = std::exp(-J);
            const int bit = 1 << r;
            std::vector<double> nv(S);
            for (int s = 0; s < S; ++s) {
                if (s & bit) continue;
                double lo = x.v[s], hi = x.v[s | bit];
                nv[s] = lo * ep + hi * en;
                nv[s | bit] = lo * en + hi * ep;
            }
            x.v.swap(nv);
            double mx = *std::max_element(x.v.begin(), x.v.end());
            if (mx > 0) {
                for (auto& t : x.v) t /= mx;
                x.log_off += std::log(mx);
            }
        }
        return x;
    };

    auto weight_column = [&](Scaled x, int c) {
        double mx = -std::numeric_limits<double>::infinity();
        for (int s = 0; s < S; ++s) mx = std::max(mx, col_score(c, s));
        for (int s = 0; s < S; ++s) x.v[s] *= std::exp(col_score(c, s) - mx);
        x.log_off += mx;
        double m2 = *std::max_element(x.v.begin(), x.v.end());
        if (m2 > 0) {
            for (auto& t : x.v) t /= m2;
            x.log_off += std::log(m2);
        }
        return x;
    };

    // forward: alpha[c] covers columns 0..c including column c's own terms
    std::vector<Scaled> alpha(cols), beta(cols);
    Scaled acc{std::vector<double>(S, 1.0), 0.0};
    alpha[0] = weight_column(acc, 0);
    for (int c = 1; c < cols; ++c)
        alpha[c] = weight_column(apply_transfer(alpha[c - 1], c - 1), c);

    // backward: beta[c] covers everything right of column c (exclusive)
    beta[cols - 1] = Scaled{std::vector<double>(S, 1.0), 0.0};
    for (int c = cols - 2; c >= 0; --c)
        beta[c] = apply_transfer(weight_column(beta[c + 1], c + 1), c);

    double zsum = 0.0;
    for (int s = 0; s < S; ++s) zsum += alpha[cols - 1].v[s];
    ExactSummary out;
    out.log_partition = std::log(zsum) + alpha[cols - 1].log_off;
    out.singleton_plus.assign(model.graph.node_count, 0.0);
    out.pairwise.assign(model.graph.edge_count(), {0.0, 0.0, 0.0, 0.0});

    // per-column joint: alpha[c] * beta[c] -> singleton and vertical pairs
    for (int c = 0; c < cols; ++c) {
        std::vector<double> p(S);
        double tot = 0.0;
        for (int s = 0; s < S; ++s) {
            p[s] = alpha[c].v[s] * beta[c].v[s];
            tot += p[s];
        }
        for (int s = 0; s < S; ++s) p[s] /= tot;
        for (int r = 0; r < rows; ++r) {
            double plus = 0.0;
            for (int s = 0; s < S; ++s)
                if ((s >> r) & 1) plus += p[s];
            out.singleton_plus[idx(r, c)] = plus;
        }
        for (int r = 0; r + 1 < rows; ++r) {
            const int e = gi.v_edge[idx(r, c)];
            auto [a, b] = model.graph.edges[e];
            std::array<double, 4> t{0, 0, 0, 0};
            for (int s = 0; s < S; ++s) {
                bool pa = (s >> (a / cols)) & 1, pb = (s >> (b / cols)) & 1;
                t[(pa ? 0 : 2) + (pb ? 0 : 1)] += p[s];
            }
            out.pairwise[e] = t;
        }
    }

    // horizontal pairs: contract alpha[c] through the transfer with the
    // tagged row restricted to one (a,b) cell at a time
    for (int c = 0; c + 1 < cols; ++c) {
        Scaled rmsg = weight_column(beta[c + 1], c + 1);  // includes column c+1 terms
        for (int r = 0; r < rows; ++r) {
            const int e = gi.h_edge[idx(r, c)];
            auto [a, b] = model.graph.edges[e];
            const bool a_left = (a % cols) == c;  // orientation of the stored edge
            std::array<double, 4> t{0, 0, 0, 0};
            for (int sa = 0; sa < 2; ++sa) {
                for (int sb = 0; sb < 2; ++sb) {
                    // restrict row r: left spin fixed to sa, right spin to sb
                    const double J = model.couplings[e];
                    const double w = std::exp(J * (sa ? 1.0 : -1.0) * (sb ? 1.0 : -1.0));
                    Scaled x = alpha[c];
                    for (int s = 0; s < S; ++s)
                        if (((s >> r) & 1) != sa) x.v[s] = 0.0;
                    // contract other rows normally, row r with the single entry
                    for (int rr = 0; rr < rows; ++rr) {
                        const int bit2 = 1 << rr;
                        std::vector<double> nv(S, 0.0);
                        if (rr == r) {
                            for (int s = 0; s < S; ++s) {
                                if (s & bit2) continue;
                                double src = sa ? x.v[s | bit2] : x.v[s];
                                if (sb)
                                    nv[s | bit2] = src * w;
                                else
                                    nv[s] = src * w;
                            }
                        } else {
                            const double Jr = model.couplings[gi.h_edge[idx(rr, c)]];
                            const double ep = std::exp(Jr), en = std::exp(-Jr);
                            for (int s = 0; s < S; ++s) {
                                if (s & bit2) continue;
                                double lo = x.v[s], hi = x.v[s | bit2];
                                nv[s] = lo * ep + hi * en;
                                nv[s | bit2] = lo * en + hi * ep;
                            }
                        }
                        x.v.swap(nv);
                    }
                    double cell = 0.0;
                    for (int s = 0; s < S; ++s) cell += x.v[s] * rmsg.v[s];
                    // orientation: stored edge (a,b); a on the left iff a_left
                    int pa = a_left ? sa : sb, pb = a_left ? sb : sa;
                    t[(pa ? 0 : 2) + (pb ? 0 : 1)] = cell;
                }
            }
            double tot = t[0] + t[1] + t[2] + t[3];
            for (auto& v : t) v /= tot;
            out.pairwise[e] = t;
        }
    }
    return out;
}

std::vector<double> gibbs_sample(const IsingModel& model, int sweeps, int burn_in,
                                 std::uint64_t seed) {
    if (!(sweeps > burn_in && burn_in >= 0))
        throw std::invalid_argument("gibbs_sample needs sweeps > burn_in >= 0");
    const int n = model.graph.node_count;
    Rng rng(seed);
    std::vector<int> spin(n);
    for (int i = 0; i < n; ++i) spin[i] = rng.uniform() < 0.5 ? -1 : 1;
    std::vector<double> plus_count(n, 0.0);
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        for (int i = 0; i < n; ++i) {
            double field = model.fields[i];
            for (const auto& [j, e] : model.graph.adjacency[i])
                field += model.couplings[e] * spin[j];
            spin[i] = rng.uniform() < logistic(2.0 * field) ? 1 : -1;
        }
        if (sweep >= burn_in)
            for (int i = 0; i < n; ++i)
                if (spin[i] > 0) plus_count[i] += 1.0;
    }
    const double samples = sweeps - burn_in;
    for (auto& c : plus_count) c /= samples;
    return plus_count;
}

}  // namespace isingbp
