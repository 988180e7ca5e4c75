#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isingbp/graph.hpp"

namespace isingbp {

// Binary pairwise model in the minimal Ising parameterization:
// E(x) = -sum_{(i,j)} J_ij x_i x_j - sum_i theta_i x_i with x_i in {-1,+1}.
// Potentials are kept as (J, theta); exponentials are formed on use.
struct IsingModel {
    Graph graph;
    std::vector<double> couplings;  // one J per edge
    std::vector<double> fields;     // one theta per node

    bool attractive() const {
        for (double j : couplings)
            if (j <= 0.0) return false;
        return true;
    }
};

struct PotentialSpec {
    enum class Kind { Uniform, Explicit, UniformRandom };
    Kind kind = Kind::Uniform;
    double value = 0.0;
    double lo = 0.0, hi = 0.0;
    std::vector<double> values;

    static PotentialSpec uniform(double v) {
        PotentialSpec s;
        s.kind = Kind::Uniform;
        s.value = v;
        return s;
    }
    static PotentialSpec explicit_values(std::vector<double> v) {
        PotentialSpec s;
        s.kind = Kind::Explicit;
        s.values = std::move(v);
        return s;
    }
    static PotentialSpec uniform_random(double lo, double hi) {
        PotentialSpec s;
        s.kind = Kind::UniformRandom;
        s.lo = lo;
        s.hi = hi;
        return s;
    }
};

IsingModel make_ising(Graph graph, const PotentialSpec& coupling_spec,
                      const PotentialSpec& field_spec, std::uint64_t seed = 0);

// Non-overlapping connected patches covering all nodes; each patch carries a
// field sign.
struct PatchLayout {
    std::vector<int> patch_assignment;  // node -> patch id
    std::vector<int> patch_sign;        // patch id -> +1/-1

    int patch_count() const { return static_cast<int>(patch_sign.size()); }
    void validate(const Graph& g) const;
};

// Left/right halves of a rows x cols grid (Example-style two-patch layout).
PatchLayout two_half_layout(int rows, int cols);

IsingModel make_patch_model(int rows, int cols, const PatchLayout& layout, double coupling,
                            double field);

IsingModel scale_couplings(const IsingModel& model, double zeta);

}  // namespace isingbp
