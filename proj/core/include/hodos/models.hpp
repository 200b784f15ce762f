#pragma once

#include "hodos/complex.hpp"

namespace hodos {

struct ColoringInstance {
    int n = 0;                              // vertex count of G
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> lists;

    int degree(int v) const;
    int max_degree() const;
    int k_minus() const;  // min_v |L(v)| - deg(v)
    int k_plus() const;   // max_v |L(v)| - deg(v)
    void validate() const;
};

struct IsingInstance {
    Matrix J;
    Vector h;

    int n() const { return static_cast<int>(h.size()); }
    double op_norm() const;
    double h_inf() const;
    double h_one() const;
    double theta() const;  // max 2x2 principal submatrix operator norm
    bool psd(double tol = 1e-10) const;
    void validate() const;
};

// n-partite complex over sides {v} x L(v); facets are the proper list
// colorings, uniform weights. Vertex ids are dense; labels "v<v>:c<color>".
Complex coloring_complex(const ColoringInstance& inst,
                         std::size_t guard = 1000000);

// Brute-force proper coloring counter (independent of the backtracking
// enumeration used by coloring_complex).
long long count_proper_colorings(const ColoringInstance& inst);

struct IsingBuild {
    Complex complex;
    double log_z;        // log partition function
    Vector log_weights;  // unnormalized log Gibbs weight per facet
};

// Side i = {(i,+1),(i,-1)}; pi(x) proportional to exp(<x,Jx>/2 + <h,x>).
IsingBuild ising_complex(const IsingInstance& inst, int max_n = 20);

struct Prop51Report {
    double max_lambda2 = 0.0;
    double min_marginal = 1.0;
    double bound_lambda2 = 0.0;  // 1/K-
    double bound_marginal = 0.0; // K- / (Delta + K+)^2
    bool ok = false;
};
Prop51Report prop_5_1_check(const ColoringInstance& inst);

struct Prop52Report {
    double gap_n2 = 1.0;        // min over X^(n-2) of Gap(M_w)
    double min_marginal = 1.0;  // min 1-level pinned marginal
    double bound_gap = 0.0;     // 1 - theta
    double bound_marginal = 0.0;
    bool ok = false;
};
Prop52Report prop_5_2_check(const IsingInstance& inst);

struct Thm54Report {
    double gap = 0.0;
    double bound = 0.0;
    double slack = 0.0;
    bool ok = false;
};
// Gap(Duw_{n<->n-1}) >= (1 - ||J||) / n.
Thm54Report theorem_5_4_check(const IsingInstance& inst);

}  // namespace hodos
