#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hodos/common.hpp"

namespace hodos {

// k-regular undirected multigraph with a rotation map Out(v, a).
// The multiset of directed label pairs is symmetric; self-loops and parallel
// edges are allowed.
struct LabelledRegularGraph {
    int num_vertices = 0;
    int degree = 0;
    std::vector<int> out;  // out[v * degree + a] = Out(v, a)

    int neighbor(int v, int a) const { return out[v * degree + a]; }

    Matrix walk_matrix() const;       // M(v, w) = #{a : Out(v,a)=w} / k
    void validate() const;            // totality + multiset symmetry
};

LabelledRegularGraph clique_loops_graph(int m);
LabelledRegularGraph cycle_graph(int m);
LabelledRegularGraph hypercube_graph(int m);  // m must be a power of two
LabelledRegularGraph complete_graph(int m);   // no loops, k = m-1
LabelledRegularGraph self_loops_graph(int m);
LabelledRegularGraph random_regular_graph(int m, int k, std::uint64_t seed);

struct BuiltinParams {
    int k = 0;
    double lam = 0.0;
    std::uint64_t seed = 0;
    int max_tries = 64;
};

LabelledRegularGraph builtin_graph(const std::string& name, int n_vertices,
                                   const BuiltinParams& params = {});

LabelledRegularGraph square(const LabelledRegularGraph& H);

double two_sided_lambda(const LabelledRegularGraph& H);

// Draws random regular graphs until lambda(H) <= lambda_target; throws
// check_error with the best lambda found if max_tries is exhausted.
LabelledRegularGraph certify_random_regular(int n_vertices, int k,
                                            double lambda_target, int max_tries,
                                            std::uint64_t seed);

LabelledRegularGraph load_graph(std::istream& in);
void save_graph(const LabelledRegularGraph& H, std::ostream& out);

}  // namespace hodos
