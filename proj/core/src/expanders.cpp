#include "hodos/expanders.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace hodos {

Matrix LabelledRegularGraph::walk_matrix() const {
    Matrix M = Matrix::Zero(num_vertices, num_vertices);
    for (int v = 0; v < num_vertices; ++v)
        for (int a = 0; a < degree; ++a) M(v, neighbor(v, a)) += 1.0 / degree;
    return M;
}

void LabelledRegularGraph::validate() const {
    if (num_vertices < 1 || degree < 1)
        throw input_error("graph: need at least one vertex and degree >= 1");
    if (static_cast<int>(out.size()) != num_vertices * degree)
        throw input_error("graph: rotation map is not total");
    std::map<std::pair<int, int>, int> count;
    for (int v = 0; v < num_vertices; ++v)
        for (int a = 0; a < degree; ++a) {
            int w = neighbor(v, a);
            if (w < 0 || w >= num_vertices)
                throw input_error("graph: neighbor id out of range");
            ++count[{v, w}];
        }
    for (const auto& [e, c] : count) {
        auto it = count.find({e.second, e.first});
        if (it == count.end() || it->second != c)
            throw input_error("graph: directed edge multiset is not symmetric");
    }
}

LabelledRegularGraph clique_loops_graph(int m) {
    if (m < 1) throw input_error("clique_loops: need m >= 1");
    LabelledRegularGraph H{m, m, std::vector<int>(static_cast<std::size_t>(m) * m)};
    for (int v = 0; v < m; ++v)
        for (int a = 0; a < m; ++a) H.out[v * m + a] = a;
    return H;
}

LabelledRegularGraph cycle_graph(int m) {
    if (m < 1) throw input_error("cycle: need m >= 1");
    LabelledRegularGraph H{m, 2, std::vector<int>(static_cast<std::size_t>(m) * 2)};
    for (int v = 0; v < m; ++v) {
        H.out[v * 2 + 0] = (v + 1) % m;
        H.out[v * 2 + 1] = (v - 1 + m) % m;
    }
    return H;
}

LabelledRegularGraph hypercube_graph(int m) {
    int d = 0;
    while ((1 << d) < m) ++d;
    if (m < 2 || (1 << d) != m)
        throw input_error("hypercube: vertex count must be a power of two >= 2");
    LabelledRegularGraph H{m, d, std::vector<int>(static_cast<std::size_t>(m) * d)};
    for (int v = 0; v < m; ++v)
        for (int a = 0; a < d; ++a) H.out[v * d + a] = v ^ (1 << a);
    return H;
}

LabelledRegularGraph complete_graph(int m) {
    if (m < 2) throw input_error("complete: need m >= 2");
    int k = m - 1;
    LabelledRegularGraph H{m, k, std::vector<int>(static_cast<std::size_t>(m) * k)};
    for (int v = 0; v < m; ++v)
        for (int a = 0; a < k; ++a) H.out[v * k + a] = a < v ? a : a + 1;
    return H;
}

LabelledRegularGraph self_loops_graph(int m) {
    if (m < 1) throw input_error("self_loops: need m >= 1");
    LabelledRegularGraph H{m, 1, std::vector<int>(m)};
    for (int v = 0; v < m; ++v) H.out[v] = v;
    return H;
}

// Permutation model: k/2 random permutations used in both directions, plus a
// random perfect matching when k is odd (requires even m).
LabelledRegularGraph random_regular_graph(int m, int k, std::uint64_t seed) {
    if (m < 1 || k < 1) throw input_error("random_regular: need m >= 1, k >= 1");
    if ((k % 2) == 1 && (m % 2) == 1)
        throw input_error("random_regular: odd degree needs an even vertex count");
    std::mt19937_64 rng(seed);
    LabelledRegularGraph H{m, k, std::vector<int>(static_cast<std::size_t>(m) * k)};
    std::vector<int> perm(m);
    for (int j = 0; j < k / 2; ++j) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int v = 0; v < m; ++v) {
            H.out[v * k + 2 * j] = perm[v];
            H.out[perm[v] * k + 2 * j + 1] = v;
        }
    }
    if (k % 2 == 1) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int i = 0; i < m; i += 2) {
            H.out[perm[i] * k + (k - 1)] = perm[i + 1];
            H.out[perm[i + 1] * k + (k - 1)] = perm[i];
        }
    }
    return H;
}

LabelledRegularGraph builtin_graph(const std::string& name, int n_vertices,
                                   const BuiltinParams& params) {
    if (name == "clique_loops") return clique_loops_graph(n_vertices);
    if (name == "cycle") return cycle_graph(n_vertices);
    if (name == "hypercube") return hypercube_graph(n_vertices);
    if (name == "complete") return complete_graph(n_vertices);
    if (name == "self_loops") return self_loops_graph(n_vertices);
    if (name == "random_regular")
        return random_regular_graph(n_vertices, params.k, params.seed);
    throw input_error("unknown builtin graph: " + name);
}

LabelledRegularGraph square(const LabelledRegularGraph& H) {
    const int m = H.num_vertices, k = H.degree;
    LabelledRegularGraph S{m, k * k,
                           std::vector<int>(static_cast<std::size_t>(m) * k * k)};
    for (int v = 0; v < m; ++v)
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                S.out[v * k * k + a * k + b] = H.neighbor(H.neighbor(v, a), b);
    return S;
}

double two_sided_lambda(const LabelledRegularGraph& H) {
    H.validate();
    if (H.num_vertices == 1) return 0.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(H.walk_matrix());
    const auto& ev = es.eigenvalues();
    const int m = H.num_vertices;
    double lam = std::max(ev[m - 2], std::abs(ev[0]));
    return std::clamp(lam, 0.0, 1.0);
}

LabelledRegularGraph certify_random_regular(int n_vertices, int k,
                                            double lambda_target, int max_tries,
                                            std::uint64_t seed) {
    if (!(lambda_target > 0.0 && lambda_target < 1.0))
        throw input_error("certify_random_regular: target must be in (0,1)");
    if (k == n_vertices) return clique_loops_graph(n_vertices);
    double best = 2.0;
    for (int t = 0; t < max_tries; ++t) {
        LabelledRegularGraph H = random_regular_graph(n_vertices, k, seed + t);
        double lam = two_sided_lambda(H);
        if (lam <= lambda_target) return H;
        best = std::min(best, lam);
    }
    std::ostringstream msg;
    msg << "certify_random_regular: target " << lambda_target << " not met in "
        << max_tries << " tries (best lambda " << best << ")";
    throw check_error(msg.str());
}

LabelledRegularGraph load_graph(std::istream& in) {
    int m, k;
    if (!(in >> m >> k)) throw input_error("graph file: bad header");
    if (m < 1 || k < 1) throw input_error("graph file: bad dimensions");
    LabelledRegularGraph H{m, k, std::vector<int>(static_cast<std::size_t>(m) * k)};
    for (int v = 0; v < m; ++v)
        for (int a = 0; a < k; ++a)
            if (!(in >> H.out[v * k + a]))
                throw input_error("graph file: truncated at vertex " +
                                  std::to_string(v));
    H.validate();
    return H;
}

void save_graph(const LabelledRegularGraph& H, std::ostream& out) {
    out << H.num_vertices << " " << H.degree << "\n";
    for (int v = 0; v < H.num_vertices; ++v) {
        for (int a = 0; a < H.degree; ++a)
            out << (a ? " " : "") << H.neighbor(v, a);
        out << "\n";
    }
}

}  // namespace hodos
