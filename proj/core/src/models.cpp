#include "hodos/models.hpp"

#include <algorithm>
#include <cmath>

#include "hodos/spectral.hpp"

namespace hodos {

int ColoringInstance::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges)
        if (a == v || b == v) ++d;
    return d;
}

int ColoringInstance::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

int ColoringInstance::k_minus() const {
    int k = static_cast<int>(lists[0].size()) - degree(0);
    for (int v = 1; v < n; ++v)
        k = std::min(k, static_cast<int>(lists[v].size()) - degree(v));
    return k;
}

int ColoringInstance::k_plus() const {
    int k = static_cast<int>(lists[0].size()) - degree(0);
    for (int v = 1; v < n; ++v)
        k = std::max(k, static_cast<int>(lists[v].size()) - degree(v));
    return k;
}

void ColoringInstance::validate() const {
    if (n < 1) throw input_error("coloring: need at least one vertex");
    if (static_cast<int>(lists.size()) != n)
        throw input_error("coloring: list table size mismatch");
    for (const auto& L : lists)
        if (L.empty()) throw input_error("coloring: empty color list");
    std::vector<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw input_error("coloring: edge endpoint out of range");
        if (a == b) throw input_error("coloring: self-loop");
        seen.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw input_error("coloring: parallel edge");
}

namespace {

// Backtracking in vertex order with forward checking against colored
// neighbors; emits colorings in lexicographic order of color tuples.
void enumerate_colorings(const ColoringInstance& inst, std::size_t guard,
                         const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<std::vector<int>> nbrs(inst.n);
    for (auto [a, b] : inst.edges) {
        nbrs[a].push_back(b);
        nbrs[b].push_back(a);
    }
    std::vector<int> color(inst.n, -1);
    std::size_t count = 0;
    std::function<void(int)> rec = [&](int v) {
        if (v == inst.n) {
            if (++count > guard)
                throw input_error("coloring: enumeration guard exceeded");
            emit(color);
            return;
        }
        for (int c : inst.lists[v]) {
            bool ok = true;
            for (int u : nbrs[v])
                if (u < v && color[u] == c) {
                    ok = false;
                    break;
                }
            if (ok) {
                color[v] = c;
                rec(v + 1);
                color[v] = -1;
            }
        }
    };
    rec(0);
}

}  // namespace

Complex coloring_complex(const ColoringInstance& inst, std::size_t guard) {
    inst.validate();
    // dense vertex ids for the (vertex, color) pairs, in list order
    std::vector<std::vector<int>> pair_id(inst.n);
    std::vector<int> side_of;
    std::vector<std::string> labels;
    int next = 0;
    for (int v = 0; v < inst.n; ++v) {
        for (int c : inst.lists[v]) {
            pair_id[v].push_back(next++);
            side_of.push_back(v);
            labels.push_back("v" + std::to_string(v) + ":c" + std::to_string(c));
        }
    }
    std::vector<FacetInput> facets;
    enumerate_colorings(inst, guard, [&](const std::vector<int>& color) {
        FacetInput f;
        for (int v = 0; v < inst.n; ++v) {
            int ci = static_cast<int>(
                std::find(inst.lists[v].begin(), inst.lists[v].end(), color[v]) -
                inst.lists[v].begin());
            f.vertices.push_back(pair_id[v][ci]);
        }
        facets.push_back(std::move(f));
    });
    if (facets.empty()) throw input_error("coloring: no proper coloring exists");
    return Complex::build(next, facets, true, side_of, labels);
}

long long count_proper_colorings(const ColoringInstance& inst) {
    inst.validate();
    long long count = 0;
    std::vector<int> pick(inst.n, 0);
    while (true) {
        bool proper = true;
        for (auto [a, b] : inst.edges)
            if (inst.lists[a][pick[a]] == inst.lists[b][pick[b]]) {
                proper = false;
                break;
            }
        if (proper) ++count;
        int v = inst.n - 1;
        while (v >= 0 && pick[v] + 1 == static_cast<int>(inst.lists[v].size()))
            pick[v--] = 0;
        if (v < 0) break;
        ++pick[v];
    }
    return count;
}

double IsingInstance::op_norm() const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(J);
    return std::max(std::abs(es.eigenvalues().minCoeff()),
                    std::abs(es.eigenvalues().maxCoeff()));
}

double IsingInstance::h_inf() const {
    return h.size() == 0 ? 0.0 : h.cwiseAbs().maxCoeff();
}

double IsingInstance::h_one() const { return h.cwiseAbs().sum(); }

double IsingInstance::theta() const {
    double t = 0.0;
    for (int a = 0; a < n(); ++a)
        for (int b = a + 1; b < n(); ++b) {
            // closed-form operator norm of a symmetric 2x2 block
            double p = J(a, a), q = J(a, b), r = J(b, b);
            double mid = 0.5 * (p + r);
            double rad = std::sqrt(0.25 * (p - r) * (p - r) + q * q);
            t = std::max(t, std::max(std::abs(mid + rad), std::abs(mid - rad)));
        }
    return t;
}

bool IsingInstance::psd(double tol) const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(J);
    return es.eigenvalues().minCoeff() >= -tol;
}

void IsingInstance::validate() const {
    if (J.rows() != n() || J.cols() != n())
        throw input_error("ising: J dimension mismatch");
    if ((J - J.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw input_error("ising: J must be symmetric");
}

IsingBuild ising_complex(const IsingInstance& inst, int max_n) {
    inst.validate();
    const int n = inst.n();
    if (n < 1 || n > max_n) throw input_error("ising: enumeration guard exceeded");

    // vertex 2i = (i,+1), 2i+1 = (i,-1)
    std::vector<int> side_of(2 * n);
    std::vector<std::string> labels(2 * n);
    for (int i = 0; i < n; ++i) {
        side_of[2 * i] = side_of[2 * i + 1] = i;
        labels[2 * i] = "s" + std::to_string(i) + ":+1";
        labels[2 * i + 1] = "s" + std::to_string(i) + ":-1";
    }

    const long long states = 1ll << n;
    Vector log_w(states);
    Vector x(n);
    double max_lw = -1e300;
    for (long long mask = 0; mask < states; ++mask) {
        for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1 ? 1.0 : -1.0;
        log_w[mask] = 0.5 * x.dot(inst.J * x) + inst.h.dot(x);
        max_lw = std::max(max_lw, log_w[mask]);
    }
    double z_shifted = 0.0;
    for (long long mask = 0; mask < states; ++mask)
        z_shifted += std::exp(log_w[mask] - max_lw);

    std::vector<FacetInput> facets;
    facets.reserve(states);
    for (long long mask = 0; mask < states; ++mask) {
        FacetInput f;
        for (int i = 0; i < n; ++i)
            f.vertices.push_back((mask >> i) & 1 ? 2 * i : 2 * i + 1);
        f.weight = std::exp(log_w[mask] - max_lw);
        facets.push_back(std::move(f));
    }
    IsingBuild out{Complex::build(2 * n, facets, true, side_of, labels),
                   max_lw + std::log(z_shifted), log_w};
    return out;
}

Prop51Report prop_5_1_check(const ColoringInstance& inst) {
    Complex Y = coloring_complex(inst);
    const int n = Y.rank();
    if (n < 2) throw input_error("prop_5_1_check: need n >= 2");
    Prop51Report rep;
    rep.bound_lambda2 = 1.0 / inst.k_minus();
    double dkp = inst.max_degree() + inst.k_plus();
    rep.bound_marginal = inst.k_minus() / (dkp * dkp);
    for (const Face& w : Y.level(n - 2)) {
        LinkGraph lg = Y.link_graph(w);
        WalkOperator M{lg.M, lg.stationary, lg.stationary};
        rep.max_lambda2 = std::max(rep.max_lambda2, spectrum(M).lambda2);
        rep.min_marginal = std::min(rep.min_marginal, lg.stationary.minCoeff());
    }
    rep.ok = rep.max_lambda2 <= rep.bound_lambda2 + 1e-9 &&
             rep.min_marginal >= rep.bound_marginal - 1e-9;
    return rep;
}

Prop52Report prop_5_2_check(const IsingInstance& inst) {
    inst.validate();
    if (!inst.psd() || inst.op_norm() > 1.0 + 1e-12)
        throw input_error("prop_5_2_check: needs J PSD with ||J|| <= 1");
    Complex Y = ising_complex(inst).complex;
    const int n = Y.rank();
    if (n < 2) throw input_error("prop_5_2_check: need n >= 2");
    Prop52Report rep;
    rep.bound_gap = 1.0 - inst.theta();
    rep.bound_marginal = 0.5 * std::exp(-4.0 * inst.h_inf() - 1.0);
    for (const Face& w : Y.level(n - 2)) {
        LinkGraph lg = Y.link_graph(w);
        WalkOperator M{lg.M, lg.stationary, lg.stationary};
        rep.gap_n2 = std::min(rep.gap_n2, spectrum(M).gap);
        rep.min_marginal = std::min(rep.min_marginal, lg.stationary.minCoeff());
    }
    rep.ok = rep.gap_n2 >= rep.bound_gap - 1e-9 &&
             rep.min_marginal >= rep.bound_marginal - 1e-9;
    return rep;
}

Thm54Report theorem_5_4_check(const IsingInstance& inst) {
    inst.validate();
    const int n = inst.n();
    if (n > 12) throw input_error("theorem_5_4_check: guard exceeded (n > 12)");
    double norm = inst.op_norm();
    if (!inst.psd() || norm > 1.0 + 1e-12)
        throw input_error("theorem_5_4_check: needs J PSD with ||J|| <= 1");
    Complex Y = ising_complex(inst).complex;
    WalkOperator duw = down_up(Y, n - 1);
    Thm54Report rep;
    rep.gap = spectrum(duw).gap;
    rep.bound = (1.0 - norm) / n;
    rep.slack = rep.gap - rep.bound;
    rep.ok = rep.slack >= -1e-9;
    return rep;
}

}  // namespace hodos
