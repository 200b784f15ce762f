#include "hodos/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hodos {

namespace {

// Enumerates all j-subsets of the (sorted) facet, in lexicographic order.
void for_each_subset(const std::vector<int>& elems, int j,
                     const std::function<void(const Face&)>& visit) {
    int k = static_cast<int>(elems.size());
    std::vector<int> idx(j);
    std::iota(idx.begin(), idx.end(), 0);
    Face f;
    f.elements.resize(j);
    while (true) {
        for (int i = 0; i < j; ++i) f.elements[i] = elems[idx[i]];
        visit(f);
        int i = j - 1;
        while (i >= 0 && idx[i] == k - j + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int t = i + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
    }
}

}  // namespace

Complex Complex::build(int num_vertices, const std::vector<FacetInput>& facets,
                       bool partite, std::vector<int> side_of_vertex,
                       std::vector<std::string> labels) {
    if (facets.empty()) throw input_error("build_complex: empty facet list");
    const int n = static_cast<int>(facets[0].vertices.size());
    if (n < 1) throw input_error("build_complex: rank must be >= 1");

    Complex X;
    X.n_ = n;
    X.num_vertices_ = num_vertices;
    X.partite_ = partite;
    if (partite) {
        if (static_cast<int>(side_of_vertex.size()) != num_vertices)
            throw input_error("build_complex: side map size mismatch");
        for (int s : side_of_vertex)
            if (s < 0 || s >= n) throw input_error("build_complex: side index out of range");
        X.side_of_ = std::move(side_of_vertex);
    } else {
        X.side_of_.assign(num_vertices, -1);
    }
    if (labels.empty()) {
        labels.resize(num_vertices);
        for (int v = 0; v < num_vertices; ++v) labels[v] = "v" + std::to_string(v);
    }
    if (static_cast<int>(labels.size()) != num_vertices)
        throw input_error("build_complex: label table size mismatch");
    X.labels_ = std::move(labels);

    // Deduplicate facets (weights summed), keeping first-appearance order.
    std::vector<Face> facet_faces;
    std::vector<double> weights;
    std::unordered_map<Face, int, FaceHash> seen;
    for (const auto& fi : facets) {
        if (static_cast<int>(fi.vertices.size()) != n)
            throw input_error("build_complex: inconsistent facet sizes");
        if (!(fi.weight > 0.0))
            throw input_error("build_complex: facet weight must be positive");
        Face f(fi.vertices);
        for (int i = 1; i < f.size(); ++i)
            if (f.elements[i] == f.elements[i - 1])
                throw input_error("build_complex: duplicate vertex within a facet");
        for (int v : f.elements)
            if (v < 0 || v >= num_vertices)
                throw input_error("build_complex: vertex id out of range");
        if (partite) {
            std::vector<int> sides;
            for (int v : f.elements) sides.push_back(X.side_of_[v]);
            std::sort(sides.begin(), sides.end());
            for (int i = 0; i < n; ++i)
                if (sides[i] != i)
                    throw input_error(
                        "build_complex: partite facet must take one vertex per side");
        }
        auto it = seen.find(f);
        if (it == seen.end()) {
            seen.emplace(f, static_cast<int>(facet_faces.size()));
            facet_faces.push_back(std::move(f));
            weights.push_back(fi.weight);
        } else {
            weights[it->second] += fi.weight;
        }
    }

    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    X.pi_.resize(static_cast<Eigen::Index>(weights.size()));
    for (std::size_t i = 0; i < weights.size(); ++i) {
        double p = weights[i] / total;
        if (p < 1e-15)
            throw input_error("build_complex: facet weight vanishes after normalization");
        X.pi_[static_cast<Eigen::Index>(i)] = p;
    }

    // Materialize all levels eagerly, insertion order driven by facet order.
    X.levels_.resize(n + 1);
    X.index_.resize(n + 1);
    X.cover_.resize(n + 1);
    for (int j = 0; j <= n; ++j) {
        if (j == n) {
            X.levels_[j] = facet_faces;
            for (int i = 0; i < static_cast<int>(facet_faces.size()); ++i) {
                X.index_[j].emplace(facet_faces[i], i);
                X.cover_[j].push_back({i});
            }
            continue;
        }
        for (int fi = 0; fi < static_cast<int>(facet_faces.size()); ++fi) {
            for_each_subset(facet_faces[fi].elements, j, [&](const Face& f) {
                auto it = X.index_[j].find(f);
                if (it == X.index_[j].end()) {
                    int id = static_cast<int>(X.levels_[j].size());
                    X.index_[j].emplace(f, id);
                    X.levels_[j].push_back(f);
                    X.cover_[j].push_back({fi});
                } else {
                    X.cover_[j][it->second].push_back(fi);
                }
            });
        }
    }
    return X;
}

void Complex::check_level(int j) const {
    if (j < 0 || j > n_) throw input_error("level out of range");
}

const std::vector<Face>& Complex::level(int j) const {
    check_level(j);
    return levels_[j];
}

int Complex::face_index(int j, const Face& f) const {
    check_level(j);
    auto it = index_[j].find(f);
    return it == index_[j].end() ? -1 : it->second;
}

bool Complex::has_face(const Face& f) const {
    int j = f.size();
    if (j > n_) return false;
    return face_index(j, f) >= 0;
}

const std::vector<int>& Complex::facets_containing(int j, int face_idx) const {
    check_level(j);
    return cover_[j][face_idx];
}

Vector Complex::level_marginal(int j) const {
    check_level(j);
    const double c = binomial(n_, j);
    Vector out = Vector::Zero(level_size(j));
    for (int i = 0; i < level_size(j); ++i) {
        double m = 0.0;
        for (int fi : cover_[j][i]) m += pi_[fi];
        out[i] = m / c;
    }
    return out;
}

Vector Complex::level_marginal_recursive(int j) const {
    check_level(j);
    Vector cur = pi_;
    for (int k = n_; k > j; --k) {
        Vector next = Vector::Zero(level_size(k - 1));
        for (int bi = 0; bi < level_size(k); ++bi) {
            const Face& beta = levels_[k][bi];
            for_each_subset(beta.elements, k - 1, [&](const Face& alpha) {
                next[index_[k - 1].at(alpha)] += cur[bi] / k;
            });
        }
        cur = std::move(next);
    }
    return cur;
}

std::vector<int> Complex::face_type(const Face& f) const {
    if (!partite_) throw not_partite_error("face_type: complex is not partite");
    std::vector<int> t;
    t.reserve(f.elements.size());
    for (int v : f.elements) t.push_back(side_of_[v]);
    std::sort(t.begin(), t.end());
    return t;
}

Complex::Pinned Complex::pinned(const Face& w) const {
    const int j = w.size();
    int wi = face_index(j, w);
    if (wi < 0) throw input_error("pinned_distribution: w is not a face");

    Pinned out;
    const auto& cover = cover_[j][wi];

    std::vector<int> verts;
    for (int fi : cover)
        for (int v : levels_[n_][fi].minus(w).elements) verts.push_back(v);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    out.parent_vertex = verts;
    std::unordered_map<int, int> to_link;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) to_link[verts[i]] = i;

    std::vector<int> link_side_of;
    std::vector<std::string> link_labels;
    if (partite_) {
        std::vector<int> pinned_sides = face_type(w);
        std::vector<int> side_map(n_, -1);
        int next = 0;
        for (int s = 0; s < n_; ++s) {
            if (!std::binary_search(pinned_sides.begin(), pinned_sides.end(), s)) {
                side_map[s] = next++;
                out.parent_side.push_back(s);
            }
        }
        for (int v : verts) link_side_of.push_back(side_map[side_of_[v]]);
    }
    for (int v : verts) link_labels.push_back(labels_[v]);

    std::vector<FacetInput> link_facets;
    for (int fi : cover) {
        FacetInput in;
        for (int v : levels_[n_][fi].minus(w).elements) in.vertices.push_back(to_link[v]);
        in.weight = pi_[fi];
        link_facets.push_back(std::move(in));
    }
    out.link = Complex::build(static_cast<int>(verts.size()), link_facets, partite_,
                              link_side_of, link_labels);
    return out;
}

LinkGraph Complex::link_graph(const Face& w) const {
    const int j = w.size();
    if (j > n_ - 2) throw input_error("link_graph: pinning too deep (|w| > n-2)");
    int wi = face_index(j, w);
    if (wi < 0) throw input_error("link_graph: w is not a face");
    const int np = n_ - j;

    LinkGraph g;
    for (int fi : cover_[j][wi])
        for (int v : levels_[n_][fi].minus(w).elements) g.vertices.push_back(v);
    std::sort(g.vertices.begin(), g.vertices.end());
    g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()),
                     g.vertices.end());
    const int m = static_cast<int>(g.vertices.size());
    std::unordered_map<int, int> pos;
    for (int i = 0; i < m; ++i) pos[g.vertices[i]] = i;

    double total = 0.0;
    Vector single = Vector::Zero(m);
    Matrix joint = Matrix::Zero(m, m);
    for (int fi : cover_[j][wi]) {
        const double p = pi_[fi];
        total += p;
        Face rest = levels_[n_][fi].minus(w);
        for (int a = 0; a < rest.size(); ++a) {
            int x = pos[rest.elements[a]];
            single[x] += p;
            for (int b = a + 1; b < rest.size(); ++b) {
                int y = pos[rest.elements[b]];
                joint(x, y) += p;
                joint(y, x) += p;
            }
        }
    }

    g.M = Matrix::Zero(m, m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (x != y) g.M(x, y) = joint(x, y) / (single[x] * (np - 1));
    g.stationary = single / (total * np);
    return g;
}

void Complex::enumerate_chains(
    int ell, const std::function<void(const std::vector<Face>&)>& visit) const {
    check_level(ell);
    std::vector<Face> chain(ell + 1);
    for (const Face& f : level(ell)) {
        std::vector<int> order = f.elements;
        // All orderings are valid prefix chains by downward closure.
        do {
            chain[0] = Face{};
            for (int i = 0; i < ell; ++i) chain[i + 1] = chain[i].united(order[i]);
            visit(chain);
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

}  // namespace hodos
