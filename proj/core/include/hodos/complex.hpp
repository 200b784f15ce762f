#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hodos/common.hpp"
#include "hodos/face.hpp"

namespace hodos {

struct FacetInput {
    std::vector<int> vertices;
    double weight = 1.0;
};

// Link graph M_w on the single-element completions of a pinned face.
struct LinkGraph {
    std::vector<int> vertices;  // parent vertex ids, ascending
    Matrix M;                   // row-stochastic, zero diagonal
    Vector stationary;          // pi_1^{(w)}
};

struct Pinned;

// Weighted pure simplicial complex of rank n with facet distribution pi.
// Immutable after build; all levels are materialized eagerly so the object
// can be shared read-only across threads.
class Complex {
  public:
    static Complex build(int num_vertices, const std::vector<FacetInput>& facets,
                         bool partite, std::vector<int> side_of_vertex = {},
                         std::vector<std::string> labels = {});

    int rank() const { return n_; }
    int num_vertices() const { return num_vertices_; }
    bool partite() const { return partite_; }
    int side_of(int v) const { return side_of_[v]; }
    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    const std::vector<Face>& level(int j) const;
    int level_size(int j) const { return static_cast<int>(level(j).size()); }
    int face_index(int j, const Face& f) const;  // -1 if absent
    bool has_face(const Face& f) const;

    const Vector& pi() const { return pi_; }
    Vector level_marginal(int j) const;            // closed form
    Vector level_marginal_recursive(int j) const;  // one-step recursion

    // Facet indices of facets containing the given face.
    const std::vector<int>& facets_containing(int j, int face_idx) const;

    // Sorted side indices of a face (partite only).
    std::vector<int> face_type(const Face& f) const;

    // defined after the class; carries the link complex of w
    using Pinned = hodos::Pinned;
    Pinned pinned(const Face& w) const;

    LinkGraph link_graph(const Face& w) const;

    // Visits every ell-chain (emptyset = c[0] < c[1] < ... < c[ell]) once.
    void enumerate_chains(
        int ell, const std::function<void(const std::vector<Face>&)>& visit) const;

  private:
    friend struct hodos::Pinned;
    Complex() = default;
    void check_level(int j) const;

    int n_ = 0;
    int num_vertices_ = 0;
    bool partite_ = false;
    std::vector<int> side_of_;
    std::vector<std::string> labels_;
    Vector pi_;
    std::vector<std::vector<Face>> levels_;
    std::vector<std::unordered_map<Face, int, FaceHash>> index_;
    std::vector<std::vector<std::vector<int>>> cover_;  // [j][face] -> facet ids
};

struct Pinned {
    Complex link;                    // rank n - |w|
    std::vector<int> parent_vertex;  // link vertex id -> parent vertex id
    std::vector<int> parent_side;    // link side index -> parent side index
};

}  // namespace hodos
