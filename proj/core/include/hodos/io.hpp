#pragma once

#include <filesystem>
#include <string>

#include "hodos/complex.hpp"
#include "hodos/expanders.hpp"
#include "hodos/models.hpp"
#include "hodos/sampler.hpp"

namespace hodos {

// { "n": int, "partite": bool, "sides": [[label,...],...]?, "facets":
//   [{"assignment": [label,...], "weight": number}, ...] }
// Labels are strings; integer ids are assigned in first-appearance order.
Complex load_complex(const std::filesystem::path& path);
Complex parse_complex_json(const std::string& text, const std::string& origin);
std::string complex_to_json(const Complex& X);

// { "edges": [[u,v],...], "lists": [[colors],...] }
ColoringInstance load_coloring(const std::filesystem::path& path);

// { "J": [[...],...], "h": [...] }
IsingInstance load_ising(const std::filesystem::path& path);

LabelledRegularGraph load_graph_file(const std::filesystem::path& path);
void save_graph_file(const LabelledRegularGraph& H,
                     const std::filesystem::path& path);

// Builtin shorthand: "clique_loops", "cycle", "cycle:6", "hypercube",
// "complete", "self_loops", "rr:k=4,lam=0.9,seed=0,tries=64", or a file path.
// n_vertices is the required vertex count (C(n, ell)); an explicit count in
// the shorthand must match it.
LabelledRegularGraph resolve_graph(const std::string& spec, int n_vertices);

// { "kind": string, "ell": int, "graph": path-or-builtin }
struct WalkSpecFile {
    WalkKind kind;
    int ell;
    std::string graph;  // empty when absent
};
WalkSpecFile load_walk_spec(const std::filesystem::path& path);

// temp + rename in the destination directory
void atomic_write(const std::filesystem::path& path, const std::string& content);

}  // namespace hodos
