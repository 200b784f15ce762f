#include "hodos/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace hodos {

namespace {

using nlohmann::json;

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw input_error(path.string() + ": " + e.what());
    }
    return j;
}

}  // namespace

Complex parse_complex_json(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(origin + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("facets"))
        throw input_error(origin + ": expected object with \"n\" and \"facets\"");
    const int n = j.at("n").get<int>();
    const bool partite = j.value("partite", false);

    std::map<std::string, int> id_of;
    std::vector<std::string> labels;
    std::vector<int> side_of;
    auto intern = [&](const std::string& label, int side) {
        auto it = id_of.find(label);
        if (it != id_of.end()) return it->second;
        int id = static_cast<int>(labels.size());
        id_of.emplace(label, id);
        labels.push_back(label);
        side_of.push_back(side);
        return id;
    };

    if (j.contains("sides")) {
        const auto& sides = j.at("sides");
        for (std::size_t s = 0; s < sides.size(); ++s)
            for (const auto& lab : sides[s])
                intern(lab.get<std::string>(), static_cast<int>(s));
    }

    std::vector<FacetInput> facets;
    for (const auto& fj : j.at("facets")) {
        if (!fj.contains("assignment"))
            throw input_error(origin + ": facet without \"assignment\"");
        FacetInput f;
        f.weight = fj.value("weight", 1.0);
        const auto& asn = fj.at("assignment");
        for (std::size_t s = 0; s < asn.size(); ++s) {
            const std::string lab = asn[s].get<std::string>();
            // without an explicit sides table, position in the assignment
            // determines the side
            int implied = static_cast<int>(s);
            auto it = id_of.find(lab);
            if (partite && !j.contains("sides") && it == id_of.end())
                f.vertices.push_back(intern(lab, implied));
            else
                f.vertices.push_back(intern(lab, -1));
        }
        facets.push_back(std::move(f));
    }
    if (static_cast<std::size_t>(n) == 0 && !facets.empty())
        throw input_error(origin + ": n = 0 with nonempty facets");
    for (const auto& f : facets)
        if (static_cast<int>(f.vertices.size()) != n)
            throw input_error(origin + ": facet size differs from n");

    if (partite) {
        for (int v = 0; v < static_cast<int>(labels.size()); ++v)
            if (side_of[v] < 0)
                throw input_error(origin + ": vertex \"" + labels[v] +
                                  "\" has no side (missing from \"sides\")");
        return Complex::build(static_cast<int>(labels.size()), facets, true,
                              side_of, labels);
    }
    return Complex::build(static_cast<int>(labels.size()), facets, false, {},
                          labels);
}

Complex load_complex(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_complex_json(ss.str(), path.string());
}

std::string complex_to_json(const Complex& X) {
    const int n = X.rank();
    nlohmann::ordered_json j;
    j["n"] = n;
    j["partite"] = X.partite();
    if (X.partite()) {
        std::vector<std::vector<std::string>> sides(n);
        for (int v = 0; v < X.num_vertices(); ++v)
            sides[X.side_of(v)].push_back(X.label(v));
        j["sides"] = sides;
    }
    auto facets = nlohmann::ordered_json::array();
    for (int i = 0; i < X.level_size(n); ++i) {
        nlohmann::ordered_json fj;
        std::vector<std::string> asn;
        for (int v : X.level(n)[i].elements) asn.push_back(X.label(v));
        fj["assignment"] = asn;
        fj["weight"] = X.pi()[i];
        facets.push_back(std::move(fj));
    }
    j["facets"] = std::move(facets);
    return j.dump(2) + "\n";
}

ColoringInstance load_coloring(const std::filesystem::path& path) {
    json j = load_json(path);
    if (!j.contains("edges") || !j.contains("lists"))
        throw input_error(path.string() + ": expected \"edges\" and \"lists\"");
    ColoringInstance inst;
    inst.n = static_cast<int>(j.at("lists").size());
    for (const auto& e : j.at("edges")) {
        if (e.size() != 2)
            throw input_error(path.string() + ": edge must have two endpoints");
        inst.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    for (const auto& L : j.at("lists"))
        inst.lists.push_back(L.get<std::vector<int>>());
    inst.validate();
    return inst;
}

IsingInstance load_ising(const std::filesystem::path& path) {
    json j = load_json(path);
    if (!j.contains("J") || !j.contains("h"))
        throw input_error(path.string() + ": expected \"J\" and \"h\"");
    const auto& hj = j.at("h");
    const auto& Jj = j.at("J");
    const int n = static_cast<int>(hj.size());
    if (static_cast<int>(Jj.size()) != n)
        throw input_error(path.string() + ": J row count differs from |h|");
    IsingInstance inst;
    inst.h = Vector(n);
    inst.J = Matrix(n, n);
    for (int i = 0; i < n; ++i) {
        inst.h[i] = hj[i].get<double>();
        if (static_cast<int>(Jj[i].size()) != n)
            throw input_error(path.string() + ": J is not square");
        for (int k = 0; k < n; ++k) inst.J(i, k) = Jj[i][k].get<double>();
    }
    inst.validate();
    return inst;
}

LabelledRegularGraph load_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path.string());
    return load_graph(in);
}

void save_graph_file(const LabelledRegularGraph& H,
                     const std::filesystem::path& path) {
    std::ostringstream ss;
    save_graph(H, ss);
    atomic_write(path, ss.str());
}

LabelledRegularGraph resolve_graph(const std::string& spec, int n_vertices) {
    std::string name = spec;
    std::string args;
    if (auto pos = spec.find(':'); pos != std::string::npos) {
        name = spec.substr(0, pos);
        args = spec.substr(pos + 1);
    }
    static const char* builtins[] = {"clique_loops", "cycle",
                                     "hypercube",    "complete",
                                     "self_loops",   "rr",
                                     "random_regular"};
    bool is_builtin = false;
    for (const char* b : builtins) is_builtin |= name == b;
    if (!is_builtin) {
        if (std::filesystem::exists(spec)) {
            LabelledRegularGraph H = load_graph_file(spec);
            if (H.num_vertices != n_vertices)
                throw input_error("graph " + spec + " has " +
                                  std::to_string(H.num_vertices) +
                                  " vertices, expected " +
                                  std::to_string(n_vertices));
            return H;
        }
        throw input_error("unknown graph \"" + spec +
                          "\" (not a builtin, not a file)");
    }

    BuiltinParams params;
    if (!args.empty()) {
        if (args.find('=') == std::string::npos) {
            // bare count, e.g. cycle:6
            int m = std::stoi(args);
            if (m != n_vertices)
                throw input_error("graph " + spec + " has " +
                                  std::to_string(m) + " vertices, expected " +
                                  std::to_string(n_vertices));
        } else {
            std::stringstream ss(args);
            std::string kv;
            while (std::getline(ss, kv, ',')) {
                auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw input_error("malformed graph parameter \"" + kv + "\"");
                std::string key = kv.substr(0, eq);
                std::string val = kv.substr(eq + 1);
                if (key == "k")
                    params.k = std::stoi(val);
                else if (key == "lam")
                    params.lam = std::stod(val);
                else if (key == "seed")
                    params.seed = std::stoull(val);
                else if (key == "tries")
                    params.max_tries = std::stoi(val);
                else
                    throw input_error("unknown graph parameter \"" + key + "\"");
            }
        }
    }
    if (name == "rr" || name == "random_regular") {
        if (params.k < 1)
            throw input_error("graph " + spec + ": rr needs k=<degree>");
        if (params.lam > 0.0)
            return certify_random_regular(n_vertices, params.k, params.lam,
                                          params.max_tries, params.seed);
        return random_regular_graph(n_vertices, params.k, params.seed);
    }
    return builtin_graph(name, n_vertices, params);
}

WalkSpecFile load_walk_spec(const std::filesystem::path& path) {
    json j = load_json(path);
    if (!j.contains("kind"))
        throw input_error(path.string() + ": expected \"kind\"");
    WalkSpecFile spec;
    spec.kind = walk_kind_from_string(j.at("kind").get<std::string>());
    spec.ell = j.value("ell", -1);
    spec.graph = j.value("graph", std::string{});
    return spec;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    auto dir = path.parent_path();
    if (dir.empty()) dir = ".";
    std::filesystem::create_directories(dir);
    auto tmp = dir / (path.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw input_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw input_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace hodos
