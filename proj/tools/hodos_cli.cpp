#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hodos/io.hpp"
#include "hodos/mixing.hpp"
#include "hodos/models.hpp"
#include "hodos/operators.hpp"
#include "hodos/phi_entropy.hpp"
#include "hodos/sampler.hpp"
#include "hodos/spectral.hpp"
#include "hodos/suite.hpp"

namespace {

using hodos::Complex;
using hodos::LabelledRegularGraph;
using hodos::WalkOperator;
using json = nlohmann::ordered_json;

struct Inputs {
    std::string complex_path, ising_path, coloring_path;
    std::string graph_spec = "clique_loops";
    std::string walk = "down-up";
    int ell = -1;
    double epsilon = 0.25;
    std::uint64_t seed = 0;
    std::string out_dir;
    long long cap_states = 10000;
    std::string format = "json";
};

void add_common(CLI::App* cmd, Inputs& in) {
    cmd->add_option("--complex", in.complex_path, "complex JSON file");
    cmd->add_option("--ising", in.ising_path, "Ising JSON file");
    cmd->add_option("--coloring", in.coloring_path, "list-coloring JSON file");
    cmd->add_option("--graph", in.graph_spec,
                    "auxiliary graph: file path or builtin shorthand");
    cmd->add_option("--ell", in.ell, "restriction level (default n-1)");
    cmd->add_option("--walk", in.walk,
                    "down-up | up-down | systematic-scan | "
                    "expanderized-down-up | expanderized-up-down");
    cmd->add_option("--epsilon", in.epsilon, "TV mixing threshold");
    cmd->add_option("--seed", in.seed, "RNG seed");
    cmd->add_option("--out", in.out_dir, "output directory for artifacts");
    cmd->add_option("--cap-states", in.cap_states, "state-count guard");
    cmd->add_option("--format", in.format, "stdout format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

Complex load_instance(const Inputs& in) {
    int given = !in.complex_path.empty() + !in.ising_path.empty() +
                !in.coloring_path.empty();
    if (given != 1)
        throw hodos::input_error(
            "give exactly one of --complex, --ising, --coloring");
    if (!in.complex_path.empty()) return hodos::load_complex(in.complex_path);
    if (!in.ising_path.empty())
        return hodos::ising_complex(hodos::load_ising(in.ising_path)).complex;
    return hodos::coloring_complex(hodos::load_coloring(in.coloring_path));
}

std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

int effective_ell(const Inputs& in, const Complex& X) {
    int ell = in.ell < 0 ? X.rank() - 1 : in.ell;
    if (ell < 0 || ell > X.rank())
        throw hodos::input_error("--ell out of range");
    return ell;
}

WalkOperator assemble(const Inputs& in, const Complex& X, int ell,
                      const LabelledRegularGraph* H) {
    switch (hodos::walk_kind_from_string(in.walk)) {
        case hodos::WalkKind::DownUp: return hodos::down_up(X, ell);
        case hodos::WalkKind::UpDown: return hodos::up_down(X, ell);
        case hodos::WalkKind::SystematicScan: return hodos::scan_sweep(X);
        case hodos::WalkKind::ExpanderizedDownUp:
            return hodos::expanderized_down_up(X, *H, ell);
        case hodos::WalkKind::ExpanderizedUpDown:
            return hodos::expanderized_up_down(X, *H, ell);
    }
    throw hodos::input_error("unknown walk");
}

bool walk_needs_graph(const std::string& walk) {
    auto k = hodos::walk_kind_from_string(walk);
    return k == hodos::WalkKind::ExpanderizedDownUp ||
           k == hodos::WalkKind::ExpanderizedUpDown;
}

int run_spectra(const Inputs& in) {
    Complex X = load_instance(in);
    int ell = effective_ell(in, X);
    LabelledRegularGraph H;
    const LabelledRegularGraph* hp = nullptr;
    if (walk_needs_graph(in.walk)) {
        H = hodos::resolve_graph(
            in.graph_spec,
            static_cast<int>(hodos::count_subsets(X.rank(), ell)));
        hp = &H;
    }
    WalkOperator P = assemble(in, X, ell, hp);
    if (P.M.rows() > in.cap_states)
        throw hodos::input_error("state count exceeds --cap-states");
    bool rev = hodos::is_reversible(P, 1e-10);
    hodos::SpectralReport rep = hodos::spectrum(P, rev);

    json j;
    j["walk"] = in.walk;
    j["states"] = P.M.rows();
    j["reversible"] = rev;
    j["lambda2"] = fmt(rep.lambda2);
    j["lambda_min"] = fmt(rep.lambda_min);
    j["two_sided_lambda"] = fmt(rep.two_sided_lambda);
    j["gap"] = fmt(rep.gap);
    j["gap_star"] = fmt(rep.gap_star);
    j["psd"] = rep.psd;
    std::cout << j.dump(2) << "\n";

    std::string csv = "index,eigenvalue\n";
    for (std::size_t i = 0; i < rep.eigenvalues.size(); ++i)
        csv += std::to_string(i) + "," + fmt(rep.eigenvalues[i]) + "\n";
    if (!in.out_dir.empty())
        hodos::atomic_write(std::filesystem::path(in.out_dir) /
                                "eigenvalues.csv",
                            csv);
    else if (in.format == "csv")
        std::cout << csv;
    return 0;
}

int run_verify(const Inputs& in) {
    Complex X = load_instance(in);
    int ell = effective_ell(in, X);
    hodos::CorpusInstance inst{"instance", X, std::max(1, ell), "", {}};
    if (X.partite()) {
        inst.graph_spec = in.graph_spec;
        inst.H = hodos::resolve_graph(
            in.graph_spec,
            static_cast<int>(hodos::count_subsets(X.rank(), inst.ell)));
    }
    hodos::SuiteResult result = hodos::run_suite({inst});
    if (!in.out_dir.empty()) hodos::write_suite_artifacts(result, in.out_dir);
    std::cout << (in.format == "csv" ? hodos::suite_csv(result)
                                     : hodos::suite_json(result));
    return result.all_ok() ? 0 : 2;
}

int run_mix(const Inputs& in) {
    Complex X = load_instance(in);
    int ell = effective_ell(in, X);
    if (ell == X.rank()) throw hodos::input_error("--ell must be below n");
    LabelledRegularGraph H;
    if (X.partite())
        H = hodos::resolve_graph(
            in.graph_spec,
            static_cast<int>(hodos::count_subsets(X.rank(), ell)));
    else
        throw hodos::not_partite_error(
            "mix compares expanderized walks and needs a partite complex");
    if (X.level_size(X.rank()) > in.cap_states)
        throw hodos::input_error("state count exceeds --cap-states");

    auto reports = hodos::compare_walks(X, H, ell, in.epsilon);
    json j = json::array();
    for (const auto& r : reports) {
        json row;
        row["walk"] = r.walk;
        row["exact_tmix"] = r.exact_tmix;
        row["capped"] = r.capped;
        row["bound_from_gap"] = fmt(r.bound_from_gap);
        row["bits_per_step"] = r.bits_per_step;
        row["total_index_bits"] = r.total_index_bits;
        j.push_back(std::move(row));

        std::string csv = "t,tv,bits\n";
        for (const auto& [t, tv] : r.tv_curve)
            csv += std::to_string(t) + "," + fmt(tv) + "," +
                   std::to_string(static_cast<long long>(t) * r.bits_per_step) +
                   "\n";
        if (!in.out_dir.empty())
            hodos::atomic_write(std::filesystem::path(in.out_dir) /
                                    ("tv_curve_" + r.walk + ".csv"),
                                csv);
    }
    std::cout << j.dump(2) << "\n";
    if (!in.out_dir.empty())
        hodos::atomic_write(std::filesystem::path(in.out_dir) / "mix.json",
                            j.dump(2) + "\n");
    return 0;
}

int run_sample(const Inputs& in, long long steps) {
    Complex X = load_instance(in);
    int ell = effective_ell(in, X);
    LabelledRegularGraph H;
    hodos::WalkSpec spec;
    spec.kind = hodos::walk_kind_from_string(in.walk);
    spec.ell = ell;
    if (walk_needs_graph(in.walk)) {
        H = hodos::resolve_graph(
            in.graph_spec,
            static_cast<int>(hodos::count_subsets(X.rank(), ell)));
        spec.graph = &H;
    }

    hodos::BitStream rng(in.seed);
    hodos::ChainState s = hodos::initial_state(X, spec, 0);
    std::string csv = "step,state_id,subset_id,bits_used\n";
    auto emit = [&]() {
        int level = (spec.kind == hodos::WalkKind::UpDown ||
                     spec.kind == hodos::WalkKind::ExpanderizedUpDown)
                        ? ell
                        : X.rank();
        csv += std::to_string(s.step) + "," +
               std::to_string(X.face_index(level, s.face)) + ",";
        if (s.subset_rank >= 0) csv += std::to_string(s.subset_rank);
        csv += "," + std::to_string(s.bits_used) + "\n";
    };
    emit();
    for (long long t = 0; t < steps; ++t) {
        s = hodos::sampler_step(X, spec, s, rng);
        emit();
    }
    if (!in.out_dir.empty())
        hodos::atomic_write(std::filesystem::path(in.out_dir) /
                                "trajectory.csv",
                            csv);
    else
        std::cout << csv;
    return 0;
}

int run_expander(const Inputs& in, int vertices) {
    if (vertices < 1)
        throw hodos::input_error("expander: give --vertices >= 1");
    LabelledRegularGraph H = hodos::resolve_graph(in.graph_spec, vertices);
    json j;
    j["vertices"] = H.num_vertices;
    j["degree"] = H.degree;
    j["lambda"] = fmt(hodos::two_sided_lambda(H));
    j["lambda_squared"] = fmt(hodos::two_sided_lambda(hodos::square(H)));
    std::cout << j.dump(2) << "\n";
    if (!in.out_dir.empty())
        hodos::save_graph_file(H,
                               std::filesystem::path(in.out_dir) / "graph.txt");
    return 0;
}

int run_build(const Inputs& in) {
    Complex X = load_instance(in);
    std::string text = hodos::complex_to_json(X);
    if (!in.out_dir.empty())
        hodos::atomic_write(std::filesystem::path(in.out_dir) / "complex.json",
                            text);
    else
        std::cout << text;
    return 0;
}

int run_suite_cmd(const Inputs& in, const std::string& corpus_dir, int count) {
    std::vector<hodos::CorpusInstance> corpus =
        corpus_dir.empty() ? hodos::generate_corpus(in.seed, count)
                           : hodos::load_corpus(corpus_dir);
    hodos::SuiteResult result = hodos::run_suite(corpus);
    std::string out = in.out_dir.empty() ? "suite-out" : in.out_dir;
    hodos::write_suite_artifacts(result, out);
    std::cout << (in.format == "csv" ? hodos::suite_csv(result)
                                     : hodos::suite_json(result));
    return result.all_ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hodos: higher-order random walk workbench"};
    app.require_subcommand(1);

    Inputs in;
    long long steps = 1000;
    int vertices = 0;
    std::string corpus_dir;
    int count = 20;

    CLI::App* spectra = app.add_subcommand("spectra", "eigenvalue report");
    CLI::App* verify = app.add_subcommand("verify", "run all checks");
    CLI::App* mix = app.add_subcommand("mix", "mixing-time comparison");
    CLI::App* sample = app.add_subcommand("sample", "run a chain trajectory");
    CLI::App* expander =
        app.add_subcommand("expander", "build or certify an auxiliary graph");
    CLI::App* build =
        app.add_subcommand("build", "emit the complex for a model instance");
    CLI::App* suite = app.add_subcommand("suite", "aggregate corpus report");

    for (CLI::App* c : {spectra, verify, mix, sample, expander, build, suite})
        add_common(c, in);
    sample->add_option("--steps", steps, "number of steps");
    expander->add_option("--vertices", vertices, "vertex count");
    suite->add_option("corpus-dir", corpus_dir, "directory of instance files");
    suite->add_option("--count", count, "generated corpus size");

    // the workbench is sequential; the env var is honored as a cap
    if (const char* t = std::getenv("HODOS_THREADS"))
        Eigen::setNbThreads(std::max(1, std::atoi(t)));
    else
        Eigen::setNbThreads(1);

    try {
        app.parse(argc, argv);
        if (spectra->parsed()) return run_spectra(in);
        if (verify->parsed()) return run_verify(in);
        if (mix->parsed()) return run_mix(in);
        if (sample->parsed()) return run_sample(in, steps);
        if (expander->parsed()) return run_expander(in, vertices);
        if (build->parsed()) return run_build(in);
        if (suite->parsed()) return run_suite_cmd(in, corpus_dir, count);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const hodos::check_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 2;
    } catch (const hodos::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
