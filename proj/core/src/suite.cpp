#include "hodos/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include <json.hpp>

#include "hodos/io.hpp"
#include "hodos/mixing.hpp"
#include "hodos/models.hpp"
#include "hodos/operators.hpp"
#include "hodos/phi_entropy.hpp"
#include "hodos/sampler.hpp"
#include "hodos/spectral.hpp"

namespace hodos {

namespace {

Complex random_product_complex(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> npick(2, 4);
    std::uniform_real_distribution<double> logw(-1.0, 1.0);
    const int n = npick(rng);
    std::vector<int> sizes(n);
    std::uniform_int_distribution<int> spick(1, 3);
    for (int& s : sizes) s = spick(rng);
    if (*std::max_element(sizes.begin(), sizes.end()) == 1) sizes[0] = 2;

    std::vector<int> side_of;
    std::vector<int> base(n);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        base[s] = next;
        for (int i = 0; i < sizes[s]; ++i) {
            side_of.push_back(s);
            ++next;
        }
    }
    std::vector<FacetInput> facets;
    std::vector<int> pick(n, 0);
    while (true) {
        FacetInput f;
        for (int s = 0; s < n; ++s) f.vertices.push_back(base[s] + pick[s]);
        f.weight = std::exp(logw(rng));
        facets.push_back(std::move(f));
        int s = n - 1;
        while (s >= 0 && pick[s] + 1 == sizes[s]) pick[s--] = 0;
        if (s < 0) break;
        ++pick[s];
    }
    return Complex::build(next, facets, true, side_of);
}

Complex random_complete_complex(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> npick(2, 3);
    std::uniform_real_distribution<double> logw(-1.0, 1.0);
    const int n = npick(rng);
    std::uniform_int_distribution<int> extra(1, 3);
    const int m = n + extra(rng);
    std::vector<FacetInput> facets;
    for (const auto& s : all_subsets_colex(m, n)) {
        FacetInput f;
        f.vertices = s;
        f.weight = std::exp(logw(rng));
        facets.push_back(std::move(f));
    }
    return Complex::build(m, facets, false);
}

std::string graph_spec_for(int i, long long m) {
    switch (i % 4) {
        case 0: return "clique_loops";
        case 1: return "cycle";
        case 2: return m >= 2 ? "complete" : "clique_loops";
        default:
            if (m >= 2 && (m & (m - 1)) == 0) return "hypercube";
            return "rr:k=2,seed=" + std::to_string(i);
    }
}

std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace

std::vector<CorpusInstance> generate_corpus(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<CorpusInstance> corpus;
    for (int i = 0; i < count; ++i) {
        const bool partite = i % 5 != 4;
        Complex X = partite ? random_product_complex(rng)
                            : random_complete_complex(rng);
        const int n = X.rank();
        std::uniform_int_distribution<int> lpick(1, n - 1);
        CorpusInstance inst{"gen-" + std::to_string(i), X, lpick(rng), "", {}};
        if (partite) {
            long long m = count_subsets(n, inst.ell);
            inst.graph_spec = graph_spec_for(i, m);
            inst.H = resolve_graph(inst.graph_spec, static_cast<int>(m));
        }
        corpus.push_back(std::move(inst));
    }
    return corpus;
}

std::vector<CorpusInstance> load_corpus(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw input_error("corpus: not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());

    std::vector<CorpusInstance> corpus;
    for (const auto& p : files) {
        Complex X = load_complex(p);
        CorpusInstance inst{p.stem().string(), X, std::max(1, X.rank() - 1),
                            "", {}};
        if (X.partite()) {
            long long m = count_subsets(X.rank(), inst.ell);
            inst.graph_spec = "cycle";
            inst.H = resolve_graph(inst.graph_spec, static_cast<int>(m));
        }
        corpus.push_back(std::move(inst));
    }
    return corpus;
}

namespace {

struct RowSink {
    SuiteResult& result;
    const std::string& instance;

    void add(const std::string& check, bool ok, double slack) {
        result.rows.push_back({instance, check, ok ? "pass" : "fail", slack});
        ++(ok ? result.passed : result.failed);
    }
    void skip(const std::string& check) {
        result.rows.push_back({instance, check, "skipped: requires partite", 0.0});
        ++result.skipped;
    }
    void error(const std::string& check, const std::string& what) {
        result.rows.push_back({instance, check, "fail: " + what, 0.0});
        ++result.failed;
    }
};

double reversibility_deviation(const WalkOperator& P) {
    double dev = ((P.M.transpose() * P.mu_in) - P.mu_out).cwiseAbs().maxCoeff();
    for (Eigen::Index x = 0; x < P.M.rows(); ++x)
        for (Eigen::Index y = 0; y < P.M.cols(); ++y)
            dev = std::max(dev, std::abs(P.mu_in[x] * P.M(x, y) -
                                         P.mu_in[y] * P.M(y, x)));
    return dev;
}

void run_instance(const CorpusInstance& inst, SuiteResult& result) {
    const Complex& X = inst.complex;
    const int n = X.rank();
    const int ell = inst.ell;
    RowSink sink{result, inst.name};
    const CorpusOptions fn_opts{50, 0, 50};

    // level marginals: closed form vs one-step recursion
    {
        double dev = 0.0;
        for (int j = 0; j <= n; ++j)
            dev = std::max(dev, (X.level_marginal(j) -
                                 X.level_marginal_recursive(j))
                                    .cwiseAbs()
                                    .maxCoeff());
        sink.add("marginals", dev <= 1e-12, 1e-12 - dev);
    }

    WalkOperator duw = down_up(X, ell);
    WalkOperator udw = up_down(X, ell);

    try {
        duw.validate();
        udw.validate();
        sink.add("operator-rowsums", true, 0.0);
    } catch (const error& e) {
        sink.error("operator-rowsums", e.what());
    }

    {
        double dev = std::max(reversibility_deviation(duw),
                              reversibility_deviation(udw));
        sink.add("reversibility", dev <= 1e-12, 1e-12 - dev);
        double lmin = std::min(spectrum(duw).eigenvalues.back(),
                               spectrum(udw).eigenvalues.back());
        sink.add("psd", lmin >= -1e-10, lmin + 1e-10);
    }

    if (X.partite()) {
        const LabelledRegularGraph& H = inst.H;
        WalkOperator papx = expanderized_up_down(X, H, ell);
        WalkOperator paqx = expanderized_down_up(X, H, ell);

        double dev = std::max(reversibility_deviation(papx),
                              reversibility_deviation(paqx));
        sink.add("expanderized-reversibility", dev <= 1e-12, 1e-12 - dev);
        double lmin = spectrum(paqx).eigenvalues.back();
        sink.add("expanderized-psd", lmin >= -1e-10, lmin + 1e-10);

        double lam = two_sided_lambda(H);
        double norm_dev = operator_norm_deviation(X, H, ell);
        sink.add("operator-norm-deviation", norm_dev <= lam + 1e-9,
                 lam + 1e-9 - norm_dev);

        GapLiftReport lift = gap_lifting_check(X, H, ell);
        sink.add("gap-lifting", lift.ok,
                 std::min(lift.slack_up_down, lift.slack_down_up));

        CheckReport ls = ls_lifting_check(X, H, ell, fn_opts);
        sink.add("ls-lifting", ls.ok, ls.worst_slack);

        double c_ec = log_sobolev_lower_bound(udw) *
                      (1.0 - two_sided_lambda(square(H)));
        CheckReport ec =
            entropy_contraction_check(q_down(X, H, ell), c_ec, fn_opts);
        sink.add("entropy-contraction", ec.ok, ec.worst_slack);

        int exp_bits = 2 * bits_for(H.degree);
        int dense_bits = bits_for(count_subsets(n, ell));
        WalkSpec wspec{WalkKind::ExpanderizedDownUp, ell, &H};
        WalkSpec dspec{WalkKind::DownUp, ell, nullptr};
        bool bits_ok = index_bits_per_step(X, wspec) == exp_bits &&
                       index_bits_per_step(X, dspec) == dense_bits;
        if (exp_bits < dense_bits)
            bits_ok = bits_ok &&
                      index_bits_per_step(X, wspec) <
                          index_bits_per_step(X, dspec);
        sink.add("bit-accounting", bits_ok,
                 static_cast<double>(dense_bits - exp_bits));
    } else {
        for (const char* c :
             {"expanderized-reversibility", "expanderized-psd",
              "operator-norm-deviation", "gap-lifting", "ls-lifting",
              "entropy-contraction", "bit-accounting"})
            sink.skip(c);
    }

    {
        CertificateReport cert =
            theorem_4_1_certificate(X, ell, PhiSpec::square());
        sink.add("chain-certificate", cert.cf_slack >= -1e-9, cert.cf_slack);
        sink.add("gap-product-bound", cert.cor42_slack >= -1e-9,
                 cert.cor42_slack);
    }

    {
        double dev = 0.0;
        for (int j = 0; j <= n - 2; ++j)
            for (const Face& w : X.level(j)) {
                double formula =
                    local_contraction(X, w, PhiSpec::square()).constant;
                Complex link = X.pinned(w).link;
                double direct =
                    1.0 -
                    quadratic_contraction(up_operator(link, 1, n - j)).constant;
                dev = std::max(dev, std::abs(formula - direct));
            }
        sink.add("local-contraction-formula", dev <= 1e-10, 1e-10 - dev);
    }

    {
        std::vector<Vector> fs =
            test_function_corpus(X.level_size(n), {3, 7, 2});
        double worst = 0.0;
        bool ok = true;
        for (const Vector& f :
             {fs[0], fs[X.level_size(n)], fs[fs.size() - 1]}) {
            for (const PhiSpec& phi : {PhiSpec::square(), PhiSpec::xlogx()}) {
                CheckReport cr = chain_rule_check(X, ell, n, f, phi);
                ok = ok && cr.ok;
                worst = std::max(worst, std::abs(cr.worst_slack));
            }
            CheckReport g = garland_identity_check(X, ell, f);
            ok = ok && g.ok;
            worst = std::max(worst, g.worst_slack);
        }
        sink.add("chain-rule+garland", ok, 1e-10 - worst);
    }

    {
        CheckReport dpi = dpi_check(duw, PhiSpec::xlogx(), fn_opts);
        sink.add("dpi", dpi.ok, dpi.worst_slack);
        CheckReport l43 = lemma_4_3_check(X, ell, fn_opts);
        sink.add("lsi-from-ec", l43.ok, l43.worst_slack);
    }

    {
        MixingReport mr = exact_tv_mixing(duw, 0.25, 100000);
        double bound = mixing_bound_from_gap(duw, 0.25);
        bool ok = !mr.capped && mr.exact_tmix <= bound;
        sink.add("mixing-soundness", ok, bound - mr.exact_tmix);
    }
}

}  // namespace

SuiteResult run_suite(const std::vector<CorpusInstance>& corpus) {
    SuiteResult result;
    for (const auto& inst : corpus) {
        try {
            run_instance(inst, result);
        } catch (const error& e) {
            RowSink{result, inst.name}.error("instance", e.what());
        }
    }
    return result;
}

std::string suite_csv(const SuiteResult& result) {
    std::string out = "instance,check,status,slack\n";
    for (const auto& r : result.rows) {
        std::string status = r.status;
        std::replace(status.begin(), status.end(), ',', ';');
        out += r.instance + "," + r.check + "," + status + "," + fmt(r.slack) +
               "\n";
    }
    return out;
}

std::string suite_json(const SuiteResult& result) {
    nlohmann::ordered_json j;
    j["passed"] = result.passed;
    j["failed"] = result.failed;
    j["skipped"] = result.skipped;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : result.rows) {
        nlohmann::ordered_json rj;
        rj["instance"] = r.instance;
        rj["check"] = r.check;
        rj["status"] = r.status;
        rj["slack"] = fmt(r.slack);
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

void write_suite_artifacts(const SuiteResult& result,
                           const std::filesystem::path& out_dir) {
    atomic_write(out_dir / "report.csv", suite_csv(result));
    atomic_write(out_dir / "report.json", suite_json(result));
}

}  // namespace hodos
