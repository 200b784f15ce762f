// End-to-end acceptance gate. Prints one line per criterion and exits
// nonzero if any of them fails. Tolerances are pinned here on purpose.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hodos/io.hpp"
#include "hodos/mixing.hpp"
#include "hodos/models.hpp"
#include "hodos/phi_entropy.hpp"
#include "hodos/spectral.hpp"
#include "hodos/suite.hpp"

using namespace hodos;
namespace fs = std::filesystem;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

void report(int idx, const std::string& what, bool ok, double secs = -1.0,
            double cap = -1.0) {
    if (secs >= 0.0 && cap > 0.0 && secs > cap) ok = false;
    std::string timing;
    if (secs >= 0.0) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), " [%.2fs", secs);
        timing = buf;
        if (cap > 0.0) {
            std::snprintf(buf, sizeof(buf), " / cap %.0fs", cap);
            timing += buf;
        }
        timing += "]";
    }
    std::printf("criterion %2d %s  %s%s\n", idx, ok ? "PASS" : "FAIL",
                what.c_str(), timing.c_str());
    if (!ok) ++failures;
}

Complex tensor_product(const Vector& p, const Vector& q) {
    std::vector<FacetInput> fsn;
    std::vector<int> sides;
    for (int i = 0; i < p.size(); ++i) sides.push_back(0);
    for (int j = 0; j < q.size(); ++j) sides.push_back(1);
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < q.size(); ++j)
            fsn.push_back({{i, int(p.size()) + j}, p[i] * q[j]});
    return Complex::build(int(p.size() + q.size()), fsn, true, sides);
}

IsingInstance rank_one_ising(int n, double norm) {
    IsingInstance inst;
    Vector u = Vector::Constant(n, 1.0 / std::sqrt(double(n)));
    inst.J = norm * u * u.transpose();
    inst.h = Vector::Zero(n);
    return inst;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    auto corpus = generate_corpus(2026, 20);

    // 1: clique-with-loops reduces the expanderized walks to the dense ones
    {
        auto t0 = std::chrono::steady_clock::now();
        int checked = 0;
        bool ok = true;
        for (const auto& inst : corpus) {
            const Complex& X = inst.complex;
            if (!X.partite()) continue;
            LabelledRegularGraph K = clique_loops_graph(
                int(count_subsets(X.rank(), inst.ell)));
            WalkOperator papx = expanderized_up_down(X, K, inst.ell);
            ok = ok && (papx.M - up_down(X, inst.ell).M).cwiseAbs().maxCoeff() <=
                           1e-12;
            WalkOperator fm =
                face_marginal(X, expanderized_down_up(X, K, inst.ell), inst.ell);
            ok = ok && (fm.M - down_up(X, inst.ell).M).cwiseAbs().maxCoeff() <=
                           1e-12;
            ++checked;
        }
        ok = ok && checked >= 10;
        report(1, "clique-with-loops collapse, entrywise 1e-12 on " +
                      std::to_string(checked) + " complexes",
               ok, seconds_since(t0), 10.0);
    }

    // 2 and 3: operator-norm deviation and gap lifting over randomized pairs
    {
        auto t0 = std::chrono::steady_clock::now();
        int pairs = 0, bipartite_pairs = 0;
        bool ok2 = true, ok3 = true;
        for (const auto& inst : corpus) {
            const Complex& X = inst.complex;
            if (!X.partite()) continue;
            const int m = int(count_subsets(X.rank(), inst.ell));
            std::vector<LabelledRegularGraph> hs;
            hs.push_back(clique_loops_graph(m));
            hs.push_back(cycle_graph(m));
            if (m >= 2) hs.push_back(complete_graph(m));
            for (const auto& H : hs) {
                double lam = two_sided_lambda(H);
                ok2 = ok2 &&
                      operator_norm_deviation(X, H, inst.ell) <= lam + 1e-9;
                GapLiftReport g = gap_lifting_check(X, H, inst.ell, 1e-9);
                ok3 = ok3 && g.ok && g.slack_up_down >= -1e-9 &&
                      g.slack_down_up >= -1e-9;
                ++pairs;
                if (lam >= 1.0 - 1e-12) ++bipartite_pairs;
            }
        }
        ok2 = ok2 && pairs >= 20 && bipartite_pairs >= 1;
        double secs = seconds_since(t0);
        report(2, "operator norm deviation <= lambda(H) + 1e-9 on " +
                      std::to_string(pairs) + " pairs (" +
                      std::to_string(bipartite_pairs) + " bipartite)",
               ok2, secs, 60.0);
        report(3, "gap lifting for Papx and Paqx, slack >= -1e-9", ok3);
    }

    // 4: stationarity, detailed balance, positive semidefiniteness
    {
        bool ok = true;
        for (const auto& inst : corpus) {
            const Complex& X = inst.complex;
            WalkOperator duw = down_up(X, inst.ell);
            WalkOperator udw = up_down(X, inst.ell);
            ok = ok && spectrum(duw).lambda_min >= -1e-10;
            ok = ok && spectrum(udw).lambda_min >= -1e-10;
            if (!X.partite()) continue;
            for (const WalkOperator& P :
                 {expanderized_up_down(X, inst.H, inst.ell),
                  expanderized_down_up(X, inst.H, inst.ell)}) {
                ok = ok &&
                     ((P.M.transpose() * P.mu_in) - P.mu_in).cwiseAbs()
                             .maxCoeff() <= 1e-12;
                Matrix flow = P.mu_in.asDiagonal() * P.M;
                ok = ok && (flow - flow.transpose()).cwiseAbs().maxCoeff() <=
                               1e-12;
            }
            ok = ok && spectrum(expanderized_down_up(X, inst.H, inst.ell))
                               .lambda_min >= -1e-10;
        }
        report(4, "stationarity + detailed balance (1e-12), PSD (-1e-10)", ok);
    }

    // 5: chain-product certificate and the gap product bound, every ell
    {
        bool ok = true;
        for (const auto& inst : corpus) {
            const Complex& X = inst.complex;
            for (int ell = 0; ell < X.rank(); ++ell) {
                CertificateReport rep =
                    theorem_4_1_certificate(X, ell, PhiSpec::square());
                ok = ok && rep.certified && rep.cf_slack >= -1e-9 &&
                     rep.cor42_slack >= -1e-9;
            }
        }
        report(5, "certificate <= exact CF + 1e-9 and gap product bound, "
                  "all ell",
               ok);
    }

    // 6: local variance contraction closed form vs direct computation
    {
        bool ok = true;
        for (const auto& inst : corpus) {
            const Complex& X = inst.complex;
            for (int j = 0; j <= X.rank() - 2; ++j) {
                for (const Face& w : X.level(j)) {
                    double formula =
                        local_contraction(X, w, PhiSpec::square()).constant;
                    Complex link = X.pinned(w).link;
                    double direct =
                        1.0 - quadratic_contraction(
                                  up_operator(link, 1, link.rank()))
                                  .constant;
                    ok = ok && std::abs(formula - direct) <= 1e-10;
                }
            }
        }
        report(6, "local variance contraction closed form within 1e-10", ok);
    }

    // 7: Ising gap bound up to 1024 states
    {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        for (int n = 2; n <= 10; ++n) {
            for (double norm : {0.0, 0.3, 0.7}) {
                Thm54Report rep = theorem_5_4_check(rank_one_ising(n, norm));
                ok = ok && rep.ok && rep.slack >= -1e-9;
                if (n == 2 && norm == 0.0)
                    ok = ok && std::abs(rep.gap - 0.5) <= 1e-9;
            }
        }
        report(7, "Ising facet gap >= (1 - ||J||)/n - 1e-9, n = 2..10", ok,
               seconds_since(t0), 120.0);
    }

    // 8: coloring and Ising link-level bounds
    {
        bool ok = true;
        ColoringInstance k3{3, {{0, 1}, {1, 2}, {0, 2}},
                            {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
        ColoringInstance p3{3, {{0, 1}, {1, 2}},
                            {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
        ColoringInstance c5{5,
                            {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}},
                            {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2},
                             {0, 1, 2}}};
        for (const auto& inst : {k3, p3, c5}) ok = ok && prop_5_1_check(inst).ok;
        for (int n : {2, 4, 6})
            for (double norm : {0.0, 0.4}) {
                IsingInstance inst = rank_one_ising(n, norm);
                inst.h = Vector::LinSpaced(n, -0.2, 0.2);
                ok = ok && prop_5_2_check(inst).ok;
            }
        report(8, "coloring (K3, P3, C5) and Ising (n <= 6) link bounds", ok);
    }

    // 9: functional inequalities and certified-constant checks
    {
        bool ok = true;
        CorpusOptions opts{50, 0, 50};
        for (const auto& inst : corpus) {
            const Complex& X = inst.complex;
            const int n = X.rank();
            Vector f(X.level_size(n));
            for (int i = 0; i < f.size(); ++i)
                f[i] = 0.25 + ((i * 2654435761u) % 97) / 97.0;
            for (const PhiSpec& phi : {PhiSpec::square(), PhiSpec::xlogx()}) {
                CheckReport cr = chain_rule_check(X, inst.ell, n, f, phi);
                ok = ok && cr.ok && cr.worst_slack <= 1e-10;
            }
            CheckReport g = garland_identity_check(X, inst.ell, f);
            ok = ok && g.ok && g.worst_slack <= 1e-10;
            ok = ok && dpi_check(down_up(X, inst.ell), PhiSpec::xlogx(), opts).ok;
            ok = ok && lemma_4_3_check(X, inst.ell, opts).ok;
            if (!X.partite()) continue;
            ok = ok && ls_lifting_check(X, inst.H, inst.ell, opts).ok;
            double c = log_sobolev_lower_bound(up_down(X, inst.ell)) *
                       (1.0 - two_sided_lambda(square(inst.H)));
            ok = ok && entropy_contraction_check(q_down(X, inst.H, inst.ell), c,
                                                 opts)
                           .ok;
        }
        report(9, "DPI, chain rule, Garland (1e-10); certified LSI/EC checks",
               ok);
    }

    // 10: mixing soundness and index-bit accounting
    {
        bool ok = true;
        for (const auto& inst : corpus) {
            WalkOperator duw = down_up(inst.complex, inst.ell);
            MixingReport rep = exact_tv_mixing(duw, 0.25, 100000);
            ok = ok && !rep.capped &&
                 double(rep.exact_tmix) <= mixing_bound_from_gap(duw, 0.25);
        }

        Vector p(2), q(3);
        p << 1, 2;
        q << 1, 3, 2;
        Complex prod = tensor_product(p / p.sum(), q / q.sum());
        MixingReport sweep = exact_tv_mixing(scan_sweep(prod), 1e-9, 10);
        ok = ok && sweep.exact_tmix == 1;

        int strict = 0;
        for (const auto& inst : corpus) {
            const Complex& X = inst.complex;
            if (!X.partite()) continue;
            int dense = bits_for(count_subsets(X.rank(), inst.ell));
            int exp_bits = 2 * bits_for(inst.H.degree);
            WalkSpec dense_spec{WalkKind::DownUp, inst.ell, nullptr};
            WalkSpec exp_spec{WalkKind::ExpanderizedDownUp, inst.ell, &inst.H};
            ok = ok && index_bits_per_step(X, dense_spec) == dense;
            ok = ok && index_bits_per_step(X, exp_spec) == exp_bits;
            if (exp_bits < dense) {
                ok = ok && index_bits_per_step(X, exp_spec) <
                               index_bits_per_step(X, dense_spec);
                ++strict;
            }
        }
        ok = ok && strict >= 1;
        report(10, "Tmix <= gap bound; 1-sweep product mixing; bit accounting (" +
                       std::to_string(strict) + " strict cases)",
               ok);
    }

    // 11: determinism of the suite artifacts
    {
        bool ok = true;
        fs::path base = fs::temp_directory_path() / "hodos_acceptance";
        fs::remove_all(base);
        SuiteResult a = run_suite(generate_corpus(5, 12));
        SuiteResult b = run_suite(generate_corpus(5, 12));
        write_suite_artifacts(a, base / "run1");
        write_suite_artifacts(b, base / "run2");
        ok = ok && a.all_ok();
        ok = ok && slurp(base / "run1" / "report.csv") ==
                       slurp(base / "run2" / "report.csv");
        ok = ok && slurp(base / "run1" / "report.json") ==
                       slurp(base / "run2" / "report.json");
        fs::remove_all(base);
        report(11, "same-seed suite runs produce byte-identical artifacts", ok);
    }

    if (failures > 0) {
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all 11 criteria passed\n");
    return 0;
}
