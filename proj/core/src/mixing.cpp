#include "hodos/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace hodos {

MixingReport exact_tv_mixing(const WalkOperator& P, double epsilon, int t_max) {
    if (P.M.rows() != P.M.cols())
        throw input_error("exact_tv_mixing: operator must be square");
    if (P.M.rows() > 10000)
        throw input_error("exact_tv_mixing: state count beyond cap");
    const Vector& pi = P.mu_in;
    const int m = static_cast<int>(P.M.rows());
    MixingReport rep;
    Matrix rows = Matrix::Identity(m, m);
    for (int t = 0; t <= t_max; ++t) {
        if (t > 0) rows = rows * P.M;
        double worst = 0.0;
        for (int x = 0; x < m; ++x) {
            double tv = 0.0;
            for (int y = 0; y < m; ++y) tv += std::abs(rows(x, y) - pi[y]);
            worst = std::max(worst, 0.5 * tv);
        }
        rep.tv_curve.emplace_back(t, worst);
        if (worst <= epsilon) {
            rep.exact_tmix = t;
            return rep;
        }
    }
    rep.capped = true;
    return rep;
}

double mixing_bound_from_gap(const WalkOperator& P, double epsilon) {
    SpectralReport s = spectrum(P, true);
    double lam = s.two_sided_lambda;
    if (lam >= 1.0 - 1e-13) return std::numeric_limits<double>::infinity();
    double min_pi = P.mu_in.minCoeff();
    return (1.0 / (1.0 - lam)) * std::log(1.0 / (epsilon * std::sqrt(min_pi)));
}

double mixing_bound_from_ec(double ec_certified, double min_pi, double epsilon) {
    if (!(ec_certified > 0.0))
        throw input_error("mixing_bound_from_ec: EC must be positive");
    return (1.0 / ec_certified) *
           (std::log(std::log(1.0 / min_pi)) + std::log(1.0 / epsilon));
}

std::vector<MixingReport> compare_walks(const Complex& X,
                                        const LabelledRegularGraph& H, int ell,
                                        double epsilon, int t_max) {
    const int n = X.rank();
    std::vector<MixingReport> out;

    auto add = [&](std::string name, const WalkOperator& P, int bits,
                   bool reversible) {
        MixingReport rep = exact_tv_mixing(P, epsilon, t_max);
        rep.walk = std::move(name);
        rep.bits_per_step = bits;
        if (rep.exact_tmix >= 0)
            rep.total_index_bits =
                static_cast<long long>(rep.exact_tmix) * bits;
        if (reversible && is_reversible(P, 1e-10))
            rep.bound_from_gap = mixing_bound_from_gap(P, epsilon);
        out.push_back(std::move(rep));
    };

    const int subset_bits = bits_for(count_subsets(n, ell));
    const int k_bits = bits_for(H.degree);

    add("down-up", down_up(X, ell), subset_bits, true);
    add("up-down", up_down(X, ell), subset_bits, true);
    add("expanderized-up-down", expanderized_up_down(X, H, ell), k_bits, true);
    WalkOperator paqx = expanderized_down_up(X, H, ell);
    add("expanderized-down-up", paqx, 2 * k_bits, true);
    add("expanderized-down-up/face-marginal", face_marginal(X, paqx, ell),
        2 * k_bits, true);
    add("scan-sweep", scan_sweep(X), 0, false);
    return out;
}

double empirical_tv(const Complex& X, const WalkSpec& spec, int t, int n_chains,
                    std::uint64_t seed, int start_facet) {
    const int n = X.rank();
    const int ell = spec.effective_ell(n);
    std::map<std::pair<int, long long>, long long> hist;
    for (int c = 0; c < n_chains; ++c) {
        BitStream rng(seed + static_cast<std::uint64_t>(c));
        ChainState s = initial_state(X, spec, start_facet);
        for (int step = 0; step < t; ++step) s = sampler_step(X, spec, s, rng);
        int level = (spec.kind == WalkKind::UpDown ||
                     spec.kind == WalkKind::ExpanderizedUpDown)
                        ? ell
                        : n;
        hist[{X.face_index(level, s.face), s.subset_rank}] += 1;
    }

    double tv = 0.0;
    if (spec.kind == WalkKind::ExpanderizedDownUp) {
        const long long ns = count_subsets(n, ell);
        for (int fi = 0; fi < X.level_size(n); ++fi)
            for (long long s = 0; s < ns; ++s) {
                auto it = hist.find({fi, s});
                double emp = it == hist.end()
                                 ? 0.0
                                 : double(it->second) / n_chains;
                tv += std::abs(emp - X.pi()[fi] / double(ns));
            }
    } else if (spec.kind == WalkKind::UpDown ||
               spec.kind == WalkKind::ExpanderizedUpDown) {
        Vector pi_ell = X.level_marginal(ell);
        for (int i = 0; i < X.level_size(ell); ++i) {
            auto it = hist.find({i, -1});
            double emp = it == hist.end() ? 0.0 : double(it->second) / n_chains;
            tv += std::abs(emp - pi_ell[i]);
        }
    } else {
        for (int fi = 0; fi < X.level_size(n); ++fi) {
            auto it = hist.find({fi, -1});
            double emp = it == hist.end() ? 0.0 : double(it->second) / n_chains;
            tv += std::abs(emp - X.pi()[fi]);
        }
    }
    return 0.5 * tv;
}

}  // namespace hodos
