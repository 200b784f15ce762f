#pragma once

#include "hodos/sampler.hpp"
#include "hodos/spectral.hpp"

namespace hodos {

struct MixingReport {
    std::string walk;
    int exact_tmix = -1;
    bool capped = false;
    std::vector<std::pair<int, double>> tv_curve;  // (t, worst-case TV)
    double bound_from_gap = 0.0;
    double bound_from_ec = 0.0;           // modulo a universal constant
    bool ec_bound_available = false;
    int bits_per_step = 0;                // index-selection bits
    long long total_index_bits = 0;       // bits_per_step * exact_tmix
};

// Worst case over deterministic starts of (1/2)||delta_x P^t - pi||_1.
MixingReport exact_tv_mixing(const WalkOperator& P, double epsilon, int t_max);

// Tmix <= (1/(1-lambda)) log(1/(eps sqrt(min pi))); +inf when lambda(P) = 1.
double mixing_bound_from_gap(const WalkOperator& P, double epsilon);

// (1/EC)(loglog(1/min pi) + log(1/eps)); holds modulo a universal constant
// and is never asserted against exact values.
double mixing_bound_from_ec(double ec_certified, double min_pi, double epsilon);

// Duw, Udw, Papx, Paqx (product space and face marginal), and the scan sweep.
std::vector<MixingReport> compare_walks(const Complex& X,
                                        const LabelledRegularGraph& H, int ell,
                                        double epsilon, int t_max = 100000);

// Monte Carlo TV between the chain histogram at time t and the stationary law.
double empirical_tv(const Complex& X, const WalkSpec& spec, int t, int n_chains,
                    std::uint64_t seed, int start_facet = 0);

}  // namespace hodos
