#pragma once

#include <functional>
#include <string>

#include "hodos/operators.hpp"
#include "hodos/spectral.hpp"

namespace hodos {

// Convex Phi defining a Phi-entropy. square -> variance, xlogx -> entropy
// (with 0 log 0 = 0).
struct PhiSpec {
    enum class Kind { Square, XLogX, Custom };
    Kind kind = Kind::Square;
    std::function<double(double)> fn;

    double operator()(double t) const;
    std::string name() const;

    static PhiSpec square() { return {Kind::Square, {}}; }
    static PhiSpec xlogx() { return {Kind::XLogX, {}}; }
    static PhiSpec custom(std::function<double(double)> f) {
        return {Kind::Custom, std::move(f)};
    }

    // Midpoint convexity on a sample grid, tolerance 1e-12.
    void check_convexity(double lo = 0.0, double hi = 8.0, int steps = 64) const;
};

// E_mu Phi(f) - Phi(E_mu f); nonnegative by Jensen.
double phi_entropy(const Vector& f, const Vector& mu, const PhiSpec& phi);

struct ContractionReport {
    enum class Mode { Exact, EstimatedLowerCertificate };
    double constant = 0.0;
    Mode mode = Mode::Exact;
    Vector witness;  // achieves the reported ratio (lower-certificate mode)
    double slack = 0.0;
};

// CF_{t^2}(P) = Gap(P* P), exact.
ContractionReport quadratic_contraction(const WalkOperator& P);

// Local Phi-entropy contraction lc_Phi(w). Square Phi: exact closed form
// 1/n' + (n'-1)/n' lambda2(M_w). xlogx: multi-start ratio maximization; the
// reported value is a certified lower bound on lc achieved by the witness.
ContractionReport local_contraction(const Complex& X, const Face& w,
                                    const PhiSpec& phi);

struct CertificateReport {
    double certificate = 0.0;  // min over ell-chains of prod_j (1 - lc(w^(j)))
    bool certified = false;    // true for square Phi; xlogx is diagnostic only
    double exact_cf = 0.0;     // CF_{t^2}(U_{ell->n}) (square Phi only)
    double cf_slack = 0.0;     // exact_cf - certificate
    double cor42_lhs = 0.0;    // Gap(Duw_{n<->ell})
    double cor42_rhs = 0.0;    // ((n-ell)/n) prod_i Gap_i(X, pi)
    double cor42_slack = 0.0;
    bool ok = false;
    std::vector<Face> worst_chain;
};

CertificateReport theorem_4_1_certificate(const Complex& X, int ell,
                                          const PhiSpec& phi);

// Certified lower bound on LS(P): Gap(P) (1 - 2 pi*) / log(pi*^{-1} - 1)
// with pi* the least stationary mass, taking the limit value 1/2 at
// pi* = 1/2. Exact (not just a bound) on two-point supports.
double log_sobolev_lower_bound(const WalkOperator& P);

double two_point_ls_factor(const Vector& mu);  // the (1-2pi*)/log(...) constant

struct CheckReport {
    std::string claim;
    double constant = 0.0;
    double worst_slack = 0.0;
    bool ok = false;
};

struct CorpusOptions {
    int n_random = 1000;
    std::uint64_t seed = 0;
    int max_pairs = 200;
};

// Coordinate indicators, clipped two-point perturbations 1 + e_i - e_j, and
// seeded random nonnegative vectors.
std::vector<Vector> test_function_corpus(int dim, const CorpusOptions& opts = {});

// Dirichlet LSI for Papx with c = log_sobolev_lower_bound(Udw) Gap*(H).
CheckReport ls_lifting_check(const Complex& X, const LabelledRegularGraph& H,
                             int ell, const CorpusOptions& opts = {});

// Ent(P f) <= (1 - c) Ent(f) for a certified c.
CheckReport entropy_contraction_check(const WalkOperator& P, double c_certified,
                                      const CorpusOptions& opts = {});

CheckReport chain_rule_check(const Complex& X, int ell, int r, const Vector& f,
                             const PhiSpec& phi);

// Items (1)-(3); item (3) is evaluated on U_{n-1->n} f, a level-(n-1)
// function derived from the supplied facet function.
CheckReport garland_identity_check(const Complex& X, int ell, const Vector& f);

// LSI for Duw_{n<->ell} and (when n >= 2) Udw_{n-1} with the certified
// constants of the lemma; EC is lower-bounded through LS(P*P).
CheckReport lemma_4_3_check(const Complex& X, int ell,
                            const CorpusOptions& opts = {});

CheckReport dpi_check(const WalkOperator& P, const PhiSpec& phi,
                      const CorpusOptions& opts = {});

double lee_boosting_bound(double C, int k);

}  // namespace hodos
