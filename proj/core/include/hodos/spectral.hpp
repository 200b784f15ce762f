#pragma once

#include "hodos/operators.hpp"

namespace hodos {

// B*(y,x) = B(x,y) mu_in(x) / mu_out(y); satisfies
// <f, Bg>_{mu_in} = <B*f, g>_{mu_out}.
WalkOperator adjoint(const WalkOperator& B);

bool is_reversible(const WalkOperator& P, double tol = 1e-10);

struct SpectralReport {
    std::vector<double> eigenvalues;  // descending
    double lambda2 = 0.0;
    double lambda_min = 0.0;
    double two_sided_lambda = 0.0;
    double gap = 0.0;       // 1 - lambda2
    double gap_star = 0.0;  // 1 - max(lambda2, |lambda_min|)
    bool psd = false;
};

// Eigenvalues of D^{1/2} P D^{-1/2}, D = diag(stationary measure). With
// reversible = false the singular values in the weighted geometry are
// reported instead and the signed fields are meaningless except gap_star.
SpectralReport spectrum(const WalkOperator& P, bool reversible = true);

// sup ||A f||_{mu_rows} / ||f||_{mu_cols}, largest singular value computed
// from the symmetric eigensolve of the Gram operator.
double weighted_operator_norm(const Matrix& A, const Vector& mu_rows,
                              const Vector& mu_cols);

// || Papx - (1 - lambda(H)) Udw ||_{op, pi_ell}; at most lambda(H).
double operator_norm_deviation(const Complex& X, const LabelledRegularGraph& H,
                               int ell);

struct GapLiftReport {
    double gap_papx, gap_udw, gap_star_h, slack_up_down;
    double gap_paqx, gap_duw, gap_star_h2, slack_down_up;
    bool ok;
};

// Gap(Papx) >= Gap(Udw) Gap*(H) and Gap(Paqx) >= Gap(Duw) Gap*(H^2).
GapLiftReport gap_lifting_check(const Complex& X, const LabelledRegularGraph& H,
                                int ell, double tol = 1e-9);

}  // namespace hodos
