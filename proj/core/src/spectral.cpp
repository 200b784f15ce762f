#include "hodos/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace hodos {

WalkOperator adjoint(const WalkOperator& B) {
    if (B.mu_in.minCoeff() <= 0.0 || B.mu_out.minCoeff() <= 0.0)
        throw input_error("adjoint: measures must be strictly positive");
    Matrix A(B.M.cols(), B.M.rows());
    for (Eigen::Index y = 0; y < A.rows(); ++y)
        for (Eigen::Index x = 0; x < A.cols(); ++x)
            A(y, x) = B.M(x, y) * B.mu_in[x] / B.mu_out[y];
    return {std::move(A), B.mu_out, B.mu_in};
}

bool is_reversible(const WalkOperator& P, double tol) {
    if (P.M.rows() != P.M.cols()) return false;
    if ((P.mu_in - P.mu_out).cwiseAbs().maxCoeff() > tol) return false;
    for (Eigen::Index i = 0; i < P.M.rows(); ++i)
        for (Eigen::Index j = i + 1; j < P.M.cols(); ++j)
            if (std::abs(P.mu_in[i] * P.M(i, j) - P.mu_in[j] * P.M(j, i)) > tol)
                return false;
    return true;
}

namespace {

Matrix symmetrized(const WalkOperator& P) {
    const Vector& mu = P.mu_in;
    Matrix S(P.M.rows(), P.M.cols());
    for (Eigen::Index i = 0; i < S.rows(); ++i)
        for (Eigen::Index j = 0; j < S.cols(); ++j)
            S(i, j) = std::sqrt(mu[i] / mu[j]) * P.M(i, j);
    return 0.5 * (S + S.transpose());
}

}  // namespace

SpectralReport spectrum(const WalkOperator& P, bool reversible) {
    if (P.M.rows() != P.M.cols())
        throw input_error("spectrum: operator must be square");
    SpectralReport r;
    const int m = static_cast<int>(P.M.rows());
    if (reversible) {
        if (!is_reversible(P, 1e-10))
            throw input_error("spectrum: operator is not reversible");
        Eigen::SelfAdjointEigenSolver<Matrix> es(symmetrized(P));
        r.eigenvalues.assign(es.eigenvalues().data(),
                             es.eigenvalues().data() + m);
        std::reverse(r.eigenvalues.begin(), r.eigenvalues.end());
    } else {
        Matrix S(P.M.rows(), P.M.cols());
        for (Eigen::Index i = 0; i < S.rows(); ++i)
            for (Eigen::Index j = 0; j < S.cols(); ++j)
                S(i, j) = std::sqrt(P.mu_in[i] / P.mu_out[j]) * P.M(i, j);
        Eigen::SelfAdjointEigenSolver<Matrix> es(S.transpose() * S);
        r.eigenvalues.resize(m);
        for (int i = 0; i < m; ++i)
            r.eigenvalues[i] = std::sqrt(std::max(0.0, es.eigenvalues()[m - 1 - i]));
    }
    r.lambda2 = m > 1 ? r.eigenvalues[1] : 0.0;
    r.lambda_min = r.eigenvalues.back();
    r.two_sided_lambda =
        m > 1 ? std::max(r.lambda2, std::abs(r.lambda_min)) : 0.0;
    r.gap = 1.0 - r.lambda2;
    r.gap_star = 1.0 - r.two_sided_lambda;
    r.psd = r.lambda_min >= -1e-10;
    return r;
}

double weighted_operator_norm(const Matrix& A, const Vector& mu_rows,
                              const Vector& mu_cols) {
    Matrix S(A.rows(), A.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            S(i, j) = std::sqrt(mu_rows[i] / mu_cols[j]) * A(i, j);
    Eigen::SelfAdjointEigenSolver<Matrix> es(S.transpose() * S);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double operator_norm_deviation(const Complex& X, const LabelledRegularGraph& H,
                               int ell) {
    WalkOperator papx = expanderized_up_down(X, H, ell);
    WalkOperator udw = up_down(X, ell);
    double lam = two_sided_lambda(H);
    Matrix A = papx.M - (1.0 - lam) * udw.M;
    return weighted_operator_norm(A, papx.mu_in, papx.mu_in);
}

GapLiftReport gap_lifting_check(const Complex& X, const LabelledRegularGraph& H,
                                int ell, double tol) {
    GapLiftReport r{};
    r.gap_papx = spectrum(expanderized_up_down(X, H, ell)).gap;
    r.gap_udw = spectrum(up_down(X, ell)).gap;
    r.gap_star_h = 1.0 - two_sided_lambda(H);
    r.slack_up_down = r.gap_papx - r.gap_udw * r.gap_star_h;

    r.gap_paqx = spectrum(expanderized_down_up(X, H, ell)).gap;
    r.gap_duw = spectrum(down_up(X, ell)).gap;
    r.gap_star_h2 = 1.0 - two_sided_lambda(square(H));
    r.slack_down_up = r.gap_paqx - r.gap_duw * r.gap_star_h2;

    r.ok = r.slack_up_down >= -tol && r.slack_down_up >= -tol;
    return r;
}

}  // namespace hodos
