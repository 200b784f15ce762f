#include "hodos/operators.hpp"

#include <algorithm>

namespace hodos {

void WalkOperator::validate(double tol) const {
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        double s = M.row(i).sum();
        if (std::abs(s - 1.0) > tol)
            throw check_error("walk operator: row sum deviates from 1");
        if (M.row(i).minCoeff() < -tol)
            throw check_error("walk operator: negative entry");
    }
    Vector push = M.transpose() * mu_in;
    if ((push - mu_out).cwiseAbs().maxCoeff() > tol)
        throw check_error("walk operator: mu_in * M != mu_out");
}

namespace {

void check_levels(const Complex& X, int ell, int k) {
    if (ell < 0 || k < ell || k > X.rank())
        throw input_error("walk assembly: level order violated");
}

void check_partite(const Complex& X, const LabelledRegularGraph& H, int ell) {
    if (!X.partite())
        throw not_partite_error("expanderized walk: complex must be partite");
    if (ell < 0 || ell > X.rank())
        throw input_error("expanderized walk: level out of range");
    if (H.num_vertices != count_subsets(X.rank(), ell))
        throw input_error("expanderized walk: H vertex count != C(n, ell)");
}

}  // namespace

long long type_rank(const Complex& X, const Face& f) {
    return subset_colex_rank(X.face_type(f));
}

Face restrict_to_type(const Complex& X, const Face& f,
                      const std::vector<int>& type) {
    Face out;
    for (int v : f.elements)
        if (std::binary_search(type.begin(), type.end(), X.side_of(v)))
            out.elements.push_back(v);
    return out;
}

WalkOperator up_operator(const Complex& X, int ell, int k) {
    check_levels(X, ell, k);
    Vector pi_ell = X.level_marginal(ell);
    Vector pi_k = X.level_marginal(k);
    const double c = binomial(k, ell);
    Matrix U = Matrix::Zero(X.level_size(ell), X.level_size(k));
    for (int j = 0; j < X.level_size(k); ++j) {
        const Face& omega = X.level(k)[j];
        std::vector<int> idx(ell);
        for (int t = 0; t < ell; ++t) idx[t] = t;
        while (true) {
            Face sub;
            for (int t = 0; t < ell; ++t)
                sub.elements.push_back(omega.elements[idx[t]]);
            int i = X.face_index(ell, sub);
            U(i, j) = pi_k[j] / (c * pi_ell[i]);
            int t = ell - 1;
            while (t >= 0 && idx[t] == k - ell + t) --t;
            if (t < 0) break;
            ++idx[t];
            for (int u = t + 1; u < ell; ++u) idx[u] = idx[u - 1] + 1;
        }
    }
    return {std::move(U), std::move(pi_ell), std::move(pi_k)};
}

WalkOperator down_operator(const Complex& X, int k, int ell) {
    check_levels(X, ell, k);
    Vector pi_ell = X.level_marginal(ell);
    Vector pi_k = X.level_marginal(k);
    const double c = binomial(k, ell);
    Matrix D = Matrix::Zero(X.level_size(k), X.level_size(ell));
    for (int j = 0; j < X.level_size(k); ++j) {
        const Face& omega = X.level(k)[j];
        std::vector<int> idx(ell);
        for (int t = 0; t < ell; ++t) idx[t] = t;
        while (true) {
            Face sub;
            for (int t = 0; t < ell; ++t)
                sub.elements.push_back(omega.elements[idx[t]]);
            D(j, X.face_index(ell, sub)) += 1.0 / c;
            int t = ell - 1;
            while (t >= 0 && idx[t] == k - ell + t) --t;
            if (t < 0) break;
            ++idx[t];
            for (int u = t + 1; u < ell; ++u) idx[u] = idx[u - 1] + 1;
        }
    }
    return {std::move(D), std::move(pi_k), std::move(pi_ell)};
}

WalkOperator down_up(const Complex& X, int ell) {
    WalkOperator D = down_operator(X, X.rank(), ell);
    WalkOperator U = up_operator(X, ell, X.rank());
    return {D.M * U.M, D.mu_in, U.mu_out};
}

WalkOperator up_down(const Complex& X, int ell) {
    WalkOperator U = up_operator(X, ell, X.rank());
    WalkOperator D = down_operator(X, X.rank(), ell);
    return {U.M * D.M, U.mu_in, D.mu_out};
}

WalkOperator expanderized_up_down(const Complex& X, const LabelledRegularGraph& H,
                                  int ell) {
    check_partite(X, H, ell);
    const int n = X.rank();
    const int m = X.level_size(ell);
    Vector pi_ell = X.level_marginal(ell);
    Matrix P = Matrix::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        const Face& what = X.level(ell)[i];
        long long s = type_rank(X, what);
        const auto& cover = X.facets_containing(ell, i);
        double mass = 0.0;
        for (int fi : cover) mass += X.pi()[fi];
        for (int a = 0; a < H.degree; ++a) {
            std::vector<int> T =
                subset_colex_unrank(H.neighbor(static_cast<int>(s), a), n, ell);
            for (int fi : cover) {
                Face target = restrict_to_type(X, X.level(n)[fi], T);
                P(i, X.face_index(ell, target)) +=
                    (1.0 / H.degree) * (X.pi()[fi] / mass);
            }
        }
    }
    return {std::move(P), pi_ell, pi_ell};
}

WalkOperator q_down(const Complex& X, const LabelledRegularGraph& H, int ell) {
    check_partite(X, H, ell);
    const int n = X.rank();
    const long long ns = count_subsets(n, ell);
    const int nf = X.level_size(n);
    const int rows = static_cast<int>(nf * ns);
    Vector mu_in(rows);
    for (int fi = 0; fi < nf; ++fi)
        for (long long s = 0; s < ns; ++s)
            mu_in[fi * ns + s] = X.pi()[fi] / static_cast<double>(ns);
    Matrix Q = Matrix::Zero(rows, X.level_size(ell));
    for (int fi = 0; fi < nf; ++fi) {
        const Face& omega = X.level(n)[fi];
        for (long long s = 0; s < ns; ++s) {
            for (int a = 0; a < H.degree; ++a) {
                std::vector<int> T =
                    subset_colex_unrank(H.neighbor(static_cast<int>(s), a), n, ell);
                Face target = restrict_to_type(X, omega, T);
                Q(static_cast<int>(fi * ns + s), X.face_index(ell, target)) +=
                    1.0 / H.degree;
            }
        }
    }
    return {std::move(Q), std::move(mu_in), X.level_marginal(ell)};
}

WalkOperator q_up(const Complex& X, const LabelledRegularGraph& H, int ell) {
    WalkOperator qdo = q_down(X, H, ell);
    Matrix Q(qdo.M.cols(), qdo.M.rows());
    for (Eigen::Index y = 0; y < Q.rows(); ++y)
        for (Eigen::Index x = 0; x < Q.cols(); ++x)
            Q(y, x) = qdo.M(x, y) * qdo.mu_in[x] / qdo.mu_out[y];
    return {std::move(Q), qdo.mu_out, qdo.mu_in};
}

WalkOperator expanderized_down_up(const Complex& X, const LabelledRegularGraph& H,
                                  int ell) {
    WalkOperator qdo = q_down(X, H, ell);
    WalkOperator qup = q_up(X, H, ell);
    return {qdo.M * qup.M, qdo.mu_in, qup.mu_out};
}

WalkOperator face_marginal(const Complex& X, const WalkOperator& paqx, int ell) {
    const int nf = X.level_size(X.rank());
    const long long ns = count_subsets(X.rank(), ell);
    Matrix P = Matrix::Zero(nf, nf);
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nf; ++j) {
            double v = 0.0;
            for (long long s = 0; s < ns; ++s)
                for (long long t = 0; t < ns; ++t)
                    v += paqx.M(i * ns + s, j * ns + t);
            P(i, j) = v / static_cast<double>(ns);
        }
    return {std::move(P), X.pi(), X.pi()};
}

WalkOperator scan_step(const Complex& X, int side) {
    if (!X.partite())
        throw not_partite_error("systematic scan: complex must be partite");
    if (side < 0 || side >= X.rank())
        throw input_error("systematic scan: side out of range");
    const int n = X.rank();
    const int nf = X.level_size(n);
    Matrix P = Matrix::Zero(nf, nf);
    for (int i = 0; i < nf; ++i) {
        // pin everything except the chosen side, resample from the conditional
        Face rest;
        for (int v : X.level(n)[i].elements)
            if (X.side_of(v) != side) rest.elements.push_back(v);
        int ri = X.face_index(n - 1, rest);
        const auto& cover = X.facets_containing(n - 1, ri);
        double mass = 0.0;
        for (int fi : cover) mass += X.pi()[fi];
        for (int fi : cover) P(i, fi) = X.pi()[fi] / mass;
    }
    return {std::move(P), X.pi(), X.pi()};
}

WalkOperator scan_sweep(const Complex& X) {
    WalkOperator sweep = scan_step(X, 0);
    for (int side = 1; side < X.rank(); ++side)
        sweep.M = sweep.M * scan_step(X, side).M;
    return sweep;
}

}  // namespace hodos
