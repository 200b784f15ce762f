#include <doctest.h>

#include <random>

#include "hodos/operators.hpp"
#include "hodos/spectral.hpp"
#include "hodos/suite.hpp"

using namespace hodos;

namespace {

Complex product22w() {
    std::vector<FacetInput> fs = {{{0, 2}, 1},
                                  {{0, 3}, 2},
                                  {{1, 2}, 3},
                                  {{1, 3}, 4}};
    return Complex::build(4, fs, true, {0, 0, 1, 1});
}

std::vector<double> nonzero_spectrum(const WalkOperator& P) {
    std::vector<double> out;
    for (double e : spectrum(P).eigenvalues)
        if (std::abs(e) > 1e-9) out.push_back(e);
    return out;
}

}  // namespace

TEST_CASE("up and down operators are stochastic and adjoint") {
    Complex X = product22w();
    WalkOperator U = up_operator(X, 1, 2);
    WalkOperator D = down_operator(X, 2, 1);
    CHECK_NOTHROW(U.validate());
    CHECK_NOTHROW(D.validate());
    WalkOperator Ustar = adjoint(U);
    CHECK((Ustar.M - D.M).cwiseAbs().maxCoeff() <= 1e-12);

    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        Vector f(U.M.rows()), g(U.M.cols());
        for (Eigen::Index i = 0; i < f.size(); ++i) f[i] = unif(rng);
        for (Eigen::Index i = 0; i < g.size(); ++i) g[i] = unif(rng);
        double lhs = (f.cwiseProduct(U.M * g)).dot(U.mu_in);
        double rhs = (g.cwiseProduct(Ustar.M * f)).dot(U.mu_out);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("down-up and up-down share their nonzero spectrum") {
    for (const auto& inst : generate_corpus(5, 6)) {
        const Complex& X = inst.complex;
        auto a = nonzero_spectrum(down_up(X, inst.ell));
        auto b = nonzero_spectrum(up_down(X, inst.ell));
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-9));
    }
}

TEST_CASE("clique-with-loops collapses to the dense walks") {
    for (const auto& inst : generate_corpus(9, 8)) {
        const Complex& X = inst.complex;
        if (!X.partite()) continue;
        const int n = X.rank();
        LabelledRegularGraph K = clique_loops_graph(
            static_cast<int>(count_subsets(n, inst.ell)));
        WalkOperator papx = expanderized_up_down(X, K, inst.ell);
        WalkOperator udw = up_down(X, inst.ell);
        CHECK((papx.M - udw.M).cwiseAbs().maxCoeff() <= 1e-12);

        WalkOperator paqx = expanderized_down_up(X, K, inst.ell);
        WalkOperator duw = down_up(X, inst.ell);
        WalkOperator fm = face_marginal(X, paqx, inst.ell);
        CHECK((fm.M - duw.M).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("q-operators compose to the expanderized walks") {
    Complex X = product22w();
    LabelledRegularGraph H = cycle_graph(2);
    WalkOperator qdo = q_down(X, H, 1);
    WalkOperator qup = q_up(X, H, 1);
    CHECK_NOTHROW(qdo.validate());
    CHECK_NOTHROW(qup.validate());

    WalkOperator qup_adj = adjoint(qdo);
    CHECK((qup.M - qup_adj.M).cwiseAbs().maxCoeff() <= 1e-12);

    WalkOperator paqx = expanderized_down_up(X, H, 1);
    CHECK((qdo.M * qup.M - paqx.M).cwiseAbs().maxCoeff() <= 1e-12);

    // Qup Qdo walks two H-steps on the subset coordinate
    WalkOperator papx2 = expanderized_up_down(X, square(H), 1);
    CHECK((qup.M * qdo.M - papx2.M).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("expanderized walks reject mismatched graphs and non-partite input") {
    Complex X = product22w();
    CHECK_THROWS_AS(expanderized_up_down(X, cycle_graph(3), 1), input_error);
    Complex Y = Complex::build(3, {{{0, 1}, 1.0}, {{1, 2}, 1.0}}, false);
    CHECK_THROWS_AS(expanderized_up_down(Y, cycle_graph(2), 1),
                    not_partite_error);
    CHECK_THROWS_AS(scan_step(Y, 0), not_partite_error);
}

TEST_CASE("scan sweep preserves the facet distribution") {
    Complex X = product22w();
    WalkOperator S = scan_sweep(X);
    CHECK_NOTHROW(S.validate());
    CHECK(((S.M.transpose() * X.pi()) - X.pi()).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("type rank and restriction") {
    Complex X = product22w();
    Face f{{0, 2}};
    CHECK(type_rank(X, f) == 0);  // the only 2-subset of two sides
    Face r = restrict_to_type(X, f, {1});
    CHECK(r == Face{{2}});
    Face r0 = restrict_to_type(X, f, {0});
    CHECK(r0 == Face{{0}});
}
