#include <doctest.h>

#include <cmath>

#include "hodos/phi_entropy.hpp"
#include "hodos/suite.hpp"

using namespace hodos;

namespace {

Complex product22(double a = 1, double b = 1, double c = 1, double d = 1) {
    std::vector<FacetInput> fs = {{{0, 2}, a},
                                  {{0, 3}, b},
                                  {{1, 2}, c},
                                  {{1, 3}, d}};
    return Complex::build(4, fs, true, {0, 0, 1, 1});
}

}  // namespace

TEST_CASE("phi entropy oracles") {
    Vector unif = Vector::Constant(2, 0.5);
    Vector f(2);
    f << 2.0, 0.0;
    CHECK(phi_entropy(f, unif, PhiSpec::xlogx()) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
    Vector g(2);
    g << 0.0, 2.0;
    CHECK(phi_entropy(g, unif, PhiSpec::square()) == doctest::Approx(1.0));
    // constants carry no entropy
    CHECK(phi_entropy(Vector::Constant(2, 3.0), unif, PhiSpec::xlogx()) ==
          doctest::Approx(0.0));
    CHECK_THROWS_AS(
        PhiSpec::custom([](double t) { return -t * t; }).check_convexity(),
        input_error);
}

TEST_CASE("two-point log-Sobolev factor") {
    Vector half = Vector::Constant(2, 0.5);
    CHECK(two_point_ls_factor(half) == doctest::Approx(0.5));
    Vector skew(2);
    skew << 0.25, 0.75;
    CHECK(two_point_ls_factor(skew) ==
          doctest::Approx(0.5 / std::log(3.0)).epsilon(1e-12));
    Vector atom(1);
    atom << 1.0;
    CHECK(two_point_ls_factor(atom) == doctest::Approx(1.0));
}

TEST_CASE("two-point factor is tight for the projection chain") {
    // LS(J_pi) = inf Var(f) / Ent(f^2); scan the one-parameter family f=(1,t)
    for (double p : {0.1, 0.25, 0.5, 0.4}) {
        Vector pi(2);
        pi << p, 1 - p;
        double best = 1e100;
        for (double t = 1e-4; t < 50.0; t *= 1.01) {
            Vector f(2);
            f << 1.0, t;
            double var = phi_entropy(f, pi, PhiSpec::square());
            Vector f2 = f.cwiseProduct(f);
            double ent = phi_entropy(f2, pi, PhiSpec::xlogx());
            if (ent > 1e-12) best = std::min(best, var / ent);
        }
        double factor = two_point_ls_factor(pi);
        CHECK(best >= factor - 1e-9);       // certified lower bound
        CHECK(best <= factor * (1 + 1e-3)); // and it is essentially attained
    }
}

TEST_CASE("log-Sobolev lower bound requires reversibility") {
    WalkOperator C;
    C.M = Matrix::Zero(3, 3);
    C.M(0, 1) = C.M(1, 2) = C.M(2, 0) = 1.0;
    C.mu_in = C.mu_out = Vector::Constant(3, 1.0 / 3);
    CHECK_THROWS_AS(log_sobolev_lower_bound(C), input_error);
}

TEST_CASE("uniform 2x2 product certificate is exact") {
    Complex X = product22();
    ContractionReport lc = local_contraction(X, Face{}, PhiSpec::square());
    CHECK(lc.constant == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(lc.mode == ContractionReport::Mode::Exact);

    CertificateReport rep = theorem_4_1_certificate(X, 1, PhiSpec::square());
    CHECK(rep.certified);
    CHECK(rep.certificate == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(rep.exact_cf == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(rep.cf_slack >= -1e-10);
    CHECK(rep.cor42_lhs == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(rep.cor42_rhs == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(rep.ok);

    ContractionReport q = quadratic_contraction(up_operator(X, 1, 2));
    CHECK(q.constant == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("xlogx certificate stays diagnostic") {
    Complex X = product22(1, 2, 3, 4);
    CertificateReport rep = theorem_4_1_certificate(X, 1, PhiSpec::xlogx());
    CHECK(!rep.certified);
    CHECK(rep.certificate >= 0.0);
    ContractionReport lc = local_contraction(X, Face{}, PhiSpec::xlogx());
    CHECK(lc.mode == ContractionReport::Mode::EstimatedLowerCertificate);
    CHECK(lc.constant >= 0.0);
    CHECK(lc.constant <= 1.0 + 1e-12);
}

TEST_CASE("certificates hold across the corpus") {
    for (const auto& inst : generate_corpus(21, 6)) {
        CertificateReport rep =
            theorem_4_1_certificate(inst.complex, inst.ell, PhiSpec::square());
        CHECK(rep.ok);
        CHECK(rep.cf_slack >= -1e-9);
        CHECK(rep.cor42_slack >= -1e-9);
        CHECK(int(rep.worst_chain.size()) == inst.ell + 1);
    }
}

TEST_CASE("functional inequality checks on a weighted product") {
    Complex X = product22(1, 2, 3, 4);
    CorpusOptions opts{50, 0, 50};

    Vector f(4);
    f << 0.5, 1.5, 2.0, 1.0;
    CHECK(chain_rule_check(X, 1, 2, f, PhiSpec::square()).ok);
    CHECK(chain_rule_check(X, 1, 2, f, PhiSpec::xlogx()).ok);
    CHECK(garland_identity_check(X, 1, f).ok);
    CHECK(dpi_check(down_up(X, 1), PhiSpec::xlogx(), opts).ok);

    LabelledRegularGraph H = cycle_graph(2);
    CHECK(ls_lifting_check(X, H, 1, opts).ok);
    CHECK(lemma_4_3_check(X, 1, opts).ok);

    double lam2 = two_sided_lambda(square(H));
    double c = log_sobolev_lower_bound(up_down(X, 1)) * (1.0 - lam2);
    CHECK(entropy_contraction_check(q_down(X, H, 1), c, opts).ok);
}

TEST_CASE("boosting bound") {
    CHECK(lee_boosting_bound(1.0, 1) == doctest::Approx(0.25));
    CHECK(lee_boosting_bound(0.5, 3) == doctest::Approx(1.0 / 6));
    CHECK_THROWS_AS(lee_boosting_bound(0.0, 2), input_error);
}
