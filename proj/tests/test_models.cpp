#include <doctest.h>

#include <cmath>

#include "hodos/models.hpp"
#include "hodos/operators.hpp"
#include "hodos/spectral.hpp"

using namespace hodos;

namespace {

ColoringInstance triangle3() {
    ColoringInstance inst;
    inst.n = 3;
    inst.edges = {{0, 1}, {1, 2}, {0, 2}};
    inst.lists = {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
    return inst;
}

ColoringInstance path3() {
    ColoringInstance inst;
    inst.n = 3;
    inst.edges = {{0, 1}, {1, 2}};
    inst.lists = {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}};
    return inst;
}

IsingInstance free_spins(int n) {
    IsingInstance inst;
    inst.J = Matrix::Zero(n, n);
    inst.h = Vector::Zero(n);
    return inst;
}

}  // namespace

TEST_CASE("triangle with three colors") {
    ColoringInstance inst = triangle3();
    CHECK(count_proper_colorings(inst) == 6);
    Complex X = coloring_complex(inst);
    CHECK(X.rank() == 3);
    CHECK(X.num_vertices() == 9);
    CHECK(X.level_size(3) == 6);
    CHECK(X.partite());
    Vector m1 = X.level_marginal(1);
    for (int v = 0; v < 9; ++v)
        CHECK(m1[v] == doctest::Approx(1.0 / 9).epsilon(1e-12));
    CHECK(X.label(0) == "v0:c0");
}

TEST_CASE("path with three colors") {
    ColoringInstance inst = path3();
    CHECK(count_proper_colorings(inst) == 12);
    Complex X = coloring_complex(inst);
    CHECK(X.level_size(3) == 12);
    CHECK(X.num_vertices() == 9);
}

TEST_CASE("infeasible list colorings are rejected") {
    ColoringInstance inst = triangle3();
    inst.lists = {{0, 1}, {0, 1}, {0, 1}};  // 2 colors on a triangle
    CHECK(count_proper_colorings(inst) == 0);
    CHECK_THROWS_AS(coloring_complex(inst), input_error);
}

TEST_CASE("coloring instance statistics") {
    ColoringInstance inst = path3();
    CHECK(inst.max_degree() == 2);
    CHECK(inst.k_minus() == 1);  // middle vertex: 3 - 2
    CHECK(inst.k_plus() == 2);   // endpoints: 3 - 1
}

TEST_CASE("link eigenvalue and marginal bounds for colorings") {
    for (const ColoringInstance& inst : {triangle3(), path3()}) {
        Prop51Report rep = prop_5_1_check(inst);
        CHECK(rep.ok);
        CHECK(rep.max_lambda2 <= rep.bound_lambda2 + 1e-12);
        CHECK(rep.min_marginal >= rep.bound_marginal - 1e-12);
    }
}

TEST_CASE("free Ising spins") {
    IsingBuild b = ising_complex(free_spins(2));
    CHECK(b.log_z == doctest::Approx(std::log(4.0)).epsilon(1e-12));
    CHECK(b.complex.level_size(2) == 4);
    for (int i = 0; i < 4; ++i)
        CHECK(b.complex.pi()[i] == doctest::Approx(0.25));

    SpectralReport rep = spectrum(down_up(b.complex, 1));
    REQUIRE(rep.eigenvalues.size() == 4);
    CHECK(rep.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(rep.eigenvalues[1] == doctest::Approx(0.5));
    CHECK(rep.eigenvalues[2] == doctest::Approx(0.5));
    CHECK(rep.eigenvalues[3] == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("Ising statistics") {
    IsingInstance inst;
    inst.J = Matrix::Zero(2, 2);
    inst.J(0, 1) = inst.J(1, 0) = 0.3;
    inst.h = Vector(2);
    inst.h << 1.0, -2.0;
    CHECK(inst.op_norm() == doctest::Approx(0.3));
    CHECK(inst.theta() == doctest::Approx(0.3));
    CHECK(inst.h_inf() == doctest::Approx(2.0));
    CHECK(inst.h_one() == doctest::Approx(3.0));
    CHECK(!inst.psd());  // eigenvalues are +-0.3

    IsingInstance bad = inst;
    bad.J(0, 1) = 0.1;  // asymmetric
    CHECK_THROWS_AS(bad.validate(), input_error);
    CHECK_THROWS_AS(ising_complex(free_spins(4), 3), input_error);
}

TEST_CASE("interaction gap bound") {
    // rank-one PSD couplings keep ||J|| < 1
    for (double norm : {0.0, 0.3, 0.7}) {
        for (int n : {2, 3, 4}) {
            IsingInstance inst;
            Vector u = Vector::Constant(n, 1.0 / std::sqrt(double(n)));
            inst.J = norm * u * u.transpose();
            inst.h = Vector::Zero(n);
            CHECK(inst.psd());
            Thm54Report rep = theorem_5_4_check(inst);
            CHECK(rep.ok);
            CHECK(rep.bound == doctest::Approx((1.0 - norm) / n).epsilon(1e-12));
            CHECK(rep.slack >= -1e-10);
        }
    }
    // free spins meet the bound with equality
    Thm54Report rep = theorem_5_4_check(free_spins(3));
    CHECK(rep.gap == doctest::Approx(1.0 / 3).epsilon(1e-10));
    CHECK(rep.slack == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("pinned gap and marginal bounds for Ising") {
    IsingInstance inst;
    Vector u(3);
    u << 1.0, -1.0, 2.0;
    u /= u.norm();
    inst.J = 0.4 * u * u.transpose();  // PSD, norm 0.4
    inst.h = Vector(3);
    inst.h << 0.3, 0.0, -0.2;
    Prop52Report rep = prop_5_2_check(inst);
    CHECK(rep.ok);
    CHECK(rep.gap_n2 >= rep.bound_gap - 1e-12);
    CHECK(rep.min_marginal >= rep.bound_marginal - 1e-12);
    CHECK(rep.bound_marginal ==
          doctest::Approx(0.5 * std::exp(-4 * inst.h_inf() - 1.0)).epsilon(1e-12));
}
