#include <doctest.h>

#include <cmath>
#include <sstream>

#include "hodos/expanders.hpp"

using namespace hodos;

TEST_CASE("builtin spectra") {
    CHECK(two_sided_lambda(clique_loops_graph(5)) == doctest::Approx(0.0));
    CHECK(two_sided_lambda(cycle_graph(4)) == doctest::Approx(1.0));
    // C5: max(cos(2 pi/5), |cos(4 pi/5)|)
    CHECK(two_sided_lambda(cycle_graph(5)) ==
          doctest::Approx(std::abs(std::cos(4 * M_PI / 5))).epsilon(1e-12));
    CHECK(two_sided_lambda(complete_graph(4)) == doctest::Approx(1.0 / 3));
    CHECK(two_sided_lambda(hypercube_graph(8)) == doctest::Approx(1.0));
    CHECK(two_sided_lambda(self_loops_graph(3)) == doctest::Approx(1.0));
    CHECK(two_sided_lambda(clique_loops_graph(1)) == doctest::Approx(0.0));
}

TEST_CASE("square spectra") {
    for (int m : {3, 5, 6}) {
        LabelledRegularGraph H = cycle_graph(m);
        double lam = two_sided_lambda(H);
        CHECK(two_sided_lambda(square(H)) ==
              doctest::Approx(lam * lam).epsilon(1e-12));
        CHECK(square(H).degree == 4);
    }
}

TEST_CASE("rotation map symmetry is enforced") {
    LabelledRegularGraph bad{2, 1, {1, 1}};
    CHECK_THROWS_AS(bad.validate(), input_error);
    LabelledRegularGraph good{2, 1, {1, 0}};
    CHECK_NOTHROW(good.validate());
}

TEST_CASE("random regular graphs") {
    LabelledRegularGraph H = random_regular_graph(10, 3, 7);
    CHECK_NOTHROW(H.validate());
    CHECK(H.degree == 3);
    LabelledRegularGraph H2 = random_regular_graph(10, 3, 7);
    CHECK(H.out == H2.out);  // same seed, same graph
    LabelledRegularGraph H3 = random_regular_graph(10, 3, 8);
    CHECK(H.out != H3.out);
    CHECK_THROWS_AS(random_regular_graph(9, 3, 0), input_error);  // odd-odd
}

TEST_CASE("certification") {
    LabelledRegularGraph H = certify_random_regular(16, 4, 0.9, 64, 1);
    CHECK(two_sided_lambda(H) <= 0.9);
    // below the Alon-Boppana floor: must exhaust and report the best try
    CHECK_THROWS_AS(certify_random_regular(16, 3, 0.01, 4, 1), check_error);
    CHECK_THROWS_AS(certify_random_regular(16, 4, 1.5, 4, 1), input_error);
}

TEST_CASE("power iteration cross-check") {
    LabelledRegularGraph H = random_regular_graph(12, 4, 3);
    Matrix M = H.walk_matrix();
    const int m = H.num_vertices;
    Vector v = Vector::Zero(m);
    v[0] = 1.0;
    v.array() -= v.mean();
    double lam = 0.0;
    for (int it = 0; it < 20000; ++it) {
        Vector w = M * v;
        w.array() -= w.mean();
        lam = w.norm() / v.norm();
        v = w / w.norm();
    }
    CHECK(two_sided_lambda(H) == doctest::Approx(lam).epsilon(1e-8));
}

TEST_CASE("graph file round trip") {
    LabelledRegularGraph H = random_regular_graph(8, 3, 5);
    std::stringstream ss;
    save_graph(H, ss);
    LabelledRegularGraph G = load_graph(ss);
    CHECK(G.num_vertices == H.num_vertices);
    CHECK(G.degree == H.degree);
    CHECK(G.out == H.out);
    std::stringstream bad("3 2\n0 1\n");
    CHECK_THROWS_AS(load_graph(bad), input_error);
}
