#include <doctest.h>

#include <map>

#include "hodos/operators.hpp"
#include "hodos/sampler.hpp"

using namespace hodos;

namespace {

Complex product22w() {
    std::vector<FacetInput> fs = {{{0, 2}, 1},
                                  {{0, 3}, 2},
                                  {{1, 2}, 3},
                                  {{1, 3}, 4}};
    return Complex::build(4, fs, true, {0, 0, 1, 1});
}

}  // namespace

TEST_CASE("bit accounting for power-of-two supports is exact") {
    BitStream rng(1);
    for (int i = 0; i < 100; ++i) rng.uniform(4);
    CHECK(rng.bits_used() == 200);  // exactly 2 bits per draw, no rejection
    BitStream one(1);
    one.uniform(1);
    CHECK(one.bits_used() == 0);
    BitStream flat(1);
    flat.categorical(Vector::Constant(8, 0.125));
    CHECK(flat.bits_used() == 3);
}

TEST_CASE("rejection sampling charges burned bits") {
    BitStream rng(1);
    for (int i = 0; i < 1000; ++i) rng.uniform(3);
    // every draw takes 2-bit chunks; rejections cost extra full chunks
    CHECK(rng.bits_used() >= 2000);
    CHECK(rng.bits_used() % 2 == 0);
}

TEST_CASE("uniform and categorical are unbiased") {
    BitStream rng(7);
    std::map<long long, int> hist;
    const int N = 60000;
    for (int i = 0; i < N; ++i) ++hist[rng.uniform(3)];
    for (int v = 0; v < 3; ++v)
        CHECK(double(hist[v]) / N == doctest::Approx(1.0 / 3).epsilon(0.03));

    Vector p(3);
    p << 0.5, 0.3, 0.2;
    BitStream rng2(11);
    std::map<int, int> hist2;
    for (int i = 0; i < N; ++i) ++hist2[rng2.categorical(p)];
    for (int v = 0; v < 3; ++v)
        CHECK(double(hist2[v]) / N == doctest::Approx(p[v]).epsilon(0.05));
}

TEST_CASE("walk kind strings") {
    for (const char* s : {"down-up", "up-down", "systematic-scan",
                          "expanderized-down-up", "expanderized-up-down"})
        CHECK(to_string(walk_kind_from_string(s)) == s);
    CHECK_THROWS_AS(walk_kind_from_string("sideways"), input_error);
}

TEST_CASE("index bits per step") {
    Complex X = product22w();
    LabelledRegularGraph H = cycle_graph(2);
    WalkSpec scan{WalkKind::SystematicScan, -1, nullptr};
    WalkSpec du{WalkKind::DownUp, 1, nullptr};
    WalkSpec ud{WalkKind::UpDown, 1, nullptr};
    WalkSpec eud{WalkKind::ExpanderizedUpDown, 1, &H};
    WalkSpec edu{WalkKind::ExpanderizedDownUp, 1, &H};
    CHECK(index_bits_per_step(X, scan) == 0);
    CHECK(index_bits_per_step(X, du) == 1);
    CHECK(index_bits_per_step(X, ud) == 1);
    CHECK(index_bits_per_step(X, eud) == 1);
    CHECK(index_bits_per_step(X, edu) == 2);
}

TEST_CASE("long-run frequencies match the stationary law") {
    Complex X = product22w();
    const int T = 200000;
    for (WalkKind kind : {WalkKind::DownUp, WalkKind::SystematicScan}) {
        WalkSpec spec{kind, 1, nullptr};
        BitStream rng(3);
        ChainState s = initial_state(X, spec, 0);
        Vector freq = Vector::Zero(4);
        for (int t = 0; t < T; ++t) {
            s = sampler_step(X, spec, s, rng);
            freq[X.face_index(2, s.face)] += 1.0;
        }
        freq /= T;
        for (int i = 0; i < 4; ++i)
            CHECK(freq[i] == doctest::Approx(X.pi()[i]).epsilon(0.05));
    }
}

TEST_CASE("expanderized down-up tracks a subset coordinate") {
    Complex X = product22w();
    LabelledRegularGraph H = cycle_graph(2);
    WalkSpec spec{WalkKind::ExpanderizedDownUp, 1, &H};
    BitStream rng(5);
    ChainState s = initial_state(X, spec, 0);
    CHECK(s.subset_rank == 0);
    for (int t = 0; t < 1000; ++t) {
        s = sampler_step(X, spec, s, rng);
        CHECK(s.face.size() == 2);
        CHECK(s.subset_rank >= 0);
        CHECK(s.subset_rank < 2);
    }
    CHECK(s.bits_used == rng.bits_used());
}

TEST_CASE("same seed gives the same trajectory") {
    Complex X = product22w();
    WalkSpec spec{WalkKind::DownUp, 1, nullptr};
    BitStream a(9), b(9);
    ChainState sa = initial_state(X, spec, 0);
    ChainState sb = initial_state(X, spec, 0);
    for (int t = 0; t < 200; ++t) {
        sa = sampler_step(X, spec, sa, a);
        sb = sampler_step(X, spec, sb, b);
        CHECK(sa.face == sb.face);
        CHECK(sa.bits_used == sb.bits_used);
    }
}
