#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "oracles.hpp"
#include "stretchfpp/ladder.hpp"

using namespace sfpp;

TEST_CASE("sample_ladder shape and determinism") {
    const auto fam = GraphFamily::parse("XYZ");
    const auto a = sample_ladder(fam, 3, 7);
    REQUIRE(a.n() == 3);
    REQUIRE(a.z0.has_value());
    CHECK(*a.z0 > 0.0);
    for (const auto& lw : a.layers) {
        CHECK(lw.x > 0.0);
        CHECK(lw.y > 0.0);
        CHECK(lw.z > 0.0);
        CHECK(lw.v == kInf);
        CHECK(lw.w == kInf);
    }
    const auto b = sample_ladder(fam, 3, 7);
    CHECK(to_json(a) == to_json(b));
    CHECK(to_json(a) != to_json(sample_ladder(fam, 3, 8)));
    CHECK(to_json(a) != to_json(sample_ladder(fam, 3, 7, 1)));

    const auto no_z = sample_ladder(GraphFamily::parse("VWX"), 4, 1);
    CHECK_FALSE(no_z.z0.has_value());
    CHECK_THROWS_AS(sample_ladder(fam, 0, 1), std::invalid_argument);
}

TEST_CASE("Exp(1) sampler moments") {
    Rng rng(2024);
    constexpr int n = 1000000;
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = rng.exp1();
        REQUIRE(x >= 0.0);
        s += x;
        s2 += x * x;
    }
    const double mean = s / n;
    const double var = s2 / n - mean * mean;
    CHECK(mean == doctest::Approx(1.0).epsilon(0.003));
    CHECK(var == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("dijkstra on a hand-built single layer") {
    WeightedLadder l;
    l.family = GraphFamily::parse("XYZ");
    l.z0 = 1.0;
    LayerWeights lw;
    lw.x = 2.0;
    lw.y = 5.0;
    lw.z = 1.0;
    l.layers.push_back(lw);
    // min(x + z1, z0 + y) = min(3, 6)
    CHECK(*dijkstra_oracle(l, {1, 1}) == doctest::Approx(3.0));
    CHECK(*dijkstra_oracle(l, {0, 0}) == 0.0);
    CHECK(*dijkstra_oracle(l, {1, 0}) == doctest::Approx(2.0));
    CHECK_THROWS_AS(dijkstra_oracle(l, {2, 0}), std::invalid_argument);
}

TEST_CASE("unreachable targets report no path") {
    const auto vw = sample_ladder(GraphFamily::parse("VW"), 3, 5);
    CHECK_FALSE(dijkstra_oracle(vw, {1, 0}).has_value());
    CHECK(dijkstra_oracle(vw, {2, 0}).has_value());
    const auto vwx = sample_ladder(GraphFamily::parse("VWX"), 3, 5);
    // (0,1) is reached by backing up along W.
    REQUIRE(dijkstra_oracle(vwx, {0, 1}).has_value());
    CHECK(*dijkstra_oracle(vwx, {0, 1}) <= vwx.layers[0].x + vwx.layers[0].w + 1e-12);
    // {Y,Z} is connected through the rungs.
    const auto yz = sample_ladder(GraphFamily::parse("YZ"), 2, 5);
    const auto d = dijkstra_oracle(yz, {2, 0});
    REQUIRE(d.has_value());
    CHECK(*d == doctest::Approx(*yz.z0 + yz.layers[0].y + yz.layers[1].y + yz.layers[1].z));
}

TEST_CASE("dijkstra agrees with exhaustive simple-path enumeration") {
    for (unsigned mask = 0; mask < 32; ++mask) {
        const auto fam = GraphFamily::from_mask(mask);
        for (int seed = 0; seed < 4; ++seed) {
            const auto l = sample_ladder(fam, 4, 100 + seed);
            for (int c = 0; c <= 4; ++c)
                for (int r = 0; r <= 1; ++r) {
                    const double brute = oracle::brute_force_distance(l, {c, r});
                    const auto got = dijkstra_oracle(l, {c, r});
                    if (brute == kInf) {
                        CHECK_FALSE(got.has_value());
                    } else {
                        REQUIRE(got.has_value());
                        CHECK(std::abs(*got - brute) < 1e-12);
                    }
                }
        }
    }
}

TEST_CASE("slice re-roots at column m") {
    const auto l = sample_ladder(GraphFamily::parse("XYZ"), 6, 3);
    const auto s = l.slice(2, 5);
    CHECK(s.n() == 3);
    CHECK(*s.z0 == l.layers[1].z);
    CHECK(s.layers[0].x == l.layers[2].x);
    CHECK(l.slice(0, 6).z0 == l.z0);
    CHECK(l.slice(3, 3).n() == 0);
    CHECK_THROWS_AS(l.slice(4, 2), std::invalid_argument);
}

TEST_CASE("ladder JSON reproduces the ladder") {
    for (const char* name : {"XYZ", "VWX", "VWXYZ"}) {
        const auto l = sample_ladder(GraphFamily::parse(name), 5, 11);
        const auto back = ladder_from_json(to_json(l));
        CHECK(to_json(back) == to_json(l));
        CHECK(*dijkstra_oracle(back, {5, 0}) == *dijkstra_oracle(l, {5, 0}));
    }
}
