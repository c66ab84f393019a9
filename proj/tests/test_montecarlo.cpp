#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "stretchfpp/density.hpp"
#include "stretchfpp/montecarlo.hpp"

using namespace sfpp;

namespace {

EstimateOptions small(std::int64_t steps = 100000, int shards = 16, std::uint64_t seed = 5) {
    EstimateOptions o;
    o.n_steps = steps;
    o.n_shards = shards;
    o.burn_in = 10000;
    o.seed = seed;
    return o;
}

}  // namespace

TEST_CASE("estimate_chi is reproducible and thread-count independent") {
    const auto fam = GraphFamily::parse("VWXZ");
    auto o = small(20000, 8);
    o.threads = 1;
    const auto a = estimate_chi(fam, o);
    o.threads = 4;
    const auto b = estimate_chi(fam, o);
    CHECK(to_json_line(a) == to_json_line(b));
    o.seed = 6;
    CHECK(to_json_line(a) != to_json_line(estimate_chi(fam, o)));
}

TEST_CASE("estimate_chi for {X,Y,Z} brackets the closed form") {
    const auto r = estimate_chi(GraphFamily::parse("XYZ"), small());
    CHECK(r.method == Method::monte_carlo);
    CHECK(r.std_error > 0.0);
    CHECK(std::abs(r.value - chi_exact(GraphFamily::parse("XYZ"))) < 3 * r.std_error);
}

TEST_CASE("delta and generic recursions give the same law") {
    auto o = small(100000, 16, 9);
    o.recursion = Recursion::delta;
    const auto a = estimate_chi(GraphFamily::parse("XYZ"), o);
    o.recursion = Recursion::generic;
    o.seed = 10;
    const auto b = estimate_chi(GraphFamily::parse("XYZ"), o);
    CHECK(std::abs(a.value - b.value) < 3 * std::hypot(a.std_error, b.std_error));
}

TEST_CASE("shards look like draws from one distribution") {
    const auto shards = shard_estimates(GraphFamily::parse("VWX"), small(50000, 32));
    double mean = 0.0;
    for (double v : shards) mean += v;
    mean /= shards.size();
    double ss = 0.0;
    for (double v : shards) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (shards.size() - 1));
    for (double v : shards) CHECK(std::abs(v - mean) < 6 * sd);
}

TEST_CASE("standard error scales like 1/sqrt(n_steps)") {
    const auto fam = GraphFamily::parse("XYZ");
    const double e4 = estimate_chi(fam, small(10000, 32, 1)).std_error;
    const double e5 = estimate_chi(fam, small(100000, 32, 2)).std_error;
    const double e6 = estimate_chi(fam, small(1000000, 32, 3)).std_error;
    const double ideal = std::sqrt(10.0);
    CHECK(e4 / e5 > ideal / 1.5);
    CHECK(e4 / e5 < ideal * 1.5);
    CHECK(e5 / e6 > ideal / 1.5);
    CHECK(e5 / e6 < ideal * 1.5);
}

TEST_CASE("estimate_chi preconditions") {
    CHECK_THROWS_AS(estimate_chi(GraphFamily::parse("X"), small()), std::invalid_argument);
    CHECK_THROWS_AS(estimate_chi(GraphFamily::parse("VW"), small()), std::invalid_argument);
    CHECK_THROWS_AS(estimate_chi(GraphFamily::parse("XYZ"), small(9999)), std::invalid_argument);
    auto o = small();
    o.burn_in = 999;
    CHECK_THROWS_AS(estimate_chi(GraphFamily::parse("XYZ"), o), std::invalid_argument);
    CHECK_THROWS_AS(estimate_chi(GraphFamily::parse("XYZ"), small(10000, 1)), std::invalid_argument);
}

TEST_CASE("JSON-lines records") {
    RateEstimate r;
    r.family = GraphFamily::parse("ZYX");
    r.method = Method::monte_carlo;
    r.value = 0.6827;
    r.std_error = 0.0005;
    r.n_steps = 312500;
    r.n_shards = 32;
    r.burn_in = 10000;
    r.seed = 42;
    const auto line = to_json_line(r);
    CHECK(line ==
          R"({"family":"XYZ","method":"monte-carlo","value":0.6827,"std_error":0.0005,"n_steps":312500,"n_shards":32,"burn_in":10000,"seed":42})");
    const auto back = rate_from_json_line(line);
    CHECK(to_json_line(back) == line);
    CHECK_THROWS(rate_from_json_line(R"({"family":"XYZ","method":"guess"})"));
}

TEST_CASE("validate_recursion on the single-line family") {
    const auto rep = validate_recursion(GraphFamily::parse("X"), 20, 10, 1);
    CHECK(rep.failures == 0);
    const auto ladder = sample_ladder(GraphFamily::parse("X"), 10, 1, 0);
    double sum = 0.0;
    for (const auto& w : ladder.layers) sum += w.x;
    GenericFrontier f = generic_init(ladder.family, kInf);
    for (const auto& w : ladder.layers) f = generic_step(f, w).front;
    CHECK(f.d0() == sum);
}

TEST_CASE("subadditivity probe") {
    const auto fam = GraphFamily::parse("XYZ");
    const auto rep = subadditivity_probe(fam, 500, 40, 17, 3);
    CHECK(rep.trials == 500);
    CHECK(rep.violations == 0);
    CHECK(rep.max_excess <= 1e-12);  // rounding only
    // Boundaries: one side of the split is the empty segment.
    CHECK(subadditivity_probe(fam, 20, 10, 0, 4).violations == 0);
    CHECK(subadditivity_probe(fam, 20, 10, 10, 4).violations == 0);
    CHECK(subadditivity_probe(fam, 20, 10, 0, 4).max_excess <= 1e-12);
    CHECK(subadditivity_probe(GraphFamily::parse("VWXYZ"), 100, 30, 11, 4).violations == 0);
    CHECK_THROWS_AS(subadditivity_probe(fam, 1, 5, 6, 1), std::invalid_argument);
}
