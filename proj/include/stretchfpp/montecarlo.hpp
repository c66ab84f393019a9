#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "stretchfpp/chain.hpp"
#include "stretchfpp/family.hpp"

namespace sfpp {

enum class Method { exact, operator_route, monte_carlo };

std::string to_string(Method m);

struct RateEstimate {
    GraphFamily family;
    Method method = Method::exact;
    double value = 0.0;
    double std_error = 0.0;  // 0 unless method is monte_carlo
    std::int64_t n_steps = 0;
    int n_shards = 0;
    std::int64_t burn_in = 0;
    std::uint64_t seed = 0;
};

// One JSON object per line, keys in fixed order, 15 significant digits:
// {"family":"XYZ","method":"monte-carlo","value":..,"std_error":..,
//  "n_steps":..,"n_shards":..,"burn_in":..,"seed":..}
std::string to_json_line(const RateEstimate& r);
RateEstimate rate_from_json_line(const std::string& line);

struct EstimateOptions {
    std::int64_t n_steps = 312500;
    int n_shards = 32;
    std::int64_t burn_in = 10000;
    std::uint64_t seed = 1;
    Recursion recursion = Recursion::automatic;
    unsigned threads = 0;  // 0: hardware concurrency
};

// Per-shard rate estimates (t0 after burn_in + n_steps minus t0 after burn_in,
// over n_steps). Shard s draws from Rng(seed, s); results are ordered by shard
// index whatever the thread count.
std::vector<double> shard_estimates(GraphFamily family, const EstimateOptions& opts);

// Shard mean with standard error sd / sqrt(n_shards). Needs a non-trivial
// family, n_steps >= 1e4, burn_in >= 1e3 and at least two shards.
RateEstimate estimate_chi(GraphFamily family, const EstimateOptions& opts);

struct RecursionReport {
    int trials = 0;
    int failures = 0;
    double max_abs_error = 0.0;
    std::string first_failure;  // ladder JSON of the first mismatch
};

// Frontier recursion vs Dijkstra on sampled ladders with n uniform in [1, max_n].
// For {X,Y,Z} the delta recursion is checked as well. Tolerance 1e-9.
RecursionReport validate_recursion(GraphFamily family, int trials, int max_n, std::uint64_t seed);

struct SubadditivityReport {
    int trials = 0;
    int violations = 0;
    double max_excess = 0.0;  // largest l_{0->n} - (l_{0->m} + l_{m->n}) seen
};

// l_{0->n} <= l_{0->m} + l_{m->n} with each term computed by Dijkstra on the
// corresponding column range of the same ladder.
SubadditivityReport subadditivity_probe(GraphFamily family, int trials, int n, int m,
                                        std::uint64_t seed);

}  // namespace sfpp
