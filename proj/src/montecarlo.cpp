#include "stretchfpp/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "stretchfpp/format.hpp"
#include "stretchfpp/ladder.hpp"

namespace sfpp {

std::string to_string(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::operator_route: return "operator";
        case Method::monte_carlo: return "monte-carlo";
    }
    return "?";
}

std::string to_json_line(const RateEstimate& r) {
    std::ostringstream os;
    os << "{\"family\":\"" << r.family.name() << "\",\"method\":\"" << to_string(r.method)
       << "\",\"value\":" << format_double(r.value)
       << ",\"std_error\":" << format_double(r.std_error) << ",\"n_steps\":" << r.n_steps
       << ",\"n_shards\":" << r.n_shards << ",\"burn_in\":" << r.burn_in
       << ",\"seed\":" << r.seed << "}";
    return os.str();
}

RateEstimate rate_from_json_line(const std::string& line) {
    const auto j = nlohmann::json::parse(line);
    RateEstimate r;
    r.family = GraphFamily::parse(j.at("family").get<std::string>());
    const auto method = j.at("method").get<std::string>();
    if (method == "exact") r.method = Method::exact;
    else if (method == "operator") r.method = Method::operator_route;
    else if (method == "monte-carlo") r.method = Method::monte_carlo;
    else throw std::invalid_argument("unknown method '" + method + "'");
    r.value = j.at("value").get<double>();
    r.std_error = j.at("std_error").get<double>();
    r.n_steps = j.at("n_steps").get<std::int64_t>();
    r.n_shards = j.at("n_shards").get<int>();
    r.burn_in = j.at("burn_in").get<std::int64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    return r;
}

std::vector<double> shard_estimates(GraphFamily family, const EstimateOptions& opts) {
    const FamilyClass cls = classify(family);
    if (cls != FamilyClass::nontrivial_solved && cls != FamilyClass::nontrivial_unsolved)
        throw std::invalid_argument("estimate_chi: family '" + family.name() + "' is " +
                                    to_string(cls));
    if (opts.n_steps < 10000) throw std::invalid_argument("estimate_chi: n_steps must be >= 1e4");
    if (opts.burn_in < 1000) throw std::invalid_argument("estimate_chi: burn_in must be >= 1e3");
    if (opts.n_shards < 2) throw std::invalid_argument("estimate_chi: need at least two shards");

    std::vector<double> out(static_cast<std::size_t>(opts.n_shards));
    auto run_shard = [&](int s) {
        double sum = 0.0;
        run_chain(
            family, opts.burn_in + opts.n_steps, opts.seed,
            [&](std::int64_t k, double lambda, double) {
                if (k > opts.burn_in) sum += lambda;
            },
            opts.recursion, static_cast<std::uint64_t>(s));
        out[static_cast<std::size_t>(s)] = sum / static_cast<double>(opts.n_steps);
    };

    unsigned workers = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(opts.n_shards)));
    if (workers == 1) {
        for (int s = 0; s < opts.n_shards; ++s) run_shard(s);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (int s = next++; s < opts.n_shards; s = next++) run_shard(s);
            });
        for (auto& th : pool) th.join();
    }

    for (double v : out)
        if (!std::isfinite(v)) throw std::runtime_error("estimate_chi: non-finite shard estimate");
    return out;
}

RateEstimate estimate_chi(GraphFamily family, const EstimateOptions& opts) {
    const auto shards = shard_estimates(family, opts);
    const double n = static_cast<double>(shards.size());
    double mean = 0.0;
    for (double v : shards) mean += v;
    mean /= n;
    double ss = 0.0;
    for (double v : shards) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (n - 1.0));

    RateEstimate r;
    r.family = family;
    r.method = Method::monte_carlo;
    r.value = mean;
    r.std_error = sd / std::sqrt(n);
    r.n_steps = opts.n_steps;
    r.n_shards = opts.n_shards;
    r.burn_in = opts.burn_in;
    r.seed = opts.seed;
    return r;
}

namespace {

bool close(double a, double b, double tol) {
    if (a == kInf || b == kInf) return a == b;
    return std::abs(a - b) <= tol;
}

}  // namespace

RecursionReport validate_recursion(GraphFamily family, int trials, int max_n, std::uint64_t seed) {
    constexpr double tol = 1e-9;
    RecursionReport rep;
    Rng picker(seed, ~std::uint64_t{0});
    const bool check_delta = family == GraphFamily::parse("XYZ");
    for (int t = 0; t < trials; ++t) {
        const int n = 1 + static_cast<int>(picker.uniform_open0() * max_n - 1e-12);
        const WeightedLadder ladder = sample_ladder(family, n, seed, static_cast<std::uint64_t>(t));
        const auto [o0, o1] = dijkstra_frontier(ladder);

        GenericFrontier f = generic_init(family, ladder.z0.value_or(kInf));
        DeltaState ds = delta_init(ladder.z0.value_or(0.0));
        for (const auto& w : ladder.layers) {
            f = generic_step(f, w).front;
            if (check_delta) ds = delta_step(ds, w);
        }
        double err = 0.0;
        bool ok = close(f.d0(), o0, tol) && close(f.d1(), o1, tol);
        if (o0 != kInf) err = std::max(err, std::abs(f.d0() - o0));
        if (o1 != kInf) err = std::max(err, std::abs(f.d1() - o1));
        if (check_delta) {
            ok = ok && close(ds.l, o0, tol) && close(ds.l_top(), o1, tol);
            err = std::max({err, std::abs(ds.l - o0), std::abs(ds.l_top() - o1)});
        }
        rep.max_abs_error = std::max(rep.max_abs_error, err);
        if (!ok) {
            if (rep.failures == 0) rep.first_failure = to_json(ladder);
            ++rep.failures;
        }
        ++rep.trials;
    }
    return rep;
}

SubadditivityReport subadditivity_probe(GraphFamily family, int trials, int n, int m,
                                        std::uint64_t seed) {
    if (m < 0 || m > n || n < 1) throw std::invalid_argument("subadditivity_probe: need 0 <= m <= n, n >= 1");
    SubadditivityReport rep;
    rep.max_excess = -kInf;
    for (int t = 0; t < trials; ++t) {
        const WeightedLadder ladder = sample_ladder(family, n, seed, static_cast<std::uint64_t>(t));
        const double whole = dijkstra_oracle(ladder, {n, 0}).value_or(kInf);
        const double head = dijkstra_oracle(ladder.slice(0, m), {m, 0}).value_or(kInf);
        const double tail = dijkstra_oracle(ladder.slice(m, n), {n - m, 0}).value_or(kInf);
        const double bound = head + tail;
        const double excess = (whole == kInf) ? (bound == kInf ? 0.0 : kInf) : whole - bound;
        rep.max_excess = std::max(rep.max_excess, excess);
        if (excess > 1e-12 * std::max(1.0, whole)) ++rep.violations;
        ++rep.trials;
    }
    return rep;
}

}  // namespace sfpp
