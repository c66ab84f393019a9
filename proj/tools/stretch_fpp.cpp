// stretch_fpp: time constants of width-two stretch graphs by closed form,
// transfer-operator numerics and Monte Carlo.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "stretchfpp/density.hpp"
#include "stretchfpp/family.hpp"
#include "stretchfpp/format.hpp"
#include "stretchfpp/montecarlo.hpp"
#include "stretchfpp/validate.hpp"

using namespace sfpp;

namespace {

struct RunConfig {
    std::string command = "table";
    std::string family;
    std::int64_t n_steps = 312500;
    int n_shards = 32;
    std::int64_t burn_in = 10000;
    std::uint64_t seed = 1;
    int grid_m = 2001;
    double grid_hi = 10.0;
    double tol = 1e-10;
    std::string out;
    std::string format = "json";
    int trials = 1000;
    int max_n = 50;
    unsigned threads = 0;
    std::string trajectory;
};

// Bad input from the user, reported with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GraphFamily parse_family(const std::string& text) {
    try {
        return GraphFamily::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

EstimateOptions estimate_options(const RunConfig& c) {
    EstimateOptions o;
    o.n_steps = c.n_steps;
    o.n_shards = c.n_shards;
    o.burn_in = c.burn_in;
    o.seed = c.seed;
    o.threads = c.threads;
    return o;
}

RateEstimate exact_estimate(GraphFamily f) {
    RateEstimate r;
    r.family = f;
    r.method = Method::exact;
    r.value = chi_exact(f);
    return r;
}

std::string csv_line(const RateEstimate& r) {
    return r.family.name() + "," + to_string(r.method) + "," + format_double(r.value) + "," +
           format_double(r.std_error) + "," + std::to_string(r.n_steps) + "," +
           std::to_string(r.n_shards) + "," + std::to_string(r.burn_in) + "," +
           std::to_string(r.seed);
}

// Appends records to --out (default results.jsonl / results.csv). The CSV
// header is written only when the file starts out empty.
void write_records(const RunConfig& c, const std::vector<RateEstimate>& rows) {
    const bool csv = c.format == "csv";
    const std::string path = c.out.empty() ? (csv ? "results.csv" : "results.jsonl") : c.out;
    bool fresh = true;
    {
        std::ifstream probe(path, std::ios::binary);
        fresh = !probe || probe.peek() == std::ifstream::traits_type::eof();
    }
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw std::runtime_error("cannot open " + path);
    if (csv && fresh) out << "family,method,value,std_error,n_steps,n_shards,burn_in,seed\n";
    for (const auto& r : rows) out << (csv ? csv_line(r) : to_json_line(r)) << '\n';
}

void print_table(const std::vector<RateEstimate>& rows) {
    std::cout << std::left << std::setw(8) << "family" << std::setw(13) << "method"
              << std::setw(20) << "value" << "std_error\n";
    for (const auto& r : rows) {
        std::cout << std::setw(8) << r.family.name() << std::setw(13) << to_string(r.method)
                  << std::setw(20) << format_double(r.value)
                  << (r.method == Method::monte_carlo ? format_double(r.std_error) : "-") << '\n';
    }
}

int cmd_exact(const RunConfig& c) {
    const GraphFamily f = parse_family(c.family.empty() ? "XYZ" : c.family);
    if (classify(f) != FamilyClass::nontrivial_solved)
        throw UsageError("no closed form for family " + f.name());
    const auto r = exact_estimate(f);
    print_table({r});
    write_records(c, {r});
    return 0;
}

int cmd_estimate(const RunConfig& c) {
    const GraphFamily f = parse_family(c.family.empty() ? "XYZ" : c.family);
    const auto r = estimate_chi(f, estimate_options(c));
    print_table({r});
    write_records(c, {r});
    if (!c.trajectory.empty()) {
        std::ofstream t(c.trajectory, std::ios::binary);
        if (!t) throw std::runtime_error("cannot open " + c.trajectory);
        write_trajectory_csv(t, f, c.burn_in + c.n_steps, c.seed);
    }
    return 0;
}

int cmd_table(const RunConfig& c) {
    std::vector<GraphFamily> families;
    if (c.family.empty()) {
        const auto& t = table_families();
        families.assign(t.begin(), t.end());
    } else {
        families.push_back(parse_family(c.family));
    }
    std::vector<RateEstimate> rows;
    for (const auto& f : families) {
        const auto cls = classify(f);
        if (cls == FamilyClass::trivial || cls == FamilyClass::disconnected)
            throw UsageError("family " + f.name() + " has no non-trivial time constant");
        if (cls == FamilyClass::nontrivial_solved) rows.push_back(exact_estimate(f));
        rows.push_back(estimate_chi(f, estimate_options(c)));
    }
    print_table(rows);
    write_records(c, rows);
    return 0;
}

void write_density(const std::string& path, const DensityGrid& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_csv(out, g);
}

int cmd_stationary(const RunConfig& c) {
    const GraphFamily f = parse_family(c.family.empty() ? "XYZ" : c.family);
    if (!(f == GraphFamily::parse("XYZ")))
        throw UsageError("kernel not available for family " + f.name() +
                         "; the transfer operator is only implemented for XYZ");
    const GridSpec spec{c.grid_hi, static_cast<std::size_t>(c.grid_m)};
    const auto closed = closed_form_grid(spec);
    const auto iter = stationary_by_power_iteration(spec, c.tol);
    const auto eta = lambda_density(iter.density);
    const std::string prefix = c.out.empty() ? "stationary" : c.out;
    write_density(prefix + "_rho_closed.csv", closed);
    write_density(prefix + "_rho_operator.csv", iter.density);
    write_density(prefix + "_eta.csv", eta);

    const double exact = chi_exact(f);
    const double op = chi_by_expectation(iter.density);
    std::cout << "iterations " << iter.iterations << '\n'
              << "chi_closed " << format_double(exact) << '\n'
              << "chi_operator " << format_double(op) << '\n'
              << "difference " << format_double(op - exact) << '\n';
    return 0;
}

int cmd_validate(const RunConfig& c) {
    ValidationConfig v;
    v.trials = c.trials;
    v.max_n = c.max_n;
    v.seed = c.seed;
    const auto results = run_validation(v);
    print_results(std::cout, results);
    if (all_passed(results)) return 0;
    std::cout << "failed:";
    for (const auto& r : results)
        if (!r.passed) std::cout << ' ' << r.name;
    std::cout << '\n';
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig c;
    if (const char* env = std::getenv("STRETCH_FPP_SEED")) {
        try {
            c.seed = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "STRETCH_FPP_SEED is not an unsigned integer: " << env << '\n';
            return 2;
        }
    }

    CLI::App app{"First-passage time constants on width-two stretch graphs"};
    app.add_option("--command", c.command, "What to run")
        ->check(CLI::IsMember({"exact", "stationary", "estimate", "validate", "table"}))
        ->capture_default_str();
    app.add_option("--family", c.family, "Edge letters from VWXYZ, e.g. XYZ");
    app.add_option("--n-steps", c.n_steps, "Measured chain steps per shard")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--shards", c.n_shards, "Independent chains")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--burn-in", c.burn_in, "Discarded steps per shard")
        ->check(CLI::NonNegativeNumber)->capture_default_str();
    app.add_option("--seed", c.seed, "Master seed (default from STRETCH_FPP_SEED or 1)");
    app.add_option("--grid-m", c.grid_m, "Grid points for the stationary density")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--grid-hi", c.grid_hi, "Grid covers [-hi, hi]")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--tol", c.tol, "Power-iteration stopping tolerance")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--out", c.out, "Results file, or file prefix for stationary");
    app.add_option("--format", c.format, "Results file encoding")
        ->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--trials", c.trials, "Ladders per family in validate")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--max-n", c.max_n, "Largest ladder length in validate")
        ->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--threads", c.threads, "Worker threads, 0 for all cores");
    app.add_option("--trajectory", c.trajectory, "estimate: also dump n,lambda,delta CSV of shard 0");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c.command == "exact") return cmd_exact(c);
        if (c.command == "stationary") return cmd_stationary(c);
        if (c.command == "estimate") return cmd_estimate(c);
        if (c.command == "validate") return cmd_validate(c);
        return cmd_table(c);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
