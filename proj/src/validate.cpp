#include "stretchfpp/validate.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "stretchfpp/bessel.hpp"
#include "stretchfpp/density.hpp"
#include "stretchfpp/format.hpp"
#include "stretchfpp/montecarlo.hpp"

namespace sfpp {

namespace {

CheckResult max_check(std::string name, double worst, double tol) {
    return {std::move(name), worst < tol,
            "max residual " + format_double(worst) + " (tol " + format_double(tol) + ")"};
}

// Points well away from the kinks at 0 and at the diagonal.
std::vector<std::pair<double, double>> off_kink_points() {
    std::vector<std::pair<double, double>> pts;
    const double values[] = {-3.1, -1.7, -0.6, -0.15, 0.2, 0.9, 1.8, 3.3};
    for (double a : values)
        for (double b : values)
            if (std::abs(a - b) > 1e-3) pts.emplace_back(a, b);
    return pts;
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidationConfig& cfg) {
    std::vector<CheckResult> out;

    for (const GraphFamily& f : table_families()) {
        const auto rep = validate_recursion(f, cfg.trials, cfg.max_n, cfg.seed);
        out.push_back({"recursion:" + f.name(), rep.failures == 0,
                       std::to_string(rep.failures) + "/" + std::to_string(rep.trials) +
                           " mismatches, max error " + format_double(rep.max_abs_error)});
    }

    const auto sub = subadditivity_probe(GraphFamily::parse("XYZ"), cfg.subadditivity_trials, 40,
                                         17, cfg.seed);
    out.push_back({"subadditivity:XYZ", sub.violations == 0,
                   std::to_string(sub.violations) + "/" + std::to_string(sub.trials) +
                       " violations"});

    const double deltas[] = {-3.0, -1.0, 0.0, 1.0, 3.0};
    double worst_k = 0.0, worst_q = 0.0;
    for (double d : deltas) {
        worst_k = std::max(worst_k, std::abs(kernel_k_mass(d, cfg.kernel) - 1.0));
        worst_q = std::max(worst_q, std::abs(kernel_q_mass(d) - 1.0));
    }
    out.push_back(max_check("kernel-normalization:K", worst_k, 1e-8));
    out.push_back(max_check("kernel-normalization:Q", worst_q, 1e-8));

    Rng rng(cfg.seed, 0x5EED);
    double worst_sym = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double delta = 16.0 * rng.uniform_open0() - 8.0;
        const double d = 16.0 * rng.uniform_open0() - 8.0;
        const double a = cfg.kernel(delta, d), b = cfg.kernel(-delta, -d);
        worst_sym = std::max(worst_sym, std::abs(a - b) / std::max(1e-300, std::abs(a)));
    }
    out.push_back(max_check("kernel-symmetry:K", worst_sym, 1e-15));

    double worst_g = 0.0, worst_p = 0.0;
    for (auto [delta, t] : off_kink_points()) {
        if (std::abs(t) < 1e-3) continue;
        worst_g = std::max(worst_g, kernel_sum_derivative_check(delta, t, 1e-5, cfg.kernel));
        worst_p = std::max(worst_p, q_from_p_check(delta, t));
    }
    out.push_back(max_check("kernel-derivative:K=dG", worst_g, 1e-6));
    out.push_back(max_check("kernel-derivative:Q=dP", worst_p, 1e-6));

    double worst_ode = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double d = -6.0 + 6.0 * (i + 0.5) / 100.0;  // stays > 2 steps from 0
        worst_ode = std::max({worst_ode, std::abs(ode_residual(d)), std::abs(ode_residual(-d))});
    }
    out.push_back(max_check("stationary-ode-residual", worst_ode, 1e-6));

    const double worst_ie = std::max(std::abs(integral_equation_residual(-1.0)),
                                     std::abs(integral_equation_residual(1.0)));
    out.push_back(max_check("stationary-integral-equation", worst_ie, 1e-8));

    const double worst_bessel = std::max(
        {check_recurrence(2.0), check_recurrence(std::sqrt(2.0)), check_recurrence(1.0)});
    out.push_back(max_check("bessel-recurrence", worst_bessel, 1e-13));

    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

void print_results(std::ostream& out, const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        out << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << '\n';
}

}  // namespace sfpp
