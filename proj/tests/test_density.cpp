#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "stretchfpp/density.hpp"

using namespace sfpp;

namespace {

double linf(const DensityGrid& a, const DensityGrid& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace

TEST_CASE("symmetric grid geometry") {
    const auto g = DensityGrid::symmetric(10.0, 2001);
    CHECK(g.x(1000) == 0.0);
    CHECK(g.x(0) == -10.0);
    CHECK(g.x(2000) == 10.0);
    for (std::size_t i = 0; i < g.size(); ++i) REQUIRE(g.x(i) == -g.x(g.size() - 1 - i));
    CHECK(g.step() == doctest::Approx(0.01));
}

TEST_CASE("closed-form stationary density") {
    const double j1 = oracle::bessel_j(1, 2.0), j2 = oracle::bessel_j(2, 2.0);
    CHECK(std::abs(stationary_closed_form(0.0) - j1 / (2 * j2)) < 1e-14);
    CHECK(stationary_closed_form(0.0) == doctest::Approx(0.817274923878066).epsilon(1e-13));
    CHECK(stationary_closed_form(1.3) == stationary_closed_form(-1.3));
    CHECK(std::abs(closed_form_mass(12.0) - 1.0) < 1e-8);
}

TEST_CASE("closed form solves the ODE and the integral equation") {
    for (int i = 0; i < 100; ++i) {
        const double d = -6.0 + 6.0 * (i + 0.5) / 100.0;
        CHECK(std::abs(ode_residual(d)) < 1e-6);
        CHECK(std::abs(ode_residual(-d)) < 1e-6);
    }
    CHECK(std::abs(integral_equation_residual(-1.0)) < 1e-8);
    CHECK(std::abs(integral_equation_residual(1.0)) < 1e-8);
    CHECK(std::abs(integral_equation_residual(-0.2)) < 1e-8);
    CHECK(std::abs(integral_equation_residual(3.0)) < 1e-8);
}

TEST_CASE("power iteration reaches the closed form") {
    const auto res = stationary_by_power_iteration({10.0, 2001}, 1e-10);
    const auto& rho = res.density;
    CHECK(res.last_change < 1e-10);
    CHECK(std::abs(rho.integral() - 1.0) < 1e-10);
    CHECK(linf(rho, closed_form_grid({10.0, 2001})) < 1e-4);
    double odd = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i)
        odd = std::max(odd, std::abs(rho[i] - rho[rho.size() - 1 - i]));
    CHECK(odd < 1e-10);
    for (double v : rho.values()) REQUIRE(v >= 0.0);

    const auto from_exp = stationary_by_power_iteration({10.0, 2001}, 1e-10, StartDensity::exponential);
    double l1 = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) l1 += std::abs(rho[i] - from_exp.density[i]);
    CHECK(l1 * rho.step() < 2e-10);
}

TEST_CASE("power iteration preconditions") {
    CHECK_THROWS_AS(stationary_by_power_iteration({7.0, 2001}), std::invalid_argument);
    CHECK_THROWS_AS(stationary_by_power_iteration({10.0, 501}), std::invalid_argument);
    CHECK_THROWS_AS(stationary_by_power_iteration({10.0, 1000}), std::invalid_argument);
    CHECK_THROWS_AS(stationary_by_power_iteration({10.0, 801}, 1e-10, StartDensity::uniform, 3),
                    std::runtime_error);
}

TEST_CASE("discretized operator fixes the closed form to O(h^2)") {
    std::vector<double> errors;
    for (std::size_t m : {501u, 1001u, 2001u}) {
        const auto rho = closed_form_grid({10.0, m});
        errors.push_back(linf(apply_transfer_operator(rho), rho));
    }
    const double slope1 = std::log(errors[0] / errors[1]) / std::log(2.0);
    const double slope2 = std::log(errors[1] / errors[2]) / std::log(2.0);
    CHECK(slope1 >= 1.9);
    CHECK(slope2 >= 1.9);
}

TEST_CASE("increment density") {
    const auto rho = closed_form_grid({10.0, 2001});
    const auto eta = lambda_density(rho);
    CHECK(eta.lo() == doctest::Approx(-8.0));
    CHECK(eta.hi() == doctest::Approx(12.0));
    CHECK(std::abs(eta.integral() - 1.0) < 1e-8);
    CHECK(eta[0] < 1e-4);
    CHECK(std::abs(eta.mean() - chi_exact(GraphFamily::parse("XYZ"))) < 1e-4);
}

TEST_CASE("closed-form rates") {
    const double j1 = oracle::bessel_j(1, 2.0), j2 = oracle::bessel_j(2, 2.0);
    CHECK(std::abs(chi_exact(GraphFamily::parse("XYZ")) - (1.5 - j1 / (2 * j2))) < 1e-12);
    CHECK(std::abs(chi_exact(GraphFamily::parse("XYZ")) - 0.682725076121934) < 1e-14);
    CHECK(std::abs(chi_exact(GraphFamily::parse("VWXY")) - 0.386919571958153) < 1e-14);
    CHECK(std::abs(chi_exact(GraphFamily::parse("WXYZ")) - 0.527145500886916) < 1e-14);
    CHECK(chi_exact(GraphFamily::parse("VXYZ")) == chi_exact(GraphFamily::parse("WXYZ")));
    CHECK_THROWS_AS(chi_exact(GraphFamily::parse("VWX")), std::invalid_argument);
    CHECK_THROWS_AS(chi_exact(GraphFamily::parse("X")), std::invalid_argument);
}

TEST_CASE("rate as the stationary mean increment") {
    const double exact = chi_exact(GraphFamily::parse("XYZ"));
    CHECK(std::abs(chi_by_expectation(closed_form_grid({12.0, 4001})) - exact) < 1e-5);
    const auto op = stationary_by_power_iteration({10.0, 2001}).density;
    CHECK(std::abs(chi_by_expectation(op) - exact) < 1e-4);

    auto spike = DensityGrid::symmetric(10.0, 2001);
    spike[1000] = 1.0;
    spike.normalize();
    CHECK(chi_by_expectation(spike) == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("density CSV") {
    auto g = DensityGrid::symmetric(1.0, 3);
    g[0] = 0.25;
    g[1] = 1.0;
    g[2] = 0.25;
    std::ostringstream os;
    write_csv(os, g);
    CHECK(os.str() == "x,density\n-1,0.25\n0,1\n1,0.25\n");
}
