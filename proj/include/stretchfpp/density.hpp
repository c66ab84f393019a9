#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "stretchfpp/family.hpp"
#include "stretchfpp/kernels.hpp"

namespace sfpp {

// Density sampled at m uniformly spaced abscissae covering [lo, hi].
class DensityGrid {
public:
    DensityGrid(double lo, double hi, std::size_t m);
    // Symmetric grid on [-hi, hi]. Abscissae are computed so that x(m-1-i) is
    // exactly -x(i) and the middle node of an odd grid is exactly 0.
    static DensityGrid symmetric(double hi, std::size_t m);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    std::size_t size() const { return values_.size(); }
    double step() const { return (hi_ - lo_) / static_cast<double>(size() - 1); }
    double x(std::size_t i) const;

    double& operator[](std::size_t i) { return values_[i]; }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }

    // Linear interpolation, 0 outside [lo, hi].
    double at(double t) const;

    double integral() const;  // trapezoid rule
    double mean() const;      // trapezoid rule of x * value
    void normalize();

private:
    double lo_, hi_;
    bool symmetric_ = false;
    std::vector<double> values_;
};

struct GridSpec {
    double hi = 10.0;
    std::size_t m = 2001;
};

enum class StartDensity { uniform, exponential };

struct PowerIterationResult {
    DensityGrid density;
    int iterations = 0;
    double last_change = 0.0;  // L1 distance between the last two iterates
};

// rho(d) = e^{-3|d|/2} J_1(2 e^{-|d|/2}) / (2 J_2(2)).
double stationary_closed_form(double d);
DensityGrid closed_form_grid(GridSpec spec);

// One application of the transfer operator rho -> int rho(delta) K(delta, .) d delta
// on rho's own abscissae, by the trapezoid rule. The kink of K at delta = d
// falls on a node, so the rule keeps its O(h^2) order. No renormalization.
DensityGrid apply_transfer_operator(const DensityGrid& rho, const KernelFn& kernel = kernel_k);

// Power iteration of the transfer operator with L1 renormalization each step,
// until the L1 change drops below tol. Needs hi >= 8 and m >= 801, m odd.
// Throws std::runtime_error after max_iterations.
PowerIterationResult stationary_by_power_iteration(GridSpec spec, double tol = 1e-10,
                                                   StartDensity start = StartDensity::uniform,
                                                   int max_iterations = 100000,
                                                   const KernelFn& kernel = kernel_k);

// eta(l) = int rho(delta) Q(delta, l) d delta on [l_lo, l_hi] with rho's
// spacing, normalized. Cells containing the kink delta = l are split there.
DensityGrid lambda_density(const DensityGrid& rho, double l_lo = -8.0, double l_hi = 12.0);

// Closed-form rate for the three solved families (and their mirror images):
//   XYZ   3/2 - J1(2) / (2 J2(2))
//   VWXY  3/4 - J0(sqrt 2) / (2 sqrt 2 J1(sqrt 2))
//   WXYZ  (2 tan 1 - 2) / (2 tan 1 - 1)
// Throws std::invalid_argument for any other family.
double chi_exact(GraphFamily family);

// chi = int rho(delta) E[Lambda | delta] d delta, trapezoid rule.
double chi_by_expectation(const DensityGrid& rho);

// Residual of the second-order ODE the stationary density satisfies,
//   rho'' - 3 rho' + (2 + e^d) rho = 0   (d < 0)
//   rho'' + 3 rho' + (2 + e^-d) rho = 0  (d >= 0)
// with five-point finite differences. The stencil must not straddle d = 0.
double ode_residual(double d, double step = 1e-3);

// rho(d) minus the right-hand side of the integral equation written with
// one-sided integrals:
//   d < 0:  e^d int_{-inf}^d rho + e^{2d} int_d^inf rho e^{-delta}
//   d >= 0: e^{-2d} int_{-inf}^d rho e^{delta} + e^{-d} int_d^inf rho
// evaluated for the closed form by adaptive quadrature.
double integral_equation_residual(double d);

// int rho over [-a, a] for the closed form, adaptive quadrature.
double closed_form_mass(double a = 12.0);

void write_csv(std::ostream& out, const DensityGrid& grid);

}  // namespace sfpp
