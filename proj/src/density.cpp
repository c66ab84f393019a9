#include "stretchfpp/density.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "stretchfpp/bessel.hpp"
#include "stretchfpp/format.hpp"

namespace sfpp {

DensityGrid::DensityGrid(double lo, double hi, std::size_t m) : lo_(lo), hi_(hi), values_(m, 0.0) {
    if (m < 2) throw std::invalid_argument("DensityGrid: need at least two points");
    if (!(hi > lo)) throw std::invalid_argument("DensityGrid: need lo < hi");
}

DensityGrid DensityGrid::symmetric(double hi, std::size_t m) {
    DensityGrid g(-hi, hi, m);
    g.symmetric_ = true;
    return g;
}

double DensityGrid::x(std::size_t i) const {
    const double last = static_cast<double>(size() - 1);
    if (symmetric_) return hi_ * (2.0 * static_cast<double>(i) - last) / last;
    return lo_ + (hi_ - lo_) * static_cast<double>(i) / last;
}

double DensityGrid::at(double t) const {
    if (t < lo_ || t > hi_) return 0.0;
    const double u = (t - lo_) / step();
    const std::size_t i = std::min(static_cast<std::size_t>(u), size() - 2);
    const double frac = u - static_cast<double>(i);
    return values_[i] + frac * (values_[i + 1] - values_[i]);
}

double DensityGrid::integral() const {
    double s = 0.5 * (values_.front() + values_.back());
    for (std::size_t i = 1; i + 1 < size(); ++i) s += values_[i];
    return s * step();
}

double DensityGrid::mean() const {
    double s = 0.5 * (x(0) * values_.front() + x(size() - 1) * values_.back());
    for (std::size_t i = 1; i + 1 < size(); ++i) s += x(i) * values_[i];
    return s * step();
}

void DensityGrid::normalize() {
    const double mass = integral();
    if (!(mass > 0.0)) throw std::runtime_error("DensityGrid::normalize: zero mass");
    for (double& v : values_) v /= mass;
}

double stationary_closed_form(double d) {
    static const double norm = 1.0 / (2.0 * bessel_j(2, 2.0));
    const double a = std::abs(d);
    return norm * std::exp(-1.5 * a) * bessel_j(1, 2.0 * std::exp(-0.5 * a));
}

DensityGrid closed_form_grid(GridSpec spec) {
    DensityGrid g = DensityGrid::symmetric(spec.hi, spec.m);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = stationary_closed_form(g.x(i));
    return g;
}

namespace {

// Row j of the discretized operator, trapezoid weights folded in.
std::vector<double> operator_row(const DensityGrid& grid, std::size_t j, const KernelFn& kernel) {
    const std::size_t m = grid.size();
    const double h = grid.step();
    const double d = grid.x(j);
    std::vector<double> row(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double delta = grid.x(i);
        const double k = (d == 0.0) ? kernel_k_zero_row(delta) : kernel(delta, d);
        row[i] = k * ((i == 0 || i + 1 == m) ? 0.5 * h : h);
    }
    return row;
}

std::vector<double> operator_matrix(const DensityGrid& grid, const KernelFn& kernel) {
    const std::size_t m = grid.size();
    std::vector<double> mat(m * m);
    for (std::size_t j = 0; j < m; ++j) {
        const auto row = operator_row(grid, j, kernel);
        std::copy(row.begin(), row.end(), mat.begin() + static_cast<std::ptrdiff_t>(j * m));
    }
    return mat;
}

void apply(const std::vector<double>& mat, const DensityGrid& in, DensityGrid& out) {
    const std::size_t m = in.size();
    const double* src = in.values().data();
    for (std::size_t j = 0; j < m; ++j) {
        const double* row = mat.data() + j * m;
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += row[i] * src[i];
        out[j] = s;
    }
}

}  // namespace

DensityGrid apply_transfer_operator(const DensityGrid& rho, const KernelFn& kernel) {
    DensityGrid out = rho;
    for (std::size_t j = 0; j < rho.size(); ++j) {
        const auto row = operator_row(rho, j, kernel);
        double s = 0.0;
        for (std::size_t i = 0; i < rho.size(); ++i) s += row[i] * rho[i];
        out[j] = s;
    }
    return out;
}

PowerIterationResult stationary_by_power_iteration(GridSpec spec, double tol, StartDensity start,
                                                   int max_iterations, const KernelFn& kernel) {
    if (spec.hi < 8.0) throw std::invalid_argument("power iteration: grid half-width must be >= 8");
    if (spec.m < 801 || spec.m % 2 == 0)
        throw std::invalid_argument("power iteration: grid size must be odd and >= 801");

    DensityGrid rho = DensityGrid::symmetric(spec.hi, spec.m);
    for (std::size_t i = 0; i < rho.size(); ++i) {
        const double d = rho.x(i);
        rho[i] = (start == StartDensity::uniform) ? (std::abs(d) <= 1.0 ? 0.5 : 0.0)
                                                  : (d >= 0.0 ? std::exp(-d) : 0.0);
    }
    rho.normalize();

    const auto mat = operator_matrix(rho, kernel);
    DensityGrid next = rho;
    for (int it = 1; it <= max_iterations; ++it) {
        apply(mat, rho, next);
        next.normalize();
        double change = 0.0;
        for (std::size_t i = 0; i < rho.size(); ++i) change += std::abs(next[i] - rho[i]);
        change *= rho.step();
        std::swap(rho, next);
        if (change < tol) return {rho, it, change};
    }
    throw std::runtime_error("power iteration did not converge; the kernel is likely wrong");
}

DensityGrid lambda_density(const DensityGrid& rho, double l_lo, double l_hi) {
    const double h = rho.step();
    const auto count = static_cast<std::size_t>(std::llround((l_hi - l_lo) / h)) + 1;
    DensityGrid eta(l_lo, l_lo + h * static_cast<double>(count - 1), count);
    const std::size_t m = rho.size();
    auto column = [&](double l, const KernelFn& q) {
        double s = 0.0;
        for (std::size_t i = 0; i + 1 < m; ++i) {
            const double a = rho.x(i), b = rho.x(i + 1);
            const double fa = rho[i] * q(a, l), fb = rho[i + 1] * q(b, l);
            if (l > a && l < b) {
                const double fl = rho.at(l) * q(l, l);
                s += 0.5 * (l - a) * (fa + fl) + 0.5 * (b - l) * (fl + fb);
            } else {
                s += 0.5 * (b - a) * (fa + fb);
            }
        }
        return s;
    };
    // eta jumps at l = 0; a node sitting there gets the mean of both sides so
    // the trapezoid rule stays second order.
    const KernelFn left_of_zero = [](double delta, double) {
        return delta <= 0.0 ? -delta * std::exp(delta) : 0.0;
    };
    for (std::size_t k = 0; k < count; ++k) {
        const double l = eta.x(k);
        if (std::abs(l) < 1e-9 * h)
            eta[k] = 0.5 * (column(0.0, kernel_q) + column(0.0, left_of_zero));
        else
            eta[k] = column(l, kernel_q);
    }
    eta.normalize();
    return eta;
}

double chi_exact(GraphFamily family) {
    GraphFamily rep;
    if (classify(family) != FamilyClass::nontrivial_solved || !table_representative(family, rep))
        throw std::invalid_argument("chi_exact: no closed form for family '" + family.name() + "'");
    const auto& t = table_families();
    if (rep == t[0]) return 1.5 - bessel_j(1, 2.0) / (2.0 * bessel_j(2, 2.0));
    if (rep == t[1]) {
        const double r = std::sqrt(2.0);
        return 0.75 - bessel_j(0, r) / (2.0 * r * bessel_j(1, r));
    }
    const double t1 = std::tan(1.0);
    return (2.0 * t1 - 2.0) / (2.0 * t1 - 1.0);
}

double chi_by_expectation(const DensityGrid& rho) {
    const std::size_t m = rho.size();
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double w = (i == 0 || i + 1 == m) ? 0.5 : 1.0;
        s += w * rho[i] * lambda_mean_given_delta(rho.x(i));
    }
    return s * rho.step();
}

double ode_residual(double d, double step) {
    const double f2m = stationary_closed_form(d - 2 * step), f1m = stationary_closed_form(d - step);
    const double f0 = stationary_closed_form(d);
    const double f1p = stationary_closed_form(d + step), f2p = stationary_closed_form(d + 2 * step);
    const double d1 = (-f2p + 8 * f1p - 8 * f1m + f2m) / (12 * step);
    const double d2 = (-f2p + 16 * f1p - 30 * f0 + 16 * f1m - f2m) / (12 * step * step);
    if (d < 0.0) return d2 - 3 * d1 + (2 + std::exp(d)) * f0;
    return d2 + 3 * d1 + (2 + std::exp(-d)) * f0;
}

namespace {

template <class F>
double gk(F f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-14);
}

// Integrals over half-lines, split at 0 where rho has its kink. The density
// decays like e^{-2|d|}, so +-60 is infinity here.
template <class F>
double integrate_rho(F weight, double a, double b) {
    auto f = [&](double t) { return stationary_closed_form(t) * weight(t); };
    if (a < 0.0 && b > 0.0) return gk(f, a, 0.0) + gk(f, 0.0, b);
    return gk(f, a, b);
}

}  // namespace

double integral_equation_residual(double d) {
    constexpr double far = 60.0;
    auto one = [](double) { return 1.0; };
    double rhs;
    if (d < 0.0) {
        rhs = std::exp(d) * integrate_rho(one, -far, d) +
              std::exp(2 * d) * integrate_rho([](double t) { return std::exp(-t); }, d, far);
    } else {
        rhs = std::exp(-2 * d) * integrate_rho([](double t) { return std::exp(t); }, -far, d) +
              std::exp(-d) * integrate_rho(one, d, far);
    }
    return stationary_closed_form(d) - rhs;
}

double closed_form_mass(double a) {
    return integrate_rho([](double) { return 1.0; }, -a, a);
}

void write_csv(std::ostream& out, const DensityGrid& grid) {
    out << "x,density\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
        out << format_double(grid.x(i)) << ',' << format_double(grid[i]) << '\n';
}

}  // namespace sfpp
