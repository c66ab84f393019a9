#include "stretchfpp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace sfpp {

using std::exp;

double kernel_k(double delta, double d) {
    if (d < 0.0) return exp(d) * (delta <= d ? 1.0 : exp(-(delta - d)));
    if (d == 0.0) return exp(-std::abs(delta));
    return exp(-d) * (delta <= d ? exp(-(d - delta)) : 1.0);
}

double kernel_k_zero_row(double delta) {
    // d -> 0-: 1 for delta <= 0, e^{-delta} above; d -> 0+: e^{delta} below, 1 above.
    const double left = delta <= 0.0 ? 1.0 : exp(-delta);
    const double right = delta <= 0.0 ? exp(delta) : 1.0;
    return 0.5 * (left + right);
}

double kernel_g(int i, double delta, double d) {
    switch (i) {
        case 1:
            if (d < 0.0)
                return 0.25 * (delta <= d ? exp(delta) * (1.0 + 2.0 * (d - delta))
                                          : exp(2.0 * d - delta));
            if (delta <= 0.0) return 0.25 * exp(delta) * (2.0 - 2.0 * delta - exp(-2.0 * d));
            if (delta <= d)
                return 0.25 * exp(-delta) * (2.0 + 2.0 * delta - exp(-2.0 * (d - delta)));
            return 0.25 * exp(-delta) * (1.0 + 2.0 * d);
        case 2:
            if (d < 0.0) return 0.0;
            if (delta <= 0.0) return 0.25 * exp(delta) * (1.0 - exp(-2.0 * d));
            if (delta <= d)
                return 0.25 * (4.0 - exp(-delta) * (3.0 + exp(-2.0 * (d - delta)) + 2.0 * delta));
            return 0.25 * (4.0 - 4.0 * exp(-d) - 2.0 * d * exp(-delta));
        case 3:
            if (d < 0.0)
                return 0.25 * (delta <= d ? 4.0 * exp(d) + exp(delta) * (2.0 * (delta - d) - 3.0)
                                          : exp(2.0 * d - delta));
            if (delta <= 0.0) return 0.25 * (4.0 + exp(delta) * (2.0 * delta - 3.0));
            return 0.25 * exp(-delta);
        default:
            throw std::invalid_argument("kernel_g: index must be 1, 2 or 3");
    }
}

double kernel_sum_derivative_check(double delta, double d, double step, const KernelFn& kernel) {
    auto g = [&](double t) {
        return kernel_g(1, delta, t) + kernel_g(2, delta, t) + kernel_g(3, delta, t);
    };
    const double derivative = (g(d + step) - g(d - step)) / (2.0 * step);
    return std::abs(derivative - kernel(delta, d));
}

double kernel_q(double delta, double l) {
    if (l < 0.0) return delta <= l ? exp(-l) * exp(delta) * (l - delta) : 0.0;
    if (delta <= l) return exp(-l) * exp(-(l - delta)) * (1.0 + 2.0 * (l - delta));
    return exp(-l);
}

double kernel_p(int i, double delta, double l) {
    switch (i) {
        case 1:
            if (l < 0.0) return 0.0;
            if (delta <= 0.0)
                return 0.25 * exp(-2.0 * l + delta) *
                       (exp(2.0 * l) * (3.0 - 2.0 * delta) - 3.0 - 2.0 * (l - delta));
            if (delta <= l)
                return 0.25 * (4.0 - exp(-delta) -
                               exp(-2.0 * l + delta) * (2.0 * (l - delta) + 3.0));
            return 1.0 - exp(-l);
        case 2:
            if (l < 0.0) return delta <= l ? 1.0 - exp(delta - l) * (1.0 - delta + l) : 0.0;
            if (delta <= 0.0)
                return 1.0 - 0.25 * exp(delta) *
                                 (3.0 - 2.0 * delta + exp(-2.0 * l) * (1.0 + 2.0 * (l - delta)));
            if (delta <= l)
                return 0.25 * exp(-2.0 * l - delta) *
                       (exp(2.0 * l) - exp(2.0 * delta) * (1.0 + 2.0 * (l - delta)));
            return 0.0;
        default:
            throw std::invalid_argument("kernel_p: index must be 1 or 2");
    }
}

double q_from_p_check(double delta, double l, double step) {
    auto p = [&](double t) { return kernel_p(1, delta, t) + kernel_p(2, delta, t); };
    const double derivative = (p(l + step) - p(l - step)) / (2.0 * step);
    return std::abs(derivative - kernel_q(delta, l));
}

double lambda_mean_given_delta(double delta) {
    if (delta < 0.0) return 0.25 * (8.0 + 4.0 * delta - exp(delta) * (5.0 - 2.0 * delta));
    return 0.25 * (4.0 - exp(-delta));
}

namespace {

// Both kernels decay like e^{-|t|} or faster; beyond |t| = 60 the mass is
// below 1e-26.
template <class F>
double integrate_split(F f, double delta) {
    std::vector<double> cuts{-60.0 + std::min(delta, 0.0), 0.0, delta, 60.0 + std::max(delta, 0.0)};
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i + 1] <= cuts[i]) continue;
        total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            f, cuts[i], cuts[i + 1], 15, 1e-14);
    }
    return total;
}

}  // namespace

double kernel_k_mass(double delta, const KernelFn& kernel) {
    return integrate_split([&](double d) { return kernel(delta, d); }, delta);
}

double kernel_q_mass(double delta) {
    return integrate_split([&](double l) { return kernel_q(delta, l); }, delta);
}

}  // namespace sfpp
