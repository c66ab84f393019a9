#include "stretchfpp/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace sfpp {

double bessel_j(int nu, double x) {
    if (nu < 0 || nu > 2) throw std::domain_error("bessel_j: order must be 0, 1 or 2");
    if (!(x >= 0.0 && x <= 4.0)) throw std::domain_error("bessel_j: argument must lie in [0, 4]");

    const double half = 0.5 * x;
    const double q = half * half;
    double term = 1.0;
    for (int k = 1; k <= nu; ++k) term *= half / k;  // (x/2)^nu / nu!

    // Past k ~ x/2 the terms decrease monotonically, so stopping on a tiny next
    // term bounds the tail of this alternating series.
    double sum = term;
    for (int k = 1; k < 64; ++k) {
        term *= -q / (static_cast<double>(k) * (k + nu));
        if (std::abs(term) < 1e-16 && k > half) break;
        sum += term;
    }
    return sum;
}

double check_recurrence(double x) {
    if (!(x > 0.0 && x <= 4.0)) throw std::domain_error("check_recurrence: x must lie in (0, 4]");
    return std::abs(0.5 * x * (bessel_j(0, x) + bessel_j(2, x)) - bessel_j(1, x));
}

}  // namespace sfpp
