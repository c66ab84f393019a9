#pragma once

namespace sfpp {

// J_nu(x) for nu in {0,1,2} and 0 <= x <= 4 by the ascending series
//   sum_k (-1)^k (x/2)^(2k+nu) / (k! (k+nu)!),
// stopped once the next term drops below 1e-16 in magnitude. Absolute error is
// below 1e-14 on the whole domain. Throws std::domain_error outside it.
double bessel_j(int nu, double x);

// Residual of the three-term recurrence J0 + J2 = (2/x) J1, scaled by x/2:
//   |(x/2)(J0(x) + J2(x)) - J1(x)|.
// At x = 2 this is |J0(2) + J2(2) - J1(2)|.
double check_recurrence(double x);

}  // namespace sfpp
