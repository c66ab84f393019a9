#pragma once

#include <functional>

namespace sfpp {

// Transition kernel of the {X,Y,Z} height-difference chain: density of
// Delta_n = d given Delta_{n-1} = delta.
//   d < 0:  e^d                  (delta <= d),   e^d e^{-(delta-d)}  (delta > d)
//   d = 0:  e^{-|delta|}
//   d > 0:  e^{-d} e^{-(d-delta)} (delta <= d),  e^{-d}             (delta > d)
double kernel_k(double delta, double d);

// K(delta, 0) is a measure-zero line and the tabulated value there is neither
// one-sided limit. Grid operators that land a node on d = 0 use the mean of the
// two limits, which keeps K(delta, d) = K(-delta, -d).
double kernel_k_zero_row(double delta);

// CDF pieces: sum_i G_i(delta, d) = P(Delta_n <= d | Delta_{n-1} = delta),
// split over which last edges the two shortest paths use. i in {1,2,3}.
double kernel_g(int i, double delta, double d);

using KernelFn = std::function<double(double, double)>;

// |central difference in d of (G1+G2+G3) - K|.
double kernel_sum_derivative_check(double delta, double d, double step = 1e-5,
                                   const KernelFn& kernel = kernel_k);

// Density of Lambda_n = l given Delta_{n-1} = delta.
double kernel_q(double delta, double l);

// P_1 + P_2 = P(Lambda_n <= l | Delta_{n-1} = delta). i in {1,2}.
double kernel_p(int i, double delta, double l);

// |central difference in l of (P1+P2) - Q|.
double q_from_p_check(double delta, double l, double step = 1e-5);

// E[Lambda_n | Delta_{n-1} = delta] = int l Q(delta, l) dl:
//   (8 + 4 delta - e^delta (5 - 2 delta)) / 4   for delta < 0
//   (4 - e^{-delta}) / 4                        for delta >= 0
double lambda_mean_given_delta(double delta);

// int K(delta, d) dd and int Q(delta, l) dl by adaptive Gauss-Kronrod with the
// kinks at 0 and delta split out.
double kernel_k_mass(double delta, const KernelFn& kernel = kernel_k);
double kernel_q_mass(double delta);

}  // namespace sfpp
