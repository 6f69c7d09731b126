#pragma once
// Zero-counting formulas below a given height, the asymptotic index
// bracket, local density estimates, and gap statistics of the bound-point
// ladder against a reference zero table.
#include <vector>

#include "critline/zero_locator.hpp"

namespace critline {

// Counts of zeros with ordinate below rho, by three routes.  n_backlund
// is the exact counting formula 1 - rho*ln(pi)/(2*pi) + Im log Gamma(1/4 +
// i*rho/2)/pi + arg zeta/pi (integer up to rounding).  n_fl is its smooth
// Stirling form rho/(2*pi) * ln(rho/(2*pi*e)) + 7/8 + arg zeta/pi.
// k_exact counts sign changes of the continuous argument defect,
// round((arg zeta - alpha)/pi).  k_asymptotic_lo/hi bracket the count
// using only the smooth asymptotic series (no zeta evaluation).
struct CountReport {
    double rho = 0.0;
    double n_backlund = 0.0;
    double n_fl = 0.0;
    long long k_exact = 0;
    long long k_asymptotic_lo = 0;
    long long k_asymptotic_hi = 0;
};

// Local zero-spacing data at height rho: delta is the mean gap
// 2*pi/ln(rho/(2*pi)), n_g = 1/delta the density per unit ordinate, and
// max_jump = -delta * alpha'(rho) the phase change over one mean gap
// (approaches pi from below as rho grows).
struct DensityEstimate {
    double rho = 0.0;
    double delta = 0.0;
    double n_g = 0.0;
    double max_jump = 0.0;
};

// Gap statistics over k in [k_lo, k_hi] against a reference table:
//   d1 = smooth estimate FL(k) - rho_k
//   d2 = bound point rho_a(k) - rho_k
//   d3 = rho_k - rho_a(k-1)
//   d4 = midpoint (rho_a(k-1) + rho_a(k))/2 - rho_k
// Means and population standard deviations of each.
struct BoundStats {
    long long k_lo = 0, k_hi = 0;
    double mean_d1 = 0.0, std_d1 = 0.0;
    double mean_d2 = 0.0, std_d2 = 0.0;
    double mean_d3 = 0.0, std_d3 = 0.0;
    double mean_d4 = 0.0, std_d4 = 0.0;
};

// Counting report at rho > 0.  Throws std::domain_error if rho sits on a
// zero (the argument of zeta is undefined there).
CountReport count_report(double rho);

// Fractional part of alpha_asymptotic(rho)/pi, in [0, 1); ticks through a
// full cycle once per bound-point interval.
double normalized_counter(double rho);

// Density bundle at rho (requires rho > 2*pi so the mean gap is positive).
DensityEstimate density_estimate(double rho);

// Statistics of the four gap measures over k in [k_lo, k_hi] using
// ordinates from `table` (which must cover the range; any index source).
BoundStats bound_stats(long long k_lo, long long k_hi,
                       const std::vector<ZeroRecord>& table);

}  // namespace critline
