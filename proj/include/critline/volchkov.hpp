#pragma once
// Numerical verification of the arg-kernel integral identity
//   I = integral_0^inf 2 t arg zeta(1/2+it) / (1/4+t^2)^2 dt = pi*(gamma-3)
// through its five-piece decomposition J1..J5, the zero-ordinate sum it
// contains, and the direct piecewise quadrature of the left side.
#include <array>
#include <cstddef>
#include <vector>

#include "critline/zero_locator.hpp"

namespace critline {

struct JPair {
    double numeric = 0.0;
    double analytic = 0.0;
};

struct VolchkovReport {
    double t_max = 0.0;
    long long zeros_used = 0;
    // Decomposition pieces.  j1: arctan(e^{pi t}) kernel; j2: log-Gamma
    // phase kernel via its grouped-series route; j3: pi * zero-ordinate
    // sum (tail folded in); j4/j5: elementary kernels.
    double j1 = 0.0, j2 = 0.0, j3 = 0.0, j4 = 0.0, j5 = 0.0;
    double j1_analytic = 0.0, j2_analytic = 0.0, j3_analytic = 0.0,
           j4_analytic = 0.0, j5_analytic = 0.0;
    // j1 - j2 + j3 + j4 + j5 assembled from the analytic pieces; equals
    // target in exact arithmetic.
    double assembly_closed_form = 0.0;
    double target = 0.0;  // pi*(gamma-3)
    // Partial sum of 2*sum_k 1/(rho_k^2 + 1/4) over the table, its
    // density tail estimate (reported separately, not folded in), and the
    // limit 2 + gamma - log(4*pi) it increases toward.
    double zero_sum_partial = 0.0;
    double zero_sum_tail = 0.0;
    double zero_sum_target = 0.0;
    // Direct piecewise quadrature of the kernel with principal args over
    // [0, t_max], the decay bound on the discarded tail, the total of the
    // locus-crossing corrections (reported, never folded in), and the
    // leftover integral_value - target.
    double integral_value = 0.0;
    double integral_tail_bound = 0.0;
    double anomaly_correction_total = 0.0;
    double t0_residual = 0.0;
};

// The five (numeric, analytic) pairs.  J3's numeric side needs zero
// ordinates; the others are table-free quadratures with closed-form tails.
std::array<JPair, 5> j_integrals(const std::vector<ZeroRecord>& table);

// pi * sum_{k<=n} 1/(rho_k^2 + 1/4) over the first n table records.
// Throws std::out_of_range when the table holds fewer than n zeros.
double zero_sum_partial_pi(const std::vector<ZeroRecord>& table, std::size_t n);

// Density tail estimate for sum_{k>n} 1/(rho_k^2+1/4), evaluated at the
// smooth ordinate of index n+1:  (log(r/2pi) + 1)/(2 pi r).
double zero_sum_tail_estimate(long long n);

// Numeric value of one grouped-series term
//   integral_0^inf (n arctan(2t/(2n+1)) - t) t / (n (1/4+t^2)^2) dt,
// which telescopes to -pi/(2 n (n+1)).
double grouped_term_integral(int n);

// Full report: decomposition, zero sum, and the direct integral over
// [0, t_max] split at table zeros and at locus crossings.  The table must
// cover every zero below t_max (std::invalid_argument otherwise).
VolchkovReport volchkov_integral(const std::vector<ZeroRecord>& table,
                                 double t_max);

}  // namespace critline
