#pragma once
// Half-zero detection (roots of Im zeta with Re zeta != 0), the argument
// jump sign at zeros, the scanner pairing negative half-zeros with the
// zero pairs they disturb, and locus sampling for plots.
#include <cstddef>
#include <vector>

#include "critline/zero_locator.hpp"

namespace critline {

enum class HalfZeroSign { positive, negative };

// A root of zeta_I(1/2 + i rho) that is not a full zero.  zeta_r_sign is
// the sign of zeta_R there (negative means the locus crosses the negative
// real axis).  d_r_residual is the closed sinusoidal detector value
// 1/2 - (sqrt(2)/4)(sin(rho_theta) + cos(rho_theta)); theta_residual is
// the distance of rho_theta to pi/4 modulo 2*pi (both ~0 at half-zeros).
struct HalfZero {
    double rho = 0.0;
    HalfZeroSign zeta_r_sign = HalfZeroSign::positive;
    double d_r_residual = 0.0;
    double theta_residual = 0.0;
};

// A consecutive zero pair disturbed by a negative half-zero.  The crossing
// lies above the lower member's ordinate: between the members when the
// upper member carries the anomalous jump from below, or just above the
// upper member otherwise.  jump_sign_at_upper is arg_jump_at_zero of the
// upper member (+1 at every event observed; -1 marks a normal zero).
struct AnomalousEvent {
    long long lower_zero_index = 0;
    long long upper_zero_index = 0;
    double crossing_rho = 0.0;
    int jump_sign_at_upper = 0;
};

struct LocusSample {
    double rho = 0.0;
    double zeta_re = 0.0;
    double zeta_im = 0.0;
    double v = 0.0;
};

// All half-zeros with rho_lo < rho < rho_hi, in increasing order.  Found
// by a dense sign scan of zeta_I at 1/8 of the local zero gap; full zeros
// (|zeta_R| below 1e-8) are excluded.
std::vector<HalfZero> half_zeros_in(double rho_lo, double rho_hi);

// Sign of the argument discontinuity of zeta across the k-th zero after
// removing the smooth phase drift: -1 at normal zeros, +1 at anomalous
// ones.  Uses principal args at rho_k +- 1e-4.
int arg_jump_at_zero(long long k);

// Scan zeros k_lo..k_hi for anomalous events.  Each negative half-zero c
// with rho_j < c < rho_{j+1} yields one event for the member whose counter
// bracket it perturbs: (j-1, j) when the bound index nearest c is j-1
// (crossing above zero j), else (j, j+1) (crossing below zero j+1).
// Events are ordered by crossing ordinate.
std::vector<AnomalousEvent> scan_anomalies(long long k_lo, long long k_hi);

// count >= 2 samples of (zeta, v) on a uniform grid over [rho_lo, rho_hi].
std::vector<LocusSample> locus_samples(double rho_lo, double rho_hi,
                                       std::size_t count);

}  // namespace critline
