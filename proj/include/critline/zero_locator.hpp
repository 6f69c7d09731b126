#pragma once
// Locating critical-line zeros by sign changes of the rotated real
// function, the bound-point ladder that brackets them, and the implicit
// zero conditions / singular transform exposed as residuals.
#include <vector>

namespace critline {

enum class ZeroSource { computed, ingested };
enum class AnomalyFlag { normal, anomalous_pair_member, unknown };

struct ZeroRecord {
    long long index = 0;  // 1-based
    double rho = 0.0;
    ZeroSource source = ZeroSource::computed;
    double refined_to = 0.0;  // absolute uncertainty of rho
    AnomalyFlag anomaly_flag = AnomalyFlag::unknown;
};

// Coefficients of the singular linear map sending (dzeta_R, dzeta_I) to
// (zeta_R, zeta_I)/f.  c = 1 - a by construction; a*c - b^2 = 0 up to
// rounding (the map has rank one).
struct TransformCoefficients {
    double rho = 0.0;
    double a = 0.0, b = 0.0, c = 0.0;
    double f = 0.0;
};

// Residuals of the four implicit zero conditions at a point (each ~0 at
// zeros of zeta, bounded away from 0 elsewhere):
//   r_fe:         u_minus*sin(2*beta + rho_theta) + u_plus*cos(2*beta +
//                 rho_theta) + 1  (implicit reflection condition, written
//                 in the overflow-free half-angle weights)
//   r_tanh:       tanh(pi*rho/2) - tan(2*beta + rho_theta)
//   r_halfturn:   distance of (beta - alpha)/pi - 1/2 to the nearest
//                 integer (the half-turn phase lock)
//   r_orthogonal: 1 + tan(alpha)*tan(beta)
struct ImplicitResiduals {
    double rho = 0.0;
    double r_fe = 0.0;
    double r_tanh = 0.0;
    double r_halfturn = 0.0;
    double r_orthogonal = 0.0;
};

// Bound-point ladder: rho_a(k) = 2*pi*exp(W((8k-7)/(8e)) + 1), k >= 0.
// Zero k lies in (rho_a(k-1), rho_a(k)) except at anomalous pairs.
double bound_point(long long k);

// Smooth per-index ordinate estimate: 2*pi*(k - 11/8)/W((k - 11/8)/e),
// k >= 1.
double franca_leclair_estimate(long long k);

// Rotation angle making e^{i*theta(rho)} * zeta(1/2 + i*rho) real:
// theta(rho) = Im log Gamma(1/4 + i*rho/2) - (rho/2) log(pi).
double rotation_angle(double rho);

// The rotated real function Z(rho) = Re[e^{i*theta(rho)} zeta(1/2+i*rho)];
// simple sign changes exactly at critical-line zeros.
double rotated_real(double rho);

// k-th zero ordinate (1-based), refined to ~1e-10.  Zeros are found by a
// cached sequential sign scan of Z (anchored below the first zero), so
// indices are exact; the per-call cost grows with the largest k seen.
// The record's anomaly_flag reflects the bound-point containment test on
// k and its upper neighbor.  Thread-safe.
ZeroRecord locate_zero(long long k);

// All four implicit-condition residuals at rho.  When rho sits numerically
// on a zero (arg of zeta undefined there), the alpha-dependent residuals
// use the one-sided limit of the arg, measured 1e-7 above rho; they are
// mod-pi invariant, so the side does not affect them.
ImplicitResiduals implicit_residuals(double rho);

// Transform coefficients at rho (rho != rho_s, where f has its pole).
TransformCoefficients singular_transform(double rho);

// beta at the k-th zero from the closed Gamma-phase form; agrees with
// atan2(dzeta_im, dzeta_re) mod pi.
double beta_at_zero(long long k);

}  // namespace critline
