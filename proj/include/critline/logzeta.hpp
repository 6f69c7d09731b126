#pragma once
// The logarithmic-derivative factor f(rho), its pole rho_s, the Gamma-phase
// auxiliary bundle, the tangent ratio for arg zeta, the continuous argument
// alpha(rho) with its asymptotic form, and the core identity residuals.
#include "critline/special.hpp"

namespace critline {

// Gamma-phase quantities at height rho.  theta is the continuous
// Im log Gamma(1/2 + i rho); rho_pi = rho*log(2*pi); rho_theta = theta -
// rho_pi.  c_p/c_m are the cosh/sinh-weighted Gamma components (stable
// half-angle form; c_p^2 + c_m^2 = pi exactly).  d_r is the half-zero
// detector: d_r = 0 exactly at half-zeros (Im zeta = 0 with zeta != 0),
// and generically nonzero at full zeros.  f_re/f_im are
// the components of Gamma(1/4 + i rho/2) (underflow to 0 for rho beyond
// ~2800 is documented; ratio-based callers should use phases instead).
struct GammaAux {
    double rho = 0.0;
    double theta = 0.0;
    double rho_pi = 0.0;
    double rho_theta = 0.0;
    double c_p = 0.0, c_m = 0.0;
    double d_r = 0.0;
    double f_re = 0.0, f_im = 0.0;
    double mod_gamma = 0.0;  // |Gamma(1/2 + i rho)| = sqrt(pi/cosh(pi rho))
};

// Residuals of the coupling identities at one point; each is ~0 where the
// identity applies.  r_m: modulus law |M|^2 - 4 for the reflection factor
// M = 4 cos(pi s/2) Gamma(s) (2 pi)^{-s}.  r_core: v*f - |zeta|^2.
// r_polar: |dzeta|/|zeta| - 1/(f*cos(alpha-beta)).  r_b: tan(alpha) - B.
// r_sin: (d|zeta|/drho)/|dzeta| - sin(alpha-beta).
struct IdentityResiduals {
    double rho = 0.0;
    double r_m = 0.0;
    double r_core = 0.0;
    double r_polar = 0.0;
    double r_b = 0.0;
    double r_sin = 0.0;
};

// The factor coupling |zeta|^2 to v:
//   f(rho) = 4 cosh(pi rho) / (2 ln(2 pi) cosh - 2 Re psi(1/2+i rho) cosh + pi),
// evaluated in the cosh-normalized form so it never overflows.  Negative
// for rho > rho_s.  Throws std::domain_error within 1e-12 of the pole rho_s.
double f_of_rho(double rho);

// 1/f in closed form: (2 ln(2 pi) - 2 Re psi(1/2+i rho) + pi sech(pi rho))/4.
// Finite everywhere (it has a simple zero at rho_s where f has its pole);
// equals the derivative of the continuous argument alpha.
double alpha_prime(double rho);

// The unique pole of f: root of Re psi(1/2+i rho) = ln(2 pi) + (pi/2) sech(pi rho),
// bracketed in [6, 7] and refined to 1e-12.
double find_rho_s();

// Tangent of arg zeta(1/2 + i rho) built purely from Gamma-phase data:
//   B = (c_p cos(rho_pi) + c_m sin(rho_pi) - sqrt(pi)) /
//       (c_m cos(rho_pi) - c_p sin(rho_pi)).
// Throws std::domain_error at a denominator zero (genuine tangent pole).
double b_ratio(double rho);

// Same quotient with rho*log(2*pi) replaced by rho*log(2) in the circular
// arguments; equals -Im F / Re F for F = Gamma(1/4 + i rho/2).
double b_ratio_log2_variant(double rho);

// Continuous argument of zeta on the critical line:
//   alpha(rho) = (rho/2) log(2 pi) - theta/2 - 9 pi/8 + arctan(e^{pi rho})/2,
// with the arctan evaluated overflow-free.  alpha(0) = -pi; alpha - principal
// arg zeta is an integer multiple of pi; d alpha/d rho = 1/f.
ContinuousArg alpha_continuous(double rho);

// Closed-form asymptotic counterpart: alpha_a(rho) = -(rho/2)(1 - log(rho/2pi))
// + 7 pi/8; alpha_a ~ -alpha for large rho.
double alpha_asymptotic(double rho);

// Gamma-phase bundle at rho (rho >= 0).
GammaAux gamma_aux(double rho);

// All coupling-identity residuals at rho.  Residuals involving f are
// undefined within 1e-12 of rho_s (domain_error propagates).
IdentityResiduals identity_residuals(double rho);

}  // namespace critline
