#pragma once
// Transcendental substrate: complex Gamma, continuous log-Gamma argument,
// real part of digamma on the half-line, Lambert W principal branch.
#include <complex>

namespace critline {

// An unwound angle in radians together with its half-turn sheet index.
// Invariant: value - sheet*pi lies in (-pi, pi].
struct ContinuousArg {
    double value = 0.0;
    long long sheet = 0;
};

// log Gamma(z) with imaginary part continuous on the right half-plane
// (standard continued branch: real on the positive real axis, NOT the
// principal arg of Gamma(z)).  Requires Re z > 0.
std::complex<double> log_gamma(std::complex<double> z);

// Gamma(z).  Poles at non-positive integers raise std::domain_error.
// May overflow/underflow to inf/0 outside the representable range.
std::complex<double> complex_gamma(std::complex<double> z);

// Im log Gamma(sigma + i*rho), continuous in rho and 0 at rho = 0,
// with its sheet index.  Requires sigma > 0, rho >= 0.
ContinuousArg log_gamma_im_continuous(double rho, double sigma = 0.5);

// Re log Gamma(sigma + i*rho) = log|Gamma(sigma + i*rho)|.
double log_gamma_re(double rho, double sigma = 0.5);

// Re psi(1/2 + i*rho), rho >= 0.  psi is the digamma function.
double digamma_re(double rho);

// Lambert W, principal branch: w with w*exp(w) = x, x >= -1/e.
// Throws std::domain_error below -1/e.
double lambert_w0(double x);

}  // namespace critline
