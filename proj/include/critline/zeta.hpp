#pragma once
// Evaluation of the Riemann zeta function and its s-derivative on the
// critical line s = 1/2 + i*rho, plus a bundled per-point record.
#include <complex>

namespace critline {

// One evaluation point on the critical line.  dzeta is d(zeta)/ds; the
// rho-derivative of zeta is i * dzeta.  alpha/beta are principal
// arguments in (-pi, pi].  v = dzeta_re*zeta_re + dzeta_im*zeta_im is
// the product that couples |zeta|^2 to the logarithmic-derivative factor.
struct CriticalPoint {
    double rho = 0.0;
    double zeta_re = 0.0, zeta_im = 0.0;
    double dzeta_re = 0.0, dzeta_im = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double mod_zeta = 0.0, mod_dzeta = 0.0;
    double v = 0.0;
    // False when |zeta| is so small relative to |dzeta| that alpha is
    // numerically meaningless (evaluation directly on top of a zero).
    bool arg_reliable = true;
};

// zeta(1/2 + i*rho).  Negative rho is handled by conjugation.
std::complex<double> zeta_critical(double rho);

// d(zeta)/ds evaluated at s = 1/2 + i*rho.
std::complex<double> zeta_prime_critical(double rho);

// Both values plus derived quantities in one evaluation.
CriticalPoint critical_point(double rho);

}  // namespace critline
