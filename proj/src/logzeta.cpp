#include "critline/logzeta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "critline/zeta.hpp"

namespace critline {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLog2Pi = 1.8378770664093454836;  // log(2*pi)
constexpr double kSqrtPi = 1.7724538509055160273;  // sqrt(pi)
// Pole of f (root of the denominator), pinned by find_rho_s and a
// regression test.
constexpr double kRhoS = 6.2898359888369027797;

// sech(pi*rho) without overflow; exactly 0 once cosh saturates.
double sech_pi(double rho) {
    const double x = kPi * std::fabs(rho);
    if (x > 709.0) return 0.0;
    return 1.0 / std::cosh(x);
}

// log(cosh(x)) for x >= 0 without overflow.
double log_cosh(double x) {
    return x - std::numbers::ln2 + std::log1p(std::exp(-2.0 * x));
}

// Denominator of f in the cosh-normalized form.
double f_denominator(double rho) {
    return 2.0 * kLog2Pi - 2.0 * digamma_re(rho) + kPi * sech_pi(rho);
}

}  // namespace

double f_of_rho(double rho) {
    if (!(rho >= 0.0)) throw std::domain_error("f_of_rho requires rho >= 0");
    if (std::fabs(rho - kRhoS) < 1e-12)
        throw std::domain_error("f_of_rho pole at rho_s");
    return 4.0 / f_denominator(rho);
}

double alpha_prime(double rho) {
    if (!(rho >= 0.0)) throw std::domain_error("alpha_prime requires rho >= 0");
    return 0.25 * f_denominator(rho);
}

double find_rho_s() {
    // Bisection on the denominator sign change in [6, 7], then secant polish.
    double lo = 6.0, hi = 7.0;
    double flo = f_denominator(lo);
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f_denominator(mid);
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-13) break;
    }
    double x0 = lo, x1 = hi;
    double f0 = f_denominator(x0), f1 = f_denominator(x1);
    for (int i = 0; i < 4 && f1 != f0; ++i) {
        const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        x0 = x1; f0 = f1;
        x1 = x2; f1 = f_denominator(x2);
    }
    return x1;
}

GammaAux gamma_aux(double rho) {
    if (!(rho >= 0.0)) throw std::domain_error("gamma_aux requires rho >= 0");
    GammaAux g;
    g.rho = rho;
    g.theta = log_gamma_im_continuous(rho, 0.5).value;
    g.rho_pi = rho * kLog2Pi;
    g.rho_theta = g.theta - g.rho_pi;
    // Half-angle forms: cosh(pi rho/2)/sqrt(cosh(pi rho)) = u_plus etc.,
    // finite for all rho (the naive cosh/sinh products overflow near 445).
    const double sech = sech_pi(rho);
    const double u_plus = std::sqrt(0.5 * (1.0 + sech));
    const double u_minus = std::sqrt(0.5 * (1.0 - sech));
    const double ct = std::cos(g.theta), st = std::sin(g.theta);
    g.c_p = kSqrtPi * (ct * u_plus + st * u_minus);
    g.c_m = kSqrtPi * (st * u_plus - ct * u_minus);
    g.d_r = 0.5 - (g.c_p * std::cos(g.rho_pi) + g.c_m * std::sin(g.rho_pi)) /
                      (2.0 * kSqrtPi);
    const std::complex<double> f =
        complex_gamma(std::complex<double>(0.25, 0.5 * rho));
    g.f_re = f.real();
    g.f_im = f.imag();
    g.mod_gamma = kSqrtPi * std::sqrt(sech > 0.0 ? sech : 0.0);
    if (sech == 0.0) {
        // below sech's underflow: |Gamma| = sqrt(2 pi) e^{-pi rho/2}
        g.mod_gamma = std::sqrt(2.0 * kPi) * std::exp(-0.5 * kPi * rho);
    }
    return g;
}

namespace {

double b_quotient(double rho, double angle_scale) {
    const GammaAux g = gamma_aux(rho);
    const double arg = rho * angle_scale;
    const double ca = std::cos(arg), sa = std::sin(arg);
    const double num = g.c_p * ca + g.c_m * sa - kSqrtPi;
    const double den = g.c_m * ca - g.c_p * sa;
    if (den == 0.0) throw std::domain_error("b_ratio tangent pole");
    return num / den;
}

}  // namespace

double b_ratio(double rho) { return b_quotient(rho, kLog2Pi); }

double b_ratio_log2_variant(double rho) {
    return b_quotient(rho, std::numbers::ln2);
}

ContinuousArg alpha_continuous(double rho) {
    if (!(rho >= 0.0))
        throw std::domain_error("alpha_continuous requires rho >= 0");
    const double theta = log_gamma_im_continuous(rho, 0.5).value;
    const double at = rho > 10.0
                          ? kPi / 2.0 - std::atan(std::exp(-kPi * rho))
                          : std::atan(std::exp(kPi * rho));
    const double value =
        0.5 * rho * kLog2Pi - 0.5 * theta - 9.0 * kPi / 8.0 + 0.5 * at;
    long long sheet = std::llround(value / kPi);
    double rem = value - static_cast<double>(sheet) * kPi;
    if (rem > kPi) ++sheet;
    else if (rem <= -kPi) --sheet;
    return {value, sheet};
}

double alpha_asymptotic(double rho) {
    if (!(rho > 0.0))
        throw std::domain_error("alpha_asymptotic requires rho > 0");
    return -0.5 * rho * (1.0 - std::log(rho / (2.0 * kPi))) + 7.0 * kPi / 8.0;
}

IdentityResiduals identity_residuals(double rho) {
    const CriticalPoint p = critical_point(rho);
    IdentityResiduals r;
    r.rho = rho;
    // |M|^2 = 16 |cos(pi s/2) Gamma(s) (2 pi)^{-s}|^2, assembled in log
    // space: |cos(pi/4 + i pi rho/2)|^2 = cosh(pi rho)/2.
    r.r_m = 16.0 * std::exp(log_cosh(kPi * rho) - std::numbers::ln2 +
                            2.0 * log_gamma_re(rho, 0.5) - kLog2Pi) -
            4.0;
    const double f = f_of_rho(rho);
    const double mod2 = p.mod_zeta * p.mod_zeta;
    r.r_core = p.v * f - mod2;
    const double cab = std::cos(p.alpha - p.beta);
    r.r_polar = p.mod_dzeta / p.mod_zeta - 1.0 / (f * cab);
    r.r_b = std::tan(p.alpha) - b_ratio(rho);
    const double dmod_drho =
        (p.zeta_im * p.dzeta_re - p.zeta_re * p.dzeta_im) / p.mod_zeta;
    r.r_sin = dmod_drho / p.mod_dzeta - std::sin(p.alpha - p.beta);
    return r;
}

}  // namespace critline
