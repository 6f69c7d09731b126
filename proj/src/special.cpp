#include "critline/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace critline {
namespace {

using std::complex;
constexpr double kPi = std::numbers::pi;
constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2*pi)/2

// Asymptotic series for log Gamma(z), Re z > 0, |z| >= 12.
// Coefficients are B_{2n} / (2n*(2n-1)) with exact Bernoulli numbers.
complex<double> stirling_log_gamma(complex<double> z) {
    static constexpr double c[] = {
        1.0 / 12.0,           -1.0 / 360.0,         1.0 / 1260.0,
        -1.0 / 1680.0,        1.0 / 1188.0,         -691.0 / 360360.0,
        1.0 / 156.0,          -3617.0 / 122400.0,
    };
    const complex<double> inv = 1.0 / z;
    const complex<double> inv2 = inv * inv;
    complex<double> term = inv;
    complex<double> series = 0.0;
    for (double coeff : c) {
        series += coeff * term;
        term *= inv2;
    }
    return (z - 0.5) * std::log(z) + kHalfLog2Pi - z + series;
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    if (!(z.real() > 0.0))
        throw std::domain_error("log_gamma requires Re z > 0");
    // Shift into the asymptotic regime; each log stays on one branch
    // because every shifted point keeps Re > 0.
    complex<double> shift_log = 0.0;
    while (std::abs(z) < 12.0) {
        shift_log += std::log(z);
        z += 1.0;
    }
    return stirling_log_gamma(z) - shift_log;
}

std::complex<double> complex_gamma(std::complex<double> z) {
    if (z.real() > 0.0)
        return std::exp(log_gamma(z));
    if (z.imag() == 0.0 && z.real() == std::floor(z.real()))
        throw std::domain_error("complex_gamma pole at non-positive integer");
    // Reflection: Gamma(z) = pi / (sin(pi z) * Gamma(1 - z)).
    return kPi / (std::sin(kPi * z) * std::exp(log_gamma(1.0 - z)));
}

ContinuousArg log_gamma_im_continuous(double rho, double sigma) {
    if (!(sigma > 0.0) || !(rho >= 0.0))
        throw std::domain_error("log_gamma_im_continuous requires sigma > 0, rho >= 0");
    const double value = log_gamma(std::complex<double>(sigma, rho)).imag();
    // sheet such that value - sheet*pi lies in (-pi, pi]
    long long sheet = std::llround(value / kPi);
    double rem = value - static_cast<double>(sheet) * kPi;
    if (rem > kPi) ++sheet;
    else if (rem <= -kPi) --sheet;
    return {value, sheet};
}

double log_gamma_re(double rho, double sigma) {
    if (!(sigma > 0.0))
        throw std::domain_error("log_gamma_re requires sigma > 0");
    return log_gamma(std::complex<double>(sigma, std::fabs(rho))).real();
}

double digamma_re(double rho) {
    // psi(z) ~ log z - 1/(2z) - sum B_{2n}/(2n z^{2n}); shift until |z| >= 10.
    static constexpr double c[] = {
        1.0 / 12.0,  -1.0 / 120.0, 1.0 / 252.0,
        -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0,
    };
    complex<double> z(0.5, std::fabs(rho));
    complex<double> shift = 0.0;
    while (std::abs(z) < 10.0) {
        shift += 1.0 / z;
        z += 1.0;
    }
    const complex<double> inv2 = 1.0 / (z * z);
    complex<double> term = inv2;
    complex<double> series = 0.0;
    for (double coeff : c) {
        series += coeff * term;
        term *= inv2;
    }
    return (std::log(z) - 0.5 / z - series - shift).real();
}

double lambert_w0(double x) {
    constexpr double kInvE = 0.36787944117144232160;  // 1/e
    if (x < -kInvE) {
        if (x > -kInvE - 1e-15) x = -kInvE;  // absorb rounding at the branch point
        else throw std::domain_error("lambert_w0 requires x >= -1/e");
    }
    if (x == 0.0) return 0.0;

    double w;
    if (x < -0.25) {
        // Branch-point series in p = sqrt(2(e x + 1)).
        const double p = std::sqrt(std::fmax(0.0, 2.0 * (std::numbers::e * x + 1.0)));
        w = -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0;
        if (p < 1e-5) return w;
    } else if (x < 3.0) {
        w = x < 1.0 ? x / (1.0 + x) : std::log1p(x);
    } else {
        const double l1 = std::log(x);
        const double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    }

    if (x > 3.0) {
        // Newton on F(w) = w + log w - log x; never forms w*e^w, so the
        // iteration is overflow-free up to the top of the double range.
        const double lx = std::log(x);
        for (int i = 0; i < 60; ++i) {
            const double f = w + std::log(w) - lx;
            const double dw = f * w / (w + 1.0);
            w -= dw;
            if (std::fabs(dw) <= 1e-16 * (1.0 + std::fabs(w))) break;
        }
        return w;
    }
    // Halley on f(w) = w e^w - x.
    for (int i = 0; i < 60; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double den = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        const double dw = f / den;
        w -= dw;
        if (std::fabs(dw) <= 1e-16 * (1.0 + std::fabs(w))) break;
    }
    return w;
}

}  // namespace critline
