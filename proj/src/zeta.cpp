#include "critline/zeta.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace critline {
namespace {

using std::complex;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// n^{-s} for s = sigma + i*rho with the phase rho*log(n) reduced in
// extended precision; at rho ~ 7.5e4 a double-precision phase would lose
// ~6 digits.
complex<double> power_term(double sigma, double rho, double n) {
    const long double phase = std::fmod(
        static_cast<long double>(rho) * std::log(static_cast<long double>(n)),
        static_cast<long double>(kTwoPi));
    const double p = static_cast<double>(phase);
    const double mag = std::pow(n, -sigma);
    return {mag * std::cos(p), -mag * std::sin(p)};
}

struct ValueAndDeriv {
    complex<double> z;   // zeta(s)
    complex<double> dz;  // d zeta / ds
};

// ---- Alternating-series route (Borwein-style weights), good to ~1e-13
// for rho <= 40 at n = 64 terms. ----

constexpr int kEtaTerms = 64;

const std::array<double, kEtaTerms>& eta_weights() {
    static const std::array<double, kEtaTerms> w = [] {
        // d_k = n * sum_{j<=k} t_j with t_0 = 1 and
        // t_{j+1}/t_j = 4(n+j)(n-j) / ((2j+1)(2j+2)); all positive.
        const double n = kEtaTerms;
        std::array<double, kEtaTerms + 1> d{};
        double t = 1.0, acc = 1.0;
        d[0] = n * acc;
        for (int j = 0; j + 1 <= kEtaTerms; ++j) {
            t *= 4.0 * (n + j) * (n - j) / ((2.0 * j + 1.0) * (2.0 * j + 2.0));
            acc += t;
            d[j + 1] = n * acc;
        }
        std::array<double, kEtaTerms> e{};
        for (int k = 0; k < kEtaTerms; ++k) {
            const double mag = (d[kEtaTerms] - d[k]) / d[kEtaTerms];
            e[k] = (k % 2 == 0) ? mag : -mag;
        }
        return e;
    }();
    return w;
}

ValueAndDeriv eta_series(double rho) {
    const auto& e = eta_weights();
    complex<double> eta = 0.0, deta = 0.0;
    for (int k = kEtaTerms - 1; k >= 0; --k) {
        const double n = k + 1.0;
        const complex<double> term = e[k] * power_term(0.5, rho, n);
        eta += term;
        deta -= std::log(n) * term;
    }
    return {eta, deta};
}

ValueAndDeriv zeta_low(double rho) {
    const auto [eta, deta] = eta_series(rho);
    // zeta = eta / (1 - 2^{1-s}), s = 1/2 + i rho.
    const complex<double> two_pow =
        std::sqrt(2.0) * complex<double>(std::cos(rho * std::numbers::ln2),
                                         -std::sin(rho * std::numbers::ln2));
    const complex<double> den = 1.0 - two_pow;
    const complex<double> z = eta / den;
    const complex<double> dz = (deta - std::numbers::ln2 * two_pow * z) / den;
    return {z, dz};
}

// ---- Euler-Maclaurin route for rho > 40; tail corrections carry exact
// Bernoulli-number ratios and log-derivative bookkeeping. ----

ValueAndDeriv zeta_euler_maclaurin(double rho) {
    const complex<double> s(0.5, rho);
    const int N = std::max(18, static_cast<int>(std::ceil(0.55 * rho)) + 12);
    constexpr int K = 12;
    // B_{2k+2}/B_{2k} for k = 1..K-1 (exact rationals).
    static constexpr double bern[] = {
        1.0 / 6.0,          -1.0 / 30.0,        1.0 / 42.0,
        -1.0 / 30.0,        5.0 / 66.0,         -691.0 / 2730.0,
        7.0 / 6.0,          -3617.0 / 510.0,    43867.0 / 798.0,
        -174611.0 / 330.0,  854513.0 / 138.0,   -236364091.0 / 2730.0,
    };

    complex<double> z = 0.0, dz = 0.0;
    for (int n = N - 1; n >= 1; --n) {
        const complex<double> term = power_term(0.5, rho, n);
        z += term;
        dz -= std::log(static_cast<double>(n)) * term;
    }
    const double logN = std::log(static_cast<double>(N));
    const complex<double> Npow = power_term(0.5, rho, N);  // N^{-s}
    // N^{-s}/2
    z += 0.5 * Npow;
    dz -= 0.5 * logN * Npow;
    // N^{1-s}/(s-1)
    const complex<double> sm1 = s - 1.0;
    const complex<double> t0 = static_cast<double>(N) * Npow / sm1;
    z += t0;
    dz += t0 * (-logN - 1.0 / sm1);
    // Correction sum: T_1 = s*N^{-s-1}/12, then
    // T_{k+1} = T_k * (s+2k-1)(s+2k) / ((2k+1)(2k+2) N^2) * B_{2k+2}/B_{2k}.
    complex<double> T = s * Npow / (12.0 * static_cast<double>(N));
    complex<double> dlogT = 1.0 / s - logN;
    for (int k = 1; k <= K; ++k) {
        z += T;
        dz += T * dlogT;
        if (k == K) break;
        const complex<double> f1 = s + (2.0 * k - 1.0);
        const complex<double> f2 = s + 2.0 * k;
        T *= f1 * f2 * (bern[k] / bern[k - 1]) /
             ((2.0 * k + 1.0) * (2.0 * k + 2.0) * static_cast<double>(N) *
              static_cast<double>(N));
        dlogT += 1.0 / f1 + 1.0 / f2;
    }
    return {z, dz};
}

ValueAndDeriv evaluate(double rho) {
    const bool flip = rho < 0.0;
    const double r = std::fabs(rho);
    ValueAndDeriv out = r <= 40.0 ? zeta_low(r) : zeta_euler_maclaurin(r);
    if (flip) {  // zeta(conj s) = conj zeta(s)
        out.z = std::conj(out.z);
        out.dz = std::conj(out.dz);
    }
    return out;
}

}  // namespace

std::complex<double> zeta_critical(double rho) { return evaluate(rho).z; }

std::complex<double> zeta_prime_critical(double rho) { return evaluate(rho).dz; }

CriticalPoint critical_point(double rho) {
    const auto [z, dz] = evaluate(rho);
    CriticalPoint p;
    p.rho = rho;
    p.zeta_re = z.real();
    p.zeta_im = z.imag();
    p.dzeta_re = dz.real();
    p.dzeta_im = dz.imag();
    p.mod_zeta = std::abs(z);
    p.mod_dzeta = std::abs(dz);
    p.alpha = std::atan2(z.imag(), z.real());
    p.beta = std::atan2(dz.imag(), dz.real());
    p.v = dz.real() * z.real() + dz.imag() * z.imag();
    p.arg_reliable = p.mod_zeta > 1e-8 * std::max(1.0, p.mod_dzeta);
    return p;
}

}  // namespace critline
