#include "critline/volchkov.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "critline/anomaly.hpp"
#include "critline/special.hpp"
#include "critline/zeta.hpp"

namespace critline {
namespace {

constexpr double kPi = 3.1415926535897932385;
constexpr double kGamma = 0.57721566490153286061;  // Euler-Mascheroni
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kLog2Pi = 1.8378770664093454836;
constexpr double kLog4Pi = 2.5310242469692907930;  // log(4*pi)

double sq(double x) { return x * x; }
double kernel_u(double t) { return 0.25 + t * t; }

// Tanh-sinh quadrature on [a, b] with level doubling; integrands here are
// smooth on the open interval and bounded at the ends.
double ts_integrate(const std::function<double(double)>& f, double a, double b,
                    double tol) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double t_cut = 3.8;  // weights below ~1e-17 past this point
    const auto node_sum = [&](double h, bool odd_only) {
        double s = 0.0;
        const int step = odd_only ? 2 : 1;
        const int start = odd_only ? 1 : 0;
        for (int k = start;; k += step) {
            const double t = k * h;
            if (t > t_cut) break;
            const double sh = 0.5 * kPi * std::sinh(t);
            const double ch = std::cosh(sh);
            const double x = std::tanh(sh);           // in (-1, 1)
            const double w = 0.5 * kPi * std::cosh(t) / (ch * ch);
            const double xp = mid + half * x;
            const double xm = mid - half * x;
            double term = 0.0;
            if (xp > a && xp < b) term += f(xp);
            if (k > 0 && xm > a && xm < b) term += f(xm);
            s += w * term;
            if (k == 0 && odd_only) break;
        }
        return s;
    };
    double h = 1.0;
    double sum = node_sum(h, false);
    double value = half * h * sum;
    for (int level = 1; level <= 9; ++level) {
        h *= 0.5;
        sum += node_sum(h, true);
        const double next = half * h * sum;
        const double diff = std::fabs(next - value);
        value = next;
        if (level >= 3 && diff < std::max(tol, 1e-15 * std::fabs(value))) break;
    }
    return value;
}

// arctan(e^x) without overflow.
double arctan_exp(double x) {
    if (x > 0.0) return 0.5 * kPi - std::atan(std::exp(-x));
    return std::atan(std::exp(x));
}

// Exact tails of the elementary kernel integrals over [T, inf):
//   A1 = int t/u^2, A2 = int t^2/u^2, A3 = int 1/u^2, A4 ~ int 1/(t^2 u^2).
struct KernelTails {
    double a1, a2, a3, a4;
};
KernelTails kernel_tails(double T) {
    const double u = kernel_u(T);
    KernelTails k;
    k.a1 = 0.5 / u;
    k.a2 = std::atan(0.5 / T) + 0.5 * T / u;
    k.a3 = 4.0 * std::atan(0.5 / T) - 2.0 * T / u;
    k.a4 = 1.0 / (5.0 * T * T * T * T * T);
    return k;
}

double j1_numeric() {
    const auto f = [](double t) {
        return t * arctan_exp(kPi * t) / sq(kernel_u(t));
    };
    const double T = 30.0;
    return ts_integrate(f, 0.0, 5.0, 1e-13) + ts_integrate(f, 5.0, T, 1e-13) +
           0.5 * kPi * kernel_tails(T).a1;
}

// int_0^inf t^2/u^2 dt (= pi/2) by the same route the decomposition uses.
double q1_numeric() {
    const auto f = [](double t) { return t * t / sq(kernel_u(t)); };
    const double T = 200.0;
    return ts_integrate(f, 0.0, 10.0, 1e-13) + ts_integrate(f, 10.0, T, 1e-13) +
           kernel_tails(T).a2;
}

// int_0^inf t arctan(2t)/u^2 dt (= pi/2).
double q2_numeric() {
    const auto f = [](double t) {
        return t * std::atan(2.0 * t) / sq(kernel_u(t));
    };
    const double T = 200.0;
    const KernelTails k = kernel_tails(T);
    return ts_integrate(f, 0.0, 10.0, 1e-13) + ts_integrate(f, 10.0, T, 1e-13) +
           0.5 * kPi * k.a1 - 0.5 * k.a3 + k.a4 / 24.0;
}

// int_0^inf t/u^2 dt (= 2).
double r1_numeric() {
    const auto f = [](double t) { return t / sq(kernel_u(t)); };
    const double T = 200.0;
    return ts_integrate(f, 0.0, 10.0, 1e-13) + ts_integrate(f, 10.0, T, 1e-13) +
           kernel_tails(T).a1;
}

}  // namespace

double grouped_term_integral(int n) {
    if (n < 1) throw std::invalid_argument("grouped_term_integral: n >= 1");
    const double dn = n;
    const double w = 2.0 * dn + 1.0;
    const auto f = [dn, w](double t) {
        return (dn * std::atan(2.0 * t / w) - t) * t / (dn * sq(kernel_u(t)));
    };
    const double T = 1000.0;
    double v = ts_integrate(f, 0.0, dn + 1.0, 1e-13) +
               ts_integrate(f, dn + 1.0, 10.0 * (dn + 1.0), 1e-13) +
               ts_integrate(f, 10.0 * (dn + 1.0), T, 1e-13);
    // Tail from n*arctan(2t/w) - t = n*pi/2 - t - n*w/(2t) + n*w^3/(24 t^3) - ...
    const KernelTails k = kernel_tails(T);
    v += 0.5 * kPi * k.a1 - k.a2 / dn - 0.5 * w * k.a3 + w * w * w * k.a4 / 24.0;
    return v;
}

double zero_sum_partial_pi(const std::vector<ZeroRecord>& table,
                           std::size_t n) {
    if (table.size() < n)
        throw std::out_of_range("zero_sum_partial_pi: table holds fewer zeros");
    double s = 0.0;
    for (std::size_t i = n; i-- > 0;) s += 1.0 / kernel_u(table[i].rho);
    return kPi * s;
}

double zero_sum_tail_estimate(long long n) {
    const double r = franca_leclair_estimate(n + 1);
    return (std::log(r / (2.0 * kPi)) + 1.0) / (2.0 * kPi * r);
}

std::array<JPair, 5> j_integrals(const std::vector<ZeroRecord>& table) {
    std::array<JPair, 5> j;
    j[0].analytic = 0.5 * kPi * (1.0 + kLn2);
    j[1].analytic = -kGamma * kPi / 2.0;
    j[2].analytic = 0.5 * kPi * (2.0 + kGamma - kLog4Pi);
    j[3].analytic = 0.5 * kPi * kLog2Pi;
    j[4].analytic = -4.5 * kPi;

    j[0].numeric = j1_numeric();
    // Grouped-series route: -gamma*Q1 - Q2 - sum_n I_n, with the series
    // tail telescoping to -pi/(2*(n_cut+1)).
    const int n_cut = 40;
    double series = 0.0;
    for (int n = 1; n <= n_cut; ++n) series += grouped_term_integral(n);
    series += -0.5 * kPi / (n_cut + 1.0);
    const double q1 = q1_numeric();
    j[1].numeric = -kGamma * q1 - q2_numeric() - series;
    j[2].numeric = zero_sum_partial_pi(table, table.size()) +
                   kPi * zero_sum_tail_estimate(
                             static_cast<long long>(table.size()));
    j[3].numeric = kLog2Pi * q1;
    j[4].numeric = -2.25 * kPi * r1_numeric();
    return j;
}

VolchkovReport volchkov_integral(const std::vector<ZeroRecord>& table,
                                 double t_max) {
    if (!(t_max > 0.0))
        throw std::invalid_argument("volchkov_integral: t_max must be positive");
    if (table.empty() || table.front().index != 1)
        throw std::invalid_argument(
            "volchkov_integral: table must start at the first zero");
    if (table.back().rho < t_max)
        throw std::invalid_argument(
            "volchkov_integral: table does not cover zeros below t_max");

    VolchkovReport r;
    r.t_max = t_max;
    const auto j = j_integrals(table);
    r.j1 = j[0].numeric;
    r.j2 = j[1].numeric;
    r.j3 = j[2].numeric;
    r.j4 = j[3].numeric;
    r.j5 = j[4].numeric;
    r.j1_analytic = j[0].analytic;
    r.j2_analytic = j[1].analytic;
    r.j3_analytic = j[2].analytic;
    r.j4_analytic = j[3].analytic;
    r.j5_analytic = j[4].analytic;
    r.assembly_closed_form = r.j1_analytic - r.j2_analytic + r.j3_analytic +
                             r.j4_analytic + r.j5_analytic;
    r.target = kPi * (kGamma - 3.0);

    double ssum = 0.0;
    for (std::size_t i = table.size(); i-- > 0;) ssum += 1.0 / kernel_u(table[i].rho);
    r.zero_sum_partial = 2.0 * ssum;
    r.zero_sum_tail =
        2.0 * zero_sum_tail_estimate(static_cast<long long>(table.size()));
    r.zero_sum_target = 2.0 + kGamma - kLog4Pi;

    // Segment bounds: zeros below t_max plus locus crossings from the
    // anomaly scanner (principal arg jumps 2*pi there).
    long long m = 0;
    std::vector<double> bounds{0.0};
    for (const ZeroRecord& z : table) {
        if (z.rho >= t_max) break;
        bounds.push_back(z.rho);
        ++m;
    }
    r.zeros_used = m;
    double corrections = 0.0;
    if (m >= 2) {
        for (const AnomalousEvent& ev : scan_anomalies(1, m)) {
            if (ev.crossing_rho >= t_max) continue;
            bounds.push_back(ev.crossing_rho);
            const double rho_up =
                table[static_cast<std::size_t>(ev.upper_zero_index - 1)].rho;
            corrections += std::fabs(2.0 * kPi * (1.0 / kernel_u(rho_up) -
                                                  1.0 / kernel_u(ev.crossing_rho)));
        }
    }
    bounds.push_back(t_max);
    std::sort(bounds.begin(), bounds.end());
    r.anomaly_correction_total = corrections;

    const auto kern = [](double t) {
        const auto z = zeta_critical(t);
        return 2.0 * t * std::atan2(z.imag(), z.real()) / sq(kernel_u(t));
    };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
        total += ts_integrate(kern, bounds[i], bounds[i + 1], 1e-11);
    r.integral_value = total;
    r.integral_tail_bound = kPi / kernel_u(t_max);
    r.t0_residual = r.integral_value - r.target;
    return r;
}

}  // namespace critline
