#include "critline/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "critline/logzeta.hpp"
#include "critline/special.hpp"
#include "critline/zeta.hpp"

namespace critline {
namespace {

constexpr double kPi = 3.1415926535897932385;
constexpr double kTwoPi = 6.2831853071795864769;
constexpr double kLogPi = 1.1447298858494001741;

// Smooth asymptotic count (Stirling expansion of the exact formula).
double asymptotic_count(double t) {
    const double w = t / kTwoPi;
    return w * std::log(w) - w + 0.625 + 1.0 / (48.0 * kPi * t) +
           7.0 / (5760.0 * kPi * t * t * t);
}

}  // namespace

CountReport count_report(double rho) {
    if (!(rho > 0.0)) throw std::domain_error("count_report requires rho > 0");
    const CriticalPoint p = critical_point(rho);
    if (!p.arg_reliable)
        throw std::domain_error("count_report: rho sits on a zero, arg undefined");
    CountReport r;
    r.rho = rho;
    const double arg_term = p.alpha / kPi;
    r.n_backlund = 1.0 - rho * kLogPi / kTwoPi +
                   log_gamma_im_continuous(0.5 * rho, 0.25).value / kPi + arg_term;
    r.n_fl = rho / kTwoPi * (std::log(rho / kTwoPi) - 1.0) + 0.875 + arg_term;
    r.k_exact = std::llround((p.alpha - alpha_continuous(rho).value) / kPi);
    const double base = asymptotic_count(rho);
    const long long fl = static_cast<long long>(std::floor(base));
    r.k_asymptotic_lo = fl - 1;
    r.k_asymptotic_hi = fl + 1;
    return r;
}

double normalized_counter(double rho) {
    const double x = alpha_asymptotic(rho) / kPi;
    return x - std::floor(x);
}

DensityEstimate density_estimate(double rho) {
    if (!(rho > kTwoPi))
        throw std::domain_error("density_estimate requires rho > 2*pi");
    DensityEstimate d;
    d.rho = rho;
    d.delta = kTwoPi / std::log(rho / kTwoPi);
    d.n_g = 1.0 / d.delta;
    d.max_jump = -d.delta * alpha_prime(rho);
    return d;
}

BoundStats bound_stats(long long k_lo, long long k_hi,
                       const std::vector<ZeroRecord>& table) {
    if (k_lo < 1 || k_hi < k_lo)
        throw std::invalid_argument("bound_stats: bad index range");
    const auto ordinate = [&table](long long k) {
        const auto it = std::lower_bound(
            table.begin(), table.end(), k,
            [](const ZeroRecord& r, long long key) { return r.index < key; });
        if (it == table.end() || it->index != k)
            throw std::out_of_range("bound_stats: table does not cover index " +
                                    std::to_string(k));
        return it->rho;
    };

    const std::size_t n = static_cast<std::size_t>(k_hi - k_lo + 1);
    std::vector<double> d1(n), d2(n), d3(n), d4(n);
    double lower = bound_point(k_lo - 1);
    for (long long k = k_lo; k <= k_hi; ++k) {
        const std::size_t i = static_cast<std::size_t>(k - k_lo);
        const double rk = ordinate(k);
        const double upper = bound_point(k);
        d1[i] = franca_leclair_estimate(k) - rk;
        d2[i] = upper - rk;
        d3[i] = rk - lower;
        d4[i] = 0.5 * (lower + upper) - rk;
        lower = upper;
    }

    const auto mean_std = [n](const std::vector<double>& d, double& mean,
                              double& sd) {
        double s = 0.0;
        for (double x : d) s += x;
        mean = s / static_cast<double>(n);
        double q = 0.0;
        for (double x : d) q += (x - mean) * (x - mean);
        sd = std::sqrt(q / static_cast<double>(n));
    };

    BoundStats b;
    b.k_lo = k_lo;
    b.k_hi = k_hi;
    mean_std(d1, b.mean_d1, b.std_d1);
    mean_std(d2, b.mean_d2, b.std_d2);
    mean_std(d3, b.mean_d3, b.std_d3);
    mean_std(d4, b.mean_d4, b.std_d4);
    return b;
}

}  // namespace critline
