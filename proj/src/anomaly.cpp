#include "critline/anomaly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "critline/logzeta.hpp"
#include "critline/zeta.hpp"

namespace critline {
namespace {

constexpr double kPi = 3.1415926535897932385;
constexpr double kTwoPi = 6.2831853071795864769;
constexpr double kQuarterPi = 0.78539816339744830962;
// A zeta_I root with |zeta_R| below this is a full zero, not a half-zero.
constexpr double kFullZeroCut = 1e-8;

double local_gap(double rho) {
    return kTwoPi / std::log(std::max(rho, 20.0) / kTwoPi);
}

double zeta_im_at(double rho) { return zeta_critical(rho).imag(); }

// Root of zeta_I in [lo, hi] given a sign change; bisection then secant.
double refine_im_root(double lo, double hi, double flo, double fhi) {
    for (int i = 0; i < 24; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = zeta_im_at(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    double x0 = lo, x1 = hi, f0 = flo, f1 = fhi;
    for (int i = 0; i < 5 && f1 != f0; ++i) {
        double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        x2 = std::clamp(x2, lo, hi);
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = zeta_im_at(x2);
        if (f1 == 0.0) break;
    }
    return x1;
}

HalfZero make_half_zero(double rho, double zr) {
    const GammaAux g = gamma_aux(rho);
    HalfZero h;
    h.rho = rho;
    h.zeta_r_sign = zr < 0.0 ? HalfZeroSign::negative : HalfZeroSign::positive;
    h.d_r_residual =
        0.5 - 0.25 * std::sqrt(2.0) * (std::sin(g.rho_theta) + std::cos(g.rho_theta));
    h.theta_residual = std::fabs(std::remainder(g.rho_theta - kQuarterPi, kTwoPi));
    return h;
}

// Near anomalous pairs two zeta_I roots sit close together (a full zero
// next to a locus crossing, e.g. 0.015 apart near the 256th zero), so an
// interval can hold an even number of roots with no endpoint sign change.
// Intervals are subdivided whenever zeta_I dips within kSlopeBound*width
// of 0; with |d zeta_I / d rho| <= kSlopeBound that certifies root-free
// intervals.  The bound holds with a wide margin for the first few
// thousand zeros; the depth cap resolves pairs down to ~1e-3 apart.
constexpr double kSlopeBound = 20.0;
constexpr int kMaxDepth = 3;

void scan_interval(double lo, double hi, double flo, double fhi, int depth,
                   std::vector<HalfZero>& out) {
    const double width = hi - lo;
    const bool change = (flo > 0.0) != (fhi > 0.0);
    if (change && depth >= 2) {
        const double root = refine_im_root(lo, hi, flo, fhi);
        const double zr = zeta_critical(root).real();
        if (std::fabs(zr) > kFullZeroCut) out.push_back(make_half_zero(root, zr));
        return;
    }
    if (!change) {
        if (depth >= kMaxDepth) return;
        if (std::min(std::fabs(flo), std::fabs(fhi)) > kSlopeBound * width) {
            const double fm = zeta_im_at(0.5 * (lo + hi));
            if ((fm > 0.0) == (flo > 0.0) &&
                std::fabs(fm) > kSlopeBound * 0.5 * width)
                return;  // certified root-free
        }
    }
    double x0 = lo, f0 = flo;
    for (int i = 1; i <= 8; ++i) {
        const double x1 = i == 8 ? hi : lo + width * (i / 8.0);
        const double f1 = i == 8 ? fhi : zeta_im_at(x1);
        scan_interval(x0, x1, f0, f1, depth + 1, out);
        x0 = x1;
        f0 = f1;
    }
}

}  // namespace

std::vector<HalfZero> half_zeros_in(double rho_lo, double rho_hi) {
    if (!(rho_lo < rho_hi))
        throw std::invalid_argument("half_zeros_in: empty interval");
    std::vector<HalfZero> out;
    // Nudge off the endpoints so a full zero sitting exactly on one is not
    // half-detected by the first bracket.
    double x0 = rho_lo + 1e-9 * std::max(1.0, std::fabs(rho_lo));
    double f0 = zeta_im_at(x0);
    const double top = rho_hi - 1e-9 * std::max(1.0, std::fabs(rho_hi));
    while (x0 < top) {
        const double x1 = std::min(x0 + local_gap(x0) / 8.0, top);
        const double f1 = zeta_im_at(x1);
        scan_interval(x0, x1, f0, f1, 0, out);
        x0 = x1;
        f0 = f1;
    }
    return out;
}

int arg_jump_at_zero(long long k) {
    const double rho0 = locate_zero(k).rho;
    const double eps = 1e-4;
    const auto zm = zeta_critical(rho0 - eps);
    const auto zp = zeta_critical(rho0 + eps);
    const double am = std::atan2(zm.imag(), zm.real());
    const double ap = std::atan2(zp.imag(), zp.real());
    const double dalpha =
        alpha_continuous(rho0 + eps).value - alpha_continuous(rho0 - eps).value;
    return static_cast<int>(-std::llround((ap - am - dalpha) / kPi));
}

std::vector<AnomalousEvent> scan_anomalies(long long k_lo, long long k_hi) {
    if (k_lo < 1 || k_hi < k_lo)
        throw std::invalid_argument("scan_anomalies: bad index range");
    std::vector<double> rho(static_cast<std::size_t>(k_hi - k_lo) + 2);
    for (long long k = k_lo; k <= k_hi + 1; ++k)
        rho[static_cast<std::size_t>(k - k_lo)] = locate_zero(k).rho;

    std::vector<AnomalousEvent> out;
    for (const HalfZero& h : half_zeros_in(rho.front(), rho.back())) {
        if (h.zeta_r_sign != HalfZeroSign::negative) continue;
        const auto it = std::upper_bound(rho.begin(), rho.end(), h.rho);
        const long long j = k_lo + (it - rho.begin()) - 1;  // rho_j < c < rho_{j+1}
        // Each crossing hugs a counter bound point rho_a(m) (within ~1e-4);
        // m identifies the member whose bracket the crossing perturbs.  m = j-1
        // means the crossing sits above zero j (zero j escaped below its
        // bracket); m = j+1 means it sits below zero j+1 (escaped above).
        const long long m = std::llround(alpha_asymptotic(h.rho) / kPi);
        const long long upper = m >= j + 1 ? j + 1 : j;
        AnomalousEvent ev;
        ev.crossing_rho = h.rho;
        ev.lower_zero_index = upper - 1;
        ev.upper_zero_index = upper;
        ev.jump_sign_at_upper = arg_jump_at_zero(upper);
        out.push_back(ev);
    }
    return out;
}

std::vector<LocusSample> locus_samples(double rho_lo, double rho_hi,
                                       std::size_t count) {
    if (count < 2) throw std::invalid_argument("locus_samples: count < 2");
    if (!(rho_lo <= rho_hi))
        throw std::invalid_argument("locus_samples: empty interval");
    std::vector<LocusSample> out;
    out.reserve(count);
    const double step = (rho_hi - rho_lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        const CriticalPoint p = critical_point(rho_lo + step * static_cast<double>(i));
        out.push_back({p.rho, p.zeta_re, p.zeta_im, p.v});
    }
    return out;
}

}  // namespace critline
