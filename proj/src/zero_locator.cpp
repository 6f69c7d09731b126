#include "critline/zero_locator.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "critline/logzeta.hpp"
#include "critline/special.hpp"
#include "critline/zeta.hpp"

namespace critline {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogPi = 1.1447298858494001741;  // log(pi)

// Mean zero gap 2*pi/log(rho/2*pi) (clamped below the first zero).
double local_gap(double rho) {
    return 2.0 * kPi / std::log(std::max(rho, 20.0) / (2.0 * kPi));
}

double refine_sign_change(double lo, double hi, double flo) {
    for (int i = 0; i < 24; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = rotated_real(mid);
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    // Secant polish from the narrowed bracket.
    double x0 = lo, x1 = hi;
    double f0 = rotated_real(x0), f1 = rotated_real(x1);
    for (int i = 0; i < 5 && f1 != f0; ++i) {
        const double x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if (!(x2 > lo - 1.0 && x2 < hi + 1.0)) break;
        x0 = x1; f0 = f1;
        x1 = x2; f1 = rotated_real(x2);
        if (std::fabs(x1 - x0) < 1e-12) break;
    }
    return x1;
}

struct ScanState {
    std::mutex mutex;
    std::vector<double> zeros;  // zeros[i] is the ordinate of zero i+1
    double edge = 0.0;
    double z_edge = 0.0;
};

ScanState& scan_state() {
    static ScanState s;
    return s;
}

// Record a zero and sanity-check its position against the bound-point
// envelope; a drifted index (e.g. a silently skipped close pair) would
// leave the envelope within a couple of steps.
void push_zero(ScanState& s, double root) {
    const long long k = static_cast<long long>(s.zeros.size()) + 1;
    const double slack = 0.5 * local_gap(root);
    if (root < bound_point(k - 1) - slack || root > bound_point(k) + slack)
        throw std::runtime_error(
            "zero scan lost index alignment near rho = " + std::to_string(root));
    s.zeros.push_back(root);
}

void extend_scan(ScanState& s, long long want) {
    if (s.zeros.empty() && s.edge == 0.0) {
        s.edge = 5.0;  // below the first zero; Z has no roots in (0, 14.1)
        s.z_edge = rotated_real(s.edge);
    }
    while (static_cast<long long>(s.zeros.size()) < want) {
        const double step = local_gap(s.edge) / 16.0;
        const double next = s.edge + step;
        const double z_next = rotated_real(next);
        if ((z_next > 0.0) != (s.z_edge > 0.0)) {
            push_zero(s, refine_sign_change(s.edge, next, s.z_edge));
        } else if (std::min(std::fabs(s.z_edge), std::fabs(z_next)) < 0.08) {
            // Possible tangent-like pair inside the step: probe interior
            // points to catch a double sign change.
            double x0 = s.edge, f0 = s.z_edge;
            for (int j = 1; j <= 8; ++j) {
                const double x1 = s.edge + step * j / 8.0;
                const double f1 = j == 8 ? z_next : rotated_real(x1);
                if ((f1 > 0.0) != (f0 > 0.0))
                    push_zero(s, refine_sign_change(x0, x1, f0));
                x0 = x1;
                f0 = f1;
            }
        }
        s.edge = next;
        s.z_edge = z_next;
    }
}

bool contained(const ScanState& s, long long k) {
    const double rho = s.zeros[k - 1];
    return bound_point(k - 1) < rho && rho < bound_point(k);
}

}  // namespace

double bound_point(long long k) {
    if (k < 0) throw std::domain_error("bound_point requires k >= 0");
    const double x = (8.0 * static_cast<double>(k) - 7.0) / (8.0 * std::numbers::e);
    return 2.0 * kPi * std::exp(lambert_w0(x) + 1.0);
}

double franca_leclair_estimate(long long k) {
    if (k < 1) throw std::domain_error("franca_leclair_estimate requires k >= 1");
    const double c = static_cast<double>(k) - 11.0 / 8.0;
    return 2.0 * kPi * c / lambert_w0(c / std::numbers::e);
}

double rotation_angle(double rho) {
    return log_gamma_im_continuous(0.5 * rho, 0.25).value - 0.5 * rho * kLogPi;
}

double rotated_real(double rho) {
    const std::complex<double> z = zeta_critical(rho);
    const double th = rotation_angle(rho);
    return std::cos(th) * z.real() - std::sin(th) * z.imag();
}

ZeroRecord locate_zero(long long k) {
    if (k < 1) throw std::domain_error("locate_zero requires k >= 1");
    ScanState& s = scan_state();
    std::scoped_lock lock(s.mutex);
    extend_scan(s, k + 1);  // neighbor needed for the anomaly flag
    ZeroRecord rec;
    rec.index = k;
    rec.rho = s.zeros[k - 1];
    rec.source = ZeroSource::computed;
    rec.refined_to = 1e-10;
    rec.anomaly_flag = (contained(s, k) && contained(s, k + 1))
                           ? AnomalyFlag::normal
                           : AnomalyFlag::anomalous_pair_member;
    return rec;
}

ImplicitResiduals implicit_residuals(double rho) {
    const CriticalPoint p = critical_point(rho);
    const GammaAux g = gamma_aux(rho);
    // On top of a zero the arg of zeta is undefined; the alpha-dependent
    // residuals are mod-pi invariant, so measure the one-sided limit a
    // conditioned step away (the locus leaves the origin on a straight
    // line, making the bias O(step)).
    const double alpha =
        p.arg_reliable ? p.alpha : critical_point(rho + 1e-7).alpha;
    ImplicitResiduals r;
    r.rho = rho;
    const double x = kPi * rho;
    const double sech = x > 709.0 ? 0.0 : 1.0 / std::cosh(x);
    const double u_plus = std::sqrt(0.5 * (1.0 + sech));
    const double u_minus = std::sqrt(0.5 * (1.0 - sech));
    const double w = 2.0 * p.beta + g.rho_theta;
    r.r_fe = u_minus * std::sin(w) + u_plus * std::cos(w) + 1.0;
    r.r_tanh = std::tanh(0.5 * kPi * rho) - std::tan(w);
    const double h = (p.beta - alpha) / kPi - 0.5;
    r.r_halfturn = std::fabs(h - std::round(h));
    r.r_orthogonal = 1.0 + std::tan(alpha) * std::tan(p.beta);
    return r;
}

TransformCoefficients singular_transform(double rho) {
    // The printed coefficients are ratios in Gamma(1/4 + i rho/2) that are
    // invariant under rescaling, so the unit-modulus phase components are
    // used (the raw Gamma value underflows past rho ~ 2800).
    const double phi = log_gamma_im_continuous(0.5 * rho, 0.25).value;
    const double fr = std::cos(phi), fi = std::sin(phi);
    const double ax = rho * kLogPi;
    const double ca = std::cos(ax), sa = std::sin(ax);
    TransformCoefficients t;
    t.rho = rho;
    t.a = -0.5 * ca + 0.5 + (fi * fr * sa + fr * fr * ca);
    t.b = -0.5 * sa + (-fi * fr * ca + fr * fr * sa);
    t.c = 1.0 - t.a;
    t.f = f_of_rho(rho);
    return t;
}

double beta_at_zero(long long k) {
    const double rho = locate_zero(k).rho;
    const double phi = log_gamma_im_continuous(0.5 * rho, 0.25).value;
    const double num = std::cos(rho * kLogPi) + std::cos(2.0 * phi);
    const double den = -std::sin(rho * kLogPi) + std::sin(2.0 * phi);
    return std::atan2(num, den);
}

}  // namespace critline
