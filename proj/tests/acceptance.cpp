// Acceptance gate: twelve numbered end-to-end criteria, each timed and
// reported on its own [PASS]/[FAIL] line.  Checks never abort the run;
// failures print a [FAIL] file:line detail and the binary exits nonzero
// after every criterion has reported.  All tolerances are pinned here.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "critline/anomaly.hpp"
#include "critline/counting.hpp"
#include "critline/data_io.hpp"
#include "critline/logzeta.hpp"
#include "critline/special.hpp"
#include "critline/volchkov.hpp"
#include "critline/zero_locator.hpp"
#include "critline/zeta.hpp"

using namespace critline;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kGamma = 0.57721566490153286061;

int g_checks_failed = 0;

void fail_check(const char* file, int line, const std::string& msg) {
    ++g_checks_failed;
    std::cout << "[FAIL] " << file << ":" << line << " " << msg << "\n";
}

// Always-on requirement: records the failure and keeps going.
#define REQUIRE(cond, msg)                                    \
    do {                                                      \
        if (!(cond)) {                                        \
            std::ostringstream os_;                           \
            os_ << msg;                                       \
            fail_check(__FILE__, __LINE__, os_.str());        \
        }                                                     \
    } while (0)

int g_criteria_failed = 0;
std::string g_note;  // per-criterion diagnostic, printed under the status

void note(const std::string& text) { g_note = text; }

void run_criterion(int number, const char* title,
                   const std::function<void()>& body) {
    const int before = g_checks_failed;
    g_note.clear();
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const std::exception& e) {
        fail_check("(unhandled)", 0, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    const bool ok = g_checks_failed == before;
    if (!ok) ++g_criteria_failed;
    std::printf("[%s] %2d %s (%.1fs)\n", ok ? "PASS" : "FAIL", number, title,
                secs);
    if (!g_note.empty()) std::printf("        %s\n", g_note.c_str());
    std::fflush(stdout);
}

// Shared fixtures: the reference table is loaded once; located zeros are
// cached inside the locator, so repeated locate_zero calls are cheap.
const ZeroTable& table() {
    static const ZeroTable t =
        ingest_zero_table(CRITLINE_DATA_DIR "/zeta_zeros_100k.txt");
    return t;
}

double table_rho(long long k) {
    return table().records[static_cast<std::size_t>(k - 1)].rho;
}

// Distance from rho to the nearest tabulated zero ordinate.
double nearest_zero_distance(double rho) {
    const auto& rec = table().records;
    auto it = std::lower_bound(
        rec.begin(), rec.end(), rho,
        [](const ZeroRecord& r, double x) { return r.rho < x; });
    double d = 1e300;
    if (it != rec.end()) d = std::min(d, std::fabs(it->rho - rho));
    if (it != rec.begin()) d = std::min(d, std::fabs(std::prev(it)->rho - rho));
    return d;
}

void criterion_1_pole_location() {
    const auto t0 = std::chrono::steady_clock::now();
    const double rho_s = find_rho_s();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    REQUIRE(std::fabs(rho_s - 6.2898) < 5e-5,
            "pole root " << rho_s << " not within 5e-5 of 6.2898");
    REQUIRE(secs < 1.0, "pole search took " << secs << " s (cap 1 s)");
}

void criterion_2_identity_suite() {
    const auto t0 = std::chrono::steady_clock::now();
    const double rho_s = find_rho_s();
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> dist(0.0, 500.0);
    double worst_m = 0.0, worst_core = 0.0, worst_b = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double rho = dist(rng);
        if (std::fabs(rho - rho_s) < 1e-9) continue;  // f undefined there
        const IdentityResiduals ir = identity_residuals(rho);
        const CriticalPoint p = critical_point(rho);
        worst_m = std::max(worst_m, std::fabs(ir.r_m));
        REQUIRE(std::fabs(ir.r_m) < 1e-10,
                "modulus law residual " << ir.r_m << " at rho=" << rho);
        // Core coupling residual, relative to |zeta|^2, away from zeros of
        // zeta and from the pole of f.
        if (nearest_zero_distance(rho) > 1e-3 &&
            std::fabs(rho - rho_s) > 1e-3) {
            const double rel =
                std::fabs(ir.r_core) / std::max(p.mod_zeta * p.mod_zeta, 1e-12);
            worst_core = std::max(worst_core, rel);
            REQUIRE(rel < 1e-6,
                    "coupling residual " << rel << " at rho=" << rho);
        }
        // Tangent identity, away from tangent poles.
        if (std::fabs(std::cos(p.alpha)) > 0.1) {
            worst_b = std::max(worst_b, std::fabs(ir.r_b));
            REQUIRE(std::fabs(ir.r_b) < 1e-6,
                    "tangent-ratio residual " << ir.r_b << " at rho=" << rho);
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    REQUIRE(secs < 60.0, "identity suite took " << secs << " s (cap 60 s)");
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "worst: modulus %.2e, coupling %.2e, tangent %.2e", worst_m,
                  worst_core, worst_b);
    note(buf);
}

void criterion_3_argument_derivative() {
    // Central difference of the continuous argument against 1/f.
    const double h = 1e-4;
    for (int i = 0; i < 1000; ++i) {
        const double rho = 7.0 + 493.0 * i / 999.0;
        const double fd =
            (alpha_continuous(rho + h).value - alpha_continuous(rho - h).value) /
            (2.0 * h);
        const double diff = std::fabs(fd - alpha_prime(rho));
        REQUIRE(diff < 1e-6, "d(alpha)/d(rho) mismatch " << diff << " at rho="
                                                        << rho);
    }
}

void criterion_4_zero_location() {
    const auto t0 = std::chrono::steady_clock::now();
    // Spot ordinates at scanner-critical indices, to the printed precision.
    const struct { long long k; double rho; double tol; } pins[] = {
        {6, 37.586, 5e-4},    {126, 279.229, 5e-4}, {127, 282.465, 5e-4},
        {212, 415.01881, 5e-6}, {213, 415.45521, 5e-6},
    };
    for (const auto& pin : pins) {
        const double got = locate_zero(pin.k).rho;
        REQUIRE(std::fabs(got - pin.rho) <= pin.tol,
                "zero " << pin.k << " located at " << got << ", expected "
                        << pin.rho << " +- " << pin.tol);
    }
    double worst = 0.0;
    for (long long k = 1; k <= 1000; ++k) {
        const double diff = std::fabs(locate_zero(k).rho - table_rho(k));
        worst = std::max(worst, diff);
        REQUIRE(diff <= 1e-6, "zero " << k << " deviates from the reference "
                                      << "table by " << diff);
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    REQUIRE(secs < 120.0, "locating 1000 zeros took " << secs
                                                      << " s (cap 120 s)");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "worst deviation over k<=1000: %.2e",
                  worst);
    note(buf);
}

void criterion_5_implicit_conditions() {
    // The four zero conditions agree at every one of the first 100 zeros:
    // the reflection form, its tanh/tan form, the half-turn phase lock,
    // and the closed Gamma-phase beta against atan2 of the derivative.
    for (long long k = 1; k <= 100; ++k) {
        const double rho = locate_zero(k).rho;
        const ImplicitResiduals ir = implicit_residuals(rho);
        REQUIRE(std::fabs(ir.r_fe) < 1e-5,
                "reflection residual " << ir.r_fe << " at zero " << k);
        REQUIRE(std::fabs(ir.r_tanh) < 1e-5,
                "tanh-form residual " << ir.r_tanh << " at zero " << k);
        REQUIRE(std::fabs(ir.r_halfturn) < 1e-5,
                "half-turn residual " << ir.r_halfturn << " at zero " << k);
        const CriticalPoint p = critical_point(rho);
        const double beta_direct = std::atan2(p.dzeta_im, p.dzeta_re);
        const double diff =
            std::fabs(std::remainder(beta_at_zero(k) - beta_direct, kPi));
        REQUIRE(diff < 1e-5, "beta disagreement " << diff << " at zero " << k);
    }
}

void criterion_6_singular_transform() {
    // Grid chosen to step over the pole of f (no point closer than 4e-2).
    for (int i = 0; i < 1000; ++i) {
        const double rho = 0.25 + 0.49975 * i;
        const TransformCoefficients tc = singular_transform(rho);
        REQUIRE(std::fabs(tc.a * tc.c - tc.b * tc.b) < 1e-10,
                "determinant " << tc.a * tc.c - tc.b * tc.b << " at rho="
                               << rho);
        const CriticalPoint p = critical_point(rho);
        const double lr = tc.a * p.dzeta_re + tc.b * p.dzeta_im;
        const double li = tc.b * p.dzeta_re + tc.c * p.dzeta_im;
        const double scale =
            p.mod_dzeta + p.mod_zeta / std::fabs(tc.f) + 1e-12;
        REQUIRE(std::fabs(lr - p.zeta_re / tc.f) < 1e-6 * scale,
                "forward map (real) residual at rho=" << rho);
        REQUIRE(std::fabs(li - p.zeta_im / tc.f) < 1e-6 * scale,
                "forward map (imag) residual at rho=" << rho);
    }
}

void criterion_7_anomaly_detection() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<AnomalousEvent> events = scan_anomalies(1, 300);
    bool found_212 = false;
    for (const AnomalousEvent& ev : events) {
        if (ev.lower_zero_index == 212 && ev.upper_zero_index == 213) {
            found_212 = true;
            REQUIRE(std::fabs(ev.crossing_rho - 415.601) <= 1e-2,
                    "crossing for pair (212,213) at " << ev.crossing_rho);
        }
    }
    REQUIRE(found_212, "pair (212,213) not flagged in k<=300");
    const struct { long long lo, hi; } candidates[] = {
        {126, 127}, {232, 234}, {254, 256}, {288, 290}};
    for (const auto& c : candidates) {
        const bool hit =
            std::any_of(events.begin(), events.end(),
                        [&c](const AnomalousEvent& ev) {
                            return ev.lower_zero_index >= c.lo &&
                                   ev.upper_zero_index <= c.hi;
                        });
        REQUIRE(hit, "no event inside candidate range " << c.lo << ".."
                                                        << c.hi);
    }
    REQUIRE(scan_anomalies(1, 100).empty(),
            "events reported below the first anomalous index");
    // The smooth count dips by one unit across the crossing at 415.6.
    const long long n_before = std::llround(count_report(415.3).n_fl);
    const long long n_after = std::llround(count_report(415.5).n_fl);
    REQUIRE(n_after == n_before - 1, "count dip missing: N(415.5)="
                                         << n_after << ", N(415.3)="
                                         << n_before);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    REQUIRE(secs < 180.0, "anomaly scan took " << secs << " s (cap 180 s)");
}

void criterion_8_derivative_separation() {
    // Dense scan: nowhere does the derivative vanish away from a zero.
    for (int i = 0; i <= 50000; ++i) {
        const double rho = 0.01 * i;
        const CriticalPoint p = critical_point(rho);
        REQUIRE(!(p.mod_zeta > 1e-6 && p.mod_dzeta < 1e-6),
                "derivative vanishes off a zero at rho=" << rho);
    }
    for (long long k = 1; k <= 1000; ++k) {
        const CriticalPoint p = critical_point(locate_zero(k).rho);
        REQUIRE(p.mod_dzeta > 1e-3,
                "derivative only " << p.mod_dzeta << " at zero " << k);
    }
}

void criterion_9_kernel_integral() {
    const auto t0 = std::chrono::steady_clock::now();
    const VolchkovReport r = volchkov_integral(table().records, 100.0);
    REQUIRE(std::fabs(r.j1 - (kPi / 2.0) * (1.0 + std::log(2.0))) <= 1e-8,
            "first piece " << r.j1);
    REQUIRE(std::fabs(r.j2 - (-kGamma * kPi / 2.0)) <= 1e-6,
            "second piece " << r.j2);
    for (int n = 1; n <= 3; ++n) {
        const double expect = -kPi / (2.0 * n * (n + 1));
        REQUIRE(std::fabs(grouped_term_integral(n) - expect) <= 1e-9,
                "grouped term n=" << n);
    }
    REQUIRE(std::fabs(r.target - kPi * (kGamma - 3.0)) < 1e-15,
            "target constant " << r.target);
    REQUIRE(std::fabs(r.assembly_closed_form - r.target) <= 1e-14,
            "closed-form assembly off by "
                << r.assembly_closed_form - r.target);
    // Zero-ordinate sum plus its density tail, in single-sum units.
    const double sum_limit = (2.0 + kGamma - std::log(4.0 * kPi)) / 2.0;
    const double sum_got = (r.zero_sum_partial + r.zero_sum_tail) / 2.0;
    REQUIRE(std::fabs(sum_got - sum_limit) <= 1e-4,
            "zero sum with tail " << sum_got << " vs " << sum_limit);
    // Direct truncated quadrature agrees with the analytic value once the
    // discarded tail is accounted for.
    REQUIRE(std::fabs(r.t0_residual) <= 1e-3,
            "integral residual " << r.t0_residual);
    REQUIRE(std::fabs(r.t0_residual) <= r.integral_tail_bound,
            "residual " << r.t0_residual << " exceeds the tail bound "
                        << r.integral_tail_bound);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    REQUIRE(secs < 600.0, "kernel integral took " << secs << " s (cap 600 s)");
    char buf[96];
    std::snprintf(buf, sizeof(buf),
                  "truncated-integral residual: %.3e (tail bound %.3e)",
                  r.t0_residual, r.integral_tail_bound);
    note(buf);
}

void criterion_10_containment_and_density() {
    // Containment violators must be exactly the scanner's flagged upper
    // members, and containment must hold for everything else.
    std::vector<long long> violators;
    for (long long k = 1; k <= 1000; ++k) {
        const double rho = locate_zero(k).rho;
        if (!(bound_point(k - 1) < rho && rho < bound_point(k)))
            violators.push_back(k);
    }
    std::vector<long long> flagged;
    for (const AnomalousEvent& ev : scan_anomalies(1, 1000))
        flagged.push_back(ev.upper_zero_index);
    std::sort(flagged.begin(), flagged.end());
    REQUIRE(violators == flagged,
            "containment violators (" << violators.size()
                                      << ") != flagged uppers ("
                                      << flagged.size() << ")");
    // Density bundle at an astronomically large height.
    const DensityEstimate d = density_estimate(1.370919909931995308226e21);
    REQUIRE(std::fabs(d.delta - 0.13416) <= 5e-6, "mean gap " << d.delta);
    REQUIRE(std::fabs(d.n_g - 7.45) <= 5e-3, "density " << d.n_g);
    // The phase jump over one mean gap stays within 5% of a half turn.
    for (int i = 0; i <= 12; ++i) {
        const double rho = std::pow(10.0, 3.0 + 0.25 * i);
        const double ratio = density_estimate(rho).max_jump / kPi;
        REQUIRE(ratio > 0.95 && ratio < 1.05,
                "jump/half-turn " << ratio << " at rho=" << rho);
    }
}

void criterion_11_gap_statistics() {
    const auto t0 = std::chrono::steady_clock::now();
    const BoundStats b = bound_stats(10000, 15000, table().records);
    REQUIRE(std::fabs(b.mean_d1 - 0.000076) <= 0.002, "mean d1 " << b.mean_d1);
    REQUIRE(std::fabs(b.std_d1 - 0.2514) <= 0.001, "std d1 " << b.std_d1);
    REQUIRE(std::fabs(b.mean_d2 - 0.4163) <= 0.002, "mean d2 " << b.mean_d2);
    // d3's mean is pinned at its recomputed value.  By construction d2 and
    // d3 split the same bracketing interval, so their means must nearly
    // coincide; that symmetry rules out sign-flipped or rescaled variants
    // of this entry sometimes quoted for it.
    REQUIRE(std::fabs(b.mean_d3 - 0.416235114) <= 1e-6,
            "mean d3 " << b.mean_d3);
    const double stds[4] = {b.std_d1, b.std_d2, b.std_d3, b.std_d4};
    const double spread = *std::max_element(stds, stds + 4) -
                          *std::min_element(stds, stds + 4);
    REQUIRE(spread <= 1e-6,
            "stds differ by " << spread
                              << "; the four deviations agree only to ~7e-5 "
                                 "(d2/d3 genuinely differ from d1/d4 at that "
                                 "scale), so equality at 1e-6 is not "
                                 "attainable from the data");
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    REQUIRE(secs < 120.0, "gap statistics took " << secs << " s (cap 120 s)");
    char buf[128];
    std::snprintf(buf, sizeof(buf), "stds: %.10f %.10f %.10f %.10f (spread %.3e)",
                  b.std_d1, b.std_d2, b.std_d3, b.std_d4, spread);
    note(buf);
}

void criterion_12_correction_magnitude() {
    // Kernel-weight correction carried by the (212,213) crossing: the
    // principal arg loses a full turn between the upper zero and the
    // crossing, weighting the integral by 2*pi*|1/u| differences with
    // u(t) = 1/4 + t^2.
    const std::vector<AnomalousEvent> events = scan_anomalies(211, 214);
    REQUIRE(events.size() == 1, "expected exactly one event near 212/213");
    if (events.size() != 1) return;
    const AnomalousEvent& ev = events.front();
    REQUIRE(ev.upper_zero_index == 213, "event pairs " << ev.lower_zero_index
                                                       << "/"
                                                       << ev.upper_zero_index);
    const double rho_up = locate_zero(213).rho;
    const double c = ev.crossing_rho;
    const double corr = 2.0 * kPi * std::fabs(1.0 / (0.25 + rho_up * rho_up) -
                                              1.0 / (0.25 + c * c));
    REQUIRE(corr >= 1.25e-8 && corr <= 5.0e-8,
            "correction " << corr << " outside [1.25e-8, 5e-8]");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "correction magnitude: %.6e", corr);
    note(buf);
}

}  // namespace

int main() {
    std::cout.precision(12);
    run_criterion(1, "coupling-factor pole located", criterion_1_pole_location);
    run_criterion(2, "identity suite on random heights",
                  criterion_2_identity_suite);
    run_criterion(3, "argument derivative matches 1/f",
                  criterion_3_argument_derivative);
    run_criterion(4, "zeros located against the reference table",
                  criterion_4_zero_location);
    run_criterion(5, "implicit zero conditions agree at zeros",
                  criterion_5_implicit_conditions);
    run_criterion(6, "singular transform rank and forward map",
                  criterion_6_singular_transform);
    run_criterion(7, "anomalous pair detection and count dip",
                  criterion_7_anomaly_detection);
    run_criterion(8, "derivative separated from zero off zeros",
                  criterion_8_derivative_separation);
    run_criterion(9, "kernel integral decomposition and zero sum",
                  criterion_9_kernel_integral);
    run_criterion(10, "bound containment and density estimates",
                  criterion_10_containment_and_density);
    run_criterion(11, "gap statistics over k in [10000,15000]",
                  criterion_11_gap_statistics);
    run_criterion(12, "crossing correction magnitude",
                  criterion_12_correction_magnitude);
    std::printf("acceptance: %d of 12 criteria passed\n",
                12 - g_criteria_failed);
    return g_criteria_failed == 0 ? 0 : 1;
}
