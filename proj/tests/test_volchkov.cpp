// Integral decomposition pieces against their closed forms, the
// zero-ordinate sum against its limit, and the direct kernel quadrature
// against an independent 30-digit evaluation.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "critline/anomaly.hpp"
#include "critline/data_io.hpp"
#include "critline/volchkov.hpp"

using namespace critline;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kGamma = 0.57721566490153286061;

const ZeroTable& table() {
    static const ZeroTable t =
        ingest_zero_table(CRITLINE_DATA_DIR "/zeta_zeros_100k.txt");
    return t;
}
}  // namespace

TEST_CASE("decomposition pieces match their closed forms") {
    const auto j = j_integrals(table().records);
    // Pinned closed forms.
    CHECK(std::fabs(j[0].analytic - 2.6595893719466976845) < 1e-15);
    CHECK(std::fabs(j[1].analytic - (-0.90668824619580174981)) < 1e-15);
    CHECK(std::fabs(j[2].analytic - 0.072557309617413758726) < 1e-15);
    CHECK(std::fabs(j[3].analytic - 2.8869305450163801643) < 1e-15);
    CHECK(std::fabs(j[4].analytic - (-14.137166941154069573)) < 1e-14);
    // Numeric sides.  The first two carry quadrature + grouped-series
    // error; the third is limited by the table tail estimate.
    CHECK(std::fabs(j[0].numeric - j[0].analytic) < 1e-10);
    CHECK(std::fabs(j[1].numeric - j[1].analytic) < 1e-9);
    CHECK(std::fabs(j[2].numeric - j[2].analytic) < 1e-8);
    CHECK(std::fabs(j[3].numeric - j[3].analytic) < 1e-10);
    CHECK(std::fabs(j[4].numeric - j[4].analytic) < 1e-10);
}

TEST_CASE("grouped-series terms telescope to -pi/(2 n (n+1))") {
    for (int n = 1; n <= 3; ++n) {
        const double want = -kPi / (2.0 * n * (n + 1));
        CAPTURE(n);
        CHECK(std::fabs(grouped_term_integral(n) - want) < 1e-10);
    }
    CHECK(std::fabs(grouped_term_integral(40) -
                    (-kPi / (2.0 * 40 * 41))) < 1e-10);
}

TEST_CASE("zero-ordinate sum: partial, tail, and limit") {
    const double s_pi = zero_sum_partial_pi(table().records, 100000);
    CHECK(std::fabs(s_pi - 0.0724879947114739) < 1e-12);
    CHECK(std::fabs(s_pi / kPi - 0.0230736453463005) < 1e-12);
    const double s1000 = zero_sum_partial_pi(table().records, 1000);
    CHECK(std::fabs(s1000 / kPi - 0.0223761308537826) < 1e-12);
    const double tail = zero_sum_tail_estimate(100000);
    CHECK(std::fabs(tail - 2.20635307908011e-05) < 1e-12);
    const double limit = (2.0 + kGamma - std::log(4.0 * kPi)) / 2.0;
    CHECK(std::fabs(s_pi / kPi + tail - limit) < 1e-8);
    // Partial sums increase toward the limit from below.
    CHECK(s_pi / kPi < limit);
    CHECK(s1000 < s_pi);
    CHECK_THROWS_AS((void)zero_sum_partial_pi(table().records, 100001),
                    std::out_of_range);
}

TEST_CASE("full report at t_max = 100") {
    const VolchkovReport r = volchkov_integral(table().records, 100.0);
    CHECK(r.t_max == 100.0);
    CHECK(r.zeros_used == 29);
    CHECK(std::fabs(r.target - (-7.6114014683777762158)) < 1e-15);
    CHECK(std::fabs(r.assembly_closed_form - r.target) < 1e-14);
    // Direct quadrature against the independent 30-digit evaluation of
    // the truncated integral: residual 1.8549e-6, explained by the tail.
    CHECK(std::fabs(r.t0_residual - 1.8549e-6) < 5e-10);
    CHECK(std::fabs(r.integral_value - (r.target + r.t0_residual)) < 1e-15);
    CHECK(std::fabs(r.t0_residual) < r.integral_tail_bound);
    CHECK(std::fabs(r.integral_tail_bound - kPi / (0.25 + 100.0 * 100.0)) <
          1e-15);
    // No locus crossings below 100.
    CHECK(r.anomaly_correction_total == 0.0);
    // Zero-sum fields are in doubled units (limit 2 + gamma - log 4 pi).
    CHECK(std::fabs(r.zero_sum_target - 0.046191417932242068) < 1e-15);
    CHECK(r.zero_sum_partial < r.zero_sum_target);
    CHECK(r.zero_sum_partial + r.zero_sum_tail ==
          doctest::Approx(r.zero_sum_target).epsilon(1e-6));
}

TEST_CASE("anomaly corrections accumulate the per-crossing kernel weights") {
    const VolchkovReport r = volchkov_integral(table().records, 416.0);
    // Four crossings lie below 416 (the last at 415.6015); the total is
    // the sum of 2*pi*|1/(1/4+rho_up^2) - 1/(1/4+c^2)| over them.
    double expected = 0.0;
    double last = 0.0;
    for (const AnomalousEvent& ev : scan_anomalies(1, 213)) {
        REQUIRE(ev.crossing_rho < 416.0);
        const double rho_up =
            table().records[static_cast<std::size_t>(ev.upper_zero_index - 1)].rho;
        last = 2.0 * kPi * std::fabs(1.0 / (0.25 + rho_up * rho_up) -
                                     1.0 / (0.25 + ev.crossing_rho * ev.crossing_rho));
        expected += last;
    }
    CHECK(std::fabs(r.anomaly_correction_total - expected) < 1e-18);
    // The final event is the (212, 213) pair; its contribution alone.
    CHECK(std::fabs(last - 2.56146044547e-8) < 1e-13);
    CHECK(r.anomaly_correction_total > last);  // earlier crossings add in
}

TEST_CASE("table must cover the integration range") {
    std::vector<ZeroRecord> truncated(table().records.begin(),
                                      table().records.begin() + 10);
    CHECK_THROWS_AS((void)volchkov_integral(truncated, 100.0),
                    std::invalid_argument);
}
