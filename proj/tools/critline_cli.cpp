// critline: batch analyses of zeta critical-line structure.
//
// Subcommands: eval, zeros, identities, anomalies, count, volchkov, locus,
// ingest.  Each writes one report via the data_io layer (CSV or JSON, to
// stdout or --out) and prints a one-line summary to stderr.  Exit status:
// 0 success, 1 when a checked residual exceeds its tolerance, 2 on usage
// or input errors.
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "critline/anomaly.hpp"
#include "critline/counting.hpp"
#include "critline/data_io.hpp"
#include "critline/logzeta.hpp"
#include "critline/volchkov.hpp"
#include "critline/zero_locator.hpp"
#include "critline/zeta.hpp"

namespace {

using namespace critline;

struct KRange {
    long long lo = 0, hi = 0;
};

KRange parse_k_range(const std::string& text) {
    const auto parse_ll = [&text](std::string_view tok) {
        long long v = 0;
        const char* end = tok.data() + tok.size();
        const auto res = std::from_chars(tok.data(), end, v);
        if (res.ec != std::errc() || res.ptr != end)
            throw std::runtime_error("--k expects K or LO..HI, got '" + text +
                                     "'");
        return v;
    };
    KRange r;
    const auto pos = text.find("..");
    if (pos == std::string::npos) {
        r.lo = r.hi = parse_ll(text);
    } else {
        r.lo = parse_ll(std::string_view(text).substr(0, pos));
        r.hi = parse_ll(std::string_view(text).substr(pos + 2));
    }
    if (r.lo < 1 || r.hi < r.lo)
        throw std::runtime_error("--k range must satisfy 1 <= LO <= HI");
    return r;
}

// Deterministic parallel map: worker threads pull indices, results land in
// their slots, so output order never depends on --jobs.
void parallel_for(std::size_t n, int jobs,
                  const std::function<void(std::size_t)>& body) {
    if (jobs <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int count = std::min<int>(jobs, static_cast<int>(n));
    pool.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

template <class Report>
void emit(const std::string& out_path, const Report& payload,
          ReportFormat fmt) {
    if (out_path == "-") {
        export_report(std::cout, payload, fmt);
    } else {
        export_report_file(out_path, payload, fmt);
    }
}

struct CommonOpts {
    std::string out = "-";
    ReportFormat format = ReportFormat::csv;
    int jobs = 1;
    std::string table;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_table) {
    cmd->add_option("--out", o.out, "Output path, or - for stdout")
        ->envname("CRITLINE_OUT");
    cmd->add_option("--format", o.format, "Report format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, ReportFormat>{{"csv", ReportFormat::csv},
                                                {"json", ReportFormat::json}}))
        ->envname("CRITLINE_FORMAT");
    cmd->add_option("--jobs", o.jobs, "Worker threads for grid evaluation")
        ->check(CLI::PositiveNumber)
        ->envname("CRITLINE_JOBS");
    if (with_table)
        cmd->add_option("--table", o.table, "Zero-ordinate table file")
            ->envname("CRITLINE_TABLE");
}

int run(int argc, char** argv) {
    CLI::App app{"Critical-line zeta machinery: evaluation, zero location, "
                 "identity checks, anomaly scanning, counting, and the "
                 "arg-kernel integral decomposition"};
    app.require_subcommand(1);

    // --- eval ---------------------------------------------------------
    auto* eval_cmd = app.add_subcommand(
        "eval", "Evaluate zeta, its derivative, and derived quantities");
    CommonOpts eval_o;
    double eval_rho = std::nan("");
    double eval_lo = 0.0, eval_hi = 50.0;
    std::size_t eval_n = 101;
    add_common(eval_cmd, eval_o, false);
    eval_cmd->add_option("--rho", eval_rho, "Single evaluation height");
    eval_cmd->add_option("--rho-min", eval_lo, "Grid start");
    eval_cmd->add_option("--rho-max", eval_hi, "Grid end");
    eval_cmd->add_option("--samples", eval_n, "Grid size")
        ->check(CLI::PositiveNumber);

    // --- zeros --------------------------------------------------------
    auto* zeros_cmd =
        app.add_subcommand("zeros", "Locate zeros by index (1-based)");
    CommonOpts zeros_o;
    std::string zeros_range;
    add_common(zeros_cmd, zeros_o, false);
    zeros_cmd->add_option("--k", zeros_range, "Index or LO..HI range")
        ->required();

    // --- identities ----------------------------------------------------
    auto* ident_cmd = app.add_subcommand(
        "identities", "Scan the coupling-identity residuals over a grid");
    CommonOpts ident_o;
    double ident_lo = 0.0, ident_hi = 500.0, ident_tol = 1e-6;
    std::size_t ident_n = 1000;
    add_common(ident_cmd, ident_o, false);
    ident_cmd->add_option("--rho-min", ident_lo, "Grid start");
    ident_cmd->add_option("--rho-max", ident_hi, "Grid end");
    ident_cmd->add_option("--samples", ident_n, "Grid size")
        ->check(CLI::PositiveNumber);
    ident_cmd
        ->add_option("--tol-identity", ident_tol,
                     "Residual tolerance driving the exit status")
        ->envname("CRITLINE_TOL_IDENTITY");

    // --- anomalies ------------------------------------------------------
    auto* anom_cmd = app.add_subcommand(
        "anomalies", "Scan a zero-index range for anomalous pairs");
    CommonOpts anom_o;
    std::string anom_range;
    add_common(anom_cmd, anom_o, false);
    anom_cmd->add_option("--k", anom_range, "Index or LO..HI range")
        ->required();

    // --- count ----------------------------------------------------------
    auto* count_cmd = app.add_subcommand(
        "count", "Zero counts below a height, or gap statistics over a range");
    CommonOpts count_o;
    double count_rho = std::nan("");
    std::string count_range;
    add_common(count_cmd, count_o, true);
    count_cmd->add_option("--rho", count_rho, "Height for the count report");
    count_cmd->add_option("--k", count_range,
                          "Index range for bound statistics (needs --table)");

    // --- volchkov --------------------------------------------------------
    auto* vol_cmd = app.add_subcommand(
        "volchkov", "Arg-kernel integral decomposition report");
    CommonOpts vol_o;
    double vol_tmax = 500.0, vol_tol = 1e-3;
    add_common(vol_cmd, vol_o, true);
    vol_cmd->add_option("--t-max", vol_tmax, "Upper integration limit");
    vol_cmd
        ->add_option("--tol-volchkov", vol_tol,
                     "Bound on |integral - target| driving the exit status")
        ->envname("CRITLINE_TOL_VOLCHKOV");

    // --- locus -----------------------------------------------------------
    auto* locus_cmd = app.add_subcommand(
        "locus", "Sample (zeta_re, zeta_im, v) along the critical line");
    CommonOpts locus_o;
    double locus_lo = 0.0, locus_hi = 50.0;
    std::size_t locus_n = 1000;
    add_common(locus_cmd, locus_o, false);
    locus_cmd->add_option("--rho-min", locus_lo, "Grid start");
    locus_cmd->add_option("--rho-max", locus_hi, "Grid end");
    locus_cmd->add_option("--samples", locus_n, "Grid size")
        ->check(CLI::PositiveNumber);

    // --- ingest ----------------------------------------------------------
    auto* ingest_cmd = app.add_subcommand(
        "ingest", "Validate and re-emit an external zero table");
    CommonOpts ingest_o;
    long long ingest_start = 1;
    add_common(ingest_cmd, ingest_o, true);
    ingest_cmd->add_option("--start-index", ingest_start,
                           "Index of the first one-column record");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help or the error message
        return code == 0 ? 0 : 2;
    }

    if (eval_cmd->parsed()) {
        std::vector<CriticalPoint> rows;
        if (!std::isnan(eval_rho)) {
            rows.push_back(critical_point(eval_rho));
        } else {
            if (!(eval_lo <= eval_hi) || eval_n < 1)
                throw std::runtime_error("eval: empty grid");
            rows.resize(eval_n);
            const double step =
                eval_n > 1 ? (eval_hi - eval_lo) / double(eval_n - 1) : 0.0;
            parallel_for(eval_n, eval_o.jobs, [&](std::size_t i) {
                rows[i] = critical_point(eval_lo + step * double(i));
            });
        }
        emit(eval_o.out, rows, eval_o.format);
        std::cerr << "eval: " << rows.size() << " point(s), rho in ["
                  << rows.front().rho << ", " << rows.back().rho << "]\n";
        return 0;
    }

    if (zeros_cmd->parsed()) {
        const KRange r = parse_k_range(zeros_range);
        std::vector<ZeroRecord> recs;
        recs.reserve(static_cast<std::size_t>(r.hi - r.lo + 1));
        for (long long k = r.lo; k <= r.hi; ++k) recs.push_back(locate_zero(k));
        const ZeroTable table = table_from_records(
            std::move(recs), "computed:k=" + std::to_string(r.lo) + ".." +
                                 std::to_string(r.hi));
        emit(zeros_o.out, table, zeros_o.format);
        std::cerr << "zeros: located k=" << r.lo << ".." << r.hi << ", first="
                  << table.records.front().rho
                  << ", last=" << table.records.back().rho << "\n";
        return 0;
    }

    if (ident_cmd->parsed()) {
        if (!(ident_lo <= ident_hi)) throw std::runtime_error("identities: empty grid");
        const double rho_s = find_rho_s();
        std::vector<IdentityResiduals> rows(ident_n);
        std::vector<char> violating(ident_n, 0);
        std::vector<double> rm_abs(ident_n, 0.0);
        const double step =
            ident_n > 1 ? (ident_hi - ident_lo) / double(ident_n - 1) : 0.0;
        parallel_for(ident_n, ident_o.jobs, [&](std::size_t i) {
            double rho = ident_lo + step * double(i);
            if (std::fabs(rho - rho_s) < 1e-6) rho += 1e-5;  // step off the pole
            try {
                rows[i] = identity_residuals(rho);
            } catch (const std::domain_error&) {
                rows[i] = IdentityResiduals{};
                rows[i].rho = rho;
                return;
            }
            const auto& r = rows[i];
            rm_abs[i] = std::fabs(r.r_m);
            const CriticalPoint p = critical_point(r.rho);
            const double mod2 = p.mod_zeta * p.mod_zeta;
            const bool near_zero =
                p.mod_zeta < 1e-3 || std::fabs(r.rho - rho_s) < 1e-3;
            const bool core_bad =
                !near_zero && std::fabs(r.r_core) > ident_tol * mod2;
            const bool tan_pole = std::fabs(std::cos(p.alpha)) < 1e-3;
            const bool b_bad =
                !tan_pole &&
                std::fabs(r.r_b) >
                    ident_tol * std::max(1.0, std::fabs(std::tan(p.alpha)));
            if (rm_abs[i] > ident_tol || core_bad || b_bad) violating[i] = 1;
        });
        std::size_t violations = 0;
        double max_rm = 0.0;
        for (std::size_t i = 0; i < ident_n; ++i) {
            violations += violating[i];
            max_rm = std::max(max_rm, rm_abs[i]);
        }
        emit(ident_o.out, rows, ident_o.format);
        std::cerr << "identities: " << ident_n << " points, max|r_m|=" << max_rm
                  << ", violations=" << violations << "\n";
        return violations == 0 ? 0 : 1;
    }

    if (anom_cmd->parsed()) {
        const KRange r = parse_k_range(anom_range);
        const auto events = scan_anomalies(r.lo, r.hi);
        emit(anom_o.out, events, anom_o.format);
        std::cerr << "anomalies: " << events.size() << " event(s) in k=" << r.lo
                  << ".." << r.hi << "\n";
        return 0;
    }

    if (count_cmd->parsed()) {
        if (!count_range.empty()) {
            if (count_o.table.empty())
                throw std::runtime_error("count --k needs --table");
            const KRange r = parse_k_range(count_range);
            const ZeroTable table = ingest_zero_table(count_o.table);
            const BoundStats stats = bound_stats(r.lo, r.hi, table.records);
            emit(count_o.out, stats, count_o.format);
            std::cerr << "count: bound stats k=" << r.lo << ".." << r.hi
                      << ", std_d1=" << stats.std_d1 << "\n";
            return 0;
        }
        if (std::isnan(count_rho))
            throw std::runtime_error("count needs --rho or --k");
        const CountReport rep = count_report(count_rho);
        emit(count_o.out, rep, count_o.format);
        std::cerr << "count: rho=" << rep.rho << ", n_backlund=" << rep.n_backlund
                  << ", k_exact=" << rep.k_exact << "\n";
        return 0;
    }

    if (vol_cmd->parsed()) {
        if (vol_o.table.empty())
            throw std::runtime_error("volchkov needs --table");
        const ZeroTable table = ingest_zero_table(vol_o.table);
        const VolchkovReport rep = volchkov_integral(table.records, vol_tmax);
        emit(vol_o.out, rep, vol_o.format);
        std::cerr << "volchkov: integral=" << rep.integral_value
                  << ", target=" << rep.target
                  << ", residual=" << rep.t0_residual << "\n";
        return std::fabs(rep.t0_residual) <= vol_tol ? 0 : 1;
    }

    if (locus_cmd->parsed()) {
        std::vector<LocusSample> rows(locus_n);
        if (locus_n < 2 || !(locus_lo <= locus_hi))
            throw std::runtime_error("locus: need --samples >= 2 and an ordered range");
        const double step = (locus_hi - locus_lo) / double(locus_n - 1);
        parallel_for(locus_n, locus_o.jobs, [&](std::size_t i) {
            const CriticalPoint p = critical_point(locus_lo + step * double(i));
            rows[i] = LocusSample{p.rho, p.zeta_re, p.zeta_im, p.v};
        });
        emit(locus_o.out, rows, locus_o.format);
        std::cerr << "locus: " << rows.size() << " samples in [" << locus_lo
                  << ", " << locus_hi << "]\n";
        return 0;
    }

    if (ingest_cmd->parsed()) {
        if (ingest_o.table.empty())
            throw std::runtime_error("ingest needs --table");
        const ZeroTable table = ingest_zero_table(ingest_o.table, ingest_start);
        emit(ingest_o.out, table, ingest_o.format);
        std::cerr << "ingest: " << table.records.size() << " records from "
                  << table.origin << ", checksum=" << table.checksum << "\n";
        return 0;
    }

    return 2;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
