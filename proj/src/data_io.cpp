#include "critline/data_io.hpp"

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace critline {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

const char* source_name(ZeroSource s) {
    return s == ZeroSource::computed ? "computed" : "ingested";
}

const char* flag_name(AnomalyFlag f) {
    switch (f) {
        case AnomalyFlag::normal: return "normal";
        case AnomalyFlag::anomalous_pair_member: return "anomalous_pair_member";
        default: return "unknown";
    }
}

const char* sign_name(HalfZeroSign s) {
    return s == HalfZeroSign::negative ? "negative" : "positive";
}

struct Line {
    std::size_t number = 0;
    std::string text;
};

[[noreturn]] void fail(const std::string& path, std::size_t line,
                       const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

// Split on whitespace/commas into at most 3 tokens (2 expected).
int tokenize(const std::string& s, std::string_view out[3]) {
    int n = 0;
    std::size_t i = 0;
    while (i < s.size() && n < 3) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == ',' ||
                                s[i] == '\r'))
            ++i;
        if (i >= s.size()) break;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != ',' &&
               s[i] != '\r')
            ++i;
        out[n++] = std::string_view(s).substr(start, i - start);
    }
    return n;
}

bool parse_double(std::string_view tok, double& out) {
    const char* end = tok.data() + tok.size();
    const auto res = std::from_chars(tok.data(), end, out);
    return res.ec == std::errc() && res.ptr == end;
}

bool parse_index(std::string_view tok, long long& out) {
    const char* end = tok.data() + tok.size();
    const auto res = std::from_chars(tok.data(), end, out);
    return res.ec == std::errc() && res.ptr == end;
}

}  // namespace

std::string table_checksum(const std::vector<ZeroRecord>& records) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a 64 offset basis
    const auto mix = [&h](const char* s) {
        for (; *s; ++s) {
            h ^= static_cast<unsigned char>(*s);
            h *= 1099511628211ULL;
        }
    };
    for (const ZeroRecord& r : records) {
        mix(fmt17(r.rho).c_str());
        mix("\n");
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

ZeroTable table_from_records(std::vector<ZeroRecord> records,
                             std::string origin) {
    ZeroTable t;
    t.checksum = table_checksum(records);
    t.records = std::move(records);
    t.origin = std::move(origin);
    return t;
}

ZeroTable ingest_zero_table(const std::string& path, long long start_index) {
    if (start_index < 1)
        throw std::invalid_argument("ingest_zero_table: start_index must be >= 1");
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");

    std::vector<ZeroRecord> records;
    std::string raw;
    std::size_t line_no = 0;
    int columns = 0;  // 0 until the first data line fixes the shape
    bool saw_data = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::string_view tok[3];
        const int n = tokenize(raw, tok);
        if (n == 0) continue;

        double rho = 0.0;
        long long index = 0;
        bool ok = false;
        if (n == 1) {
            ok = parse_double(tok[0], rho);
            index = start_index + static_cast<long long>(records.size());
        } else if (n == 2) {
            ok = parse_index(tok[0], index) && parse_double(tok[1], rho);
        }
        if (!ok || n > 2) {
            // Tolerate header lines (first token starts non-numeric) before
            // any data; a malformed numeric row is always an error.
            const char c = tok[0].empty() ? '\0' : tok[0][0];
            const bool header_like =
                !saw_data && !(c == '+' || c == '-' || c == '.' ||
                               (c >= '0' && c <= '9'));
            if (header_like) continue;
            fail(path, line_no, "cannot parse '" + raw + "' as a table row");
        }
        if (columns == 0) {
            columns = n;
        } else if (columns != n) {
            fail(path, line_no, "inconsistent column count");
        }
        if (!records.empty()) {
            if (rho <= records.back().rho)
                fail(path, line_no,
                     "ordinates must increase (index " + std::to_string(index) +
                         ")");
            if (index != records.back().index + 1)
                fail(path, line_no,
                     "indices must be contiguous (expected " +
                         std::to_string(records.back().index + 1) + ", got " +
                         std::to_string(index) + ")");
        } else if (index < 1) {
            fail(path, line_no, "first index must be >= 1");
        }
        saw_data = true;
        ZeroRecord r;
        r.index = index;
        r.rho = rho;
        r.source = ZeroSource::ingested;
        r.refined_to = 0.0;
        r.anomaly_flag = AnomalyFlag::unknown;
        records.push_back(r);
    }
    if (records.empty())
        throw std::runtime_error(path + ": table holds no records");
    ZeroTable t;
    t.records = std::move(records);
    t.origin = path;
    t.checksum = table_checksum(t.records);
    return t;
}

namespace {

void write_csv_header(std::ostream& out, const char* header) {
    out << header << '\n';
}

}  // namespace

void export_report(std::ostream& out, const ZeroTable& table,
                   ReportFormat fmt) {
    if (fmt == ReportFormat::csv) {
        write_csv_header(out, "index,rho");
        for (const ZeroRecord& r : table.records)
            out << r.index << ',' << fmt17(r.rho) << '\n';
        return;
    }
    ordered_json j;
    j["origin"] = table.origin;
    j["checksum"] = table.checksum;
    j["count"] = table.records.size();
    auto& rows = j["records"] = ordered_json::array();
    for (const ZeroRecord& r : table.records) {
        ordered_json row;
        row["index"] = r.index;
        row["rho"] = r.rho;
        row["source"] = source_name(r.source);
        row["refined_to"] = r.refined_to;
        row["anomaly_flag"] = flag_name(r.anomaly_flag);
        rows.push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
}

void export_report(std::ostream& out, const std::vector<CriticalPoint>& rows,
                   ReportFormat fmt) {
    if (fmt == ReportFormat::csv) {
        write_csv_header(out,
                         "rho,zeta_re,zeta_im,dzeta_re,dzeta_im,alpha,beta,"
                         "mod_zeta,mod_dzeta,v,arg_reliable");
        for (const CriticalPoint& p : rows)
            out << fmt17(p.rho) << ',' << fmt17(p.zeta_re) << ','
                << fmt17(p.zeta_im) << ',' << fmt17(p.dzeta_re) << ','
                << fmt17(p.dzeta_im) << ',' << fmt17(p.alpha) << ','
                << fmt17(p.beta) << ',' << fmt17(p.mod_zeta) << ','
                << fmt17(p.mod_dzeta) << ',' << fmt17(p.v) << ','
                << (p.arg_reliable ? 1 : 0) << '\n';
        return;
    }
    ordered_json arr = ordered_json::array();
    for (const CriticalPoint& p : rows) {
        ordered_json row;
        row["rho"] = p.rho;
        row["zeta_re"] = p.zeta_re;
        row["zeta_im"] = p.zeta_im;
        row["dzeta_re"] = p.dzeta_re;
        row["dzeta_im"] = p.dzeta_im;
        row["alpha"] = p.alpha;
        row["beta"] = p.beta;
        row["mod_zeta"] = p.mod_zeta;
        row["mod_dzeta"] = p.mod_dzeta;
        row["v"] = p.v;
        row["arg_reliable"] = p.arg_reliable;
        arr.push_back(std::move(row));
    }
    out << arr.dump(2) << '\n';
}

void export_report(std::ostream& out,
                   const std::vector<IdentityResiduals>& rows,
                   ReportFormat fmt) {
    if (fmt == ReportFormat::csv) {
        write_csv_header(out, "rho,r_m,r_core,r_polar,r_b,r_sin");
        for (const IdentityResiduals& r : rows)
            out << fmt17(r.rho) << ',' << fmt17(r.r_m) << ',' << fmt17(r.r_core)
                << ',' << fmt17(r.r_polar) << ',' << fmt17(r.r_b) << ','
                << fmt17(r.r_sin) << '\n';
        return;
    }
    ordered_json arr = ordered_json::array();
    for (const IdentityResiduals& r : rows) {
        ordered_json row;
        row["rho"] = r.rho;
        row["r_m"] = r.r_m;
        row["r_core"] = r.r_core;
        row["r_polar"] = r.r_polar;
        row["r_b"] = r.r_b;
        row["r_sin"] = r.r_sin;
        arr.push_back(std::move(row));
    }
    out << arr.dump(2) << '\n';
}

void export_report(std::ostream& out, const std::vector<HalfZero>& rows,
                   ReportFormat fmt) {
    if (fmt == ReportFormat::csv) {
        write_csv_header(out, "rho,zeta_r_sign,d_r_residual,theta_residual");
        for (const HalfZero& h : rows)
            out << fmt17(h.rho) << ',' << sign_name(h.zeta_r_sign) << ','
                << fmt17(h.d_r_residual) << ',' << fmt17(h.theta_residual)
                << '\n';
        return;
    }
    ordered_json arr = ordered_json::array();
    for (const HalfZero& h : rows) {
        ordered_json row;
        row["rho"] = h.rho;
        row["zeta_r_sign"] = sign_name(h.zeta_r_sign);
        row["d_r_residual"] = h.d_r_residual;
        row["theta_residual"] = h.theta_residual;
        arr.push_back(std::move(row));
    }
    out << arr.dump(2) << '\n';
}

void export_report(std::ostream& out, const std::vector<AnomalousEvent>& rows,
                   ReportFormat fmt) {
    if (fmt == ReportFormat::csv) {
        write_csv_header(
            out, "lower_zero_index,upper_zero_index,crossing_rho,jump_sign_at_upper");
        for (const AnomalousEvent& e : rows)
            out << e.lower_zero_index << ',' << e.upper_zero_index << ','
                << fmt17(e.crossing_rho) << ',' << e.jump_sign_at_upper << '\n';
        return;
    }
    ordered_json arr = ordered_json::array();
    for (const AnomalousEvent& e : rows) {
        ordered_json row;
        row["lower_zero_index"] = e.lower_zero_index;
        row["upper_zero_index"] = e.upper_zero_index;
        row["crossing_rho"] = e.crossing_rho;
        row["jump_sign_at_upper"] = e.jump_sign_at_upper;
        arr.push_back(std::move(row));
    }
    out << arr.dump(2) << '\n';
}

void export_report(std::ostream& out, const std::vector<LocusSample>& rows,
                   ReportFormat fmt) {
    if (fmt == ReportFormat::csv) {
        write_csv_header(out, "rho,zeta_re,zeta_im,v");
        for (const LocusSample& s : rows)
            out << fmt17(s.rho) << ',' << fmt17(s.zeta_re) << ','
                << fmt17(s.zeta_im) << ',' << fmt17(s.v) << '\n';
        return;
    }
    ordered_json arr = ordered_json::array();
    for (const LocusSample& s : rows) {
        ordered_json row;
        row["rho"] = s.rho;
        row["zeta_re"] = s.zeta_re;
        row["zeta_im"] = s.zeta_im;
        row["v"] = s.v;
        arr.push_back(std::move(row));
    }
    out << arr.dump(2) << '\n';
}

void export_report(std::ostream& out, const CountReport& r, ReportFormat fmt) {
    if (fmt == ReportFormat::csv) {
        write_csv_header(out,
                         "rho,n_backlund,n_fl,k_exact,k_asymptotic_lo,"
                         "k_asymptotic_hi");
        out << fmt17(r.rho) << ',' << fmt17(r.n_backlund) << ',' << fmt17(r.n_fl)
            << ',' << r.k_exact << ',' << r.k_asymptotic_lo << ','
            << r.k_asymptotic_hi << '\n';
        return;
    }
    ordered_json j;
    j["rho"] = r.rho;
    j["n_backlund"] = r.n_backlund;
    j["n_fl"] = r.n_fl;
    j["k_exact"] = r.k_exact;
    j["k_asymptotic_lo"] = r.k_asymptotic_lo;
    j["k_asymptotic_hi"] = r.k_asymptotic_hi;
    out << j.dump(2) << '\n';
}

void export_report(std::ostream& out, const BoundStats& b, ReportFormat fmt) {
    if (fmt == ReportFormat::csv) {
        write_csv_header(out,
                         "k_lo,k_hi,mean_d1,std_d1,mean_d2,std_d2,mean_d3,"
                         "std_d3,mean_d4,std_d4");
        out << b.k_lo << ',' << b.k_hi << ',' << fmt17(b.mean_d1) << ','
            << fmt17(b.std_d1) << ',' << fmt17(b.mean_d2) << ','
            << fmt17(b.std_d2) << ',' << fmt17(b.mean_d3) << ','
            << fmt17(b.std_d3) << ',' << fmt17(b.mean_d4) << ','
            << fmt17(b.std_d4) << '\n';
        return;
    }
    ordered_json j;
    j["k_lo"] = b.k_lo;
    j["k_hi"] = b.k_hi;
    j["mean_d1"] = b.mean_d1;
    j["std_d1"] = b.std_d1;
    j["mean_d2"] = b.mean_d2;
    j["std_d2"] = b.std_d2;
    j["mean_d3"] = b.mean_d3;
    j["std_d3"] = b.std_d3;
    j["mean_d4"] = b.mean_d4;
    j["std_d4"] = b.std_d4;
    out << j.dump(2) << '\n';
}

void export_report(std::ostream& out, const VolchkovReport& r,
                   ReportFormat fmt) {
    if (fmt == ReportFormat::csv) {
        write_csv_header(
            out,
            "t_max,zeros_used,j1,j2,j3,j4,j5,j1_analytic,j2_analytic,"
            "j3_analytic,j4_analytic,j5_analytic,assembly_closed_form,target,"
            "zero_sum_partial,zero_sum_tail,zero_sum_target,integral_value,"
            "integral_tail_bound,anomaly_correction_total,t0_residual");
        out << fmt17(r.t_max) << ',' << r.zeros_used << ',' << fmt17(r.j1) << ','
            << fmt17(r.j2) << ',' << fmt17(r.j3) << ',' << fmt17(r.j4) << ','
            << fmt17(r.j5) << ',' << fmt17(r.j1_analytic) << ','
            << fmt17(r.j2_analytic) << ',' << fmt17(r.j3_analytic) << ','
            << fmt17(r.j4_analytic) << ',' << fmt17(r.j5_analytic) << ','
            << fmt17(r.assembly_closed_form) << ',' << fmt17(r.target) << ','
            << fmt17(r.zero_sum_partial) << ',' << fmt17(r.zero_sum_tail) << ','
            << fmt17(r.zero_sum_target) << ',' << fmt17(r.integral_value) << ','
            << fmt17(r.integral_tail_bound) << ','
            << fmt17(r.anomaly_correction_total) << ',' << fmt17(r.t0_residual)
            << '\n';
        return;
    }
    ordered_json j;
    j["t_max"] = r.t_max;
    j["zeros_used"] = r.zeros_used;
    j["j1"] = r.j1;
    j["j2"] = r.j2;
    j["j3"] = r.j3;
    j["j4"] = r.j4;
    j["j5"] = r.j5;
    j["j1_analytic"] = r.j1_analytic;
    j["j2_analytic"] = r.j2_analytic;
    j["j3_analytic"] = r.j3_analytic;
    j["j4_analytic"] = r.j4_analytic;
    j["j5_analytic"] = r.j5_analytic;
    j["assembly_closed_form"] = r.assembly_closed_form;
    j["target"] = r.target;
    j["zero_sum_partial"] = r.zero_sum_partial;
    j["zero_sum_tail"] = r.zero_sum_tail;
    j["zero_sum_target"] = r.zero_sum_target;
    j["integral_value"] = r.integral_value;
    j["integral_tail_bound"] = r.integral_tail_bound;
    j["anomaly_correction_total"] = r.anomaly_correction_total;
    j["t0_residual"] = r.t0_residual;
    out << j.dump(2) << '\n';
}

template <class Report>
void export_report_file(const std::string& path, const Report& payload,
                        ReportFormat fmt) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    export_report(out, payload, fmt);
    if (!out) throw std::runtime_error(path + ": write failed");
}

template void export_report_file<ZeroTable>(const std::string&,
                                            const ZeroTable&, ReportFormat);
template void export_report_file<std::vector<CriticalPoint>>(
    const std::string&, const std::vector<CriticalPoint>&, ReportFormat);
template void export_report_file<std::vector<IdentityResiduals>>(
    const std::string&, const std::vector<IdentityResiduals>&, ReportFormat);
template void export_report_file<std::vector<HalfZero>>(
    const std::string&, const std::vector<HalfZero>&, ReportFormat);
template void export_report_file<std::vector<AnomalousEvent>>(
    const std::string&, const std::vector<AnomalousEvent>&, ReportFormat);
template void export_report_file<std::vector<LocusSample>>(
    const std::string&, const std::vector<LocusSample>&, ReportFormat);
template void export_report_file<CountReport>(const std::string&,
                                              const CountReport&, ReportFormat);
template void export_report_file<BoundStats>(const std::string&,
                                             const BoundStats&, ReportFormat);
template void export_report_file<VolchkovReport>(const std::string&,
                                                 const VolchkovReport&,
                                                 ReportFormat);

}  // namespace critline
