#pragma once
// Zero-table ingestion from plain-text ordinate files and deterministic
// CSV/JSON export of every report type the library produces.
#include <iosfwd>
#include <string>
#include <vector>

#include "critline/anomaly.hpp"
#include "critline/counting.hpp"
#include "critline/logzeta.hpp"
#include "critline/volchkov.hpp"
#include "critline/zeta.hpp"

namespace critline {

enum class ReportFormat { csv, json };

// An indexed, strictly increasing table of zero ordinates.  checksum is a
// 64-bit FNV-1a over the canonical 17-significant-digit ordinate lines,
// so equal numeric content yields an equal checksum regardless of source
// formatting.
struct ZeroTable {
    std::vector<ZeroRecord> records;
    std::string origin;
    std::string checksum;
};

// Parse a text table: one ordinate per line, or "index ordinate" pairs
// (auto-detected; comma or whitespace separated; '#' comments and one
// leading non-numeric header line are skipped).  One-column files are
// indexed consecutively from start_index.  Throws std::runtime_error with
// the offending line number on parse, ordering, or contiguity faults.
ZeroTable ingest_zero_table(const std::string& path, long long start_index = 1);

// Wrap computed records as a table (checksum filled in).
ZeroTable table_from_records(std::vector<ZeroRecord> records,
                             std::string origin);

std::string table_checksum(const std::vector<ZeroRecord>& records);

// Writers: fixed field order per type; reals carry 17 significant digits
// in CSV, and JSON uses the shortest lossless float encoding.
void export_report(std::ostream& out, const ZeroTable& table, ReportFormat fmt);
void export_report(std::ostream& out, const std::vector<CriticalPoint>& rows,
                   ReportFormat fmt);
void export_report(std::ostream& out, const std::vector<IdentityResiduals>& rows,
                   ReportFormat fmt);
void export_report(std::ostream& out, const std::vector<HalfZero>& rows,
                   ReportFormat fmt);
void export_report(std::ostream& out, const std::vector<AnomalousEvent>& rows,
                   ReportFormat fmt);
void export_report(std::ostream& out, const std::vector<LocusSample>& rows,
                   ReportFormat fmt);
void export_report(std::ostream& out, const CountReport& report,
                   ReportFormat fmt);
void export_report(std::ostream& out, const BoundStats& stats, ReportFormat fmt);
void export_report(std::ostream& out, const VolchkovReport& report,
                   ReportFormat fmt);

// Open `path` (throwing std::runtime_error on failure) and write as above.
template <class Report>
void export_report_file(const std::string& path, const Report& payload,
                        ReportFormat fmt);

}  // namespace critline
