#ifndef COMMPERM_REPORT_HPP
#define COMMPERM_REPORT_HPP

#include <commperm/exact.hpp>

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace commperm {

// One scanned pair. lhs/rhs hold the exact compared values (integers are
// rationals with denominator 1). verdict is one of "strict", "equal",
// "violation" for inequality scans, or a classifier label such as "case4".
struct ScanRow {
  std::string scan;  // section tag, used by multi-scan reports
  long p = 0;
  long n = 0;
  long k = 0;
  Rat lhs;
  Rat rhs;
  std::string verdict;
};

struct ScanReport {
  std::string kind;
  long checked = 0;     // pairs examined (rows may be a subset)
  long violations = 0;  // number of rows with verdict == "violation"
  double seconds = 0.0;
  std::vector<ScanRow> rows;  // sorted by (scan section, n, k)
};

// Receives rows as a scan produces them, in report order. Scans that accept a
// sink leave ScanReport::rows empty when one is supplied, so arbitrarily
// large scans can be serialized or checked without materializing.
using RowSink = std::function<void(const ScanRow&)>;

// Renderers. All output is deterministic: big integers as decimal strings,
// non-integer rationals as "num/den" in lowest terms.
std::string int_string(const Int& v);
std::string rat_string(const Rat& v);

// Correctly rounded decimal rendering of an exact rational, round-half-even,
// `digits` significant digits. Positional notation for decimal exponents in
// [-6, 17], scientific ("d.dd...e+XX") outside.
std::string decimal_string(const Rat& v, int digits = 12);

enum class Format { csv, json };

// Incremental report writer. with_scan_column selects the multi-section
// schema (scan,n,k,lhs,rhs,verdict) over the single-scan one
// (p,n,k,lhs,rhs,verdict). The constructor writes the header; finish() closes
// the JSON array (CSV needs no footer) and must be called exactly once.
class ReportStream {
 public:
  ReportStream(std::ostream& os, Format format, bool with_scan_column);
  void row(const ScanRow& r);
  void finish();

 private:
  std::ostream& os_;
  Format format_;
  bool with_scan_column_;
  bool any_ = false;
  bool finished_ = false;
};

// Convenience writer for fully materialized reports.
void write_report(std::ostream& os, const ScanReport& report, Format format,
                  bool with_scan_column);

}  // namespace commperm

#endif  // COMMPERM_REPORT_HPP
