// Command-line driver: exact tables, log-concavity scans, extremal checks,
// asymptotic ratios, and definition-vs-formula oracle comparisons.
//
// Exit codes: 0 clean, 1 scan violation or oracle mismatch (report is still
// written), 2 usage error, 3 I/O failure.

#include <commperm/arith.hpp>
#include <commperm/bruteforce.hpp>
#include <commperm/count_table.hpp>
#include <commperm/extremal.hpp>
#include <commperm/report.hpp>
#include <commperm/scan.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace commperm;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Report sink: the file named by --out, or standard output. Reports go here
// and nowhere else; human summaries go to stderr so the report bytes stay
// deterministic.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError("cannot open '" + path + "' for writing");
    }
  }

  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

  // Flush and surface any deferred stream error.
  void close() {
    os().flush();
    if (!os().good()) throw IoError("write failure on report output");
  }

 private:
  std::ofstream file_;
};

double secs_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Format parse_format(const std::string& name) {
  return name == "json" ? Format::json : Format::csv;
}

int cmd_table(long p, long nmax, Format format, const std::string& out_path) {
  const auto t0 = std::chrono::steady_clock::now();
  Output out(out_path);
  const CountTable table = build_table(static_cast<int>(p), nmax);
  std::ostream& os = out.os();
  if (format == Format::csv) {
    os << "p,n,k,A\n";
    for (long n = 1; n <= nmax; ++n)
      for (long k = 1; k <= n; ++k)
        os << p << ',' << n << ',' << k << ',' << table.at(n, k) << '\n';
  } else {
    os << "[";
    bool first = true;
    for (long n = 1; n <= nmax; ++n)
      for (long k = 1; k <= n; ++k) {
        os << (first ? "\n" : ",\n") << "{\"p\":" << p << ",\"n\":" << n << ",\"k\":" << k
           << ",\"A\":\"" << table.at(n, k) << "\"}";
        first = false;
      }
    os << (first ? "]" : "\n]") << '\n';
  }
  out.close();
  std::cerr << "table: p=" << p << " nmax=" << nmax << ", " << nmax * (nmax + 1) / 2
            << " entries (" << secs_since(t0) << "s)\n";
  return kOk;
}

int cmd_logconcavity(long p, long nmax, Format format, const std::string& out_path, int jobs) {
  if (nmax < 3) throw std::invalid_argument("logconcavity: need --nmax >= 3");
  const auto t0 = std::chrono::steady_clock::now();
  Output out(out_path);
  const CountTable table = build_table(static_cast<int>(p), nmax);

  ReportStream stream(out.os(), format, /*with_scan_column=*/false);
  long pairs = 0;
  long violations = 0;
  parallel_rows_stream(
      3, nmax, jobs,
      [&table, p](long n) {
        std::vector<ScanRow> rows;
        rows.reserve(static_cast<size_t>(n - 2));
        for (long k = 2; k <= n - 1; ++k) {
          ScanRow row;
          row.scan = "logconcavity";
          row.p = p;
          row.n = n;
          row.k = k;
          row.lhs = Rat(Int(table.at(n, k) * table.at(n, k)));
          row.rhs = Rat(Int(table.at(n, k - 1) * table.at(n, k + 1)));
          row.verdict = row.lhs > row.rhs ? "strict" : (row.lhs == row.rhs ? "equal" : "violation");
          rows.push_back(std::move(row));
        }
        return rows;
      },
      [&](std::vector<ScanRow>&& batch) {
        for (const ScanRow& row : batch) {
          if (row.verdict == "violation") ++violations;
          stream.row(row);
          ++pairs;
        }
      });
  stream.finish();
  out.close();
  std::cerr << "logconcavity: p=" << p << " nmax=" << nmax << ", " << pairs << " pairs, "
            << violations << " violations (" << secs_since(t0) << "s)\n";
  return violations > 0 ? kViolation : kOk;
}

int cmd_extremal(long nmax, Format format, const std::string& out_path, int jobs) {
  if (nmax < 3) throw std::invalid_argument("extremal: need --nmax >= 3");
  Output out(out_path);
  ReportStream stream(out.os(), format, /*with_scan_column=*/true);
  RowSink sink = [&stream](const ScanRow& row) { stream.row(row); };

  const ScanReport e_report = check_e_logconcavity(nmax, jobs, sink);
  std::cerr << "extremal/e_logconcavity: " << e_report.checked << " pairs, "
            << e_report.violations << " violations (" << e_report.seconds << "s)\n";

  const ScanReport lemma_report = lemma_checks(nmax, nmax);
  for (const ScanRow& row : lemma_report.rows) stream.row(row);
  std::cerr << "extremal/lemmas: " << lemma_report.checked << " checks, "
            << lemma_report.violations << " violations (" << lemma_report.seconds << "s)\n";

  const ScanReport case_report = classify_scan(nmax, jobs, sink);
  std::cerr << "extremal/cases: " << case_report.checked << " pairs, " << case_report.violations
            << " violations (" << case_report.seconds << "s)\n";

  stream.finish();
  out.close();
  const long violations =
      e_report.violations + lemma_report.violations + case_report.violations;
  return violations > 0 ? kViolation : kOk;
}

int cmd_asymptotics(long n, long k, long pmax, long step, Format format,
                    const std::string& out_path) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("asymptotics: need 1 <= k <= n");
  if (step < 1 || pmax < step)
    throw std::invalid_argument("asymptotics: need 1 <= step <= pmax");
  const auto t0 = std::chrono::steady_clock::now();
  Output out(out_path);
  std::ostream& os = out.os();
  if (format == Format::csv)
    os << "p,n,k,ratio,ratio_exact\n";
  else
    os << "[";
  bool first = true;
  long rows = 0;
  for (long p = step; p <= pmax; p += step) {
    const CountTable table = build_table(static_cast<int>(p), n);
    const Rat ratio = asymptotic_ratio(table, n, k);
    if (format == Format::csv) {
      os << p << ',' << n << ',' << k << ',' << decimal_string(ratio) << ','
         << rat_string(ratio) << '\n';
    } else {
      os << (first ? "\n" : ",\n") << "{\"p\":" << p << ",\"n\":" << n << ",\"k\":" << k
         << ",\"ratio\":\"" << decimal_string(ratio) << "\",\"ratio_exact\":\""
         << rat_string(ratio) << "\"}";
      first = false;
    }
    ++rows;
  }
  if (format == Format::json) os << (first ? "]" : "\n]") << '\n';
  out.close();
  std::cerr << "asymptotics: n=" << n << " k=" << k << ", " << rows << " rows ("
            << secs_since(t0) << "s)\n";
  return kOk;
}

int cmd_oracle(long nmax, long pmax, Format format, const std::string& out_path) {
  if (nmax < 1 || pmax < 1)
    throw std::invalid_argument("oracle: need --nmax >= 1 and --pmax >= 1");
  // Refuse the whole rectangle rather than silently truncating it.
  for (long p = 1; p <= pmax; ++p)
    for (long n = 1; n <= nmax; ++n)
      if (!brute_counts_in_guard(static_cast<int>(p), static_cast<int>(n)))
        throw std::invalid_argument(
            "oracle: (p=" + std::to_string(p) + ", n=" + std::to_string(n) +
            ") is outside the enumeration guard (n <= 6, p <= 3, n <= 5 when p = 3)");

  const auto t0 = std::chrono::steady_clock::now();
  Output out(out_path);
  std::ostream& os = out.os();
  if (format == Format::csv)
    os << "p,n,k,brute,formula,match\n";
  else
    os << "[";
  bool first = true;
  long mismatches = 0;
  for (long p = 1; p <= pmax; ++p) {
    const CountTable table = build_table(static_cast<int>(p), nmax);
    for (long n = 1; n <= nmax; ++n) {
      const std::vector<Int> brute = brute_counts(static_cast<int>(p), static_cast<int>(n));
      for (long k = 1; k <= n; ++k) {
        const Int& formula = table.at(n, k);
        const Int& direct = brute[static_cast<size_t>(k)];
        const bool ok = direct == formula;
        if (!ok) ++mismatches;
        if (format == Format::csv) {
          os << p << ',' << n << ',' << k << ',' << direct << ',' << formula << ','
             << (ok ? "ok" : "mismatch") << '\n';
        } else {
          os << (first ? "\n" : ",\n") << "{\"p\":" << p << ",\"n\":" << n << ",\"k\":" << k
             << ",\"brute\":\"" << direct << "\",\"formula\":\"" << formula << "\",\"match\":\""
             << (ok ? "ok" : "mismatch") << "\"}";
          first = false;
        }
      }
    }
  }
  if (format == Format::json) os << (first ? "]" : "\n]") << '\n';
  out.close();
  std::cerr << "oracle: pmax=" << pmax << " nmax=" << nmax << ", " << mismatches
            << " mismatches (" << secs_since(t0) << "s)\n";
  return mismatches > 0 ? kViolation : kOk;
}

int cmd_bp(long p, long n, bool flags_oracle, const std::string& out_path) {
  const Int value = flags_oracle ? flag_sum_oracle(static_cast<int>(p), n)
                                 : subgroup_count(static_cast<int>(p), n);
  Output out(out_path);
  out.os() << value << '\n';
  out.close();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic scans: commuting-tuple orbit counts, subgroup counts,\n"
               "and extremal clique-product checks."};
  app.require_subcommand(1);

  long p = 0, nmax = 0, n = 0, k = 0, pmax = 0, step = 1;
  int jobs = 1;
  std::string format = "csv";
  std::string out_path;
  bool flags_oracle = false;

  const auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "report format: csv or json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out_path, "report path (default: standard output)");
  };
  const auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", jobs, "scan worker threads (default 1; output is identical)")
        ->check(CLI::Range(1, 1024));
  };

  CLI::App* table_cmd = app.add_subcommand("table", "emit the A(p,n,k) triangle for n <= nmax");
  table_cmd->add_option("--p", p, "tuple length p")->required()->check(CLI::Range(1L, 100000L));
  table_cmd->add_option("--nmax", nmax, "largest n")->required()->check(CLI::Range(1L, 100000L));
  add_output(table_cmd);

  CLI::App* logc_cmd = app.add_subcommand(
      "logconcavity", "scan A(p,n,k)^2 vs A(p,n,k-1)A(p,n,k+1) over 3 <= n <= nmax");
  logc_cmd->add_option("--p", p, "tuple length p")->required()->check(CLI::Range(1L, 100000L));
  logc_cmd->add_option("--nmax", nmax, "largest n")->required()->check(CLI::Range(1L, 100000L));
  add_output(logc_cmd);
  add_jobs(logc_cmd);

  CLI::App* extremal_cmd = app.add_subcommand(
      "extremal", "E log-concavity, lemma suite, and six-case classification up to nmax");
  extremal_cmd->add_option("--nmax", nmax, "largest n")
      ->required()
      ->check(CLI::Range(3L, 100000L));
  add_output(extremal_cmd);
  add_jobs(extremal_cmd);

  CLI::App* asym_cmd = app.add_subcommand(
      "asymptotics", "exact ratios A(p,n,k)/(F(n,k)E(n,k)^p) for p = step, 2*step, ..., pmax");
  asym_cmd->add_option("--n", n, "n")->required()->check(CLI::Range(1L, 100000L));
  asym_cmd->add_option("--k", k, "k")->required()->check(CLI::Range(1L, 100000L));
  asym_cmd->add_option("--pmax", pmax, "largest p")->required()->check(CLI::Range(1L, 100000L));
  asym_cmd->add_option("--step", step, "p increment (default 1)")->check(CLI::Range(1L, 100000L));
  add_output(asym_cmd);

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "compare brute-force counts with the formula over p <= pmax, n <= nmax");
  oracle_cmd->add_option("--nmax", nmax, "largest n")->required()->check(CLI::Range(1L, 100L));
  oracle_cmd->add_option("--pmax", pmax, "largest p")->required()->check(CLI::Range(1L, 100L));
  add_output(oracle_cmd);

  CLI::App* bp_cmd = app.add_subcommand("bp", "print B(p,n), the index-n subgroup count");
  bp_cmd->add_option("--p", p, "rank p")->required()->check(CLI::Range(1L, 100000L));
  bp_cmd->add_option("--n", n, "index n")->required()->check(CLI::Range(1L, 4294967295L));
  bp_cmd->add_flag("--flags-oracle", flags_oracle,
                   "use the divisor-chain recursion instead of the product formula");
  bp_cmd->add_option("--out", out_path, "output path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Format fmt = parse_format(format);
    if (table_cmd->parsed()) return cmd_table(p, nmax, fmt, out_path);
    if (logc_cmd->parsed()) return cmd_logconcavity(p, nmax, fmt, out_path, jobs);
    if (extremal_cmd->parsed()) return cmd_extremal(nmax, fmt, out_path, jobs);
    if (asym_cmd->parsed()) return cmd_asymptotics(n, k, pmax, step, fmt, out_path);
    if (oracle_cmd->parsed()) return cmd_oracle(nmax, pmax, fmt, out_path);
    if (bp_cmd->parsed()) return cmd_bp(p, n, flags_oracle, out_path);
    std::cerr << "error: no subcommand selected\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    // Internal consistency failures (inexact division, case mismatch) count
    // as detected violations, not usage problems.
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kViolation;
  }
}
