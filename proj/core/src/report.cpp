#include <commperm/report.hpp>

#include <ostream>

namespace commperm {

std::string int_string(const Int& v) { return v.get_str(); }

std::string rat_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_str();
}

namespace {

Int pow10(long e) { return ipow(10ul, static_cast<unsigned long>(e)); }

// num/den >= 10^e, valid for negative e as well
bool ge_pow10(const Int& num, const Int& den, long e) {
  if (e >= 0) return num >= den * pow10(e);
  return num * pow10(-e) >= den;
}

}  // namespace

std::string decimal_string(const Rat& v, int digits) {
  if (digits < 1) throw std::invalid_argument("decimal_string: need at least one digit");
  if (v == 0) return "0";
  const bool negative = v < 0;
  const Int num = abs(v.get_num());
  const Int den = v.get_den();

  // Decimal exponent e: largest e with 10^e <= num/den.
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10)) + 1;
  while (!ge_pow10(num, den, e)) --e;
  while (ge_pow10(num, den, e + 1)) ++e;  // now 10^e <= num/den < 10^(e+1)

  // Mantissa: round num/den * 10^(digits-1-e) to an integer, half to even.
  const long shift = digits - 1 - e;
  Int scaled_num = num;
  Int scaled_den = den;
  if (shift >= 0)
    scaled_num *= pow10(shift);
  else
    scaled_den *= pow10(-shift);
  Int mantissa, rem;
  mpz_fdiv_qr(mantissa.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
  const Int twice = rem * 2;
  if (twice > scaled_den || (twice == scaled_den && mpz_odd_p(mantissa.get_mpz_t())))
    mantissa += 1;
  if (mantissa == pow10(digits)) {  // rounded up into an extra digit
    mantissa = pow10(digits - 1);
    ++e;
  }

  std::string mdigits = mantissa.get_str();
  std::string out;
  if (e >= -6 && e <= 17) {
    if (e >= digits - 1) {
      out = mdigits + std::string(static_cast<size_t>(e - digits + 1), '0');
    } else if (e >= 0) {
      out = mdigits.substr(0, static_cast<size_t>(e) + 1) + "." +
            mdigits.substr(static_cast<size_t>(e) + 1);
    } else {
      out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + mdigits;
    }
  } else {
    out = mdigits.substr(0, 1) + "." + mdigits.substr(1) + "e" + (e < 0 ? "-" : "+") +
          (std::abs(e) < 10 ? "0" : "") + std::to_string(std::abs(e));
  }
  return negative ? "-" + out : out;
}

namespace {

void write_csv_row(std::ostream& os, const ScanRow& row, bool with_scan_column) {
  if (with_scan_column)
    os << row.scan;
  else
    os << row.p;
  os << ',' << row.n << ',' << row.k << ',' << rat_string(row.lhs) << ',' << rat_string(row.rhs)
     << ',' << row.verdict << '\n';
}

void write_json_row(std::ostream& os, const ScanRow& row, bool with_scan_column) {
  os << "{";
  if (with_scan_column)
    os << "\"scan\":\"" << row.scan << "\",";
  else
    os << "\"p\":" << row.p << ",";
  os << "\"n\":" << row.n << ",\"k\":" << row.k << ",\"lhs\":\"" << rat_string(row.lhs)
     << "\",\"rhs\":\"" << rat_string(row.rhs) << "\",\"verdict\":\"" << row.verdict << "\"}";
}

}  // namespace

ReportStream::ReportStream(std::ostream& os, Format format, bool with_scan_column)
    : os_(os), format_(format), with_scan_column_(with_scan_column) {
  if (format_ == Format::csv)
    os_ << (with_scan_column_ ? "scan" : "p") << ",n,k,lhs,rhs,verdict\n";
  else
    os_ << "[";
}

void ReportStream::row(const ScanRow& r) {
  if (format_ == Format::csv) {
    write_csv_row(os_, r, with_scan_column_);
  } else {
    os_ << (any_ ? ",\n" : "\n");
    write_json_row(os_, r, with_scan_column_);
  }
  any_ = true;
}

void ReportStream::finish() {
  if (finished_) return;
  finished_ = true;
  if (format_ == Format::json) os_ << (any_ ? "\n]" : "]") << "\n";
}

void write_report(std::ostream& os, const ScanReport& report, Format format,
                  bool with_scan_column) {
  ReportStream stream(os, format, with_scan_column);
  for (const ScanRow& row : report.rows) stream.row(row);
  stream.finish();
}

}  // namespace commperm
