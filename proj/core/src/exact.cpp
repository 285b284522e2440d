#include <commperm/exact.hpp>

namespace commperm {

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

FactorialTable::FactorialTable(long nmax) {
  if (nmax < 0) throw std::invalid_argument("FactorialTable: negative bound");
  f_.resize(static_cast<size_t>(nmax) + 1);
  f_[0] = 1;
  for (long i = 1; i <= nmax; ++i) f_[static_cast<size_t>(i)] = f_[static_cast<size_t>(i - 1)] * i;
}

PascalTriangle::PascalTriangle(long nmax) {
  if (nmax < 0) throw std::invalid_argument("PascalTriangle: negative bound");
  rows_.resize(static_cast<size_t>(nmax) + 1);
  for (long n = 0; n <= nmax; ++n) {
    auto& row = rows_[static_cast<size_t>(n)];
    row.resize(static_cast<size_t>(n) + 1);
    row[0] = 1;
    row[static_cast<size_t>(n)] = 1;
    for (long k = 1; k < n; ++k)
      row[static_cast<size_t>(k)] = rows_[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)] +
                                    rows_[static_cast<size_t>(n - 1)][static_cast<size_t>(k)];
  }
}

const Int& PascalTriangle::choose(long n, long k) const {
  static const Int zero = 0;
  if (n < 0 || n >= static_cast<long>(rows_.size()))
    throw std::invalid_argument("PascalTriangle: row out of range");
  if (k < 0 || k > n) return zero;
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

}  // namespace commperm
