#ifndef COMMPERM_EXACT_HPP
#define COMMPERM_EXACT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace commperm {

// All counting is done in exact arbitrary-precision arithmetic.
using Int = mpz_class;
using Rat = mpq_class;

inline Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Int ipow(unsigned long base, unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

// Power of a canonical rational. Coprime num/den stay coprime under powers,
// so no re-canonicalization is needed.
inline Rat rpow(const Rat& base, unsigned long exp) {
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
  return r;
}

// Exact division; throws if b does not divide a. Inexact division in any
// counting path means an internal consistency failure, never user error.
inline Int divexact(const Int& a, const Int& b) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw std::logic_error("divexact: " + a.get_str() + " not divisible by " + b.get_str());
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Rat make_ratio(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("make_ratio: zero denominator");
  Rat q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

Int factorial(long n);

// Dense table of factorials 0!..nmax!, shared across scan workers (read-only).
class FactorialTable {
 public:
  explicit FactorialTable(long nmax);
  const Int& at(long n) const {
    if (n < 0 || n >= static_cast<long>(f_.size()))
      throw std::invalid_argument("FactorialTable: index " + std::to_string(n) + " out of range");
    return f_[static_cast<size_t>(n)];
  }
  long max() const { return static_cast<long>(f_.size()) - 1; }

 private:
  std::vector<Int> f_;
};

// Binomial coefficients as exact integers, built once per table.
class PascalTriangle {
 public:
  explicit PascalTriangle(long nmax);
  const Int& choose(long n, long k) const;
  long max() const { return static_cast<long>(rows_.size()) - 1; }

 private:
  std::vector<std::vector<Int>> rows_;
};

}  // namespace commperm

#endif  // COMMPERM_EXACT_HPP
