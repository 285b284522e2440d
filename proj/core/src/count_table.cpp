#include <commperm/count_table.hpp>

#include <commperm/arith.hpp>

#include <algorithm>
#include <utility>

namespace commperm {

CountTable::CountTable(int p, std::vector<std::vector<Int>> rows)
    : p_(p), rows_(std::move(rows)) {}

const Int& CountTable::at(long n, long k) const {
  static const Int zero = 0;
  if (n < 1 || n > nmax()) throw std::invalid_argument("CountTable::at: n out of range");
  if (k < 1 || k > n) return zero;
  return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

const std::vector<Int>& CountTable::row(long n) const {
  if (n < 1 || n > nmax()) throw std::invalid_argument("CountTable::row: n out of range");
  return rows_[static_cast<size_t>(n)];
}

Int CountTable::row_total(long n) const {
  Int total = 0;
  for (const Int& v : row(n)) total += v;
  return total;
}

CountTable build_table(int p, long nmax) {
  if (p < 1) throw std::invalid_argument("build_table: p must be positive");
  if (nmax < 1) throw std::invalid_argument("build_table: nmax must be positive");

  // Per-m weight of the recurrence: C(n-1, m-1) * (m-1)! * B(p,m).
  // The n-independent part (m-1)! * B(p,m) is precomputed.
  const PascalTriangle pascal(nmax);
  std::vector<Int> weight(static_cast<size_t>(nmax) + 1);
  {
    Int fac = 1;  // (m-1)!
    for (long m = 1; m <= nmax; ++m) {
      weight[static_cast<size_t>(m)] = fac * subgroup_count(p, m);
      fac *= m;
    }
  }

  std::vector<std::vector<Int>> rows(static_cast<size_t>(nmax) + 1);
  rows[0] = {Int(1)};
  for (long n = 1; n <= nmax; ++n) {
    std::vector<Int> row(static_cast<size_t>(n) + 1, Int(0));
    for (long m = 1; m <= n; ++m) {
      const Int coeff = pascal.choose(n - 1, m - 1) * weight[static_cast<size_t>(m)];
      const auto& prev = rows[static_cast<size_t>(n - m)];
      // x * P_{n-m}: coefficient j of P_{n-m} feeds coefficient j+1 of P_n.
      for (size_t j = 0; j < prev.size(); ++j) row[j + 1] += coeff * prev[j];
    }
    rows[static_cast<size_t>(n)] = std::move(row);
  }
  return CountTable(p, std::move(rows));
}

namespace {

// Sum over partitions of `remaining` into `parts_left` parts, each at most
// `max_part`, of prod_i B(p, lambda_i)/lambda_i divided by the product of
// the multiplicities' factorials. `mult` tracks the run length of the part
// value chosen one level up.
Rat composition_sum(int p, long remaining, long parts_left, long max_part, long prev_part,
                    long prev_run, const Rat& running) {
  if (parts_left == 0) {
    if (remaining != 0) return Rat(0);
    Rat term = running;
    term /= factorial(prev_run);
    return term;
  }
  Rat total = 0;
  const long hi = std::min(max_part, remaining - (parts_left - 1));
  const long lo = (remaining + parts_left - 1) / parts_left;  // keep the tail feasible
  for (long part = hi; part >= lo; --part) {
    Rat next = running * make_ratio(subgroup_count(p, part), part);
    long run = 1;
    if (part == prev_part) {
      run = prev_run + 1;
    } else {
      next /= factorial(prev_run);
    }
    total += composition_sum(p, remaining - part, parts_left - 1, part, part, run, next);
  }
  return total;
}

}  // namespace

Int a_composition(int p, long n, long k) {
  if (p < 1) throw std::invalid_argument("a_composition: p must be positive");
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("a_composition: need 1 <= k <= n");
  // n!/k! * sum over compositions == n! * sum over partitions with each
  // partition weighted by 1/prod(multiplicity!).
  Rat sum = composition_sum(p, n, k, n, /*prev_part=*/0, /*prev_run=*/0, Rat(1));
  Rat result = sum * Rat(factorial(n));
  if (result.get_den() != 1)
    throw std::logic_error("a_composition: non-integer total " + result.get_str());
  return result.get_num();
}

}  // namespace commperm
