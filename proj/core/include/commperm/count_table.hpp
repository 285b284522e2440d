#ifndef COMMPERM_COUNT_TABLE_HPP
#define COMMPERM_COUNT_TABLE_HPP

#include <commperm/exact.hpp>

namespace commperm {

// A(p,n,k): number of ordered p-tuples of pairwise-commuting permutations of
// n elements whose joint action has exactly k orbits. Immutable once built;
// accessors treat entries outside 1 <= k <= n as 0.
class CountTable {
 public:
  CountTable(int p, std::vector<std::vector<Int>> rows);

  int p() const { return p_; }
  long nmax() const { return static_cast<long>(rows_.size()) - 1; }

  // A(p,n,k); zero outside 1 <= k <= n.
  const Int& at(long n, long k) const;

  // Row n as entries indexed by k (index 0 unused).
  const std::vector<Int>& row(long n) const;

  // Sum over k of A(p,n,k) = total number of commuting p-tuples on n elements.
  Int row_total(long n) const;

 private:
  int p_;
  std::vector<std::vector<Int>> rows_;
};

// Builds the full table for 1 <= k <= n <= nmax via the convolution
// recurrence on the row generating polynomials P_n(x) = sum_k A(p,n,k) x^k:
//
//   P_0 = 1,
//   P_n(x) = sum_{m=1..n} C(n-1, m-1) * (m-1)! * B(p,m) * x * P_{n-m}(x).
//
// This is the coefficient recurrence of the exponential-formula identity
// behind the composition sum (see a_composition), obtained by
// differentiating exp(y * sum_m B(p,m)/m x^m) once in x. Integer-only:
// binomials come from a Pascal triangle, B(p,m) from subgroup_count.
CountTable build_table(int p, long nmax);

// The same A(p,n,k) straight from the composition sum
//
//   A(p,n,k) = n!/k! * sum_{n_1+...+n_k = n, n_i >= 1} prod_i B(p,n_i)/n_i
//
// reorganized over partitions of n into k parts with multinomial weights.
// Exponential in n; serves as an independent cross-check of build_table at
// small scale (n <= ~40).
Int a_composition(int p, long n, long k);

}  // namespace commperm

#endif  // COMMPERM_COUNT_TABLE_HPP
