#ifndef COMMPERM_ARITH_HPP
#define COMMPERM_ARITH_HPP

#include <commperm/exact.hpp>
#include <commperm/factor.hpp>

namespace commperm {

// B(p,n): the number of index-n subgroups of Z^p. Multiplicative in n; on a
// prime power q^m it equals
//
//   (q^p - 1)(q^{p+1} - 1) ... (q^{p+m-1} - 1)
//   -----------------------------------------
//   (q - 1)(q^2 - 1) ... (q^m - 1)
//
// computed integer-only (numerator product, then exact division by each
// denominator factor). Results are memoized by (p, n); the memo is guarded
// by a mutex and inserts are idempotent, so concurrent callers see
// identical values.
Int subgroup_count(int p, long n);

// Same quantity from the definition: the sum of s_1*s_2*...*s_{p-1} over all
// divisor chains s_1 | s_2 | ... | s_{p-1} | n. Direct recursive enumeration,
// independent of the closed form above; intended for cross-validation at
// oracle scale (n up to a few hundred, p up to ~8). For p = 1 the single
// empty chain contributes 1.
Int flag_sum_oracle(int p, long n);

// H(n): multiplicative rational function giving the leading constant in
// B(p,n)/n ~ H(n) * n^p as p grows. On a prime power q^m:
//
//   q^(m(m-1)/2 - m) / [(q - 1)(q^2 - 1) ... (q^m - 1)]
//
// The prime exponent is negative for m <= 2, so q^(m - m(m-1)/2) moves to
// the denominator. Always returned in lowest terms with positive
// denominator; H(1) = 1 (empty product).
Rat h_value(long n);

}  // namespace commperm

#endif  // COMMPERM_ARITH_HPP
