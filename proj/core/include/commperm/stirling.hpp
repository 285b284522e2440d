#ifndef COMMPERM_STIRLING_HPP
#define COMMPERM_STIRLING_HPP

#include <commperm/exact.hpp>

namespace commperm {

// Unsigned Stirling numbers of the first kind, c(n,k) = number of
// permutations of n elements with k cycles.
// Recurrence: c(n,k) = c(n-1,k-1) + (n-1)*c(n-1,k), c(0,0) = 1.
Int stirling_first(long n, long k);

// Rows 0..nmax of the c(n,k) triangle; row n has entries k = 0..n.
std::vector<std::vector<Int>> stirling_triangle(long nmax);

}  // namespace commperm

#endif  // COMMPERM_STIRLING_HPP
