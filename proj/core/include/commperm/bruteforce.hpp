#ifndef COMMPERM_BRUTEFORCE_HPP
#define COMMPERM_BRUTEFORCE_HPP

#include <commperm/exact.hpp>
#include <commperm/permutation.hpp>

#include <span>

namespace commperm {

// Orbits of the group generated by the tuple acting on {0..n-1}: connected
// components of the graph with edges {i, sigma_j(i)}, via union-find.
// All permutations must act on the same n; the tuple must be non-empty.
int count_orbits(std::span<const Permutation> perms);

// All tau commuting with sigma, by filtering the full symmetric group.
// Guarded to n <= 8.
std::vector<Permutation> centralizer(const Permutation& sigma);

// Tally of commuting p-tuples on n elements by orbit count, straight from
// the definition: depth-first tuple extension where each new entry ranges
// over the common centralizer of the entries so far. Entry k of the result
// (index 0 unused) counts tuples with k orbits.
//
// Hard guard: n <= 6 and p <= 3, with n <= 5 when p = 3. Out-of-range
// requests are refused, never truncated.
std::vector<Int> brute_counts(int p, int n);

// True iff (p,n) is within the brute_counts guard.
bool brute_counts_in_guard(int p, int n);

}  // namespace commperm

#endif  // COMMPERM_BRUTEFORCE_HPP
