#ifndef COMMPERM_FACTOR_HPP
#define COMMPERM_FACTOR_HPP

#include <vector>

namespace commperm {

struct PrimePower {
  long prime;
  int exp;
  bool operator==(const PrimePower&) const = default;
};

// Ordered by strictly increasing prime; empty for n = 1.
using PrimeFactorization = std::vector<PrimePower>;

// Trial division against a cached prime sieve. Deterministic; rejects n <= 0.
// Handles any n below (2^16)^2, far beyond the scan bounds used here.
PrimeFactorization factorize(long n);

// All divisors of n, sorted ascending.
std::vector<long> divisors(long n);

}  // namespace commperm

#endif  // COMMPERM_FACTOR_HPP
