#include <commperm/factor.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace commperm {

namespace {

// Primes below 2^16, enough to factor anything below 2^32 by trial division.
const std::vector<long>& small_primes() {
  static const std::vector<long> primes = [] {
    constexpr long limit = 1 << 16;
    std::vector<bool> composite(limit, false);
    std::vector<long> out;
    for (long i = 2; i < limit; ++i) {
      if (composite[static_cast<size_t>(i)]) continue;
      out.push_back(i);
      for (long j = i * i; j < limit; j += i) composite[static_cast<size_t>(j)] = true;
    }
    return out;
  }();
  return primes;
}

}  // namespace

PrimeFactorization factorize(long n) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be positive, got " + std::to_string(n));
  constexpr long kMax = (1L << 32);
  if (n >= kMax) throw std::invalid_argument("factorize: n beyond trial-division range");
  PrimeFactorization out;
  long rest = n;
  for (long q : small_primes()) {
    if (q * q > rest) break;
    if (rest % q != 0) continue;
    int m = 0;
    while (rest % q == 0) {
      rest /= q;
      ++m;
    }
    out.push_back({q, m});
  }
  if (rest > 1) out.push_back({rest, 1});
  return out;
}

std::vector<long> divisors(long n) {
  const auto factors = factorize(n);
  std::vector<long> out{1};
  for (const auto& [q, m] : factors) {
    const size_t base = out.size();
    long qpow = 1;
    for (int e = 1; e <= m; ++e) {
      qpow *= q;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * qpow);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace commperm
