#include <commperm/arith.hpp>

#include <map>
#include <mutex>
#include <utility>

namespace commperm {

namespace {

// B on one prime power, integer-only: all numerator factors first, then the
// exact divisions. Every division must be exact; divexact enforces it.
Int subgroup_count_prime_power(int p, long q, int m) {
  const Int qz = q;
  Int result = 1;
  for (int i = 0; i < m; ++i) result *= ipow(qz, static_cast<unsigned long>(p + i)) - 1;
  for (int j = 1; j <= m; ++j) result = divexact(result, ipow(qz, static_cast<unsigned long>(j)) - 1);
  return result;
}

Int subgroup_count_uncached(int p, long n) {
  Int result = 1;
  for (const auto& [q, m] : factorize(n)) result *= subgroup_count_prime_power(p, q, m);
  return result;
}

Int flag_sum_recursive(int p, long n, std::map<std::pair<int, long>, Int>& memo) {
  if (p == 1) return 1;
  const auto key = std::make_pair(p, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Int total = 0;
  for (long d : divisors(n)) total += d * flag_sum_recursive(p - 1, d, memo);
  return memo.emplace(key, std::move(total)).first->second;
}

}  // namespace

Int subgroup_count(int p, long n) {
  if (p <= 0) throw std::invalid_argument("subgroup_count: p must be positive");
  if (n <= 0) throw std::invalid_argument("subgroup_count: n must be positive");
  static std::map<std::pair<int, long>, Int> memo;
  static std::mutex memo_mutex;
  const auto key = std::make_pair(p, n);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  Int value = subgroup_count_uncached(p, n);
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(key, std::move(value)).first->second;
}

Int flag_sum_oracle(int p, long n) {
  if (p <= 0) throw std::invalid_argument("flag_sum_oracle: p must be positive");
  if (n <= 0) throw std::invalid_argument("flag_sum_oracle: n must be positive");
  std::map<std::pair<int, long>, Int> memo;
  return flag_sum_recursive(p, n, memo);
}

Rat h_value(long n) {
  if (n <= 0) throw std::invalid_argument("h_value: n must be positive");
  Int num = 1;
  Int den = 1;
  for (const auto& [q, m] : factorize(n)) {
    const Int qz = q;
    // prime exponent m(m-1)/2 - m = m(m-3)/2
    const long e = static_cast<long>(m) * (m - 3) / 2;
    if (e >= 0)
      num *= ipow(qz, static_cast<unsigned long>(e));
    else
      den *= ipow(qz, static_cast<unsigned long>(-e));
    for (int j = 1; j <= m; ++j) den *= ipow(qz, static_cast<unsigned long>(j)) - 1;
  }
  return make_ratio(std::move(num), std::move(den));
}

}  // namespace commperm
