#include <commperm/stirling.hpp>

namespace commperm {

std::vector<std::vector<Int>> stirling_triangle(long nmax) {
  if (nmax < 0) throw std::invalid_argument("stirling_triangle: negative bound");
  std::vector<std::vector<Int>> rows(static_cast<size_t>(nmax) + 1);
  rows[0] = {Int(1)};
  for (long n = 1; n <= nmax; ++n) {
    auto& row = rows[static_cast<size_t>(n)];
    const auto& prev = rows[static_cast<size_t>(n - 1)];
    row.assign(static_cast<size_t>(n) + 1, Int(0));
    for (long k = 1; k <= n; ++k) {
      Int v = prev[static_cast<size_t>(k - 1)];
      if (k < n) v += (n - 1) * prev[static_cast<size_t>(k)];
      row[static_cast<size_t>(k)] = std::move(v);
    }
  }
  return rows;
}

Int stirling_first(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("stirling_first: need 0 <= k <= n");
  return stirling_triangle(n)[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

}  // namespace commperm
