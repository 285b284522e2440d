#include <commperm/bruteforce.hpp>

#include <numeric>
#include <stdexcept>

namespace commperm {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int i) {
    while (parent[static_cast<size_t>(i)] != i) {
      parent[static_cast<size_t>(i)] = parent[static_cast<size_t>(parent[static_cast<size_t>(i)])];
      i = parent[static_cast<size_t>(i)];
    }
    return i;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

void extend_tuples(const std::vector<Permutation>& chosen, const std::vector<Permutation>& candidates,
                   int depth_left, std::vector<Int>& tally) {
  if (depth_left == 0) {
    const int k = count_orbits(chosen);
    tally[static_cast<size_t>(k)] += 1;
    return;
  }
  for (const Permutation& next : candidates) {
    std::vector<Permutation> extended = chosen;
    extended.push_back(next);
    if (depth_left == 1) {
      extend_tuples(extended, {}, 0, tally);
      continue;
    }
    std::vector<Permutation> narrowed;
    narrowed.reserve(candidates.size());
    for (const Permutation& tau : candidates)
      if (tau.commutes_with(next)) narrowed.push_back(tau);
    extend_tuples(extended, narrowed, depth_left - 1, tally);
  }
}

}  // namespace

int count_orbits(std::span<const Permutation> perms) {
  if (perms.empty()) throw std::invalid_argument("count_orbits: empty tuple");
  const int n = perms.front().size();
  for (const Permutation& p : perms)
    if (p.size() != n) throw std::invalid_argument("count_orbits: size mismatch");
  UnionFind uf(n);
  for (const Permutation& p : perms)
    for (int i = 0; i < n; ++i) uf.unite(i, p(i));
  int orbits = 0;
  for (int i = 0; i < n; ++i)
    if (uf.find(i) == i) ++orbits;
  return orbits;
}

std::vector<Permutation> centralizer(const Permutation& sigma) {
  std::vector<Permutation> out;
  for (const Permutation& tau : all_permutations(sigma.size()))
    if (tau.commutes_with(sigma)) out.push_back(tau);
  return out;
}

bool brute_counts_in_guard(int p, int n) {
  if (p < 1 || n < 1) return false;
  if (n > 6 || p > 3) return false;
  if (p == 3 && n > 5) return false;
  return true;
}

std::vector<Int> brute_counts(int p, int n) {
  if (p < 1 || n < 1) throw std::invalid_argument("brute_counts: p and n must be positive");
  if (!brute_counts_in_guard(p, n))
    throw std::invalid_argument("brute_counts: (p=" + std::to_string(p) + ", n=" +
                                std::to_string(n) + ") outside the enumeration guard "
                                "(n <= 6, p <= 3, n <= 5 when p = 3)");
  std::vector<Int> tally(static_cast<size_t>(n) + 1, Int(0));
  extend_tuples({}, all_permutations(n), p, tally);
  return tally;
}

}  // namespace commperm
