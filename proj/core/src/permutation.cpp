#include <commperm/permutation.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace commperm {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("Permutation::identity: negative size");
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> img(static_cast<size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) img[static_cast<size_t>(i)] = a(b(i));
  return Permutation(std::move(img));
}

bool Permutation::commutes_with(const Permutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("commutes_with: size mismatch");
  for (int i = 0; i < size(); ++i)
    if ((*this)(other(i)) != other((*this)(i))) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(static_cast<size_t>(size()), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[static_cast<size_t>(i)] || (*this)(i) == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
      j = (*this)(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("all_permutations: n must be in 1..8");
  std::vector<int> img(static_cast<size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace commperm
