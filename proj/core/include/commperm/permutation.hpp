#ifndef COMMPERM_PERMUTATION_HPP
#define COMMPERM_PERMUTATION_HPP

#include <string>
#include <vector>

namespace commperm {

// Permutation of {0..n-1} in one-line notation.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // validates bijection
  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  bool operator==(const Permutation&) const = default;

  bool commutes_with(const Permutation& other) const;

  // Display only, e.g. "(0 1 2)(3 4)" with fixed points omitted; "()" for
  // the identity.
  std::string cycle_string() const;

 private:
  std::vector<int> images_;
};

// (a * b)(i) = a(b(i))
Permutation compose(const Permutation& a, const Permutation& b);

// All n! permutations in lexicographic one-line order. Guarded to n <= 8.
std::vector<Permutation> all_permutations(int n);

}  // namespace commperm

#endif  // COMMPERM_PERMUTATION_HPP
