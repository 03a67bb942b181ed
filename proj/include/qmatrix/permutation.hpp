#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qmatrix {

/// Permutation of [1,n] in one-line notation, 1-indexed. Construction
/// validates that the images form a bijection; values are immutable
/// afterwards, so they are safe to share between threads.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(images_.size()); }

  /// Image of position i (1-indexed).
  int operator()(int i) const;

  const std::vector<int>& images() const { return images_; }

  /// Number of inversions: pairs i < j with sigma(i) > sigma(j).
  std::int64_t inversions() const;

  bool operator==(const Permutation&) const = default;

  /// Lexicographic order on one-line notation; used wherever deterministic
  /// enumeration or serialization order is required.
  std::strong_ordering operator<=>(const Permutation& other) const {
    return images_ <=> other.images_;
  }

  std::string to_string() const;

 private:
  std::vector<int> images_;
};

/// The longest element w0: i -> n+1-i. Maximum of the reverse Bruhat order.
Permutation longest_element(int n);

/// The block rotation sigma0: i -> p+i for i <= m, i -> i-m for i > m.
/// Requires m, p >= 2.
Permutation sigma_zero(int m, int p);

/// Level-j comparison: sort a([1,j]) and b([1,j]) ascending and compare
/// componentwise. Requires 1 <= j <= n-1 and equal sizes.
bool leq_j(const Permutation& a, const Permutation& b, int j);

/// Reverse Bruhat order: a <= b iff leq_j(a, b, j) for every j in [1,n-1],
/// so the identity is the minimum and longest_element(n) the maximum.
/// Evaluated incrementally over sorted prefixes, O(n^2).
bool bruhat_leq(const Permutation& a, const Permutation& b);

/// Displacement test: -p <= i - sigma(i) <= m for all i. Equivalent to
/// bruhat_leq(sigma, sigma_zero(m, p)) for permutations of size m+p.
bool in_restricted_set(const Permutation& sigma, int m, int p);

/// (a o b)(i) = a(b(i)). Sizes must agree.
Permutation compose(const Permutation& a, const Permutation& b);

Permutation inverse(const Permutation& a);

/// An ordered pair (w+, w-) of permutations of equal size.
struct PairW {
  Permutation plus;
  Permutation minus;

  PairW(Permutation plus_arg, Permutation minus_arg);

  bool operator==(const PairW&) const = default;
};

}  // namespace qmatrix
