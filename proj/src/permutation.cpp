#include "qmatrix/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qmatrix {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw std::invalid_argument("permutation must have size >= 1");
  }
  std::vector<int> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k] != static_cast<int>(k) + 1) {
      throw std::invalid_argument("images are not a bijection of [1,n]");
    }
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("permutation must have size >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

int Permutation::operator()(int i) const {
  if (i < 1 || i > size()) throw std::out_of_range("position out of range");
  return images_[static_cast<std::size_t>(i) - 1];
}

std::int64_t Permutation::inversions() const {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) {
      if (images_[i] > images_[j]) ++count;
    }
  }
  return count;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) out << ',';
    out << images_[i];
  }
  out << ')';
  return out.str();
}

Permutation longest_element(int n) {
  if (n < 1) throw std::invalid_argument("permutation must have size >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v[static_cast<std::size_t>(i) - 1] = n + 1 - i;
  return Permutation(std::move(v));
}

Permutation sigma_zero(int m, int p) {
  if (m < 2 || p < 2) throw std::invalid_argument("sigma_zero requires m, p >= 2");
  const int n = m + p;
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    v[static_cast<std::size_t>(i) - 1] = (i <= m) ? p + i : i - m;
  }
  return Permutation(std::move(v));
}

namespace {

void require_equal_size(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("permutation sizes differ");
  }
}

// Insert value into a sorted vector, keeping it sorted.
void sorted_insert(std::vector<int>& v, int value) {
  v.insert(std::upper_bound(v.begin(), v.end(), value), value);
}

}  // namespace

bool leq_j(const Permutation& a, const Permutation& b, int j) {
  require_equal_size(a, b);
  if (j < 1 || j >= a.size()) throw std::out_of_range("level j out of range");
  std::vector<int> pa(a.images().begin(), a.images().begin() + j);
  std::vector<int> pb(b.images().begin(), b.images().begin() + j);
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  for (int k = 0; k < j; ++k) {
    if (pa[static_cast<std::size_t>(k)] > pb[static_cast<std::size_t>(k)]) return false;
  }
  return true;
}

bool bruhat_leq(const Permutation& a, const Permutation& b) {
  require_equal_size(a, b);
  const int n = a.size();
  std::vector<int> pa, pb;
  pa.reserve(static_cast<std::size_t>(n));
  pb.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n - 1; ++j) {
    sorted_insert(pa, a(j));
    sorted_insert(pb, b(j));
    for (int k = 0; k < j; ++k) {
      if (pa[static_cast<std::size_t>(k)] > pb[static_cast<std::size_t>(k)]) return false;
    }
  }
  return true;
}

bool in_restricted_set(const Permutation& sigma, int m, int p) {
  if (sigma.size() != m + p) {
    throw std::invalid_argument("permutation size must equal m + p");
  }
  for (int i = 1; i <= sigma.size(); ++i) {
    const int d = i - sigma(i);
    if (d < -p || d > m) return false;
  }
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  require_equal_size(a, b);
  std::vector<int> v(static_cast<std::size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) v[static_cast<std::size_t>(i) - 1] = a(b(i));
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& a) {
  std::vector<int> v(static_cast<std::size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) v[static_cast<std::size_t>(a(i)) - 1] = i;
  return Permutation(std::move(v));
}

PairW::PairW(Permutation plus_arg, Permutation minus_arg)
    : plus(std::move(plus_arg)), minus(std::move(minus_arg)) {
  if (plus.size() != minus.size()) {
    throw std::invalid_argument("pair components must have equal size");
  }
}

}  // namespace qmatrix
