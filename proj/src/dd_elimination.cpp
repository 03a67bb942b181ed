#include "qmatrix/dd_elimination.hpp"

#include <algorithm>
#include <sstream>

namespace qmatrix {

std::string rational_to_string(const Rational& value) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(value) << '/'
      << boost::multiprecision::denominator(value);
  return out.str();
}

Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(boost::multiprecision::cpp_int(text));
  }
  boost::multiprecision::cpp_int num(text.substr(0, slash));
  boost::multiprecision::cpp_int den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num, den);
}

RationalMatrix::RationalMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
  entries_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix result(n);
  for (int i = 1; i <= n; ++i) result.at(i, i) = 1;
  return result;
}

RationalMatrix RationalMatrix::random_integer(int n, std::uint64_t seed, int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty sampling range");
  RationalMatrix result(n);
  // splitmix64; fixed here so seeded output is identical across platforms.
  std::uint64_t state = seed;
  auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  for (int i = 1; i <= n; ++i) {
    for (int a = 1; a <= n; ++a) {
      result.at(i, a) = lo + static_cast<int>(next() % span);
    }
  }
  return result;
}

Rational& RationalMatrix::at(int i, int a) {
  if (i < 1 || i > n_ || a < 1 || a > n_) throw std::out_of_range("matrix index out of range");
  return entries_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(a - 1)];
}

const Rational& RationalMatrix::at(int i, int a) const {
  if (i < 1 || i > n_ || a < 1 || a > n_) throw std::out_of_range("matrix index out of range");
  return entries_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(a - 1)];
}

Rational RationalMatrix::diagonal_product() const {
  Rational prod = 1;
  for (int i = 1; i <= n_; ++i) prod *= at(i, i);
  return prod;
}

Rational RationalMatrix::determinant() const {
  RationalMatrix work = *this;
  Rational det = 1;
  for (int col = 1; col <= n_; ++col) {
    int pivot_row = 0;
    for (int row = col; row <= n_; ++row) {
      if (work.at(row, col) != 0) {
        pivot_row = row;
        break;
      }
    }
    if (pivot_row == 0) return 0;
    if (pivot_row != col) {
      for (int a = 1; a <= n_; ++a) std::swap(work.at(col, a), work.at(pivot_row, a));
      det = -det;
    }
    const Rational pivot = work.at(col, col);
    det *= pivot;
    for (int row = col + 1; row <= n_; ++row) {
      if (work.at(row, col) == 0) continue;
      const Rational factor = work.at(row, col) / pivot;
      for (int a = col; a <= n_; ++a) {
        work.at(row, a) -= factor * work.at(col, a);
      }
    }
  }
  return det;
}

bool mp_leq(StepIndex a, StepIndex b, int m, MpOrderReading reading) {
  if (b.row > m) {
    return a.row < b.row || (a.row == b.row && a.col <= b.col);
  }
  const bool row_ok =
      (reading == MpOrderReading::RowBoundInclusive) ? (a.row <= m) : (a.row < m);
  return row_ok && (a.col > b.col || (a.col == b.col && a.row >= b.row));
}

bool mp_less(StepIndex a, StepIndex b, int m, MpOrderReading reading) {
  return !(a == b) && mp_leq(a, b, m, reading);
}

std::vector<StepIndex> enumerate_index_set(int m, int p) {
  if (m < 2 || p < 2) throw std::invalid_argument("index set requires m, p >= 2");
  const int n = m + p;
  std::vector<StepIndex> out;
  out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  // Rows <= m ascend by column n..1, row m..1; (m, n) is excluded from E.
  for (int col = n; col >= 1; --col) {
    for (int row = m; row >= 1; --row) {
      if (row == m && col == n) continue;
      out.push_back({row, col});
    }
  }
  // Rows > m ascend lexicographically, then the sentinel.
  for (int row = m + 1; row <= n; ++row) {
    for (int col = 1; col <= n; ++col) out.push_back({row, col});
  }
  out.push_back({n, n + 1});
  return out;
}

ZeroPivotError::ZeroPivotError(StepIndex pivot_arg)
    : std::runtime_error("zero pivot at (" + std::to_string(pivot_arg.row) + "," +
                         std::to_string(pivot_arg.col) + ")"),
      pivot(pivot_arg) {}

namespace {

bool in_index_set(StepIndex r, int n, int m) {
  if (r == StepIndex{n, n + 1}) return true;
  if (r == StepIndex{m, n}) return false;
  return r.row >= 1 && r.row <= n && r.col >= 1 && r.col <= n;
}

bool step_affects(StepIndex pivot, int i, int a, int m) {
  const int j = pivot.row;
  const int b = pivot.col;
  if (j < i && i <= m && b < a) return true;
  if (i < j && a < b && j > m) return true;
  return false;
}

enum class StepDirection { Forward, Inverse };

RationalMatrix apply_step(const RationalMatrix& y, StepIndex pivot, int m,
                          StepDirection direction) {
  const int n = y.size();
  if (m < 2 || n - m < 2) throw std::invalid_argument("matrix size incompatible with m");
  if (pivot == StepIndex{n, n + 1} || !in_index_set(pivot, n, m)) {
    throw std::invalid_argument("pivot is not an elimination step");
  }
  const Rational& pivot_value = y.at(pivot.row, pivot.col);
  RationalMatrix out = y;
  for (int i = 1; i <= n; ++i) {
    for (int a = 1; a <= n; ++a) {
      if (!step_affects(pivot, i, a, m)) continue;
      const Rational numerator = y.at(i, pivot.col) * y.at(pivot.row, a);
      if (numerator == 0) continue;
      if (pivot_value == 0) throw ZeroPivotError(pivot);
      const Rational correction = numerator / pivot_value;
      if (direction == StepDirection::Forward) {
        out.at(i, a) -= correction;
      } else {
        out.at(i, a) += correction;
      }
    }
  }
  return out;
}

}  // namespace

RationalMatrix dd_step(const RationalMatrix& y, StepIndex pivot, int m) {
  return apply_step(y, pivot, m, StepDirection::Forward);
}

RationalMatrix dd_inverse_step(const RationalMatrix& y, StepIndex pivot, int m) {
  return apply_step(y, pivot, m, StepDirection::Inverse);
}

RationalMatrix dd_run(const RationalMatrix& y, int m, StepIndex target) {
  const int n = y.size();
  const int p = n - m;
  if (m < 2 || p < 2) throw std::invalid_argument("dd_run requires 2 <= m <= n-2");
  const std::vector<StepIndex> steps = enumerate_index_set(m, p);
  auto it = std::find(steps.begin(), steps.end(), target);
  if (it == steps.end()) throw std::invalid_argument("target is not in the index set");
  RationalMatrix state = y;
  if (target == StepIndex{n, n + 1}) return state;  // empty pivot sequence
  // Pivots descend from (n,n); the sentinel (n,n+1) is the input state.
  for (auto rit = steps.rbegin() + 1; rit != steps.rend(); ++rit) {
    state = dd_step(state, *rit, m);
    if (*rit == target) break;
  }
  return state;
}

RationalMatrix dd_inverse_run(const RationalMatrix& y, int m, StepIndex target) {
  const int n = y.size();
  const int p = n - m;
  if (m < 2 || p < 2) throw std::invalid_argument("dd_inverse_run requires 2 <= m <= n-2");
  const std::vector<StepIndex> steps = enumerate_index_set(m, p);
  auto it = std::find(steps.begin(), steps.end(), target);
  if (it == steps.end()) throw std::invalid_argument("target is not in the index set");
  RationalMatrix state = y;
  for (; it != steps.end() && !(*it == StepIndex{n, n + 1}); ++it) {
    state = dd_inverse_step(state, *it, m);
  }
  return state;
}

}  // namespace qmatrix
