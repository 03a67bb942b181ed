#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qmatrix {

using Rational = boost::multiprecision::cpp_rational;

/// Canonical "num/den" rendering (lowest terms, denominator always written).
std::string rational_to_string(const Rational& value);
Rational rational_from_string(const std::string& text);

/// Dense n x n matrix of exact rationals with 1-indexed accessors.
class RationalMatrix {
 public:
  explicit RationalMatrix(int n);

  static RationalMatrix identity(int n);

  /// Entries drawn uniformly from [lo, hi] using a seeded deterministic
  /// generator; the same seed always yields the same matrix.
  static RationalMatrix random_integer(int n, std::uint64_t seed, int lo = -9, int hi = 9);

  int size() const { return n_; }
  Rational& at(int i, int a);
  const Rational& at(int i, int a) const;

  bool operator==(const RationalMatrix&) const = default;

  Rational diagonal_product() const;

  /// Exact determinant by rational Gaussian elimination with pivoting.
  Rational determinant() const;

 private:
  int n_;
  std::vector<Rational> entries_;
};

/// A position in the pivot index set E = ([1,n]^2 ∪ {(n,n+1)}) \ {(m,n)};
/// (n, n+1) is the sentinel initial state of a run.
struct StepIndex {
  int row = 0;
  int col = 0;

  bool operator==(const StepIndex&) const = default;
};

/// Reading of the row bound in the first branch of the (m,p)-ordering.
///
/// RowBoundInclusive treats the condition as i <= m. This is the reading the
/// library executes: it keeps the relation reflexive and total on row-m
/// pairs and makes (m-1, n) the minimum of E, consistent with the successor
/// structure the elimination relies on. RowBoundStrict (i < m) is retained
/// only so the difference can be audited; it is not a total order on E.
enum class MpOrderReading { RowBoundInclusive, RowBoundStrict };

/// The (m,p)-ordering:
///   target row j >  m: (i,a) <= (j,b)  iff  i < j, or i = j and a <= b;
///   target row j <= m: (i,a) <= (j,b)  iff  i <= m and (a > b, or a = b and i >= j).
bool mp_leq(StepIndex a, StepIndex b, int m,
            MpOrderReading reading = MpOrderReading::RowBoundInclusive);

/// Strict companion of mp_leq.
bool mp_less(StepIndex a, StepIndex b, int m,
             MpOrderReading reading = MpOrderReading::RowBoundInclusive);

/// E in ascending (m,p)-order: first (m-1, n), last (n, n+1). The successor
/// of a step is the next list element. Requires m, p >= 2.
std::vector<StepIndex> enumerate_index_set(int m, int p);

/// An elimination step needed to divide by a vanishing pivot entry.
class ZeroPivotError : public std::runtime_error {
 public:
  explicit ZeroPivotError(StepIndex pivot_arg);

  StepIndex pivot;
};

/// One step at pivot (j, beta): entry (i, alpha) becomes
///   Y[i,a] - Y[i,b] * Y[j,b]^-1 * Y[j,a]
/// when (j < i <= m and b < a) or (i < j, a < b and j > m); all other
/// entries are unchanged. A vanishing pivot only raises ZeroPivotError when
/// some affected entry actually requires the division (a nonzero
/// Y[i,b]*Y[j,a]); otherwise the step is the identity, so diagonal matrices
/// pass through every step untouched.
RationalMatrix dd_step(const RationalMatrix& y, StepIndex pivot, int m);

/// Exact inverse of dd_step (the affected entries gain the product instead
/// of losing it; pivot row/column entries are fixed by the step, which
/// forces this form).
RationalMatrix dd_inverse_step(const RationalMatrix& y, StepIndex pivot, int m);

/// Applies dd_step at every pivot strictly descending from (n,n) down to
/// target inclusive; target (n, n+1) returns the input unchanged.
RationalMatrix dd_run(const RationalMatrix& y, int m, StepIndex target);

/// Applies dd_inverse_step ascending from target up to (n,n), undoing
/// dd_run(y, m, target) exactly.
RationalMatrix dd_inverse_run(const RationalMatrix& y, int m, StepIndex target);

}  // namespace qmatrix
