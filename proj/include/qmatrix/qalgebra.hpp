#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qmatrix/laurent.hpp"

namespace qmatrix {

/// Dimensions of a quantized matrix algebra. The generators Z[i,a] sit at
/// the positions (i, a) of a rows x cols grid, 1-indexed, and are ordered
/// lexicographically by (i, a). Every 2x2 submatrix
///   x = Z[i,a]  y = Z[i,b]
///   z = Z[j,a]  t = Z[j,b]        (i < j, a < b)
/// obeys
///   yx = q^-1 xy   zx = q^-1 xz   zy = yz
///   ty = q^-1 yt   tz = q^-1 zt   tx = xt - (q - q^-1) yz.
struct AlgebraShape {
  int rows;
  int cols;

  AlgebraShape(int rows_arg, int cols_arg);

  bool operator==(const AlgebraShape&) const = default;

  int generator_count() const { return rows * cols; }
  bool valid_position(int row, int col) const {
    return row >= 1 && row <= rows && col >= 1 && col <= cols;
  }
  int id_of(int row, int col) const;                 // 0-based lex id
  std::pair<int, int> position_of(int id) const;     // (row, col)
};

/// PBW monomial as the exponent vector over the lex-ordered generators:
/// (e_0, e_1, ...) stands for Z[1,1]^e0 Z[1,2]^e1 ...
using Monomial = std::vector<std::uint32_t>;

/// A word in the generators, as (row, col) positions.
using GenWord = std::vector<std::pair<int, int>>;

/// Which out-of-order adjacent pair a straightening pass rewrites first.
/// Both strategies reach the same normal form; the choice is exposed so the
/// agreement can be tested directly.
enum class RewriteStrategy { LeftmostFirst, RightmostFirst };

/// Element of the quantized matrix algebra in normal form: a sorted map from
/// PBW monomials to Laurent coefficients. Immutable value semantics; the
/// algebra shape travels with the value and must agree between operands.
class QPoly {
 public:
  explicit QPoly(AlgebraShape shape) : shape_(shape) {}

  static QPoly constant(AlgebraShape shape, LaurentQ value);
  static QPoly generator(AlgebraShape shape, int row, int col);

  const AlgebraShape& shape() const { return shape_; }
  const std::map<Monomial, LaurentQ>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const QPoly&) const = default;

  QPoly operator+(const QPoly& other) const;
  QPoly operator-(const QPoly& other) const;
  QPoly operator*(const QPoly& other) const;
  QPoly operator-() const;

  /// Deterministic rendering, e.g. "Z[1,1]*Z[2,2] - q*Z[1,2]*Z[2,1]".
  std::string to_string() const;

  /// Used by the straightening engine; monomial must be in normal form.
  void add_monomial(const Monomial& monomial, const LaurentQ& coeff);

 private:
  AlgebraShape shape_;
  std::map<Monomial, LaurentQ> terms_;
};

/// Straighten coeff * (product of the word's generators) to normal form by
/// repeatedly swapping adjacent out-of-order pairs with the 2x2 relations.
/// Terminates: every rewrite replaces a word by lexicographically smaller
/// words of the same length.
QPoly normalize(const AlgebraShape& shape, const GenWord& word, const LaurentQ& coeff,
                RewriteStrategy strategy = RewriteStrategy::LeftmostFirst);

QPoly add(const QPoly& a, const QPoly& b);
QPoly mul(const QPoly& a, const QPoly& b);

/// Row and column index sets of a quantum minor: strictly increasing, equal
/// nonzero length, within the algebra grid.
struct MinorSpec {
  std::vector<int> rows;
  std::vector<int> cols;

  MinorSpec(std::vector<int> rows_arg, std::vector<int> cols_arg);

  int order() const { return static_cast<int>(rows.size()); }
};

/// det_q of the submatrix named by spec:
/// sum over permutations s of the columns of (-q)^inv(s) Z[i1, a_s(1)] ...
QPoly quantum_minor(const AlgebraShape& shape, const MinorSpec& spec);

/// The full n x n quantum determinant.
QPoly quantum_det(int n);

/// True iff x commutes with every generator of its algebra (all commutators
/// straighten to zero).
bool is_central(const QPoly& x);

}  // namespace qmatrix
