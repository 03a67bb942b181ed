#pragma once

#include <map>
#include <string>

#include "qmatrix/bigint.hpp"

namespace qmatrix {

/// Laurent polynomial in q with BigInt coefficients. Exact arithmetic; zero
/// coefficients are never stored, so equality is structural.
class LaurentQ {
 public:
  LaurentQ() = default;  // zero
  LaurentQ(long constant);
  LaurentQ(const BigInt& constant);

  /// coeff * q^k.
  static LaurentQ q_power(int k, BigInt coeff = BigInt(1));

  bool is_zero() const { return coeffs_.empty(); }

  bool operator==(const LaurentQ&) const = default;

  LaurentQ operator-() const;
  LaurentQ operator+(const LaurentQ& other) const;
  LaurentQ operator-(const LaurentQ& other) const;
  LaurentQ operator*(const LaurentQ& other) const;
  LaurentQ& operator+=(const LaurentQ& other);
  LaurentQ& operator*=(const LaurentQ& other);

  /// Value at q = 1 (the sum of all coefficients).
  BigInt at_one() const;

  /// exponent -> coefficient, ascending exponent, no zeros.
  const std::map<int, BigInt>& coefficients() const { return coeffs_; }

  /// Deterministic rendering, e.g. "q^-1 - q", "1", "0".
  std::string to_string() const;

 private:
  std::map<int, BigInt> coeffs_;

  void add_term(int exponent, const BigInt& coeff);
};

}  // namespace qmatrix
