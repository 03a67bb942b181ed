#include "qmatrix/laurent.hpp"

#include <sstream>

namespace qmatrix {

LaurentQ::LaurentQ(long constant) {
  if (constant != 0) coeffs_[0] = constant;
}

LaurentQ::LaurentQ(const BigInt& constant) {
  if (constant != 0) coeffs_[0] = constant;
}

LaurentQ LaurentQ::q_power(int k, BigInt coeff) {
  LaurentQ result;
  if (coeff != 0) result.coeffs_[k] = std::move(coeff);
  return result;
}

void LaurentQ::add_term(int exponent, const BigInt& coeff) {
  auto it = coeffs_.find(exponent);
  if (it == coeffs_.end()) {
    if (coeff != 0) coeffs_.emplace(exponent, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) coeffs_.erase(it);
}

LaurentQ LaurentQ::operator-() const {
  LaurentQ result;
  for (const auto& [e, c] : coeffs_) result.coeffs_[e] = -c;
  return result;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, c);
  return *this;
}

LaurentQ LaurentQ::operator+(const LaurentQ& other) const {
  LaurentQ result = *this;
  result += other;
  return result;
}

LaurentQ LaurentQ::operator-(const LaurentQ& other) const {
  LaurentQ result = *this;
  for (const auto& [e, c] : other.coeffs_) result.add_term(e, -c);
  return result;
}

LaurentQ LaurentQ::operator*(const LaurentQ& other) const {
  LaurentQ result;
  for (const auto& [e1, c1] : coeffs_) {
    for (const auto& [e2, c2] : other.coeffs_) {
      result.add_term(e1 + e2, c1 * c2);
    }
  }
  return result;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& other) {
  *this = *this * other;
  return *this;
}

BigInt LaurentQ::at_one() const {
  BigInt sum = 0;
  for (const auto& [e, c] : coeffs_) sum += c;
  return sum;
}

std::string LaurentQ::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << '*';
      out << 'q';
      if (e != 1) out << '^' << e;
    }
  }
  return out.str();
}

}  // namespace qmatrix
