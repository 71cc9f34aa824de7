#pragma once

#include "covalg/bigint.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace covalg {

// Univariate polynomial in z with arbitrary-precision integer coefficients.
// Coefficient k multiplies z^k; trailing zeros are always trimmed, so the
// zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial monomial(int degree, BigInt coefficient = 1);
  // (1 - z)^power.
  static IntPolynomial one_minus_z_pow(int power);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  // Zero beyond the degree.
  BigInt coefficient(int k) const;

  BigInt evaluate_at_one() const;
  // Exact quotient by (1 - z), or nullopt if not divisible.
  std::optional<IntPolynomial> divide_by_one_minus_z() const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // "1 + 3z + 3z^2 + z^3"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// numerator / (1 - z)^denom_power, kept in canonical form: while the
// denominator power is positive the numerator is not divisible by (1 - z).
// The zero series is 0 / (1 - z)^0. Equality is canonical-form equality.
class RationalSeries {
 public:
  RationalSeries() = default;
  RationalSeries(IntPolynomial numerator, int denom_power);

  const IntPolynomial& numerator() const { return numerator_; }
  int denom_power() const { return denom_power_; }

  // Coefficient of z^k in the power series expansion.
  BigInt coefficient(int k) const;

  friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  friend bool operator==(const RationalSeries& a, const RationalSeries& b) = default;

  // "(1 + z)/(1 - z)^3".
  std::string to_string() const;

 private:
  IntPolynomial numerator_;
  int denom_power_ = 0;
};

// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

}  // namespace covalg
