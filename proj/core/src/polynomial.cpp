#include "covalg/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace covalg {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coefficient) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<BigInt> c(degree + 1, 0);
  c[degree] = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::one_minus_z_pow(int power) {
  if (power < 0) throw std::invalid_argument("negative power");
  std::vector<BigInt> c(power + 1);
  for (int k = 0; k <= power; ++k) {
    c[k] = binomial(power, k);
    if (k % 2) c[k] = -c[k];
  }
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

BigInt IntPolynomial::evaluate_at_one() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

std::optional<IntPolynomial> IntPolynomial::divide_by_one_minus_z() const {
  if (is_zero()) return IntPolynomial{};
  if (evaluate_at_one() != 0) return std::nullopt;
  // p = (1 - z) q  =>  q_k = p_0 + ... + p_k.
  std::vector<BigInt> q(coeffs_.size() - 1);
  BigInt running = 0;
  for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
    running += coeffs_[k];
    q[k] = running;
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += "z";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

RationalSeries::RationalSeries(IntPolynomial numerator, int denom_power)
    : numerator_(std::move(numerator)), denom_power_(denom_power) {
  if (denom_power < 0) throw std::invalid_argument("negative denominator power");
  if (numerator_.is_zero()) {
    denom_power_ = 0;
    return;
  }
  while (denom_power_ > 0) {
    auto q = numerator_.divide_by_one_minus_z();
    if (!q) break;
    numerator_ = std::move(*q);
    --denom_power_;
  }
}

BigInt RationalSeries::coefficient(int k) const {
  if (k < 0) return 0;
  if (denom_power_ == 0) return numerator_.coefficient(k);
  // [z^m] (1 - z)^{-d} = C(m + d - 1, d - 1).
  BigInt sum = 0;
  for (int i = 0; i <= std::min(k, numerator_.degree()); ++i) {
    sum += numerator_.coefficient(i) * binomial(k - i + denom_power_ - 1, denom_power_ - 1);
  }
  return sum;
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
  int d = std::max(a.denom_power_, b.denom_power_);
  IntPolynomial num = a.numerator_ * IntPolynomial::one_minus_z_pow(d - a.denom_power_) +
                      b.numerator_ * IntPolynomial::one_minus_z_pow(d - b.denom_power_);
  return RationalSeries(std::move(num), d);
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  return RationalSeries(a.numerator_ * b.numerator_, a.denom_power_ + b.denom_power_);
}

std::string RationalSeries::to_string() const {
  std::string num = numerator_.to_string();
  if (denom_power_ == 0) return num;
  bool compound = numerator_.coefficients().size() > 1 &&
                  std::count_if(numerator_.coefficients().begin(), numerator_.coefficients().end(),
                                [](const BigInt& c) { return c != 0; }) > 1;
  std::string out = compound ? "(" + num + ")" : num;
  out += "/(1 - z)";
  if (denom_power_ > 1) out += "^" + std::to_string(denom_power_);
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace covalg
