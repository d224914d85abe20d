#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rhobind/errors.hpp"
#include "rhobind/rational.hpp"

namespace rhobind {

/// Dense univariate polynomial with exact int64 coefficients, stored in
/// ascending degree order (coeffs()[k] multiplies x^k). The zero polynomial
/// has an empty coefficient vector. Arithmetic is overflow-checked.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> ascending) : c_(std::move(ascending)) {
    trim();
  }

  static IntPolynomial x_power(int k, std::int64_t coeff = 1) {
    if (k < 0) throw DomainError("negative exponent");
    std::vector<std::int64_t> c(static_cast<std::size_t>(k) + 1, 0);
    c.back() = coeff;
    return IntPolynomial(std::move(c));
  }

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
  std::int64_t leading() const { return c_.empty() ? 0 : c_.back(); }

  std::int64_t coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : 0;
  }

  double operator()(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + static_cast<double>(*it);
    return acc;
  }

  Rational operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = checked::add(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = checked::sub(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = checked::add(c[i + j], checked::mul(a.c_[i], b.c_[j]));
    return IntPolynomial(std::move(c));
  }

  friend IntPolynomial operator*(std::int64_t k, const IntPolynomial& p) {
    std::vector<std::int64_t> c(p.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked::mul(k, p.c_[i]);
    return IntPolynomial(std::move(c));
  }

  bool operator==(const IntPolynomial&) const = default;

  /// Human-readable form in descending powers, e.g. "x^4 - 7x^3 - 4x^2 + 26x - 6".
  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      std::int64_t a = coeff(k);
      if (a == 0 && degree() > 0) continue;
      unsigned long long mag =
          a < 0 ? -static_cast<unsigned long long>(a) : static_cast<unsigned long long>(a);
      if (out.empty()) {
        if (a < 0) out += "-";
      } else {
        out += a < 0 ? " - " : " + ";
      }
      std::string m = std::to_string(mag);
      if (k == 0) {
        out += m;
      } else {
        if (mag != 1) out += m;
        out += "x";
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

  /// Coefficients listed from the constant term up, e.g. "[-6, 26, -4, -7, 1]".
  std::string ascending_coeffs_str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(c_[i]);
    }
    return out + "]";
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<std::int64_t> c_;
};

}  // namespace rhobind
