#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <ostream>
#include <string>

#include "rhobind/errors.hpp"

namespace rhobind {

/// Overflow-checked int64 arithmetic. All exact computation in the library
/// funnels through these so silent wraparound cannot fake a result.
namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in add");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in sub");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in mul");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

}  // namespace checked

/// Exact rational number over checked int64. Always stored reduced with a
/// positive denominator. Overflowing intermediates throw OverflowError
/// instead of wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    // a/b + c/d with the textbook gcd trick to keep intermediates small.
    std::int64_t g = std::gcd(a.den_, b.den_);
    std::int64_t bd = a.den_ / g;
    std::int64_t dd = b.den_ / g;
    std::int64_t num = checked::add(checked::mul(a.num_, dd), checked::mul(b.num_, bd));
    std::int64_t den = checked::mul(checked::mul(bd, dd), g);
    return Rational(num, den);
  }

  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = checked::neg(a.num_);
    r.den_ = a.den_;
    return r;
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    std::int64_t g1 = gcd_abs(a.num_, b.den_);
    std::int64_t g2 = gcd_abs(b.num_, a.den_);
    Rational r;
    r.num_ = checked::mul(a.num_ / g1, b.num_ / g2);
    r.den_ = checked::mul(a.den_ / g2, b.den_ / g1);
    return r;
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("rational division by zero");
    Rational inv;
    if (b.num_ > 0) {
      inv.num_ = b.den_;
      inv.den_ = b.num_;
    } else {
      inv.num_ = checked::neg(b.den_);
      inv.den_ = checked::neg(b.num_);
    }
    return a * inv;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Cross-multiplication in 128 bits: |num|,|den| < 2^63 keeps products exact.
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static std::int64_t gcd_abs(std::int64_t a, std::int64_t b) {
    std::int64_t g = std::gcd(a, b);
    return g == 0 ? 1 : g;
  }

  void normalize() {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    if (den_ < 0) {
      num_ = checked::neg(num_);
      den_ = checked::neg(den_);
    }
    std::int64_t g = gcd_abs(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

}  // namespace rhobind
