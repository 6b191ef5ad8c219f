// Exact arbitrary-precision rational arithmetic.
//
// Rational is the scalar every other type in this library is built from.
// Values are kept in canonical form (positive denominator, gcd 1) so that
// equality is structural and rendering is unique.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace orc {

using Integer = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(Integer n) : num_(std::move(n)), den_(1) {}

  Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_positive() const { return num_ > 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const Integer lhs = a.num_ * b.den_;
    const Integer rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Renders as "p/q", integers included ("3/1", "-3/4").
  std::string str() const {
    return num_.str() + "/" + den_.str();
  }

  // Accepts "p/q" or a bare integer "p".
  static Rational parse(std::string_view text);

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Integer g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  Integer num_;
  Integer den_;
};

// Canonical-form constructor matching the rest of the library's vocabulary.
inline Rational rat_normalize(Integer n, Integer d) {
  return Rational(std::move(n), std::move(d));
}

// 2^-k as an exact rational.
Rational pow2_inverse(std::uint64_t k);

// The unique integer t with step*t <= x < step*(t+1); step must be positive.
Integer grid_floor(const Rational& x, const Rational& step);

inline Rational rat_min(const Rational& a, const Rational& b) {
  return a <= b ? a : b;
}
inline Rational rat_max(const Rational& a, const Rational& b) {
  return a >= b ? a : b;
}

}  // namespace orc
