#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "tbsl/error.hpp"

namespace tbsl {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline int sign(const Integer& a) { return a.sign(); }

inline bool is_even(const Integer& a) { return (a & 1) == 0; }

inline bool is_odd(const Integer& a) { return !is_even(a); }

inline Integer gcd(Integer a, Integer b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Floor division, b != 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

/// Least nonnegative residue of a modulo m, m > 0.
inline Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Inverse of a modulo m in [0, m); requires gcd(a, m) = 1 and m > 1.
inline Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer old_r = mod(a, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    Integer q = old_r / r;
    Integer t = old_r - q * r;
    old_r = std::move(r);
    r = std::move(t);
    t = old_s - q * s;
    old_s = std::move(s);
    s = std::move(t);
  }
  require(old_r == 1, "mod_inverse: arguments are not coprime");
  return mod(old_s, m);
}

namespace detail {

inline std::size_t skip_spaces(std::string_view s, std::size_t pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  return pos;
}

/// Reads an optionally signed decimal integer starting at `pos`; advances pos.
inline Integer read_integer(std::string_view s, std::size_t& pos) {
  pos = skip_spaces(s, pos);
  std::size_t start = pos;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::size_t digits_begin = pos;
  while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
  if (pos == digits_begin) throw ParseError("expected an integer", start);
  Integer value(std::string(s.substr(digits_begin, pos - digits_begin)));
  return negative ? Integer(-value) : value;
}

}  // namespace detail

inline Integer parse_integer(std::string_view s) {
  std::size_t pos = 0;
  Integer v = detail::read_integer(s, pos);
  pos = detail::skip_spaces(s, pos);
  if (pos != s.size()) throw ParseError("trailing characters after integer", pos);
  return v;
}

/// Exact rational number. Always reduced, denominator positive, zero is 0/1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(int n) : num_(n), den_(1) {}
  Rat(long n) : num_(n), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(Integer n) : num_(std::move(n)), den_(1) {}
  Rat(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) fail(ErrorKind::Argument, "rational with zero denominator");
    normalize();
  }

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rat operator-() const { return Rat(Integer(-num_), den_, Reduced{}); }

  Rat reciprocal() const {
    if (num_ == 0) fail(ErrorKind::Argument, "reciprocal of zero");
    return num_ < 0 ? Rat(Integer(-den_), Integer(-num_), Reduced{})
                    : Rat(den_, num_, Reduced{});
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) fail(ErrorKind::Argument, "division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }
  Rat& operator/=(const Rat& b) { return *this = *this / b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    Integer lhs = a.num_ * b.den_;
    Integer rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Largest integer not exceeding the value.
  Integer floor() const { return floor_div(num_, den_); }

  /// "p/q", or "p" for integers.
  std::string str() const {
    return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

 private:
  struct Reduced {};
  Rat(Integer n, Integer d, Reduced) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    Integer g = gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Integer num_;
  Integer den_;
};

namespace detail {

inline Rat read_rat(std::string_view s, std::size_t& pos) {
  Integer n = read_integer(s, pos);
  std::size_t p = skip_spaces(s, pos);
  if (p < s.size() && s[p] == '/') {
    pos = p + 1;
    std::size_t den_pos = skip_spaces(s, pos);
    Integer d = read_integer(s, pos);
    if (d == 0) throw ParseError("zero denominator", den_pos);
    return Rat(std::move(n), std::move(d));
  }
  return Rat(std::move(n));
}

}  // namespace detail

/// Parses "p/q" or "p".
inline Rat parse_rat(std::string_view s) {
  std::size_t pos = 0;
  Rat r = detail::read_rat(s, pos);
  pos = detail::skip_spaces(s, pos);
  if (pos != s.size()) throw ParseError("trailing characters after fraction", pos);
  return r;
}

}  // namespace tbsl
