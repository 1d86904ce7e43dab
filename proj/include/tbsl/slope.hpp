#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "tbsl/error.hpp"
#include "tbsl/rational.hpp"

namespace tbsl {

/// A point of the slope circle Q u {inf}. There is a single point at
/// infinity: +inf and -inf are glued.
class CircleSlope {
 public:
  CircleSlope() : value_(Rat(0)) {}
  CircleSlope(Rat r) : value_(std::move(r)) {}
  CircleSlope(int n) : value_(Rat(n)) {}
  CircleSlope(long n) : value_(Rat(n)) {}
  CircleSlope(long long n) : value_(Rat(n)) {}

  static CircleSlope infinity() {
    CircleSlope s;
    s.value_.reset();
    return s;
  }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  /// Finite value; throws on the point at infinity.
  const Rat& value() const {
    if (!value_) fail(ErrorKind::Argument, "slope is infinite");
    return *value_;
  }

  CircleSlope operator-() const {
    return is_infinite() ? infinity() : CircleSlope(-*value_);
  }

  /// 1/s with 1/0 = inf and 1/inf = 0.
  CircleSlope reciprocal() const {
    if (is_infinite()) return CircleSlope(0);
    if (value_->is_zero()) return infinity();
    return CircleSlope(value_->reciprocal());
  }

  /// s + r with inf + r = inf.
  CircleSlope shifted(const Rat& r) const {
    return is_infinite() ? infinity() : CircleSlope(*value_ + r);
  }

  friend bool operator==(const CircleSlope& a, const CircleSlope& b) {
    return a.value_ == b.value_;
  }

  /// Order of the circle cut open at infinity: inf comes first, then the
  /// rationals in their usual order.
  friend std::strong_ordering operator<=>(const CircleSlope& a,
                                          const CircleSlope& b) {
    if (a.is_infinite() || b.is_infinite()) {
      if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
      return a.is_infinite() ? std::strong_ordering::less
                             : std::strong_ordering::greater;
    }
    return *a.value_ <=> *b.value_;
  }

  std::string str() const { return is_infinite() ? "inf" : value_->str(); }

  friend std::ostream& operator<<(std::ostream& os, const CircleSlope& s) {
    return os << s.str();
  }

 private:
  std::optional<Rat> value_;
};

inline const CircleSlope& infinity() {
  static const CircleSlope inf = CircleSlope::infinity();
  return inf;
}

namespace detail {

inline CircleSlope read_slope(std::string_view s, std::size_t& pos) {
  pos = skip_spaces(s, pos);
  for (std::string_view word : {"infinity", "inf"}) {
    if (s.substr(pos, word.size()) == word) {
      pos += word.size();
      return CircleSlope::infinity();
    }
  }
  return CircleSlope(read_rat(s, pos));
}

}  // namespace detail

/// Parses "inf", "p/q" or an integer.
inline CircleSlope parse_slope(std::string_view s) {
  std::size_t pos = 0;
  CircleSlope r = detail::read_slope(s, pos);
  pos = detail::skip_spaces(s, pos);
  if (pos != s.size()) throw ParseError("trailing characters after slope", pos);
  return r;
}

/// True when x lies strictly inside the arc traversed from lo to hi in the
/// direction of increasing slope, lo != hi.
inline bool in_open_arc(const CircleSlope& lo, const CircleSlope& hi,
                        const CircleSlope& x) {
  if (lo < hi) return lo < x && x < hi;
  return x > lo || x < hi;
}

/// Arc of the slope circle from lo to hi in the direction of increasing
/// slope, passing through inf (where +inf meets -inf) when lo > hi.
/// Thus (inf,1) is {r < 1} and (-1,inf) is {r > -1}.
///
/// Degenerate arcs with lo == hi: [a,a] is the point a, (a,a) is the circle
/// with a removed, and [a,a) / (a,a] are the whole circle. The whole circle
/// is stored as [inf,inf).
class CircleInterval {
 public:
  CircleInterval(CircleSlope lo, CircleSlope hi, bool lo_closed, bool hi_closed)
      : lo_(std::move(lo)), hi_(std::move(hi)),
        lo_closed_(lo_closed), hi_closed_(hi_closed) {
    if (lo_ == hi_ && !(lo_closed_ && hi_closed_)) {
      full_circle_ = true;
      if (lo_closed_ || hi_closed_) {
        lo_ = hi_ = CircleSlope::infinity();
        lo_closed_ = true;
        hi_closed_ = false;
      }
    }
  }

  static CircleInterval open(CircleSlope lo, CircleSlope hi) {
    return {std::move(lo), std::move(hi), false, false};
  }
  static CircleInterval closed(CircleSlope lo, CircleSlope hi) {
    return {std::move(lo), std::move(hi), true, true};
  }
  static CircleInterval point(const CircleSlope& x) { return closed(x, x); }
  static CircleInterval whole() {
    return {CircleSlope::infinity(), CircleSlope::infinity(), true, false};
  }
  /// The finite slopes Q, i.e. the circle without inf.
  static CircleInterval rationals() {
    return open(CircleSlope::infinity(), CircleSlope::infinity());
  }

  const CircleSlope& lo() const { return lo_; }
  const CircleSlope& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }
  bool full_circle() const { return full_circle_; }

  bool is_point() const { return lo_ == hi_ && !full_circle_; }
  bool is_whole() const { return full_circle_ && lo_closed_; }

  bool contains(const CircleSlope& x) const {
    if (is_point()) return x == lo_;
    if (full_circle_) return x != lo_ || lo_closed_ || hi_closed_;
    if (x == lo_) return lo_closed_;
    if (x == hi_) return hi_closed_;
    return in_open_arc(lo_, hi_, x);
  }

  /// True when inf lies in the interior of the arc (so the arc is not an
  /// interval of the real line).
  bool wraps_infinity() const {
    if (is_point()) return false;
    if (full_circle_) return !lo_.is_infinite() || lo_closed_;
    return lo_.is_finite() && hi_.is_finite() && lo_ > hi_;
  }

  /// Image under x -> -x. Orientation reverses, so the endpoints swap.
  CircleInterval negated() const {
    return {-hi_, -lo_, hi_closed_, lo_closed_};
  }

  /// Image under x -> x + r.
  CircleInterval shifted(const Rat& r) const {
    return {lo_.shifted(r), hi_.shifted(r), lo_closed_, hi_closed_};
  }

  std::string str() const {
    return std::string(lo_closed_ ? "[" : "(") + lo_.str() + "," + hi_.str() +
           (hi_closed_ ? "]" : ")");
  }

  friend bool operator==(const CircleInterval& a, const CircleInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_ && a.lo_closed_ == b.lo_closed_ &&
           a.hi_closed_ == b.hi_closed_ && a.full_circle_ == b.full_circle_;
  }

  friend std::ostream& operator<<(std::ostream& os, const CircleInterval& i) {
    return os << i.str();
  }

 private:
  CircleSlope lo_;
  CircleSlope hi_;
  bool lo_closed_;
  bool hi_closed_;
  bool full_circle_ = false;
};

/// Parses the rendering produced by CircleInterval::str().
inline CircleInterval parse_interval(std::string_view s) {
  std::size_t pos = detail::skip_spaces(s, 0);
  if (pos >= s.size() || (s[pos] != '[' && s[pos] != '('))
    throw ParseError("expected '[' or '('", pos);
  bool lo_closed = s[pos] == '[';
  ++pos;
  CircleSlope lo = detail::read_slope(s, pos);
  pos = detail::skip_spaces(s, pos);
  if (pos >= s.size() || s[pos] != ',') throw ParseError("expected ','", pos);
  ++pos;
  CircleSlope hi = detail::read_slope(s, pos);
  pos = detail::skip_spaces(s, pos);
  if (pos >= s.size() || (s[pos] != ']' && s[pos] != ')'))
    throw ParseError("expected ']' or ')'", pos);
  bool hi_closed = s[pos] == ']';
  pos = detail::skip_spaces(s, pos + 1);
  if (pos != s.size()) throw ParseError("trailing characters after interval", pos);
  return {std::move(lo), std::move(hi), lo_closed, hi_closed};
}

/// The closed arc joining a and b that does not contain `avoid`.
inline CircleInterval interval_between(const CircleSlope& a, const CircleSlope& b,
                                       const CircleSlope& avoid) {
  if (a == b) fail(ErrorKind::Argument, "interval_between: endpoints coincide");
  if (avoid == a || avoid == b)
    fail(ErrorKind::Argument,
         "interval_between: avoided slope " + avoid.str() + " is an endpoint");
  auto forward = CircleInterval::closed(a, b);
  return forward.contains(avoid) ? CircleInterval::closed(b, a) : forward;
}

/// Which longitude is used to read slopes on a boundary torus.
enum class Framing { Seifert, Canonical };

inline std::string_view to_string(Framing f) {
  return f == Framing::Seifert ? "seifert" : "canonical";
}

inline Framing parse_framing(std::string_view s) {
  if (s == "seifert") return Framing::Seifert;
  if (s == "canonical") return Framing::Canonical;
  throw ParseError("unknown framing '" + std::string(s) + "'", 0);
}

}  // namespace tbsl
