#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tbsl/error.hpp"
#include "tbsl/rational.hpp"
#include "tbsl/slope.hpp"

namespace tbsl {

/// Affine function c_0 + c_1 v_1 + ... + c_k v_k.
struct Affine {
  std::vector<Rat> coeffs;  // constant term first

  std::size_t vars() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  Rat operator()(const std::vector<Rat>& v) const {
    Rat s = coeffs[0];
    for (std::size_t i = 0; i < v.size(); ++i) s += coeffs[i + 1] * v[i];
    return s;
  }

  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c.is_zero(); });
  }

  Affine operator-() const {
    Affine a = *this;
    for (auto& c : a.coeffs) c = -c;
    return a;
  }

  std::string str() const {
    static const char* names[] = {"x", "y", "z"};
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const Rat& c = coeffs[i];
      if (c.is_zero()) continue;
      bool neg = c.sign() < 0;
      Rat m = neg ? -c : c;
      std::string term = i == 0 ? m.str() : (m == Rat(1) ? "" : m.str() + "*") + names[i - 1];
      if (s.empty())
        s = (neg ? "-" : "") + term;
      else
        s += (neg ? " - " : " + ") + term;
    }
    return s.empty() ? "0" : s;
  }
};

/// Slopes numerator/denominator of a one-parameter-per-variable weight
/// system, the variables ranging over an open box.
struct SlopeFamily {
  std::string name;
  Affine numerator;
  Affine denominator;
  std::vector<CircleInterval> domain;

  std::size_t vars() const { return domain.size(); }

  CircleSlope at(const std::vector<Rat>& v) const {
    Rat d = denominator(v);
    if (d.is_zero()) return CircleSlope::infinity();
    return CircleSlope(numerator(v) / d);
  }

  std::string str() const {
    bool unit_den = denominator.coeffs[0] == Rat(1) &&
                    std::all_of(denominator.coeffs.begin() + 1, denominator.coeffs.end(),
                                [](const Rat& c) { return c.is_zero(); });
    std::string s = unit_den ? numerator.str() : "(" + numerator.str() + ")/(" + denominator.str() + ")";
    static const char* names[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < domain.size(); ++i) s += std::string(", ") + names[i] + " in " + domain[i].str();
    return s;
  }
};

namespace detail {

/// Extended rational: -inf, a rational, or +inf.
struct Ext {
  int inf = 0;  // -1, 0, +1
  Rat v;
};

struct RealInterval {
  std::optional<Rat> lo;  // nullopt = -inf
  std::optional<Rat> hi;  // nullopt = +inf
};

inline RealInterval as_real_interval(const CircleInterval& i) {
  if (i.lo_closed() || i.hi_closed() || i.is_point())
    fail(ErrorKind::Argument, "family domain " + i.str() + " must be an open interval");
  if (i.full_circle()) {
    if (i.lo().is_finite()) fail(ErrorKind::Argument, "family domain " + i.str() + " is not an interval of Q");
    return {};
  }
  if (i.wraps_infinity()) fail(ErrorKind::Argument, "family domain " + i.str() + " contains inf");
  RealInterval r;
  if (i.lo().is_finite()) r.lo = i.lo().value();
  if (i.hi().is_finite()) r.hi = i.hi().value();
  return r;
}

/// sup over the open box of a . (1, v): +inf is reported as nullopt.
inline std::optional<Rat> affine_sup(const std::vector<Rat>& a, const std::vector<RealInterval>& box) {
  Rat s = a[0];
  for (std::size_t i = 0; i < box.size(); ++i) {
    const Rat& c = a[i + 1];
    if (c.is_zero()) continue;
    const auto& end = c.sign() > 0 ? box[i].hi : box[i].lo;
    if (!end) return std::nullopt;
    s += c * *end;
  }
  return s;
}

/// sup of N/D over the box, D > 0 throughout. Uses that N - tD > 0 somewhere
/// exactly when t < sup, and that sup_box(N - tD) is convex and piecewise
/// affine in t with breaks at c_i/d_i.
inline Ext ratio_sup(const Affine& n, const Affine& d, const std::vector<RealInterval>& box) {
  auto s_at = [&](const Rat& t) {
    std::vector<Rat> a(n.coeffs.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = n.coeffs[i] - t * d.coeffs[i];
    return affine_sup(a, box);
  };
  auto nonpositive = [](const std::optional<Rat>& s) { return s && s->sign() <= 0; };

  std::vector<Rat> breaks;
  for (std::size_t i = 1; i < d.coeffs.size(); ++i)
    if (!d.coeffs[i].is_zero() && !box.empty()) breaks.push_back(n.coeffs[i] / d.coeffs[i]);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  // Inspect each open piece between breaks: S is affine there, so two
  // sample points determine it.
  auto piece_hit = [&](const std::optional<Rat>& lo, const std::optional<Rat>& hi) -> std::optional<Ext> {
    Rat t0, t1;
    if (lo && hi) {
      t0 = *lo + (*hi - *lo) / Rat(3);
      t1 = *lo + (*hi - *lo) * Rat(2) / Rat(3);
    } else if (lo) {
      t0 = *lo + Rat(1);
      t1 = *lo + Rat(2);
    } else if (hi) {
      t0 = *hi - Rat(2);
      t1 = *hi - Rat(1);
    } else {
      t0 = Rat(0);
      t1 = Rat(1);
    }
    auto s0 = s_at(t0), s1 = s_at(t1);
    if (!s0 || !s1) return std::nullopt;  // +inf on the whole piece
    Rat beta = (*s1 - *s0) / (t1 - t0);
    Rat alpha = *s0 - beta * t0;
    if (beta.is_zero()) {
      if (alpha.sign() > 0) return std::nullopt;
      if (!lo) return Ext{-1, Rat(0)};
      return Ext{0, *lo};
    }
    if (beta.sign() > 0) {
      // S increasing: only possible if S <= 0 near lo; then the set starts at lo.
      if (lo && alpha + beta * *lo <= Rat(0)) return Ext{0, *lo};
      if (!lo) return Ext{-1, Rat(0)};
      return std::nullopt;
    }
    Rat root = -alpha / beta;
    if (hi && root >= *hi) return std::nullopt;
    if (lo && root <= *lo) return Ext{0, *lo};
    return Ext{0, root};
  };

  std::optional<Rat> prev;
  for (const auto& b : breaks) {
    if (auto hit = piece_hit(prev, b)) return *hit;
    if (nonpositive(s_at(b))) return Ext{0, b};
    prev = b;
  }
  if (auto hit = piece_hit(prev, std::nullopt)) return *hit;
  return Ext{+1, Rat(0)};
}

}  // namespace detail

/// Exact image of the family over its open box: an open arc, or a single
/// point for constant families.
inline CircleInterval family_image(const SlopeFamily& f) {
  std::size_t k = f.vars();
  require(k >= 1 && k <= 3, "slope family needs 1 to 3 variables");
  require(f.numerator.coeffs.size() == k + 1 && f.denominator.coeffs.size() == k + 1,
          "slope family coefficients do not match the number of variables");
  if (f.denominator.is_zero()) fail(ErrorKind::Argument, "slope family has zero denominator");

  std::vector<detail::RealInterval> box;
  for (const auto& i : f.domain) box.push_back(detail::as_real_interval(i));

  Affine n = f.numerator, d = f.denominator;
  auto d_sup = detail::affine_sup(d.coeffs, box);
  auto d_inf = detail::affine_sup((-d).coeffs, box);  // = -inf D
  bool positive = d_inf && d_inf->sign() <= 0;         // inf D >= 0
  bool negative = d_sup && d_sup->sign() <= 0;         // sup D <= 0
  if (positive && negative) fail(ErrorKind::Argument, "slope family denominator vanishes on the domain");
  if (!positive && !negative)
    fail(ErrorKind::Argument, "slope family denominator " + d.str() + " changes sign on the domain");
  if (negative) {
    n = -n;
    d = -d;
  }

  // Constant family: N = t D.
  std::optional<Rat> t;
  bool constant = true;
  for (std::size_t i = 0; i < n.coeffs.size() && constant; ++i) {
    if (d.coeffs[i].is_zero()) {
      constant = n.coeffs[i].is_zero();
    } else {
      Rat r = n.coeffs[i] / d.coeffs[i];
      if (t && *t != r) constant = false;
      t = r;
    }
  }
  if (constant) return CircleInterval::point(CircleSlope(t ? *t : Rat(0)));

  detail::Ext sup = detail::ratio_sup(n, d, box);
  detail::Ext neg_inf = detail::ratio_sup(-n, d, box);
  CircleSlope lo = neg_inf.inf != 0 ? CircleSlope::infinity() : CircleSlope(-neg_inf.v);
  CircleSlope hi = sup.inf != 0 ? CircleSlope::infinity() : CircleSlope(sup.v);
  return CircleInterval::open(lo, hi);
}

namespace families {

inline CircleInterval positive_reals() { return CircleInterval::open(CircleSlope(0), CircleSlope::infinity()); }
inline CircleInterval unit_interval() { return CircleInterval::open(CircleSlope(0), CircleSlope(1)); }

/// Slopes y - x realised by a positive river twist.
inline SlopeFamily river_positive() {
  return {"river-positive", {{Rat(0), Rat(-1), Rat(1)}}, {{Rat(1), Rat(0), Rat(0)}},
          {positive_reals(), unit_interval()}};
}

inline SlopeFamily river_negative() {
  return {"river-negative", {{Rat(0), Rat(1), Rat(-1)}}, {{Rat(1), Rat(0), Rat(0)}},
          {positive_reals(), unit_interval()}};
}

inline SlopeFamily positive_ratio() {
  return {"positive-ratio", {{Rat(0), Rat(1), Rat(0)}}, {{Rat(0), Rat(0), Rat(1)}},
          {positive_reals(), positive_reals()}};
}

inline SlopeFamily negative_ratio() {
  return {"negative-ratio", {{Rat(0), Rat(-1), Rat(0)}}, {{Rat(0), Rat(0), Rat(1)}},
          {positive_reals(), positive_reals()}};
}

inline SlopeFamily symmetric_unit() {
  return {"symmetric-unit", {{Rat(0), Rat(-1), Rat(1)}}, {{Rat(0), Rat(1), Rat(1)}},
          {positive_reals(), positive_reals()}};
}

inline SlopeFamily zero_two() {
  return {"zero-two", {{Rat(0), Rat(2), Rat(0)}}, {{Rat(0), Rat(1), Rat(1)}},
          {positive_reals(), positive_reals()}};
}

inline SlopeFamily below_two() {
  return {"below-two", {{Rat(1), Rat(-1), Rat(1)}}, {{Rat(1), Rat(0), Rat(0)}},
          {positive_reals(), unit_interval()}};
}

inline SlopeFamily minus_one_zero() {
  return {"minus-one-zero", {{Rat(0), Rat(-1), Rat(0)}}, {{Rat(0), Rat(1), Rat(1)}},
          {positive_reals(), positive_reals()}};
}

/// Every built-in family with the arc it is expected to realise.
inline std::vector<std::pair<SlopeFamily, CircleInterval>> builtin() {
  auto open = [](CircleSlope a, CircleSlope b) { return CircleInterval::open(std::move(a), std::move(b)); };
  auto inf = CircleSlope::infinity();
  return {
      {river_positive(), open(inf, 1)},  {river_negative(), open(-1, inf)},
      {positive_ratio(), open(0, inf)},  {negative_ratio(), open(inf, 0)},
      {symmetric_unit(), open(-1, 1)},   {zero_two(), open(0, 2)},
      {below_two(), open(inf, 2)},       {minus_one_zero(), open(-1, 0)},
  };
}

}  // namespace families

}  // namespace tbsl
