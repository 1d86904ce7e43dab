#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tbsl/error.hpp"
#include "tbsl/rational.hpp"
#include "tbsl/slope.hpp"

namespace tbsl {

/// Value of a_1 + 1/(a_2 + 1/(... + 1/a_n)), evaluated on the slope circle so
/// that a tail equal to 0 contributes 1/0 = inf and a + inf = inf.
inline CircleSlope cf_eval(const std::vector<Integer>& coeffs) {
  if (coeffs.empty()) fail(ErrorKind::Argument, "cf_eval: empty coefficient list");
  for (const auto& a : coeffs)
    if (a == 0) fail(ErrorKind::Argument, "cf_eval: zero coefficient");
  CircleSlope value(Rat(coeffs.back()));
  for (std::size_t i = coeffs.size() - 1; i-- > 0;)
    value = value.reciprocal().shifted(Rat(coeffs[i]));
  return value;
}

/// Continued fraction [2b_1, ..., 2b_n] with every entry even and nonzero
/// and n odd.
class EvenExpansion {
 public:
  explicit EvenExpansion(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    require(!coeffs_.empty(), "even expansion must be nonempty");
    require(coeffs_.size() % 2 == 1, "even expansion must have odd length");
    for (const auto& a : coeffs_)
      require(a != 0 && is_even(a), "even expansion entries must be even and nonzero");
  }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }

  /// True when every entry is +-2, the shape of a fibered description.
  bool all_twos() const {
    for (const auto& a : coeffs_)
      if (a != 2 && a != -2) return false;
    return true;
  }

  Rat value() const { return cf_eval(coeffs_).value(); }

  EvenExpansion negated() const {
    std::vector<Integer> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(-a);
    return EvenExpansion(std::move(c));
  }

  EvenExpansion reversed() const {
    return EvenExpansion(std::vector<Integer>(coeffs_.rbegin(), coeffs_.rend()));
  }

  /// "[2,-2,-2]"
  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) out += ",";
      out += coeffs_[i].str();
    }
    return out + "]";
  }

  friend bool operator==(const EvenExpansion&, const EvenExpansion&) = default;

 private:
  std::vector<Integer> coeffs_;
};

/// The unique continued fraction of x whose entries are all even and
/// nonzero. Such an expansion exists exactly when the reduced numerator of
/// x is even and |x| > 1; any all-even tail has absolute value > 1, so the
/// leading entry is forced to be the even integer nearest to x.
inline EvenExpansion even_expand(const Rat& x) {
  if (!is_even(x.num()) || x.is_zero())
    fail(ErrorKind::Argument,
         "even_expand: " + x.str() + " must have even nonzero numerator and odd denominator");
  if (abs(x.num()) <= x.den())
    fail(ErrorKind::Argument,
         "even_expand: " + x.str() + " has absolute value at most 1, so it has no even expansion");

  std::vector<Integer> out;
  Rat current = x;
  for (;;) {
    // Nearest even integer: 2 * floor(x/2 + 1/2). Unique because x is never
    // an odd integer along the way.
    Integer a = 2 * floor_div(current.num() + current.den(), 2 * current.den());
    out.push_back(a);
    Rat rest = current - Rat(a);
    if (rest.is_zero()) break;
    current = rest.reciprocal();
  }
  return EvenExpansion(std::move(out));
}

}  // namespace tbsl
