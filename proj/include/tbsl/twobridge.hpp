#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tbsl/contfrac.hpp"
#include "tbsl/error.hpp"
#include "tbsl/rational.hpp"

namespace tbsl {

/// Two-component two-bridge link b(p,q): p > 0 even, q odd, gcd(p,q) = 1 and
/// -p < q < p. The oriented class only depends on q modulo 2p.
class TwoBridgeLink {
 public:
  /// Reduces q into (-p, p) modulo 2p.
  TwoBridgeLink(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {
    if (p_ <= 0) fail(ErrorKind::Argument, "b(p,q) needs p > 0, got p = " + p_.str());
    if (is_odd(p_))
      fail(ErrorKind::KnotNotLink, "b(" + p_.str() + "," + q_.str() + ") has odd p: knot, not link");
    if (gcd(p_, q_) != 1)
      fail(ErrorKind::Argument, "b(p,q) needs gcd(p,q) = 1, got b(" + p_.str() + "," + q_.str() + ")");
    Integer two_p = 2 * p_;
    q_ = mod(q_, two_p);
    if (q_ > p_) q_ -= two_p;
  }

  /// The link with fraction x = p/q; a negative fraction gives q < 0.
  static TwoBridgeLink from_fraction(const Rat& x) {
    if (x.is_zero()) fail(ErrorKind::Argument, "fraction 0 does not describe a two-bridge link");
    if (is_odd(x.num()))
      fail(ErrorKind::KnotNotLink, "fraction " + x.str() + " has odd numerator: knot, not link");
    return TwoBridgeLink(abs(x.num()), x.num() < 0 ? Integer(-x.den()) : x.den());
  }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }

  Rat fraction() const { return Rat(p_, q_); }

  std::string str() const { return "b(" + p_.str() + "," + q_.str() + ")"; }

  friend bool operator==(const TwoBridgeLink&, const TwoBridgeLink&) = default;

 private:
  Integer p_;
  Integer q_;
};

enum class Isotopy { Isotopic, IsotopicAfterComponentReversal, Distinct };

inline std::string_view to_string(Isotopy i) {
  switch (i) {
    case Isotopy::Isotopic: return "Isotopic";
    case Isotopy::IsotopicAfterComponentReversal: return "IsotopicAfterComponentReversal";
    case Isotopy::Distinct: return "Distinct";
  }
  return "?";
}

/// Schubert's classification of oriented two-bridge links.
inline Isotopy schubert_oriented_equal(const TwoBridgeLink& a, const TwoBridgeLink& b) {
  if (a.p() != b.p()) return Isotopy::Distinct;
  const Integer& p = a.p();
  Integer m = 2 * p;
  Integer prod = a.q() * b.q();
  if (mod(b.q() - a.q(), m) == 0 || mod(prod - 1, m) == 0) return Isotopy::Isotopic;
  if (mod(b.q() - a.q() - p, m) == 0 || mod(prod - 1 - p, m) == 0)
    return Isotopy::IsotopicAfterComponentReversal;
  return Isotopy::Distinct;
}

/// Isotopy as unoriented links: q' = q^{+-1} mod p.
inline bool schubert_unoriented_equal(const TwoBridgeLink& a, const TwoBridgeLink& b) {
  if (a.p() != b.p()) return false;
  const Integer& p = a.p();
  return mod(b.q() - a.q(), p) == 0 || mod(a.q() * b.q() - 1, p) == 0;
}

/// b(p,q) -> b(p,-q).
inline TwoBridgeLink mirror(const TwoBridgeLink& l) { return TwoBridgeLink(l.p(), -l.q()); }

/// All q' in (-p, p) describing the same unoriented link: the two odd lifts
/// of q mod p followed by the two odd lifts of q^{-1} mod p, without
/// repetitions, starting with q itself.
inline std::vector<Integer> unoriented_representatives(const TwoBridgeLink& l) {
  const Integer& p = l.p();
  std::vector<Integer> out;
  auto push = [&](const Integer& q) {
    for (const auto& seen : out)
      if (seen == q) return;
    out.push_back(q);
  };
  auto push_lifts = [&](const Integer& q) {
    push(q);
    push(q > 0 ? Integer(q - p) : Integer(q + p));
  };
  push_lifts(l.q());
  if (p > 1) {
    Integer inv = mod_inverse(l.q(), p);
    push_lifts(inv == 0 ? Integer(p) : inv);
  }
  return out;
}

/// All fibered descriptions L(+-2, ..., +-2) of the unoriented link, in the
/// order of unoriented_representatives.
inline std::vector<EvenExpansion> fibered_expansions(const TwoBridgeLink& l) {
  std::vector<EvenExpansion> out;
  for (const auto& q : unoriented_representatives(l)) {
    if (abs(q) >= l.p()) continue;
    auto e = even_expand(Rat(l.p(), q));
    if (e.all_twos()) out.push_back(std::move(e));
  }
  return out;
}

/// The first fibered description, if the link is fibered.
inline std::optional<EvenExpansion> fibered_expansion(const TwoBridgeLink& l) {
  auto all = fibered_expansions(l);
  if (all.empty()) return std::nullopt;
  return all.front();
}

enum class LinkTag { Torus, Family1, Family2Interior, Ln, LnMirror, GenericFibered, NonFibered };

inline std::string_view to_string(LinkTag t) {
  switch (t) {
    case LinkTag::Torus: return "Torus";
    case LinkTag::Family1: return "Family1";
    case LinkTag::Family2Interior: return "Family2Interior";
    case LinkTag::Ln: return "Ln";
    case LinkTag::LnMirror: return "LnMirror";
    case LinkTag::GenericFibered: return "GenericFibered";
    case LinkTag::NonFibered: return "NonFibered";
  }
  return "?";
}

struct LinkClass {
  LinkTag tag = LinkTag::NonFibered;
  /// Index of L_n for the Ln / LnMirror tags, 0 otherwise.
  std::size_t n = 0;
  /// The fibered description the tag was read from.
  std::optional<EvenExpansion> fibered_expansion;
  /// Set when the description had all river twists negative and was
  /// mirrored before the family split.
  bool mirrored_during_normalization = false;
  /// For Family2Interior: the negative bridge sits at 1-based position
  /// 2k+1 of a length 2(k+h)+1 description (after mirroring, if any).
  std::size_t family2_k = 0;
  std::size_t family2_h = 0;

  /// The class of L_n (or its mirror) without a stored description.
  static LinkClass ln(std::size_t n, bool mirror = false) {
    LinkClass c;
    c.tag = mirror ? LinkTag::LnMirror : LinkTag::Ln;
    c.n = n;
    return c;
  }

  bool fibered() const { return tag != LinkTag::NonFibered; }
  bool hyperbolic_fibered() const { return fibered() && tag != LinkTag::Torus; }

  std::string tag_str() const {
    std::string s(to_string(tag));
    if (tag == LinkTag::Ln || tag == LinkTag::LnMirror) s += "(" + std::to_string(n) + ")";
    return s;
  }
};

namespace detail {

inline std::vector<int> half_entries(const EvenExpansion& e) {
  if (!e.all_twos()) fail(ErrorKind::Argument, "expansion " + e.str() + " is not fibered (entries must be +-2)");
  std::vector<int> b;
  b.reserve(e.size());
  for (const auto& a : e.coeffs()) b.push_back(a > 0 ? 1 : -1);
  return b;
}

inline bool is_torus_shape(const std::vector<int>& b) {
  for (int s : {1, -1}) {
    bool match = true;
    for (std::size_t i = 0; i < b.size() && match; ++i)
      match = b[i] == ((i % 2 == 0) ? s : -s);
    if (match) return true;
  }
  return false;
}

inline int tag_priority(LinkTag t) {
  switch (t) {
    case LinkTag::Torus: return 0;
    case LinkTag::Ln:
    case LinkTag::LnMirror: return 1;
    case LinkTag::Family1: return 2;
    case LinkTag::Family2Interior: return 3;
    case LinkTag::GenericFibered: return 4;
    case LinkTag::NonFibered: return 5;
  }
  return 6;
}

}  // namespace detail

/// Family split of one fibered description L(2b_1, ..., 2b_n), |b_i| = 1.
/// Positions are 1-based: even positions carry river twists with exponent
/// -b_i, odd positions carry bridge twists with exponent b_i.
inline LinkClass classify_expansion(const EvenExpansion& e) {
  auto b = detail::half_entries(e);
  LinkClass c;
  c.fibered_expansion = e;
  if (detail::is_torus_shape(b)) {
    c.tag = LinkTag::Torus;
    return c;
  }

  bool any_pos_river = false, any_neg_river = false;
  for (std::size_t i = 1; i < b.size(); i += 2) (b[i] < 0 ? any_pos_river : any_neg_river) = true;
  if (any_pos_river && any_neg_river) {
    c.tag = LinkTag::GenericFibered;
    return c;
  }
  if (any_neg_river) {
    for (auto& x : b) x = -x;
    c.mirrored_during_normalization = true;
  }

  std::size_t neg_bridges = 0, neg_at = 0;
  for (std::size_t i = 0; i < b.size(); i += 2)
    if (b[i] < 0) {
      ++neg_bridges;
      neg_at = i;
    }
  std::size_t bridges = (b.size() + 1) / 2;

  if (neg_bridges == bridges) {
    c.tag = LinkTag::Family1;
  } else if (neg_bridges == 1) {
    if (neg_at == 0 || neg_at + 1 == b.size()) {
      c.tag = c.mirrored_during_normalization ? LinkTag::LnMirror : LinkTag::Ln;
      c.n = (b.size() - 1) / 2;
    } else {
      c.tag = LinkTag::Family2Interior;
      c.family2_k = neg_at / 2;
      c.family2_h = (b.size() - 1) / 2 - c.family2_k;
    }
  } else {
    c.tag = LinkTag::GenericFibered;
  }
  return c;
}

/// Classification of the unoriented link. When several fibered descriptions
/// exist, the most specific family wins (torus, then L_n, Family 1, Family 2,
/// generic), so the answer does not depend on the chosen representative.
inline LinkClass classify(const TwoBridgeLink& l) {
  LinkClass best;
  for (const auto& e : fibered_expansions(l)) {
    LinkClass c = classify_expansion(e);
    if (!best.fibered() || detail::tag_priority(c.tag) < detail::tag_priority(best.tag))
      best = std::move(c);
  }
  return best;
}

/// lk(L) = b_1 + b_3 + ... + b_n for the orientation induced by the fiber
/// surface of a fibered description.
inline std::int64_t linking_number(const EvenExpansion& e) {
  auto b = detail::half_entries(e);
  std::int64_t lk = 0;
  for (std::size_t i = 0; i < b.size(); i += 2) lk += b[i];
  return lk;
}

struct LnMatch {
  std::size_t n;
  bool mirrored;
  friend bool operator==(const LnMatch&, const LnMatch&) = default;
};

/// Tests the link against b(6n+2,-3) and its mirror.
inline std::optional<LnMatch> detect_Ln(const TwoBridgeLink& l) {
  if (mod(l.p(), 6) != 2 || l.p() < 8) return std::nullopt;
  auto n = static_cast<std::size_t>((l.p() - 2) / 6);
  TwoBridgeLink ln(l.p(), -3);
  if (schubert_unoriented_equal(l, ln)) return LnMatch{n, false};
  if (schubert_unoriented_equal(l, mirror(ln))) return LnMatch{n, true};
  return std::nullopt;
}

/// The description L(2,-2,2,-2,...,2,-2,-2) of L_n, length 2n+1.
inline EvenExpansion ln_expansion(std::size_t n) {
  require(n >= 1, "L_n needs n >= 1");
  std::vector<Integer> c;
  for (std::size_t i = 0; i < n; ++i) {
    c.push_back(2);
    c.push_back(-2);
  }
  c.push_back(-2);
  return EvenExpansion(std::move(c));
}

/// "L(2,-2,-2)"
inline std::string l_notation(const EvenExpansion& e) {
  std::string s = e.str();
  return "L(" + s.substr(1, s.size() - 2) + ")";
}

/// Parses "b(p,q)" or "L(a1,...,an)".
inline TwoBridgeLink parse_link(std::string_view s) {
  std::size_t pos = detail::skip_spaces(s, 0);
  if (pos >= s.size() || (s[pos] != 'b' && s[pos] != 'L'))
    throw ParseError("expected 'b(p,q)' or 'L(a1,...,an)'", pos);
  bool schubert = s[pos] == 'b';
  pos = detail::skip_spaces(s, pos + 1);
  if (pos >= s.size() || s[pos] != '(') throw ParseError("expected '('", pos);
  ++pos;
  std::vector<Integer> values;
  std::vector<std::size_t> positions;
  for (;;) {
    positions.push_back(detail::skip_spaces(s, pos));
    values.push_back(detail::read_integer(s, pos));
    pos = detail::skip_spaces(s, pos);
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < s.size() && s[pos] == ')') break;
    throw ParseError("expected ',' or ')'", pos);
  }
  std::size_t end = detail::skip_spaces(s, pos + 1);
  if (end != s.size()) throw ParseError("trailing characters after link", end);

  if (schubert) {
    if (values.size() != 2) throw ParseError("b(p,q) takes exactly two integers", positions.front());
    return TwoBridgeLink(values[0], values[1]);
  }
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == 0) throw ParseError("continued fraction entries must be nonzero", positions[i]);
  CircleSlope v = cf_eval(values);
  if (v.is_infinite()) fail(ErrorKind::Argument, "continued fraction evaluates to inf");
  return TwoBridgeLink::from_fraction(v.value());
}

}  // namespace tbsl
