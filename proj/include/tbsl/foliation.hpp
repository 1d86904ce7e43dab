#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tbsl/error.hpp"
#include "tbsl/lspace.hpp"
#include "tbsl/monodromy.hpp"
#include "tbsl/rational.hpp"
#include "tbsl/region.hpp"
#include "tbsl/slope.hpp"
#include "tbsl/surgery.hpp"
#include "tbsl/twobridge.hpp"

namespace tbsl {

namespace detail {

inline CircleInterval below(long long a) { return CircleInterval::open(CircleSlope::infinity(), a); }
inline CircleInterval above(long long a) { return CircleInterval::open(a, CircleSlope::infinity()); }
inline CircleInterval between(long long a, long long b) { return CircleInterval::open(a, b); }
inline CircleInterval all_finite() { return CircleInterval::rationals(); }

inline Region2 box(Framing f, CircleInterval x, CircleInterval y) {
  return Region2::rect(f, std::move(x), std::move(y), true);
}

/// r together with its mirror image under (x, y) -> (y, x).
inline Region2 symmetrized(const Region2& r) { return region_union(r, r.swapped()); }

}  // namespace detail

/// Multislopes (Seifert framing) carrying taut foliations by the river and
/// bridge twist lemmas, given the signs of the monodromy factorization.
inline Region2 lemma_regions(const SignCensus& c) {
  using namespace detail;
  const Framing f = Framing::Seifert;
  std::vector<Region2> parts{Region2::empty(f, true)};
  if (c.pos_rivers >= 1 || c.pos_bridges >= 2) parts.push_back(box(f, below(1), below(1)));
  if (c.neg_rivers >= 1 || c.neg_bridges >= 2) parts.push_back(box(f, above(-1), above(-1)));
  if (c.pos_rivers >= 1 && c.neg_rivers >= 1) {
    parts.push_back(box(f, below(1), above(-1)));
    parts.push_back(box(f, above(-1), below(1)));
  }
  if (c.pos_bridges >= 1 && c.neg_bridges >= 1) {
    parts.push_back(box(f, above(0), below(0)));
    parts.push_back(box(f, below(0), above(0)));
  }
  return region_union(parts);
}

/// Branched surfaces in the exterior of an auxiliary link whose boundary
/// train tracks realise boxes of multislopes (Seifert framing of the
/// auxiliary link). Filling every component after the second with its
/// slope turns the auxiliary link into the two-component link of interest.
struct AuxiliaryRoute {
  std::string name;
  IntMatrix linking;
  std::vector<CircleSlope> fills;                 // Seifert slopes of components 3, 4, ...
  std::vector<std::vector<CircleInterval>> boxes;  // one interval per component
};

/// Translation (canonical framing of the two-component link) induced on
/// the first two slopes by the framing change and the Rolfsen twists.
inline std::pair<Rat, Rat> route_shift(const AuxiliaryRoute& r) {
  std::vector<std::optional<CircleSlope>> slopes{CircleSlope(0), CircleSlope(0)};
  for (const auto& s : r.fills) slopes.push_back(s);
  SurgeryDiagram d(Framing::Seifert, r.linking, slopes);
  SurgeryDiagram c = framing_convert(d, Framing::Canonical);
  while (c.size() > 2) c = rolfsen_fill(c, 2);
  return {c.slopes[0]->value(), c.slopes[1]->value()};
}

/// Linking number of the two-component link left after the fillings.
inline Integer route_linking(const AuxiliaryRoute& r) {
  std::vector<std::optional<CircleSlope>> slopes{CircleSlope(0), CircleSlope(0)};
  for (const auto& s : r.fills) slopes.push_back(s);
  SurgeryDiagram c = framing_convert(SurgeryDiagram(Framing::Seifert, r.linking, slopes), Framing::Canonical);
  while (c.size() > 2) c = rolfsen_fill(c, 2);
  return c.linking[0][1];
}

/// Canonical-framing multislopes of the two-component link reached by the
/// route: every box whose filled coordinates contain the filling slopes,
/// translated by route_shift.
inline Region2 push_route(const AuxiliaryRoute& r) {
  auto [dx, dy] = route_shift(r);
  std::vector<Rect> rects;
  for (const auto& b : r.boxes) {
    require(b.size() == r.fills.size() + 2, "auxiliary box has the wrong dimension");
    bool usable = true;
    for (std::size_t i = 0; i < r.fills.size(); ++i) usable = usable && b[i + 2].contains(r.fills[i]);
    if (usable) rects.emplace_back(b[0].shifted(dx), b[1].shifted(dy));
  }
  return region_union(Region2(Framing::Canonical, {}, true), Region2(Framing::Canonical, std::move(rects), true));
}

inline AuxiliaryRoute family1_route() {
  using namespace detail;
  return {"L(-2,-2,-2) as -1 surgery on a three-component link",
          family1_aux_linking(),
          {CircleSlope(-1)},
          {{below(1), above(0), below(0)}, {below(1), below(1), below(1)}}};
}

inline AuxiliaryRoute family2_route(std::size_t k, std::size_t h) {
  using namespace detail;
  require(k >= 1 && h >= 1, "family 2 route needs k, h >= 1");
  return {"L(-2k,-2,2,-2,-2h) as (-1/k,-1/h) surgery on a four-component link",
          family2_aux_linking(),
          {CircleSlope(Rat(Integer(-1), Integer(k))), CircleSlope(Rat(Integer(-1), Integer(h)))},
          {{above(0), all_finite(), below(0), below(0)}, {below(1), below(1), below(1), below(1)}}};
}

inline AuxiliaryRoute ln_route(std::size_t n) {
  using namespace detail;
  require(n >= 1, "L_n route needs n >= 1");
  return {"L_n = L(2,-2,-2n) as -1/n surgery on a three-component link",
          ln_foliation_aux_linking(),
          {CircleSlope(Rat(Integer(-1), Integer(n)))},
          {{below(1), all_finite(), between(-1, 0)},
           {between(0, 2), above(0), below(0)},
           {between(0, 2), below(0), between(-1, 0)},
           {below(2), between(-1, 1), between(-1, 0)}}};
}

/// The four sets A, B, C, D for L_n (canonical framing), as listed.
inline std::vector<Region2> ln_cover_sets(std::size_t n) {
  using namespace detail;
  require(n >= 2, "the L_n cover sets need n >= 2");
  auto m = static_cast<long long>(n);
  const Framing f = Framing::Canonical;
  return {box(f, below(m - 1), all_finite()), box(f, between(m - 2, m), above(m)),
          box(f, between(m - 2, m), below(m)), box(f, below(m), between(m - 1, m + 1))};
}

/// Taut-foliation fillings (canonical framing, finite slopes) of a fibered
/// hyperbolic two-bridge link: everything that is not an L-space filling.
inline Region2 foliation_region(const LinkClass& c) {
  return region_complement(lspace_region(c));
}

inline Region2 foliation_region(const TwoBridgeLink& l) { return foliation_region(classify(l)); }

/// The region assembled from the individual constructions (lemmas,
/// auxiliary links, symmetry), in canonical framing. For L_1 the result is
/// the known answer for the Whitehead link.
inline Region2 constructive_foliation_region(const LinkClass& c) {
  if (c.tag == LinkTag::Torus || c.tag == LinkTag::NonFibered) lspace_region(c);  // raises
  const Framing canon = Framing::Canonical;
  const Region2 q2 = Region2::rationals(canon);
  if (c.tag == LinkTag::Ln || c.tag == LinkTag::LnMirror) {
    Region2 r = c.n == 1 ? foliation_region(LinkClass::ln(1))
                         : region_intersect(detail::symmetrized(region_union(ln_cover_sets(c.n))), q2);
    return c.tag == LinkTag::LnMirror ? r.negated() : r;
  }
  require(c.fibered_expansion.has_value(), "constructive_foliation_region: class has no fibered description");
  const EvenExpansion& e = *c.fibered_expansion;

  auto from_lemmas = [&](const EvenExpansion& ex) {
    return lemma_regions(sign_census(twist_word(ex))).reframed(canon, Integer(linking_number(ex)));
  };

  // Work with all rivers positive, then undo the mirror.
  EvenExpansion norm = c.mirrored_during_normalization ? e.negated() : e;
  Region2 r;
  switch (c.tag) {
    case LinkTag::GenericFibered:
      r = region_intersect(from_lemmas(norm), q2);
      break;
    case LinkTag::Family1: {
      Region2 lem = from_lemmas(norm);
      if (norm.size() > 3) {
        using namespace detail;
        Region2 general = box(Framing::Seifert, below(1), above(0)).reframed(canon, Integer(linking_number(norm)));
        r = region_union(lem, detail::symmetrized(general));
      } else {
        r = region_union(lem, detail::symmetrized(push_route(family1_route())));
      }
      break;
    }
    case LinkTag::Family2Interior:
      r = region_union(from_lemmas(norm), detail::symmetrized(push_route(family2_route(c.family2_k, c.family2_h))));
      break;
    default:
      fail(ErrorKind::OutOfScope, "no construction for " + c.tag_str());
  }
  r = region_intersect(r, q2);
  return c.mirrored_during_normalization ? r.negated() : r;
}

enum class Verdict { NotQHS_TautByBetti, LSpace, NLSWithTautFoliation, InfinityFilling };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::NotQHS_TautByBetti: return "NotQHS_TautByBetti";
    case Verdict::LSpace: return "LSpace";
    case Verdict::NLSWithTautFoliation: return "NLSWithTautFoliation";
    case Verdict::InfinityFilling: return "InfinityFilling";
  }
  return "?";
}

/// Decides the surgery (r1, r2) in canonical framing.
inline Verdict verdict(const LinkClass& c, const Region2& lspace, const CircleSlope& r1, const CircleSlope& r2) {
  if (!c.hyperbolic_fibered()) lspace_region(c);  // raises the out-of-scope error
  if (r1.is_infinite() || r2.is_infinite()) return Verdict::InfinityFilling;
  Integer lk;
  if (c.fibered_expansion)
    lk = linking_number(*c.fibered_expansion);
  else if (c.tag == LinkTag::Ln || c.tag == LinkTag::LnMirror)
    lk = Integer(static_cast<long long>(c.n) - 1) * (c.tag == LinkTag::Ln ? 1 : -1);
  else
    fail(ErrorKind::Argument, "verdict: class has no fibered description");
  if (!is_qhs(r1, r2, lk)) return Verdict::NotQHS_TautByBetti;
  if (lspace.contains(r1, r2)) return Verdict::LSpace;
  return Verdict::NLSWithTautFoliation;
}

inline Verdict verdict(const TwoBridgeLink& l, const CircleSlope& r1, const CircleSlope& r2) {
  LinkClass c = classify(l);
  return verdict(c, lspace_region(c), r1, r2);
}

struct CoverCheck {
  std::string name;
  bool ok;
};

/// Exact cover checks behind the case analysis.
inline std::vector<CoverCheck> verify_covers(std::size_t max_n = 30, std::size_t max_kh = 4) {
  std::vector<CoverCheck> out;
  const Region2 seifert_q2 = Region2::rationals(Framing::Seifert);
  const Region2 q2 = Region2::rationals(Framing::Canonical);

  out.push_back({"mixed river twists cover Q^2", region_equal(lemma_regions({1, 1, 0, 0}), seifert_q2)});
  out.push_back({"positive river, one positive and two negative bridge twists cover Q^2",
                 region_equal(lemma_regions({1, 0, 1, 2}), seifert_q2)});

  auto family1 = [](std::size_t len) {
    return EvenExpansion(std::vector<Integer>(len, Integer(-2)));
  };
  out.push_back({"family 1, L(-2,-2,-2,-2,-2): lemmas and arcs alpha, beta cover Q^2",
                 region_equal(constructive_foliation_region(classify_expansion(family1(5))), q2)});
  out.push_back({"family 1, L(-2,-2,-2): auxiliary surgery covers Q^2",
                 region_equal(constructive_foliation_region(classify_expansion(family1(3))), q2)});

  bool fam2 = true;
  for (std::size_t k = 1; k <= max_kh; ++k)
    for (std::size_t h = 1; h <= max_kh; ++h) {
      std::vector<Integer> b;
      for (std::size_t i = 0; i < 2 * (k + h) + 1; ++i) b.push_back(i % 2 == 1 ? -2 : (i == 2 * k ? -2 : 2));
      LinkClass c = classify_expansion(EvenExpansion(b));
      fam2 = fam2 && c.tag == LinkTag::Family2Interior && region_equal(constructive_foliation_region(c), q2);
    }
  out.push_back({"family 2 (k, h <= " + std::to_string(max_kh) + "): auxiliary surgery covers Q^2", fam2});

  bool ln = true;
  for (std::size_t n = 2; n <= max_n; ++n) {
    Region2 cover = detail::symmetrized(region_union(ln_cover_sets(n)));
    Region2 lsp = lspace_region(LinkClass::ln(n));
    ln = ln && region_equal(region_intersect(cover, q2), region_complement(lsp)) &&
         region_intersect(cover, lsp).is_empty() && region_equal(push_route(ln_route(n)), region_union(ln_cover_sets(n)));
  }
  out.push_back({"L_n, 2 <= n <= " + std::to_string(max_n) + ": A u B u C u D and swap cover r1 < n or r2 < n", ln});
  return out;
}

}  // namespace tbsl
