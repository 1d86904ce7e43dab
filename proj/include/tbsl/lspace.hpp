#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tbsl/error.hpp"
#include "tbsl/rational.hpp"
#include "tbsl/region.hpp"
#include "tbsl/slope.hpp"
#include "tbsl/surgery.hpp"
#include "tbsl/twobridge.hpp"

namespace tbsl {

/// Closes a set of L-space filling slopes of a rational homology solid torus
/// under the interval rule: with two L-space slopes, every slope of the arc
/// between them that avoids the homological longitude is an L-space slope.
/// The result is a single closed arc (a point when only one slope is known).
inline std::vector<CircleInterval> rr_propagate(std::vector<CircleSlope> known,
                                                const CircleSlope& longitude) {
  if (known.empty()) fail(ErrorKind::Argument, "rr_propagate: no known L-space slopes");
  for (const auto& k : known)
    if (k == longitude)
      fail(ErrorKind::Argument, "rr_propagate: known slope " + k.str() + " is the homological longitude");
  // Order along the circle cut open at the longitude.
  std::sort(known.begin(), known.end(), [&](const CircleSlope& a, const CircleSlope& b) {
    return a != b && in_open_arc(longitude, b, a);
  });
  known.erase(std::unique(known.begin(), known.end()), known.end());
  return {CircleInterval::closed(known.front(), known.back())};
}

/// L-space surgeries forced by one L-space surgery (r1, r2) with r1 r2 > lk^2
/// on a link of unknots: [r1,inf] x [r2,inf] for positive seeds and
/// [inf,r1] x [inf,r2] for negative ones. Obtained by two rounds of
/// rr_propagate, the second one uniform in the fixed slope.
inline Region2 rect_propagate(const Rat& r1, const Rat& r2, const Integer& lk) {
  Rat lk2(lk * lk);
  if (r1.sign() == 0 || r1.sign() != r2.sign() || r1 * r2 <= lk2)
    fail(ErrorKind::Argument, "rect_propagate: needs r1 r2 > lk^2 and r1, r2 of the same sign, got (" +
                                  r1.str() + ", " + r2.str() + ") with lk = " + lk.str());
  auto inf = CircleSlope::infinity();

  // Fill the first component with r1; inf and r2 are L-space slopes.
  auto first = rr_propagate({CircleSlope(r2), inf}, homological_longitude(lk, CircleSlope(r1)));
  const CircleInterval& second_axis = first.front();

  // For every s on that arc the longitude lk^2/s of the second exterior
  // stays on the far side of r1, so the arc from r1 to inf is the same for
  // all such s. The longitude moves monotonically between its values at
  // the two ends of the arc, which is what is checked here.
  std::vector<CircleSlope> ends = {homological_longitude(lk, CircleSlope(r2)), CircleSlope(0)};
  std::vector<CircleInterval> arcs;
  for (const auto& l : ends) arcs.push_back(rr_propagate({CircleSlope(r1), inf}, l).front());
  if (!(arcs[0] == arcs[1])) fail(ErrorKind::Argument, "rect_propagate: longitude crosses the seed");
  return Region2::rect(Framing::Canonical, arcs[0], second_axis);
}

/// L-space surgeries (canonical framing, finite slopes) of a fibered
/// hyperbolic two-bridge link: [n,inf)^2 for L_n, (inf,-n]^2 for its mirror,
/// empty for every other fibered hyperbolic link.
inline Region2 lspace_region(const LinkClass& c) {
  switch (c.tag) {
    case LinkTag::Torus:
      fail(ErrorKind::OutOfScope, "torus link: out of scope (Seifert fibered surgeries)");
    case LinkTag::NonFibered:
      fail(ErrorKind::OutOfScope, "link is not fibered: out of scope");
    case LinkTag::Ln:
    case LinkTag::LnMirror: {
      CircleSlope n(Rat(static_cast<long long>(c.n)));
      auto side = CircleInterval(n, CircleSlope::infinity(), true, false);
      Region2 r = Region2::rect(Framing::Canonical, side, side, true);
      return c.tag == LinkTag::LnMirror ? r.negated() : r;
    }
    default:
      return Region2::empty(Framing::Canonical, true);
  }
}

inline Region2 lspace_region(const TwoBridgeLink& l) { return lspace_region(classify(l)); }

struct ChainStep {
  std::string claim;
  bool ok;
};

/// Replays the argument that L_n is an L-space link: the auxiliary link with
/// linking numbers lk12 = 0, lk13 = lk23 = 1 gives L_n after -1/(n-1)
/// surgery on its third component.
inline std::vector<ChainStep> ln_chain_trace(std::size_t n) {
  require(n >= 1, "verify_ln_chain: n must be positive");
  std::vector<ChainStep> steps;
  auto step = [&](std::string claim, bool ok) { steps.push_back({std::move(claim), ok}); };
  auto inf = CircleSlope::infinity();
  IntMatrix lk = ln_lspace_aux_linking();
  auto diagram = [&](CircleSlope a, CircleSlope b, std::optional<CircleSlope> c) {
    return SurgeryDiagram(Framing::Canonical, lk, {a, b, c});
  };

  CircleSlope longitude = longitude_of(diagram(1, 1, std::nullopt));
  step("homological longitude of S^3_{1,1,*} is 2", longitude == CircleSlope(2));

  // inf: (1,1) surgery on the Whitehead link, the Poincare sphere (taken as known).
  SurgeryDiagram at_inf = rolfsen_fill(diagram(1, 1, inf), 2);
  step("S^3_{1,1,inf} is (1,1) surgery on a link with lk = 0 and is a homology sphere",
       at_inf.linking[0][1] == 0 && presentation_matrix(at_inf).order == Integer(1));
  // 1: Rolfsen twist turns it into (0,0) surgery on the Hopf link, which is S^3.
  SurgeryDiagram at_one = rolfsen_fill(diagram(1, 1, 1), 2);
  step("S^3_{1,1,1} is (0,0) surgery on the Hopf link",
       abs(at_one.linking[0][1]) == 1 && *at_one.slopes[0] == CircleSlope(0) &&
           *at_one.slopes[1] == CircleSlope(0) && presentation_matrix(at_one).order == Integer(1));

  CircleSlope target = n == 1 ? inf : CircleSlope(Rat(Integer(-1), Integer(n - 1)));
  auto arcs = rr_propagate({inf, CircleSlope(1)}, longitude);
  step("interval rule puts " + target.str() + " in the L-space slopes of S^3_{1,1,*}",
       arcs.size() == 1 && arcs[0] == CircleInterval::closed(inf, 1) && arcs[0].contains(target) &&
           !arcs[0].contains(longitude));

  // Coefficient map (a, b, -1/(n-1)) -> (a+n-1, b+n-1), checked on two seeds.
  bool map_ok = true;
  Integer shift(n - 1);
  for (auto [a, b] : {std::pair<long long, long long>{1, 1}, {-3, 7}}) {
    SurgeryDiagram filled = rolfsen_fill(diagram(a, b, target), 2);
    map_ok = map_ok && *filled.slopes[0] == CircleSlope(Rat(a + shift)) &&
             *filled.slopes[1] == CircleSlope(Rat(b + shift)) && filled.linking[0][1] == shift;
  }
  step("(a,b," + target.str() + ") maps to (a+" + shift.str() + ",b+" + shift.str() + ") with lk " + shift.str(),
       map_ok);
  step("linking number of L_n is n-1", Integer(linking_number(ln_expansion(n))) == shift);

  Rat nn(static_cast<long long>(n));
  step("(n,n) surgery on L_n is a rational homology sphere", is_qhs(CircleSlope(nn), CircleSlope(nn), shift));
  Region2 rect = region_intersect(rect_propagate(nn, nn, shift), Region2::rationals(Framing::Canonical));
  TwoBridgeLink ln(Integer(6 * n + 2), Integer(-3));
  step("rectangle from (n,n) equals the closed-form region of b(6n+2,-3)",
       region_equal(rect, lspace_region(ln)));
  return steps;
}

inline bool verify_ln_chain(std::size_t n) {
  for (const auto& s : ln_chain_trace(n))
    if (!s.ok) return false;
  return true;
}

}  // namespace tbsl
