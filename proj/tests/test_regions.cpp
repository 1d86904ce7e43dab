#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "tbsl/family.hpp"
#include "tbsl/region.hpp"

using namespace tbsl;

namespace {

const auto inf = CircleSlope::infinity();

CircleInterval op(CircleSlope a, CircleSlope b) { return CircleInterval::open(a, b); }

Region2 box(CircleInterval x, CircleInterval y, Framing f = Framing::Seifert) {
  return Region2::rect(f, std::move(x), std::move(y), true);
}

CircleSlope random_endpoint(std::mt19937_64& rng) {
  if (rng() % 6 == 0) return inf;
  return CircleSlope(Rat(static_cast<long long>(rng() % 9) - 4, 1 + static_cast<long long>(rng() % 2)));
}

CircleInterval random_interval(std::mt19937_64& rng) {
  return CircleInterval(random_endpoint(rng), random_endpoint(rng), rng() % 2, rng() % 2);
}

Region2 random_soup(std::mt19937_64& rng, bool finite_only) {
  std::vector<Rect> rects;
  for (std::size_t i = 0, n = rng() % 4; i < n; ++i) rects.emplace_back(random_interval(rng), random_interval(rng));
  return Region2(Framing::Canonical, std::move(rects), finite_only);
}

/// Endpoint grid of the operands plus midpoints and far points on each axis.
std::vector<CircleSlope> samples(const std::vector<const Region2*>& rs) {
  std::vector<Rat> pts;
  for (const auto* r : rs)
    for (const auto& [i, j] : r->rects())
      for (const auto* s : {&i.lo(), &i.hi(), &j.lo(), &j.hi()})
        if (s->is_finite()) pts.push_back(s->value());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<CircleSlope> out{inf};
  if (pts.empty()) {
    out.emplace_back(0);
    return out;
  }
  out.emplace_back(pts.front() - Rat(1));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out.emplace_back(pts[i]);
    if (i + 1 < pts.size()) out.emplace_back((pts[i] + pts[i + 1]) / Rat(2));
  }
  out.emplace_back(pts.back() + Rat(1));
  return out;
}

}  // namespace

TEST(Region, ReductionCovers) {
  auto b1 = op(inf, 1), a1 = op(-1, inf);
  Region2 prima = region_union(std::vector<Region2>{box(b1, b1), box(a1, a1), box(b1, a1), box(a1, b1)});
  EXPECT_TRUE(region_equal(prima, Region2::rationals(Framing::Seifert)));
  Region2 seconda = region_union(
      std::vector<Region2>{box(b1, b1), box(a1, a1), box(op(0, inf), op(inf, 0)), box(op(inf, 0), op(0, inf))});
  EXPECT_TRUE(region_equal(seconda, Region2::rationals(Framing::Seifert)));
  // Dropping one piece leaves (1,1)-ish points uncovered.
  Region2 partial = region_union(std::vector<Region2>{box(b1, b1), box(a1, a1), box(b1, a1)});
  EXPECT_FALSE(region_covers(partial, Region2::rationals(Framing::Seifert)));
  EXPECT_FALSE(partial.contains(CircleSlope(2), CircleSlope(-2)));
}

TEST(Region, TrivialCases) {
  Region2 e = Region2::empty(Framing::Canonical, true);
  EXPECT_TRUE(e.is_empty());
  EXPECT_TRUE(region_equal(region_complement(e), Region2::rationals(Framing::Canonical)));
  EXPECT_TRUE(region_covers(box(op(0, 1), op(0, 1), Framing::Canonical), e));
  Region2 quad = box(CircleInterval(CircleSlope(3), inf, true, false), CircleInterval(CircleSlope(3), inf, true, false),
                     Framing::Canonical);
  EXPECT_FALSE(region_covers(quad, Region2::rationals(Framing::Canonical)));
  EXPECT_FALSE(quad.contains(CircleSlope(0), CircleSlope(0)));
  EXPECT_TRUE(quad.contains(CircleSlope(3), CircleSlope(100)));
  EXPECT_FALSE(quad.contains(CircleSlope(3), inf));
}

TEST(Region, FramingMismatchIsAnError) {
  Region2 a = box(op(0, 1), op(0, 1), Framing::Seifert);
  Region2 b = box(op(0, 1), op(0, 1), Framing::Canonical);
  EXPECT_THROW(region_union(a, b), Error);
  EXPECT_THROW(region_intersect(a, b), Error);
  EXPECT_THROW(region_covers(a, b), Error);
}

TEST(Region, NormalFormIsCanonical) {
  // Two overlapping boxes and their hull describe the same set.
  Region2 a = region_union(box(op(0, 2), op(0, 1)), box(CircleInterval(CircleSlope(1), CircleSlope(3), true, false), op(0, 1)));
  Region2 b = box(op(0, 3), op(0, 1));
  EXPECT_EQ(normalized(a).rects(), normalized(b).rects());
  EXPECT_EQ(normalized(a).str(), "(0,3)x(0,1) (finite)");
}

TEST(Region, BooleanLawsOnRandomSoups) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 150; ++t) {
    bool fin = t % 2 == 0;
    Region2 a = random_soup(rng, fin), b = random_soup(rng, fin), c = random_soup(rng, fin);
    Region2 u = region_union(a, b), i = region_intersect(a, b), ca = region_complement(a);
    Region2 d = region_difference(a, b);
    auto pts = samples({&a, &b, &c});
    for (const auto& x : pts)
      for (const auto& y : pts) {
        bool ina = a.contains(x, y), inb = b.contains(x, y);
        bool universe = !fin || (x.is_finite() && y.is_finite());
        ASSERT_EQ(u.contains(x, y), ina || inb) << a.str() << " | " << b.str() << " at " << x.str() << "," << y.str();
        ASSERT_EQ(i.contains(x, y), ina && inb);
        ASSERT_EQ(ca.contains(x, y), universe && !ina);
        ASSERT_EQ(d.contains(x, y), ina && !inb);
        ASSERT_EQ(normalized(a).contains(x, y), ina);
      }
    EXPECT_TRUE(region_equal(region_union(region_union(a, b), c), region_union(a, region_union(b, c))));
    EXPECT_TRUE(region_equal(region_intersect(region_intersect(a, b), c), region_intersect(a, region_intersect(b, c))));
    EXPECT_TRUE(region_equal(region_complement(u), region_intersect(ca, region_complement(b))));
    EXPECT_TRUE(region_equal(region_complement(i), region_union(ca, region_complement(b))));
    EXPECT_TRUE(region_equal(region_complement(ca), normalized(a)));
    EXPECT_EQ(normalized(u).rects(), normalized(region_union(b, a)).rects());
    EXPECT_TRUE(region_covers(u, a) && region_covers(a, i));
    EXPECT_EQ(region_covers(a, b), region_difference(b, a).is_empty());
  }
}

TEST(Region, SymmetriesMoveMembership) {
  std::mt19937_64 rng(67);
  for (int t = 0; t < 100; ++t) {
    Region2 a = random_soup(rng, t % 2 == 0);
    Rat dx(static_cast<long long>(rng() % 5) - 2), dy(static_cast<long long>(rng() % 5) - 2);
    Region2 n = a.negated(), s = a.swapped(), tr = a.translated(dx, dy);
    auto pts = samples({&a});
    for (const auto& x : pts)
      for (const auto& y : pts) {
        EXPECT_EQ(n.contains(-x, -y), a.contains(x, y));
        EXPECT_EQ(s.contains(y, x), a.contains(x, y));
        EXPECT_EQ(tr.contains(x.shifted(dx), y.shifted(dy)), a.contains(x, y));
      }
    Region2 c = a.reframed(Framing::Seifert, 3);
    EXPECT_EQ(c.framing(), Framing::Seifert);
    EXPECT_TRUE(region_equal(c.reframed(Framing::Canonical, 3), a));
  }
}

TEST(Family, Examples) {
  for (const auto& [f, arc] : families::builtin()) EXPECT_EQ(family_image(f), arc) << f.name << ": " << f.str();
  EXPECT_EQ(family_image(families::river_positive()), op(inf, 1));
  EXPECT_EQ(family_image(families::river_negative()), op(-1, inf));
  SlopeFamily constant{"c", {{Rat(3), Rat(0)}}, {{Rat(1), Rat(0)}}, {op(0, 1)}};
  EXPECT_EQ(family_image(constant), CircleInterval::point(CircleSlope(3)));
  SlopeFamily scaled{"c", {{Rat(2), Rat(4)}}, {{Rat(1), Rat(2)}}, {op(0, 1)}};
  EXPECT_EQ(family_image(scaled), CircleInterval::point(CircleSlope(2)));
}

TEST(Family, Errors) {
  SlopeFamily pole{"pole", {{Rat(1), Rat(0)}}, {{Rat(0), Rat(1)}}, {op(-1, 1)}};
  EXPECT_THROW(family_image(pole), Error);
  SlopeFamily closed{"closed", {{Rat(0), Rat(1)}}, {{Rat(1), Rat(0)}}, {CircleInterval::closed(0, 1)}};
  EXPECT_THROW(family_image(closed), Error);
  SlopeFamily zero{"zero", {{Rat(0), Rat(1)}}, {{Rat(0), Rat(0)}}, {op(0, 1)}};
  EXPECT_THROW(family_image(zero), Error);
  SlopeFamily wrap{"wrap", {{Rat(0), Rat(1)}}, {{Rat(1), Rat(0)}}, {op(1, -1)}};
  EXPECT_THROW(family_image(wrap), Error);
}

TEST(Family, BoundedBoxesAgreeWithCornerEnumeration) {
  // Linear-fractional functions are monotone along every segment where the
  // denominator keeps its sign, so the extremes over a closed box sit at the
  // corners and the open box gives the open interval between them.
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<long long> c(-4, 4);
  int checked = 0;
  while (checked < 300) {
    std::size_t k = 1 + rng() % 3;
    std::vector<Rat> nc{Rat(c(rng))}, dc{Rat(c(rng))};
    std::vector<CircleInterval> dom;
    std::vector<std::pair<Rat, Rat>> ends;
    for (std::size_t i = 0; i < k; ++i) {
      nc.emplace_back(c(rng));
      dc.emplace_back(checked % 2 ? 0 : c(rng));
      long long lo = c(rng), len = 1 + static_cast<long long>(rng() % 3);
      dom.push_back(op(lo, lo + len));
      ends.emplace_back(Rat(lo), Rat(lo + len));
    }
    SlopeFamily f{"random", {nc}, {dc}, dom};
    std::vector<Rat> dvals, vals;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<Rat> v;
      for (std::size_t i = 0; i < k; ++i) v.push_back(mask >> i & 1 ? ends[i].second : ends[i].first);
      dvals.push_back(f.denominator(v));
      if (!dvals.back().is_zero()) vals.push_back(f.numerator(v) / dvals.back());
    }
    bool pos = std::all_of(dvals.begin(), dvals.end(), [](const Rat& d) { return d.sign() > 0; });
    bool neg = std::all_of(dvals.begin(), dvals.end(), [](const Rat& d) { return d.sign() < 0; });
    if (!pos && !neg) continue;
    auto [mn, mx] = std::minmax_element(vals.begin(), vals.end());
    CircleInterval got = family_image(f);
    if (*mn == *mx)
      EXPECT_EQ(got, CircleInterval::point(CircleSlope(*mn))) << f.str();
    else
      EXPECT_EQ(got, op(*mn, *mx)) << f.str();
    ++checked;
  }
}

TEST(Family, InvariantUnderAffineReparametrization) {
  std::mt19937_64 rng(73);
  std::vector<SlopeFamily> base;
  for (const auto& [f, arc] : families::builtin()) base.push_back(f);
  for (int t = 0; t < 200; ++t) {
    const SlopeFamily& f = base[rng() % base.size()];
    // v_i = a_i u_i + b_i, so u_i ranges over the preimage of the box.
    SlopeFamily g = f;
    g.name = "reparametrized";
    for (std::size_t i = 0; i < f.vars(); ++i) {
      long long ai = 0;
      while (ai == 0) ai = static_cast<long long>(rng() % 7) - 3;
      Rat a(Integer(ai), Integer(1 + static_cast<long long>(rng() % 3)));
      Rat b(static_cast<long long>(rng() % 7) - 3);
      for (Affine* aff : {&g.numerator, &g.denominator}) {
        aff->coeffs[0] += aff->coeffs[i + 1] * b;
        aff->coeffs[i + 1] *= a;
      }
      auto pre = [&](const CircleSlope& s) { return s.is_infinite() ? s : CircleSlope((s.value() - b) / a); };
      const CircleInterval& d = f.domain[i];
      CircleSlope lo = pre(d.lo()), hi = pre(d.hi());
      g.domain[i] = a.sign() > 0 ? op(lo, hi) : op(hi, lo);
    }
    EXPECT_EQ(family_image(g), family_image(f)) << f.name << " vs " << g.str();
  }
}

TEST(Family, SampledValuesLieInTheImage) {
  std::mt19937_64 rng(79);
  for (const auto& [f, arc] : families::builtin()) {
    for (int t = 0; t < 200; ++t) {
      std::vector<Rat> v;
      for (const auto& d : f.domain) {
        Rat lo = d.lo().is_finite() ? d.lo().value() : Rat(-50);
        Rat hi = d.hi().is_finite() ? d.hi().value() : lo + Rat(50);
        Rat u(static_cast<long long>(1 + rng() % 999), 1000);
        v.push_back(lo + (hi - lo) * u);
      }
      EXPECT_TRUE(arc.contains(f.at(v))) << f.name;
    }
  }
}
