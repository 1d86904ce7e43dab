#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tbsl/error.hpp"
#include "tbsl/rational.hpp"
#include "tbsl/slope.hpp"

namespace tbsl {

using Rect = std::pair<CircleInterval, CircleInterval>;

/// Finite union of rectangles I x J on the torus of multislopes. With
/// finite_only set, the region is intersected with Q^2 (no inf coordinate)
/// and complements are taken inside Q^2.
class Region2 {
 public:
  Region2() = default;
  Region2(Framing framing, std::vector<Rect> rects, bool finite_only = false)
      : framing_(framing), rects_(std::move(rects)), finite_only_(finite_only) {}

  static Region2 empty(Framing f, bool finite_only = false) { return Region2(f, {}, finite_only); }

  static Region2 rect(Framing f, CircleInterval x, CircleInterval y, bool finite_only = false) {
    return Region2(f, {{std::move(x), std::move(y)}}, finite_only);
  }

  /// Q^2.
  static Region2 rationals(Framing f) {
    return rect(f, CircleInterval::rationals(), CircleInterval::rationals(), true);
  }

  Framing framing() const { return framing_; }
  const std::vector<Rect>& rects() const { return rects_; }
  bool finite_only() const { return finite_only_; }

  bool contains(const CircleSlope& x, const CircleSlope& y) const {
    if (finite_only_ && (x.is_infinite() || y.is_infinite())) return false;
    for (const auto& [i, j] : rects_)
      if (i.contains(x) && j.contains(y)) return true;
    return false;
  }

  bool is_empty() const;

  /// Image under (x, y) -> (-x, -y).
  Region2 negated() const {
    std::vector<Rect> r;
    for (const auto& [i, j] : rects_) r.emplace_back(i.negated(), j.negated());
    return Region2(framing_, std::move(r), finite_only_);
  }

  /// Image under (x, y) -> (y, x).
  Region2 swapped() const {
    std::vector<Rect> r;
    for (const auto& [i, j] : rects_) r.emplace_back(j, i);
    return Region2(framing_, std::move(r), finite_only_);
  }

  /// Image under (x, y) -> (x + dx, y + dy).
  Region2 translated(const Rat& dx, const Rat& dy) const {
    std::vector<Rect> r;
    for (const auto& [i, j] : rects_) r.emplace_back(i.shifted(dx), j.shifted(dy));
    return Region2(framing_, std::move(r), finite_only_);
  }

  /// Same set of Dehn fillings read in the other framing of a two-component
  /// link with linking number lk: canonical = Seifert - lk on each side.
  Region2 reframed(Framing target, const Integer& lk) const {
    if (target == framing_) return *this;
    Rat shift = target == Framing::Canonical ? Rat(-lk) : Rat(lk);
    Region2 out = translated(shift, shift);
    out.framing_ = target;
    return out;
  }

  /// "[n,inf)x[n,inf) u ..." ; "{}" when empty.
  std::string str() const {
    if (rects_.empty()) return "{}";
    std::string s;
    for (const auto& [i, j] : rects_) {
      if (!s.empty()) s += " u ";
      s += i.str() + "x" + j.str();
    }
    if (finite_only_) s += " (finite)";
    return s;
  }

  /// Same rectangle list; use region_equal for set equality.
  friend bool operator==(const Region2&, const Region2&) = default;

 private:
  Framing framing_ = Framing::Canonical;
  std::vector<Rect> rects_;
  bool finite_only_ = false;
};

namespace detail {

/// Sorted grid of endpoint slopes on one axis, inf always first. Atom 2t is
/// the point grid[t], atom 2t+1 the open arc from grid[t] to grid[t+1]
/// (cyclically, so the last arc ends at inf).
struct AxisGrid {
  std::vector<CircleSlope> points;

  std::size_t atoms() const { return 2 * points.size(); }

  CircleSlope representative(std::size_t atom) const {
    std::size_t t = atom / 2;
    if (atom % 2 == 0) return points[t];
    std::size_t k = points.size();
    if (k == 1) return CircleSlope(0);
    if (t == 0) return CircleSlope(points[1].value() - Rat(1));
    if (t + 1 == k) return CircleSlope(points[t].value() + Rat(1));
    return CircleSlope((points[t].value() + points[t + 1].value()) / Rat(2));
  }

  /// Closed or open endpoint at the start of a run beginning at `atom`.
  std::pair<CircleSlope, bool> run_start(std::size_t atom) const {
    return {points[atom / 2], atom % 2 == 0};
  }
  std::pair<CircleSlope, bool> run_end(std::size_t atom) const {
    std::size_t t = atom / 2;
    if (atom % 2 == 0) return {points[t], true};
    return {points[(t + 1) % points.size()], false};
  }
};

inline AxisGrid make_grid(std::vector<CircleSlope> pts) {
  pts.push_back(CircleSlope::infinity());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return {std::move(pts)};
}

/// Maximal cyclic runs of set entries; a fully set vector is one run
/// reported as (0, n) with length n.
inline std::vector<std::pair<std::size_t, std::size_t>> cyclic_runs(const std::vector<bool>& bits) {
  std::size_t n = bits.size();
  std::vector<std::pair<std::size_t, std::size_t>> runs;  // (start, length)
  auto unset = std::find(bits.begin(), bits.end(), false);
  if (unset == bits.end()) {
    if (n) runs.emplace_back(0, n);
    return runs;
  }
  std::size_t u = static_cast<std::size_t>(unset - bits.begin());
  std::size_t i = 1;
  while (i <= n) {
    std::size_t idx = (u + i) % n;
    if (!bits[idx]) {
      ++i;
      continue;
    }
    std::size_t len = 0;
    while (i <= n && bits[(u + i) % n]) {
      ++len;
      ++i;
    }
    runs.emplace_back(idx, len);
  }
  std::sort(runs.begin(), runs.end());
  return runs;
}

inline CircleInterval run_interval(const AxisGrid& g, std::size_t start, std::size_t len) {
  if (len == g.atoms()) return CircleInterval::whole();
  auto [lo, lo_closed] = g.run_start(start);
  auto [hi, hi_closed] = g.run_end((start + len - 1) % g.atoms());
  return CircleInterval(lo, hi, lo_closed, hi_closed);
}

using Membership = std::function<bool(const CircleSlope&, const CircleSlope&)>;

/// Drops grid points whose neighbouring atoms all behave the same.
inline AxisGrid prune(const AxisGrid& g, const std::vector<std::vector<bool>>& lines) {
  std::vector<CircleSlope> kept;
  std::size_t n = g.atoms();
  for (std::size_t t = 1; t < g.points.size(); ++t) {
    std::size_t before = 2 * t - 1, at = 2 * t, after = (2 * t + 1) % n;
    if (!(lines[before] == lines[at] && lines[at] == lines[after])) kept.push_back(g.points[t]);
  }
  return make_grid(std::move(kept));
}

/// Normal form of the set described by `member` on the product grid.
inline Region2 tabulate(Framing f, bool finite_only, const AxisGrid& gx, const AxisGrid& gy,
                        const Membership& member) {
  auto table = [&](const AxisGrid& ax, const AxisGrid& ay) {
    std::vector<std::vector<bool>> cols(ax.atoms(), std::vector<bool>(ay.atoms(), false));
    for (std::size_t i = 0; i < ax.atoms(); ++i) {
      CircleSlope x = ax.representative(i);
      for (std::size_t j = 0; j < ay.atoms(); ++j) cols[i][j] = member(x, ay.representative(j));
    }
    return cols;
  };
  auto cols = table(gx, gy);
  std::vector<std::vector<bool>> rows(gy.atoms(), std::vector<bool>(gx.atoms()));
  for (std::size_t i = 0; i < gx.atoms(); ++i)
    for (std::size_t j = 0; j < gy.atoms(); ++j) rows[j][i] = cols[i][j];

  AxisGrid px = prune(gx, cols), py = prune(gy, rows);
  cols = table(px, py);

  // Group x-atoms by their column pattern, then split both sides into runs.
  std::map<std::vector<bool>, std::vector<bool>> by_pattern;
  for (std::size_t i = 0; i < px.atoms(); ++i) {
    if (std::find(cols[i].begin(), cols[i].end(), true) == cols[i].end()) continue;
    auto& xs = by_pattern[cols[i]];
    if (xs.empty()) xs.assign(px.atoms(), false);
    xs[i] = true;
  }
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rect>> keyed;
  for (const auto& [pattern, xs] : by_pattern)
    for (auto [xs0, xl] : cyclic_runs(xs))
      for (auto [ys0, yl] : cyclic_runs(pattern))
        keyed.push_back({{xs0, ys0}, {run_interval(px, xs0, xl), run_interval(py, ys0, yl)}});
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Rect> rects;
  for (auto& k : keyed) rects.push_back(std::move(k.second));
  return Region2(f, std::move(rects), finite_only);
}

inline void collect_endpoints(const Region2& r, std::vector<CircleSlope>& xs, std::vector<CircleSlope>& ys) {
  for (const auto& [i, j] : r.rects()) {
    xs.push_back(i.lo());
    xs.push_back(i.hi());
    ys.push_back(j.lo());
    ys.push_back(j.hi());
  }
}

inline Region2 combine(const std::vector<const Region2*>& parts, bool finite_only,
                       const Membership& member) {
  require(!parts.empty(), "region operation needs at least one operand");
  Framing f = parts.front()->framing();
  std::vector<CircleSlope> xs, ys;
  for (const auto* r : parts) {
    if (r->framing() != f)
      fail(ErrorKind::Argument, "region framings differ: " + std::string(to_string(f)) + " vs " +
                                    std::string(to_string(r->framing())));
    collect_endpoints(*r, xs, ys);
  }
  Membership m = member;
  if (finite_only)
    m = [member](const CircleSlope& x, const CircleSlope& y) {
      return x.is_finite() && y.is_finite() && member(x, y);
    };
  return tabulate(f, finite_only, make_grid(std::move(xs)), make_grid(std::move(ys)), m);
}

}  // namespace detail

/// Canonical rectangle decomposition on the coarsest endpoint grid.
inline Region2 normalized(const Region2& r) {
  return detail::combine({&r}, r.finite_only(),
                         [&](const CircleSlope& x, const CircleSlope& y) { return r.contains(x, y); });
}

inline Region2 region_union(const Region2& a, const Region2& b) {
  return detail::combine({&a, &b}, a.finite_only() && b.finite_only(),
                         [&](const CircleSlope& x, const CircleSlope& y) {
                           return a.contains(x, y) || b.contains(x, y);
                         });
}

inline Region2 region_union(const std::vector<Region2>& parts) {
  require(!parts.empty(), "region_union: no operands");
  std::vector<const Region2*> ptrs;
  bool finite_only = true;
  for (const auto& p : parts) {
    ptrs.push_back(&p);
    finite_only = finite_only && p.finite_only();
  }
  return detail::combine(ptrs, finite_only, [&](const CircleSlope& x, const CircleSlope& y) {
    for (const auto& p : parts)
      if (p.contains(x, y)) return true;
    return false;
  });
}

inline Region2 region_intersect(const Region2& a, const Region2& b) {
  return detail::combine({&a, &b}, a.finite_only() || b.finite_only(),
                         [&](const CircleSlope& x, const CircleSlope& y) {
                           return a.contains(x, y) && b.contains(x, y);
                         });
}

/// Complement within Q^2 for finite_only regions, within the whole torus of
/// slopes otherwise.
inline Region2 region_complement(const Region2& a) {
  return detail::combine({&a}, a.finite_only(),
                         [&](const CircleSlope& x, const CircleSlope& y) { return !a.contains(x, y); });
}

/// a \ b, inside a's universe.
inline Region2 region_difference(const Region2& a, const Region2& b) {
  return detail::combine({&a, &b}, a.finite_only(),
                         [&](const CircleSlope& x, const CircleSlope& y) {
                           return a.contains(x, y) && !b.contains(x, y);
                         });
}

/// Exact containment target <= r.
inline bool region_covers(const Region2& r, const Region2& target) {
  return region_difference(target, r).rects().empty();
}

/// Set equality.
inline bool region_equal(const Region2& a, const Region2& b) {
  return region_covers(a, b) && region_covers(b, a);
}

inline bool Region2::is_empty() const { return normalized(*this).rects().empty(); }

}  // namespace tbsl
