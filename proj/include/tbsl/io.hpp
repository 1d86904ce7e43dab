#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tbsl/error.hpp"
#include "tbsl/rational.hpp"
#include "tbsl/region.hpp"
#include "tbsl/slope.hpp"
#include "tbsl/surgery.hpp"

namespace tbsl {

using Json = nlohmann::ordered_json;

// ---- JSON ----------------------------------------------------------------

inline Json to_json(const CircleSlope& s) { return s.str(); }
inline Json to_json(const CircleInterval& i) { return i.str(); }

inline Json to_json(const Region2& r) {
  Json rects = Json::array();
  for (const auto& [i, j] : r.rects()) rects.push_back(Json::array({i.str(), j.str()}));
  return Json{{"framing", to_string(r.framing())}, {"finite_only", r.finite_only()}, {"rects", rects}};
}

inline Json to_json(const SurgeryDiagram& d) {
  Json lk = Json::array();
  for (const auto& row : d.linking) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.str());
    lk.push_back(r);
  }
  Json slopes = Json::array();
  for (const auto& s : d.slopes) slopes.push_back(s ? Json(s->str()) : Json(nullptr));
  return Json{{"framing", to_string(d.framing)}, {"linking", lk}, {"slopes", slopes}};
}

namespace detail {

inline const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorKind::Parse, std::string("JSON document lacks field '") + key + "'");
  return j.at(key);
}

inline std::string as_string(const Json& j, const std::string& what) {
  if (!j.is_string()) fail(ErrorKind::Parse, what + " must be a string");
  return j.get<std::string>();
}

}  // namespace detail

inline Region2 region_from_json(const Json& j) {
  Framing f = parse_framing(detail::as_string(detail::member(j, "framing"), "framing"));
  bool finite_only = j.value("finite_only", false);
  std::vector<Rect> rects;
  const Json& rs = detail::member(j, "rects");
  if (!rs.is_array()) fail(ErrorKind::Parse, "rects must be an array");
  for (const auto& r : rs) {
    if (!r.is_array() || r.size() != 2) fail(ErrorKind::Parse, "each rect must be a pair of intervals");
    rects.emplace_back(parse_interval(detail::as_string(r[0], "interval")),
                       parse_interval(detail::as_string(r[1], "interval")));
  }
  return Region2(f, std::move(rects), finite_only);
}

inline SurgeryDiagram diagram_from_json(const Json& j) {
  Framing f = parse_framing(detail::as_string(detail::member(j, "framing"), "framing"));
  const Json& lk = detail::member(j, "linking");
  const Json& sl = detail::member(j, "slopes");
  if (!lk.is_array() || !sl.is_array()) fail(ErrorKind::Parse, "linking and slopes must be arrays");
  IntMatrix m;
  for (const auto& row : lk) {
    if (!row.is_array()) fail(ErrorKind::Parse, "linking rows must be arrays");
    std::vector<Integer> r;
    for (const auto& x : row) {
      if (x.is_number_integer())
        r.emplace_back(x.get<long long>());
      else
        r.push_back(parse_integer(detail::as_string(x, "linking entry")));
    }
    m.push_back(std::move(r));
  }
  std::vector<std::optional<CircleSlope>> slopes;
  for (const auto& s : sl) {
    if (s.is_null())
      slopes.emplace_back(std::nullopt);
    else if (s.is_number_integer())
      slopes.emplace_back(CircleSlope(Rat(s.get<long long>())));
    else
      slopes.emplace_back(parse_slope(detail::as_string(s, "slope")));
  }
  return SurgeryDiagram(f, std::move(m), std::move(slopes));
}

inline Json error_json(ErrorKind kind, const std::string& message) {
  return Json{{"error", {{"kind", to_string(kind)}, {"message", message}}}};
}

// ---- SVG -----------------------------------------------------------------

struct SvgLayer {
  Region2 region;
  std::string fill;
  std::string label;
};

namespace detail {

/// Fixed-point rendering with two decimals, rounded half away from zero.
inline std::string fixed2(const Rat& x) {
  Integer scaled = x.num() * 100;
  Integer q = scaled / x.den();
  Integer r = abs(Integer(scaled % x.den()));
  if (2 * r >= x.den()) q += (scaled < 0 ? -1 : 1);
  bool neg = q < 0;
  Integer a = abs(q);
  std::string frac = Integer(a % 100).str();
  if (frac.size() < 2) frac = "0" + frac;
  return (neg ? "-" : "") + Integer(a / 100).str() + "." + frac;
}

/// Piece of an arc inside [-w, w]: endpoints and whether each is part of
/// the set.
struct Segment {
  Rat lo, hi;
  bool lo_closed, hi_closed;
};

inline std::vector<Segment> clip(const CircleInterval& i, const Rat& w) {
  std::vector<Segment> out;
  auto add = [&](std::optional<Rat> lo, bool lc, std::optional<Rat> hi, bool hc) {
    if (!lo || *lo < -w) {
      lo = -w;
      lc = true;
    }
    if (!hi || *hi > w) {
      hi = w;
      hc = true;
    }
    if (*lo < *hi || (*lo == *hi && lc && hc)) out.push_back({*lo, *hi, lc, hc});
  };
  auto fin = [](const CircleSlope& s) { return s.is_finite() ? std::optional<Rat>(s.value()) : std::nullopt; };
  if (i.is_point()) {
    if (i.lo().is_finite()) add(i.lo().value(), true, i.lo().value(), true);
    return out;
  }
  if (i.full_circle()) {
    if (i.lo().is_finite() && !i.lo_closed()) {
      add(std::nullopt, true, i.lo().value(), false);
      add(i.lo().value(), false, std::nullopt, true);
    } else {
      add(std::nullopt, true, std::nullopt, true);
    }
    return out;
  }
  if (i.wraps_infinity()) {
    add(i.lo().value(), i.lo_closed(), std::nullopt, true);
    add(std::nullopt, true, i.hi().value(), i.hi_closed());
    return out;
  }
  add(fin(i.lo()), i.lo_closed(), fin(i.hi()), i.hi_closed());
  return out;
}

}  // namespace detail

/// Deterministic plot of the square [-w, w]^2 of the slope plane. Open
/// rectangle edges are dashed; arcs through inf are cut at the window
/// border, where a thick border mark stands for the point at infinity.
inline std::string render_svg(const std::vector<SvgLayer>& layers, const Rat& window) {
  require(window > Rat(0), "plot window must be positive");
  const Rat size(400), margin(20);
  Rat scale = size / (window * 2);
  auto px = [&](const Rat& x) { return detail::fixed2(margin + (x + window) * scale); };
  auto py = [&](const Rat& y) { return detail::fixed2(margin + (window - y) * scale); };
  std::string total = detail::fixed2(size + margin * 2);

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << total << "\" height=\"" << total
    << "\" viewBox=\"0 0 " << total << " " << total << "\">\n";
  s << "<rect x=\"" << px(-window) << "\" y=\"" << py(window) << "\" width=\"" << detail::fixed2(size)
    << "\" height=\"" << detail::fixed2(size) << "\" fill=\"white\" stroke=\"black\"/>\n";
  if (Rat(0) > -window && Rat(0) < window) {
    s << "<line x1=\"" << px(0) << "\" y1=\"" << py(window) << "\" x2=\"" << px(0) << "\" y2=\"" << py(-window)
      << "\" stroke=\"gray\"/>\n";
    s << "<line x1=\"" << px(-window) << "\" y1=\"" << py(0) << "\" x2=\"" << px(window) << "\" y2=\"" << py(0)
      << "\" stroke=\"gray\"/>\n";
  }
  for (const auto& layer : layers) {
    s << "<g fill=\"" << layer.fill << "\" fill-opacity=\"0.5\" stroke=\"" << layer.fill << "\">\n";
    if (!layer.label.empty()) s << "<title>" << layer.label << "</title>\n";
    for (const auto& [ix, iy] : layer.region.rects()) {
      for (const auto& sx : detail::clip(ix, window))
        for (const auto& sy : detail::clip(iy, window)) {
          s << "<rect x=\"" << px(sx.lo) << "\" y=\"" << py(sy.hi) << "\" width=\""
            << detail::fixed2((sx.hi - sx.lo) * scale) << "\" height=\"" << detail::fixed2((sy.hi - sy.lo) * scale)
            << "\" stroke=\"none\"/>\n";
          auto edge = [&](const Rat& x1, const Rat& y1, const Rat& x2, const Rat& y2, bool closed) {
            s << "<line x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2) << "\" y2=\"" << py(y2)
              << "\"" << (closed ? "" : " stroke-dasharray=\"4 3\"") << "/>\n";
          };
          edge(sx.lo, sy.lo, sx.lo, sy.hi, sx.lo_closed);
          edge(sx.hi, sy.lo, sx.hi, sy.hi, sx.hi_closed);
          edge(sx.lo, sy.lo, sx.hi, sy.lo, sy.lo_closed);
          edge(sx.lo, sy.hi, sx.hi, sy.hi, sy.hi_closed);
        }
      if (!layer.region.finite_only() && (ix.contains(CircleSlope::infinity()) || iy.contains(CircleSlope::infinity())))
        s << "<rect x=\"" << px(-window) << "\" y=\"" << py(window) << "\" width=\"" << detail::fixed2(size)
          << "\" height=\"" << detail::fixed2(size) << "\" fill=\"none\" stroke-width=\"4\"/>\n";
    }
    s << "</g>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace tbsl
