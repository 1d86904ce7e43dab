#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tbsl/error.hpp"
#include "tbsl/rational.hpp"
#include "tbsl/slope.hpp"

namespace tbsl {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Surgery on a link in S^3 whose components are described only through
/// their pairwise linking numbers. Unfilled components are nullopt.
struct SurgeryDiagram {
  Framing framing = Framing::Canonical;
  IntMatrix linking;
  std::vector<std::optional<CircleSlope>> slopes;

  SurgeryDiagram() = default;
  SurgeryDiagram(Framing f, IntMatrix lk, std::vector<std::optional<CircleSlope>> s)
      : framing(f), linking(std::move(lk)), slopes(std::move(s)) {
    validate();
  }

  std::size_t size() const { return slopes.size(); }

  bool fully_filled() const {
    for (const auto& s : slopes)
      if (!s) return false;
    return true;
  }

  /// Sum over j != i of lk(K_i, K_j).
  Integer total_linking(std::size_t i) const {
    Integer t = 0;
    for (std::size_t j = 0; j < size(); ++j)
      if (j != i) t += linking[i][j];
    return t;
  }

  void validate() const {
    std::size_t n = slopes.size();
    require(n >= 1, "surgery diagram needs at least one component");
    require(linking.size() == n, "linking matrix size does not match the number of slopes");
    for (std::size_t i = 0; i < n; ++i) {
      require(linking[i].size() == n, "linking matrix must be square");
      require(linking[i][i] == 0, "linking matrix must have zero diagonal");
      for (std::size_t j = 0; j < i; ++j)
        require(linking[i][j] == linking[j][i], "linking matrix must be symmetric");
    }
  }

  friend bool operator==(const SurgeryDiagram&, const SurgeryDiagram&) = default;
};

/// Seifert and canonical slopes differ by the total linking number of the
/// component: canonical = Seifert - sum_j lk(i,j). inf is fixed.
inline SurgeryDiagram framing_convert(const SurgeryDiagram& d, Framing target) {
  if (d.framing == target) return d;
  SurgeryDiagram out = d;
  out.framing = target;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d.slopes[i]) continue;
    Rat shift(d.total_linking(i));
    out.slopes[i] = d.slopes[i]->shifted(target == Framing::Canonical ? -shift : shift);
  }
  return out;
}

/// Removes an unknotted component filled with canonical slope inf or -1/m
/// by a Rolfsen twist. The result is in canonical framing: every remaining
/// slope r_i becomes r_i + m lk(i,c)^2 and every linking number lk(i,j)
/// becomes lk(i,j) + m lk(i,c) lk(j,c). Unknottedness is the caller's claim.
inline SurgeryDiagram rolfsen_fill(const SurgeryDiagram& diagram, std::size_t c) {
  require(c < diagram.size(), "rolfsen_fill: component index out of range");
  require(diagram.size() >= 2, "rolfsen_fill: cannot remove the only component");
  SurgeryDiagram d = framing_convert(diagram, Framing::Canonical);
  if (!d.slopes[c]) fail(ErrorKind::Argument, "rolfsen_fill: component is unfilled");
  const CircleSlope& s = *d.slopes[c];

  Integer m = 0;
  if (s.is_finite()) {
    const Rat& r = s.value();
    if (r.is_zero() || abs(r.num()) != 1)
      fail(ErrorKind::Unsupported,
           "rolfsen_fill: slope " + r.str() + " is not of the form -1/m; the filling does not return S^3");
    m = -r.num() * r.den();
  }

  SurgeryDiagram out;
  out.framing = Framing::Canonical;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (i != c) keep.push_back(i);
  out.linking.assign(keep.size(), std::vector<Integer>(keep.size(), 0));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    std::size_t i = keep[a];
    for (std::size_t b = 0; b < keep.size(); ++b) {
      std::size_t j = keep[b];
      if (i != j) out.linking[a][b] = d.linking[i][j] + m * d.linking[i][c] * d.linking[j][c];
    }
    const auto& si = d.slopes[i];
    out.slopes.push_back(si ? std::optional<CircleSlope>(si->shifted(Rat(m * d.linking[i][c] * d.linking[i][c])))
                            : std::nullopt);
  }
  return out;
}

/// Exact determinant by fraction-free Gaussian elimination.
inline Integer determinant(IntMatrix a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

struct HomologyReport {
  IntMatrix presentation;
  Integer determinant;
  /// |H_1|, or nullopt when H_1 is infinite.
  std::optional<Integer> order;
};

/// Presentation of H_1 of a fully filled diagram: row i is p_i mu_i + q_i
/// sum_j lk(i,j) mu_j with the canonical slope p_i/q_i. Components filled
/// with inf are deleted.
inline HomologyReport presentation_matrix(const SurgeryDiagram& diagram) {
  if (!diagram.fully_filled()) fail(ErrorKind::Argument, "presentation_matrix: diagram has unfilled components");
  SurgeryDiagram d = framing_convert(diagram, Framing::Canonical);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.slopes[i]->is_finite()) keep.push_back(i);

  HomologyReport h;
  h.presentation.assign(keep.size(), std::vector<Integer>(keep.size(), 0));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    const Rat& r = d.slopes[keep[a]]->value();
    for (std::size_t b = 0; b < keep.size(); ++b)
      h.presentation[a][b] = a == b ? r.num() : Integer(r.den() * d.linking[keep[a]][keep[b]]);
  }
  h.determinant = determinant(h.presentation);
  if (h.determinant != 0) h.order = abs(h.determinant);
  return h;
}

/// Rational homology sphere test for a filled two-component link with
/// linking number lk: fails exactly for r1 r2 = lk^2 or {r1,r2} = {0,inf}.
inline bool is_qhs(const CircleSlope& r1, const CircleSlope& r2, const Integer& lk) {
  if (r1.is_infinite() && r2.is_infinite()) return true;
  if (r1.is_infinite()) return !r2.value().is_zero();
  if (r2.is_infinite()) return !r1.value().is_zero();
  return r1.value() * r2.value() != Rat(lk * lk);
}

inline bool is_qhs(const SurgeryDiagram& diagram) {
  require(diagram.size() == 2, "is_qhs: expects a two-component diagram");
  if (!diagram.fully_filled()) fail(ErrorKind::Argument, "is_qhs: diagram has unfilled components");
  SurgeryDiagram d = framing_convert(diagram, Framing::Canonical);
  return is_qhs(*d.slopes[0], *d.slopes[1], d.linking[0][1]);
}

/// lk^2 / r in canonical framing: the homological longitude of the exterior
/// of the second component after filling the first with slope r.
inline CircleSlope homological_longitude(const Integer& lk, const CircleSlope& r) {
  if (r.is_infinite()) return CircleSlope(0);
  if (r.value().is_zero()) fail(ErrorKind::Argument, "homological_longitude: slope 0 is excluded");
  return CircleSlope(Rat(lk * lk) / r.value());
}

/// Homological longitude of the single unfilled component, in canonical
/// framing: the slope p/q for which the filled manifold has b_1 > 0.
inline CircleSlope longitude_of(const SurgeryDiagram& diagram) {
  SurgeryDiagram d = framing_convert(diagram, Framing::Canonical);
  std::optional<std::size_t> open;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d.slopes[i]) {
      if (open) fail(ErrorKind::Argument, "longitude_of: more than one unfilled component");
      open = i;
    }
  if (!open) fail(ErrorKind::Argument, "longitude_of: no unfilled component");

  // det is linear in (p, q) for the slope p/q: det = p D1 + q D2.
  auto det_at = [&](const Rat& p_over_q) {
    SurgeryDiagram e = d;
    e.slopes[*open] = CircleSlope(p_over_q);
    return presentation_matrix(e).determinant;
  };
  SurgeryDiagram e = d;
  e.slopes[*open] = CircleSlope::infinity();
  Integer d1 = presentation_matrix(e).determinant;
  Integer d2 = det_at(Rat(0));
  if (d1 == 0 && d2 == 0)
    fail(ErrorKind::Argument, "longitude_of: every filling has infinite homology");
  if (d1 == 0) return CircleSlope::infinity();
  return CircleSlope(Rat(Integer(-d2), d1));
}

/// Linking matrix from the upper triangle, listed row by row.
inline IntMatrix linking_from_upper(std::size_t n, const std::vector<long long>& upper) {
  require(upper.size() == n * (n - 1) / 2, "linking_from_upper: wrong number of entries");
  IntMatrix m(n, std::vector<Integer>(n, 0));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m[i][j] = m[j][i] = upper[k++];
  return m;
}

/// The three-component link whose third component, filled with -1/(n-1),
/// turns the first two into L_n: lk12 = 0, lk13 = lk23 = 1.
inline IntMatrix ln_lspace_aux_linking() { return linking_from_upper(3, {0, 1, 1}); }

/// Three-component link producing L(-2,-2,-2) by -1 surgery on the third
/// component: lk12 = -1, lk13 = 1, lk23 = -1.
inline IntMatrix family1_aux_linking() { return linking_from_upper(3, {-1, 1, -1}); }

/// Four-component link producing L(-2k,-2,2,-2,-2h) by -1/k, -1/h surgery
/// on the last two components. Only the linking numbers enter here.
inline IntMatrix family2_aux_linking() { return linking_from_upper(4, {1, 1, -1, -1, 1, 0}); }

/// Three-component link producing L_n = L(2,-2,-2n) by -1/n surgery on the
/// third component: lk12 = lk13 = 1, lk23 = -1.
inline IntMatrix ln_foliation_aux_linking() { return linking_from_upper(3, {1, 1, -1}); }

}  // namespace tbsl
