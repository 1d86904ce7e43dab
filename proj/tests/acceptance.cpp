// Acceptance suite: one [PASS]/[FAIL] line per criterion. A criterion
// passes only when every check holds and the run stays inside its time
// limit. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tbsl/tbsl.hpp"

using namespace tbsl;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void check(bool cond, const std::string& what) {
    if (!cond && ok) note = what;  // keep the first failure
    ok = ok && cond;
  }
};

using i64 = oracle::i64;

const CircleSlope inf = CircleSlope::infinity();

CircleSlope sl(i64 p, i64 q = 1) { return CircleSlope(Rat(Integer(p), Integer(q))); }

std::vector<Integer> family2_coeffs(i64 k, i64 h) {
  std::vector<Integer> c;
  for (i64 i = 0; i < 2 * (k + h) + 1; ++i) c.push_back(i % 2 == 1 || i == 2 * k ? -2 : 2);
  return c;
}

// 1. Family-2 interior expansions for 1 <= k, h <= 20.
Outcome family2_fractions() {
  Outcome o;
  for (i64 k = 1; k <= 20; ++k)
    for (i64 h = 1; h <= 20; ++h) {
      auto c = family2_coeffs(k, h);
      i64 alpha = 16 * k * h + 6 * k + 6 * h + 2, beta = 16 * k * h - 2 * h + 6 * k - 1;
      CircleSlope v = cf_eval(c);
      o.check(v == sl(alpha, beta), "cf_eval at k=" + std::to_string(k) + " h=" + std::to_string(h));
      std::vector<i64> s(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) s[i] = static_cast<i64>(c[i]);
      auto [num, den] = oracle::cf_value(s);
      o.check(num == alpha && den == beta, "oracle value at k=" + std::to_string(k) + " h=" + std::to_string(h));
      TwoBridgeLink l = TwoBridgeLink::from_fraction(v.value());
      o.check(schubert_unoriented_equal(l, TwoBridgeLink(Integer(alpha), Integer(-(8 * h + 3)))),
              "Schubert at k=" + std::to_string(k) + " h=" + std::to_string(h));
      o.check(oracle::unoriented_equal(alpha, beta, oracle::normalize_q(alpha, -(8 * h + 3))),
              "oracle Schubert at k=" + std::to_string(k) + " h=" + std::to_string(h));
    }
  return o;
}

// 2. L_n identification for 1 <= n <= 50.
Outcome ln_identification() {
  Outcome o;
  for (std::size_t n = 1; n <= 50; ++n) {
    auto e = ln_expansion(n);
    i64 p = 6 * static_cast<i64>(n) + 2, q = 6 * static_cast<i64>(n) - 1;
    o.check(cf_eval(e.coeffs()) == sl(p, q), "value of L_" + std::to_string(n));
    TwoBridgeLink l = TwoBridgeLink::from_fraction(e.value());
    o.check(schubert_unoriented_equal(l, TwoBridgeLink(Integer(p), Integer(-3))), "Schubert for L_" + std::to_string(n));
    auto d = detect_Ln(l);
    LinkClass c = classify(l);
    o.check(d && d->n == n && !d->mirrored, "detect_Ln for L_" + std::to_string(n));
    o.check(c.tag == LinkTag::Ln && c.n == n, "classify for L_" + std::to_string(n));
    auto dm = detect_Ln(mirror(l));
    o.check(dm && dm->mirrored && classify(mirror(l)).tag == LinkTag::LnMirror, "mirror of L_" + std::to_string(n));
  }
  return o;
}

// 3. det of (1, 1, p/q) on the auxiliary link is p - 2q up to sign; the
//    homological longitude 2 is the only degenerate slope.
Outcome auxiliary_determinant() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<i64> num(-1000, 1000), den(1, 1000);
  IntMatrix lk = ln_lspace_aux_linking();
  int done = 0;
  while (done < 200) {
    i64 p = num(rng), q = den(rng);
    if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
    SurgeryDiagram d(Framing::Canonical, lk, {sl(1), sl(1), sl(p, q)});
    Integer det = presentation_matrix(d).determinant;
    i64 expect = p - 2 * q;
    o.check(abs(det) == Integer(expect < 0 ? -expect : expect), "det at " + std::to_string(p) + "/" + std::to_string(q));
    // Independent cofactor expansion of the same presentation.
    std::vector<std::vector<i64>> m{{1, 0, 1}, {0, 1, 1}, {q, q, p}};
    o.check(Integer(oracle::det(m)) == det, "oracle det at " + std::to_string(p) + "/" + std::to_string(q));
    ++done;
  }
  SurgeryDiagram open(Framing::Canonical, lk, {sl(1), sl(1), std::nullopt});
  o.check(longitude_of(open) == CircleSlope(2), "longitude_of");
  SurgeryDiagram at2(Framing::Canonical, lk, {sl(1), sl(1), sl(2)});
  o.check(presentation_matrix(at2).determinant == 0, "det at the longitude");
  SurgeryDiagram at_inf(Framing::Canonical, lk, {sl(1), sl(1), inf});
  o.check(presentation_matrix(at_inf).determinant != 0, "det at inf");
  return o;
}

// 4. The L-space argument for L_n, replayed for 1 <= n <= 100.
Outcome ln_chain() {
  Outcome o;
  for (std::size_t n = 1; n <= 100; ++n) {
    for (const auto& s : ln_chain_trace(n)) o.check(s.ok, "n=" + std::to_string(n) + ": " + s.claim);
    if (n >= 2) {
      // (a, b, -1/(n-1)) -> (a+n-1, b+n-1), on a grid of seeds.
      for (i64 a = -2; a <= 2; ++a)
        for (i64 b = -2; b <= 2; ++b) {
          SurgeryDiagram d(Framing::Canonical, ln_lspace_aux_linking(), {sl(a), sl(b), sl(-1, static_cast<i64>(n) - 1)});
          SurgeryDiagram f = rolfsen_fill(d, 2);
          i64 m = static_cast<i64>(n) - 1;
          o.check(*f.slopes[0] == sl(a + m) && *f.slopes[1] == sl(b + m) && f.linking[0][1] == m,
                  "coefficient map at n=" + std::to_string(n));
        }
    }
  }
  return o;
}

// 5. Exact region covers.
Outcome covers() {
  Outcome o;
  for (const auto& c : verify_covers(30, 20)) o.check(c.ok, c.name);
  return o;
}

// 6. For every all-(+-2) expansion of length <= 11 with a hyperbolic class,
//    the foliation and L-space regions partition Q^2.
Outcome partition() {
  Outcome o;
  const Region2 q2 = Region2::rationals(Framing::Canonical);
  std::map<std::pair<std::string, std::string>, bool> seen;  // by link
  for (std::size_t len = 1; len <= 11; len += 2)
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      std::vector<Integer> c;
      for (std::size_t i = 0; i < len; ++i) c.emplace_back(mask >> i & 1 ? -2 : 2);
      EvenExpansion e(c);
      TwoBridgeLink l = TwoBridgeLink::from_fraction(e.value());
      LinkClass cls = classify(l);
      if (!cls.hyperbolic_fibered()) continue;
      auto key = std::make_pair(l.p().str(), l.q().str());
      if (seen.count(key)) continue;
      seen[key] = true;
      Region2 ls = lspace_region(cls), fol = foliation_region(cls);
      o.check(region_intersect(ls, fol).is_empty(), "overlap for " + e.str());
      o.check(region_equal(region_union(ls, fol), q2), "union for " + e.str());
      o.check(region_equal(constructive_foliation_region(cls), fol), "construction for " + e.str());
    }
  o.check(!seen.empty(), "no hyperbolic links found");
  return o;
}

// 7. Images of the weight systems.
Outcome family_images() {
  Outcome o;
  o.check(family_image(families::river_positive()) == CircleInterval::open(inf, 1), "y - x");
  o.check(family_image(families::river_negative()) == CircleInterval::open(-1, inf), "x - y");
  for (const auto& [f, arc] : families::builtin()) o.check(family_image(f) == arc, f.name);
  return o;
}

// 8. det = 0 exactly when r1 r2 = lk^2, on 10^4 random instances.
Outcome qhs_identity() {
  Outcome o;
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<i64> num(-30, 30), den(1, 30), lkd(-6, 6);
  for (int t = 0; t < 10000; ++t) {
    i64 lk = lkd(rng);
    Rat r1(Integer(num(rng)), Integer(den(rng)));
    Rat r2(Integer(num(rng)), Integer(den(rng)));
    if (t % 5 == 0 && !r1.is_zero()) r2 = Rat(Integer(lk * lk)) / r1;  // on the curve
    SurgeryDiagram d(Framing::Canonical, linking_from_upper(2, {lk}), {CircleSlope(r1), CircleSlope(r2)});
    bool degenerate = presentation_matrix(d).determinant == 0;
    o.check(degenerate == (r1 * r2 == Rat(Integer(lk * lk))), "instance " + std::to_string(t));
    o.check(degenerate == !is_qhs(d), "is_qhs at instance " + std::to_string(t));
  }
  return o;
}

// 9. Brute-force oracles: uniqueness of even expansions (p <= 400) and
//    fibered detection (p <= 200).
Outcome oracles() {
  Outcome o;
  const i64 pmax = 400;
  std::map<std::pair<i64, i64>, std::vector<std::vector<i64>>> hits;
  oracle::for_each_even_sequence(pmax, [&](const std::vector<i64>& s) {
    if (s.size() % 2 == 1) hits[oracle::cf_value(s)].push_back(s);
  });
  for (i64 h = -pmax; h <= pmax; h += 2)
    for (i64 k = 1; k < (h < 0 ? -h : h); k += 2) {
      if (std::gcd(h < 0 ? -h : h, k) != 1) continue;
      auto it = hits.find({h, k});
      std::string tag = std::to_string(h) + "/" + std::to_string(k);
      o.check(it != hits.end() && it->second.size() == 1, "uniqueness at " + tag);
      if (it == hits.end()) continue;
      EvenExpansion e = even_expand(Rat(Integer(h), Integer(k)));
      std::vector<i64> got;
      for (const auto& a : e.coeffs()) got.push_back(static_cast<i64>(a));
      o.check(got == it->second.front(), "even_expand at " + tag);
    }

  const i64 fmax = 200;
  auto fib = oracle::fibered_links(fmax);
  for (i64 p = 2; p <= fmax; p += 2)
    for (i64 q = -p + 1; q < p; q += 2) {
      if (std::gcd(p, q < 0 ? -q : q) != 1) continue;
      bool expect = false;
      if (auto it = fib.find(p); it != fib.end())
        for (i64 q2 : it->second) expect = expect || oracle::unoriented_equal(p, q, q2);
      TwoBridgeLink l(p, q);
      o.check(fibered_expansion(l).has_value() == expect, "fibered detection for " + l.str());
      o.check(classify(l).fibered() == expect, "classify for " + l.str());
    }
  return o;
}

// 10. Verdict table.
Outcome verdicts() {
  Outcome o;
  auto ln = [](i64 n) { return TwoBridgeLink(Integer(6 * n + 2), Integer(-3)); };
  o.check(verdict(ln(1), sl(1), sl(1)) == Verdict::LSpace, "(L_1, (1,1))");
  for (i64 n = 1; n <= 20; ++n) {
    o.check(verdict(ln(n), sl(n), sl(n)) == Verdict::LSpace, "(L_n,(n,n)) at n=" + std::to_string(n));
    // At n = 1 the slope (0,1) has r1 r2 = 0 = lk^2: no rational homology
    // sphere, which the last row of the table asserts.
    Verdict expect = n == 1 ? Verdict::NotQHS_TautByBetti : Verdict::NLSWithTautFoliation;
    o.check(verdict(ln(n), sl(n - 1), sl(n)) == expect, "(L_n,(n-1,n)) at n=" + std::to_string(n));
    o.check(verdict(ln(n), sl(n), sl(n - 1)) == expect, "(L_n,(n,n-1)) at n=" + std::to_string(n));
  }
  for (i64 p = -60; p <= 60; ++p)
    for (i64 q = 1; q <= 12; ++q) {
      if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
      o.check(verdict(ln(1), sl(0), sl(p, q)) == Verdict::NotQHS_TautByBetti,
              "(L_1,(0," + std::to_string(p) + "/" + std::to_string(q) + "))");
    }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_ms;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Family-2 fraction identities, 1 <= k,h <= 20", 1000, family2_fractions},
      {2, "L_n identification, 1 <= n <= 50", 1000, ln_identification},
      {3, "auxiliary-link determinant and longitude, 200 random slopes", 30000, auxiliary_determinant},
      {4, "L_n chain replay, 1 <= n <= 100", 1000, ln_chain},
      {5, "exact region covers, 2 <= n <= 30", 5000, covers},
      {6, "foliation/L-space partition, expansions of length <= 11", 60000, partition},
      {7, "weight-system images", 30000, family_images},
      {8, "QHS identity, 10^4 random instances", 30000, qhs_identity},
      {9, "oracles: uniqueness p <= 400, fibered detection p <= 200", 60000, oracles},
      {10, "verdict table", 30000, verdicts},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.note = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    bool in_time = ms < c.limit_ms;
    bool pass = out.ok && in_time;
    if (!pass) ++failed;
    std::string why = !out.ok ? " -- " + out.note : !in_time ? " -- over the time limit" : "";
    std::printf("[%s] %d %s (%.0f ms, limit %.0f ms)%s\n", pass ? "PASS" : "FAIL", c.id, c.name, ms, c.limit_ms,
                why.c_str());
    std::fflush(stdout);
  }
  return failed;
}
