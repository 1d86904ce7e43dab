// Command-line front end: classification, regions, verdicts and checks for
// fibered two-bridge links.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tbsl/io.hpp"
#include "tbsl/tbsl.hpp"

namespace {

using namespace tbsl;

struct Options {
  bool json = false;
  std::string framing = "canonical";
  std::string svg;
  std::string window;
  std::string grid = "-3:3:1";
  std::optional<std::size_t> fill;
};

bool log_enabled() {
  const char* v = std::getenv("TBSL_LOG");
  return v && *v && std::string(v) != "0";
}

void log(const std::string& msg) {
  if (log_enabled()) std::cerr << "[tbsl] " << msg << "\n";
}

class Output {
 public:
  Output(bool json, std::string command) : json_(json) { report_["command"] = std::move(command); }

  Json& report() { return report_; }

  void line(const std::string& s) { text_ << s << "\n"; }

  void emit(double elapsed_ms) {
    if (json_) {
      report_["elapsed_ms"] = elapsed_ms;
      std::cout << report_.dump(2) << "\n";
    } else {
      std::cout << text_.str();
    }
  }

 private:
  bool json_;
  Json report_ = Json::object();
  std::ostringstream text_;
};

Json class_json(const TwoBridgeLink& l, const LinkClass& c) {
  Json j{{"link", l.str()}, {"p", l.p().str()}, {"q", l.q().str()}, {"fraction", l.fraction().str()},
         {"tag", to_string(c.tag)}};
  if (c.tag == LinkTag::Ln || c.tag == LinkTag::LnMirror) j["n"] = c.n;
  j["fibered"] = c.fibered();
  j["mirrored_during_normalization"] = c.mirrored_during_normalization;
  if (c.fibered_expansion) {
    const auto& e = *c.fibered_expansion;
    j["fibered_expansion"] = l_notation(e);
    j["linking_number"] = std::to_string(linking_number(e));
    auto w = twist_word(e);
    auto s = sign_census(w);
    j["monodromy"] = w.str();
    j["census"] = {{"pos_rivers", s.pos_rivers}, {"neg_rivers", s.neg_rivers},
                   {"pos_bridges", s.pos_bridges}, {"neg_bridges", s.neg_bridges}};
  } else {
    j["fibered_expansion"] = nullptr;
  }
  if (auto ln = detect_Ln(l)) j["detect_ln"] = {{"n", ln->n}, {"mirrored", ln->mirrored}};
  return j;
}

void cmd_classify(const std::string& spec, Output& out) {
  TwoBridgeLink l = parse_link(spec);
  LinkClass c = classify(l);
  Json j = class_json(l, c);
  out.report()["classification"] = j;
  out.line("link: " + l.str() + " = " + l.fraction().str());
  out.line("class: " + c.tag_str() + (c.mirrored_during_normalization ? " (mirrored)" : ""));
  if (c.fibered_expansion) {
    out.line("fibered expansion: " + l_notation(*c.fibered_expansion));
    out.line("linking number: " + j["linking_number"].get<std::string>());
    out.line("monodromy: " + j["monodromy"].get<std::string>());
    const auto& s = j["census"];
    out.line("census: rivers +" + s["pos_rivers"].dump() + " -" + s["neg_rivers"].dump() + ", bridges +" +
             s["pos_bridges"].dump() + " -" + s["neg_bridges"].dump());
  } else {
    out.line("fibered expansion: none");
  }
}

void cmd_expand(const std::string& fraction, Output& out) {
  Rat x = parse_rat(fraction);
  EvenExpansion e = even_expand(x);
  Json coeffs = Json::array();
  for (const auto& a : e.coeffs()) coeffs.push_back(a.str());
  out.report()["fraction"] = x.str();
  out.report()["expansion"] = coeffs;
  out.report()["all_twos"] = e.all_twos();
  out.line(x.str() + " = " + l_notation(e) + (e.all_twos() ? " (fibered)" : ""));
}

void cmd_equal(const std::string& a, const std::string& b, Output& out) {
  TwoBridgeLink la = parse_link(a), lb = parse_link(b);
  Isotopy o = schubert_oriented_equal(la, lb);
  bool u = schubert_unoriented_equal(la, lb);
  out.report()["links"] = {la.str(), lb.str()};
  out.report()["oriented"] = to_string(o);
  out.report()["unoriented"] = u;
  out.line(la.str() + " vs " + lb.str() + ": " + std::string(to_string(o)) +
           (u ? ", equal as unoriented links" : ", distinct as unoriented links"));
}

struct Regions {
  TwoBridgeLink link;
  LinkClass cls;
  Integer lk;
  Region2 lspace;
  Region2 foliation;
};

Regions regions_for(const std::string& spec) {
  TwoBridgeLink l = parse_link(spec);
  LinkClass c = classify(l);
  Region2 ls = lspace_region(c);  // raises out_of_scope for torus and non-fibered links
  Region2 fol = foliation_region(c);
  log("regions for " + l.str() + ": lspace " + ls.str() + "; foliation " + fol.str());
  return {l, c, Integer(linking_number(*c.fibered_expansion)), ls, fol};
}

Rat parse_window(const std::string& w, std::size_t n) {
  if (w.empty()) return Rat(static_cast<long long>(std::max<std::size_t>(5, n + 2)));
  Rat r = parse_rat(w);
  if (r <= Rat(0)) throw ParseError("window must be positive", 0);
  return r;
}

void cmd_region(const std::string& spec, const Options& opt, Output& out) {
  Framing f = parse_framing(opt.framing);
  Regions r = regions_for(spec);
  out.report()["classification"] = class_json(r.link, r.cls);
  out.report()["framing"] = to_string(f);
  Json both = Json::object();
  for (Framing g : {Framing::Canonical, Framing::Seifert})
    both[std::string(to_string(g))] = {{"lspace", to_json(normalized(r.lspace.reframed(g, r.lk)))},
                                       {"foliation", to_json(normalized(r.foliation.reframed(g, r.lk)))}};
  out.report()["regions"] = both;
  Region2 ls = normalized(r.lspace.reframed(f, r.lk));
  Region2 fol = normalized(r.foliation.reframed(f, r.lk));
  out.line("link: " + r.link.str() + " (" + r.cls.tag_str() + ")");
  out.line("framing: " + std::string(to_string(f)));
  out.line("L-space region: " + ls.str());
  out.line("foliation region: " + fol.str());
  if (!opt.svg.empty()) {
    Rat w = parse_window(opt.window, r.cls.n);
    std::ofstream file(opt.svg, std::ios::binary);
    if (!file) fail(ErrorKind::Argument, "cannot write " + opt.svg);
    file << render_svg({{fol, "#f0a040", "taut foliations"}, {ls, "#3070d0", "L-spaces"}}, w);
    out.report()["svg"] = opt.svg;
    out.line("svg: " + opt.svg);
  }
}

CircleSlope to_canonical(const CircleSlope& s, Framing f, const Integer& lk) {
  return f == Framing::Seifert ? s.shifted(Rat(-lk)) : s;
}

Json witness(const Regions& r, Verdict v, const CircleSlope& x, const CircleSlope& y) {
  if (v == Verdict::LSpace) return to_json(normalized(r.lspace));
  if (v == Verdict::NLSWithTautFoliation || v == Verdict::NotQHS_TautByBetti) {
    Region2 cons = constructive_foliation_region(r.cls);
    for (const auto& rect : cons.rects())
      if (rect.first.contains(x) && rect.second.contains(y))
        return to_json(Region2(cons.framing(), {rect}, cons.finite_only()));
    return to_json(normalized(r.foliation));
  }
  return nullptr;
}

void cmd_verdict(const std::string& spec, const std::string& s1, const std::string& s2, const Options& opt,
                 Output& out) {
  Framing f = parse_framing(opt.framing);
  CircleSlope r1 = parse_slope(s1), r2 = parse_slope(s2);
  Regions r = regions_for(spec);
  CircleSlope c1 = to_canonical(r1, f, r.lk), c2 = to_canonical(r2, f, r.lk);
  Verdict v = verdict(r.cls, r.lspace, c1, c2);
  out.report()["link"] = r.link.str();
  out.report()["class"] = r.cls.tag_str();
  out.report()["slope"] = {r1.str(), r2.str()};
  out.report()["framing"] = to_string(f);
  out.report()["canonical_slope"] = {c1.str(), c2.str()};
  out.report()["verdict"] = to_string(v);
  out.report()["witness_region"] = witness(r, v, c1, c2);
  out.line(r.link.str() + " (" + r1.str() + ", " + r2.str() + ") [" + std::string(to_string(f)) +
           "]: " + std::string(to_string(v)));
}

std::vector<Rat> parse_grid(const std::string& g) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= g.size(); ++i)
    if (i == g.size() || g[i] == ':') {
      parts.push_back(g.substr(start, i - start));
      start = i + 1;
    }
  if (parts.size() != 3) throw ParseError("grid must look like LO:HI:DEN", 0);
  Rat lo = parse_rat(parts[0]), hi = parse_rat(parts[1]);
  Integer den = parse_integer(parts[2]);
  if (den <= 0) throw ParseError("grid denominator must be positive", parts[0].size() + parts[1].size() + 2);
  if (hi < lo) throw ParseError("grid upper end is below the lower end", parts[0].size() + 1);
  std::vector<Rat> out;
  Rat step(Integer(1), den);
  Integer first = (lo * Rat(den)).floor();
  if (Rat(first) / Rat(den) < lo) ++first;
  for (Rat x = Rat(first) / Rat(den); x <= hi; x += step) {
    out.push_back(x);
    if (out.size() > 100000) throw ParseError("grid has too many points", 0);
  }
  return out;
}

void cmd_sweep(const std::string& spec, const Options& opt, Output& out) {
  Framing f = parse_framing(opt.framing);
  std::vector<Rat> axis = parse_grid(opt.grid);
  Regions r = regions_for(spec);  // computed once for the whole grid
  Json rows = Json::array();
  std::map<std::string, std::size_t> counts;
  for (const auto& x : axis)
    for (const auto& y : axis) {
      CircleSlope c1 = to_canonical(x, f, r.lk), c2 = to_canonical(y, f, r.lk);
      Verdict v = verdict(r.cls, r.lspace, c1, c2);
      std::string name(to_string(v));
      ++counts[name];
      rows.push_back({{"r1", x.str()}, {"r2", y.str()}, {"verdict", name}});
      out.line(x.str() + "\t" + y.str() + "\t" + name);
    }
  Json summary = Json::object();
  for (const auto& [k, n] : counts) summary[k] = n;
  out.report()["link"] = r.link.str();
  out.report()["class"] = r.cls.tag_str();
  out.report()["framing"] = to_string(f);
  out.report()["grid"] = opt.grid;
  out.report()["rows"] = rows;
  out.report()["summary"] = summary;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Argument, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what(), e.byte);
  }
}

void cmd_homology(const std::string& path, Output& out) {
  SurgeryDiagram d = diagram_from_json(read_json_file(path));
  out.report()["diagram"] = to_json(d);
  if (!d.fully_filled()) {
    CircleSlope l = longitude_of(d);
    out.report()["homological_longitude"] = l.str();
    out.line("homological longitude (canonical): " + l.str());
    return;
  }
  HomologyReport h = presentation_matrix(d);
  Json m = Json::array();
  for (const auto& row : h.presentation) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.str());
    m.push_back(r);
  }
  out.report()["presentation"] = m;
  out.report()["determinant"] = h.determinant.str();
  out.report()["order"] = h.order ? Json(h.order->str()) : Json("infinite");
  out.line("determinant: " + h.determinant.str());
  out.line("order of H_1: " + (h.order ? h.order->str() : std::string("infinite")));
  if (d.size() == 2) {
    bool q = is_qhs(d);
    out.report()["is_qhs"] = q;
    out.line(std::string("rational homology sphere: ") + (q ? "yes" : "no"));
  }
}

void cmd_framing(const std::string& path, const Options& opt, Output& out) {
  SurgeryDiagram d = diagram_from_json(read_json_file(path));
  Framing f = parse_framing(opt.framing);
  SurgeryDiagram r = d;
  if (opt.fill) {
    if (*opt.fill < 1 || *opt.fill > d.size()) fail(ErrorKind::Argument, "--fill component out of range");
    r = rolfsen_fill(r, *opt.fill - 1);
  }
  r = framing_convert(r, f);
  out.report()["diagram"] = to_json(r);
  std::string s;
  for (const auto& x : r.slopes) s += (s.empty() ? "" : ", ") + (x ? x->str() : std::string("*"));
  out.line(std::string(to_string(f)) + " slopes: (" + s + ")");
}

void cmd_verify_ln(std::optional<std::size_t> n, Output& out) {
  Json results = Json::array();
  bool all = true;
  std::size_t lo = n ? *n : 1, hi = n ? *n : 100;
  if (lo < 1) fail(ErrorKind::Argument, "verify-ln needs N >= 1");
  for (std::size_t k = lo; k <= hi; ++k) {
    auto steps = ln_chain_trace(k);
    bool ok = true;
    Json trace = Json::array();
    for (const auto& s : steps) {
      ok = ok && s.ok;
      trace.push_back({{"claim", s.claim}, {"ok", s.ok}});
      if (n) out.line(std::string(s.ok ? "ok   " : "FAIL ") + s.claim);
    }
    all = all && ok;
    results.push_back({{"n", k}, {"ok", ok}, {"steps", trace}});
    if (!n && !ok) out.line("n = " + std::to_string(k) + ": FAIL");
  }
  out.report()["results"] = results;
  out.report()["ok"] = all;
  out.line(std::string("L_n chain ") + (all ? "verified" : "FAILED") +
           (n ? " for n = " + std::to_string(*n) : " for 1 <= n <= 100"));
  if (!all) fail(ErrorKind::Argument, "L_n chain verification failed");
}

void cmd_verify_covers(Output& out) {
  Json checks = Json::array();
  bool all = true;
  for (const auto& c : verify_covers()) {
    all = all && c.ok;
    checks.push_back({{"name", c.name}, {"ok", c.ok}});
    out.line(std::string(c.ok ? "ok   " : "FAIL ") + c.name);
  }
  out.report()["checks"] = checks;
  out.report()["ok"] = all;
  if (!all) fail(ErrorKind::Argument, "cover verification failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surgery regions of fibered two-bridge links"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Print a JSON report");

  std::string link, link2, r1, r2, file, fraction;
  std::optional<std::size_t> ln_n;

  auto add_framing = [&](CLI::App* sub) {
    sub->add_option("--framing", opt.framing, "seifert or canonical")
        ->check(CLI::IsMember({"seifert", "canonical"}))
        ->capture_default_str();
  };

  auto* classify_cmd = app.add_subcommand("classify", "Classify a link b(p,q) or L(a1,...,an)");
  classify_cmd->add_option("link", link)->required();
  auto* expand_cmd = app.add_subcommand("expand", "Even continued fraction of p/q");
  expand_cmd->add_option("fraction", fraction)->required();
  auto* equal_cmd = app.add_subcommand("equal", "Compare two links up to isotopy");
  equal_cmd->add_option("link1", link)->required();
  equal_cmd->add_option("link2", link2)->required();
  auto* region_cmd = app.add_subcommand("region", "L-space and taut-foliation surgery regions");
  region_cmd->add_option("link", link)->required();
  add_framing(region_cmd);
  region_cmd->add_option("--svg", opt.svg, "Write an SVG plot to PATH");
  region_cmd->add_option("--window", opt.window, "Half-width of the plot window");
  auto* verdict_cmd = app.add_subcommand("verdict", "Decide a single surgery");
  verdict_cmd->add_option("link", link)->required();
  verdict_cmd->add_option("r1", r1)->required();
  verdict_cmd->add_option("r2", r2)->required();
  add_framing(verdict_cmd);
  auto* sweep_cmd = app.add_subcommand("sweep", "Decide every surgery on a grid");
  sweep_cmd->add_option("link", link)->required();
  sweep_cmd->add_option("--grid", opt.grid, "LO:HI:DEN, slopes k/DEN between LO and HI")->capture_default_str();
  add_framing(sweep_cmd);
  auto* homology_cmd = app.add_subcommand("homology", "First homology of a surgery diagram (JSON file)");
  homology_cmd->add_option("file", file)->required();
  auto* framing_cmd = app.add_subcommand("framing", "Convert a surgery diagram between framings");
  framing_cmd->add_option("file", file)->required();
  framing_cmd->add_option("--framing", opt.framing, "Target framing")
      ->check(CLI::IsMember({"seifert", "canonical"}))
      ->required();
  framing_cmd->add_option("--fill", opt.fill, "Remove component i (1-based) by a Rolfsen twist");
  auto* verify_ln_cmd = app.add_subcommand("verify-ln", "Replay the L-space argument for L_n");
  verify_ln_cmd->add_option("n", ln_n, "Single n with a step trace (default: all 1 <= n <= 100)");
  auto* verify_covers_cmd = app.add_subcommand("verify-covers", "Exact cover checks");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (opt.json) {
      std::cout << error_json(ErrorKind::Parse, e.what()).dump(2) << "\n";
      return 2;
    }
    app.exit(e);
    return 2;
  }

  auto* sub = app.get_subcommands().front();
  Output out(opt.json, sub->get_name());
  auto start = std::chrono::steady_clock::now();
  try {
    if (sub == classify_cmd) cmd_classify(link, out);
    else if (sub == expand_cmd) cmd_expand(fraction, out);
    else if (sub == equal_cmd) cmd_equal(link, link2, out);
    else if (sub == region_cmd) cmd_region(link, opt, out);
    else if (sub == verdict_cmd) cmd_verdict(link, r1, r2, opt, out);
    else if (sub == sweep_cmd) cmd_sweep(link, opt, out);
    else if (sub == homology_cmd) cmd_homology(file, out);
    else if (sub == framing_cmd) cmd_framing(file, opt, out);
    else if (sub == verify_ln_cmd) cmd_verify_ln(ln_n, out);
    else if (sub == verify_covers_cmd) cmd_verify_covers(out);
  } catch (const Error& e) {
    int code = e.kind() == ErrorKind::Parse ? 2 : 1;
    if (opt.json)
      std::cout << error_json(e.kind(), e.what()).dump(2) << "\n";
    else
      std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return code;
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  log(sub->get_name() + " finished in " + std::to_string(ms) + " ms");
  out.emit(ms);
  return 0;
}
