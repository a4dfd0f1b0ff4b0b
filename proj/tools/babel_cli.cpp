#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "babel/apartment.hpp"
#include "babel/render.hpp"
#include "babel/serialize.hpp"
#include "babel/sl2.hpp"
#include "babel/suites.hpp"

using namespace babel;

namespace {

enum Exit { kOk = 0, kCounterexample = 1, kInputError = 2, kPrecision = 3 };

struct Globals {
  uint32_t q = 5;
  std::string prec;  // "P1,P2"
  uint64_t seed = 1;
  int samples = 0;
  std::string phi = "A1";
  int n = 2;
  int threads = 1;
  bool json = false;
};

Precision parse_precision(const std::string& s) {
  auto comma = s.find(',');
  Precision p;
  try {
    if (comma == std::string::npos) throw std::invalid_argument(s);
    size_t used = 0;
    p.p1 = std::stoi(s.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument(s);
    std::string rest = s.substr(comma + 1);
    p.p2 = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(s);
  } catch (const std::logic_error&) {
    throw Error(Errc::InvalidInput, "--prec expects P1,P2 (e.g. 12,6), got '" + s + "'");
  }
  if (p.p1 < 1 || p.p2 < 1 || p.p1 > 4096 || p.p2 > 512)
    throw Error(Errc::InvalidInput, "--prec out of range: " + s);
  return p;
}

// Inline JSON, or @path to read it from a file.
Json read_json(const std::string& arg, const std::string& flag) {
  if (arg.empty()) throw Error(Errc::InvalidInput, flag + " is required");
  std::string text = arg;
  if (arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw Error(Errc::InvalidInput, flag + ": cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::InvalidInput, flag + ": malformed JSON (" + e.what() + ")");
  }
}

template <class F>
auto with_flag(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() != Errc::InvalidInput) throw;
    throw Error(Errc::InvalidInput, flag + ": " + std::string(e.what()).substr(14));
  }
}

struct Ctx {
  Globals g;
  RootType type() const { return parse_root_type(g.phi); }
  const RootDatum& datum() const { return root_datum(type()); }
  Point point(const std::string& arg, const std::string& flag) const {
    Json j = read_json(arg, flag);
    return with_flag(flag, [&] { return point_from_json(j, datum().rank, g.n); });
  }
  Mat2 matrix(const std::string& arg, const std::string& flag) const {
    Json j = read_json(arg, flag);
    Mat2 m = with_flag(flag, [&] { return mat2_from_json(j); });
    if (m.q() != g.q) throw Error(Errc::InvalidInput, flag + ": matrix is over F_" + std::to_string(m.q()) +
                                                          " but --q is " + std::to_string(g.q));
    return m;
  }
};

void emit(const Ctx& c, const Json& j) { std::cout << (c.g.json ? j.dump() : j.dump(2)) << "\n"; }

// ---- lex ----

int cmd_lex(const Ctx& c, const std::string& action, const std::string& a_arg, const std::string& b_arg) {
  LexPoly a = with_flag("--a", [&] { return lexpoly_from_json(read_json(a_arg, "--a")); });
  if (action == "level") {
    emit(c, {{"level", level_of(a)}});
  } else if (action == "sqrt") {
    auto r = exact_sqrt(a);
    emit(c, {{"exact", r.has_value()}, {"sqrt", r ? to_json(*r, c.g.n) : Json(nullptr)}});
  } else {
    LexPoly b = with_flag("--b", [&] { return lexpoly_from_json(read_json(b_arg, "--b")); });
    if (action == "cmp") {
      emit(c, {{"order", order_name(lex_cmp(a, b))}});
    } else if (action == "add") {
      emit(c, {{"sum", to_json(a + b, c.g.n)}});
    } else {
      emit(c, {{"product", to_json(a * b, c.g.n)}});
    }
  }
  return kOk;
}

// ---- weyl ----

int cmd_weyl(const Ctx& c, const std::string& action, const std::string& word, const std::string& point) {
  if (action == "relations") {
    if (c.type() != RootType::A1 || c.g.n != 2)
      throw Error(Errc::UnsupportedType, "the presentation check is for --phi A1 --n 2");
    Json rel = Json::array();
    bool all = true;
    for (const auto& r : presentation_A1_level2()) {
      rel.push_back({{"relation", r.relation}, {"holds", r.holds}, {"value", r.value}});
      all = all && r.holds;
    }
    emit(c, {{"pass", all}, {"relations", rel}});
    return all ? kOk : kCounterexample;
  }
  if (word.empty()) throw Error(Errc::InvalidInput, "--word is required");
  WeylElement w = with_flag("--word", [&] { return word_to_element(c.datum(), c.g.n, word); });
  if (action == "nf") {
    emit(c, to_json(w));
  } else {
    Point p = c.point(point, "--point");
    emit(c, {{"element", to_json(w)}, {"image", point_to_json(w.act(p))}});
  }
  return kOk;
}

// ---- apartment ----

struct ApartmentArgs {
  std::string point, point2, points, chamber, apex, apex2;
  int level = 1;
};

int cmd_apartment(const Ctx& c, const std::string& action, const ApartmentArgs& a) {
  Apartment ap(c.datum(), c.g.n);
  auto points = [&]() {
    Json j = read_json(a.points, "--points");
    if (!j.is_array()) throw Error(Errc::InvalidInput, "--points: expected an array of points");
    std::vector<Point> v;
    for (const Json& p : j) v.push_back(with_flag("--points", [&] { return point_from_json(p, c.datum().rank, c.g.n); }));
    return v;
  };
  if (action == "locate") {
    Point p = c.point(a.point, "--point");
    try {
      emit(c, {{"result", "in-apartment"}, {"w", to_json(ap.locate(p))}});
    } catch (const Error& e) {
      if (e.code() != Errc::NotInApartment) throw;
      emit(c, {{"result", "not-in-apartment"}});
    }
  } else if (action == "dist") {
    Point p = c.point(a.point, "--point"), q = c.point(a.point2, "--point2");
    ap.check(p);
    ap.check(q);
    SqrtExpr d = ap.dist(p, q);
    auto exact = d.exact();
    emit(c, {{"dist2", to_json(ap.dist2(p, q), c.g.n)},
             {"dist", exact ? to_json(*exact, c.g.n) : Json(nullptr)},
             {"text", d.to_string()}});
  } else if (action == "retract") {
    Point p = c.point(a.point, "--point");
    WeylElement ch = a.chamber.empty() ? WeylElement(c.datum(), c.g.n)
                                       : with_flag("--chamber", [&] { return word_to_element(c.datum(), c.g.n, a.chamber); });
    emit(c, {{"chamber", to_json(ch)}, {"image", point_to_json(ap.retract_tau(ch, p))}});
  } else if (action == "enclosure") {
    std::vector<Point> om = points();
    Point z = c.point(a.point, "--point");
    Json sep = Json::array();
    for (const auto& h : ap.separating_halfspaces(om, z))
      sep.push_back({{"root", h.root}, {"k", to_json(h.k)}});
    emit(c, {{"contains", ap.enclosure_contains(om, z)}, {"separating", sep}});
  } else if (action == "sector") {
    Sector s1{c.point(a.apex, "--apex"), a.level}, s2{c.point(a.apex2, "--apex2"), a.level};
    try {
      Sector r = ap.sector_intersect(s1, s2);
      emit(c, {{"result", "sector"}, {"apex", point_to_json(r.apex)}, {"level", r.level}});
    } catch (const Error& e) {
      if (e.code() == Errc::Disjoint) emit(c, {{"result", "disjoint"}});
      else if (e.code() == Errc::NotASector) emit(c, {{"result", "not-a-sector"}, {"detail", e.what()}});
      else throw;
    }
  } else {
    std::vector<Point> B = points();
    CircumResult r = ap.circumcenter(B);
    emit(c, {{"center", point_to_json(r.center)}, {"radius2", to_json(r.radius2, c.g.n)}});
  }
  return kOk;
}

// ---- field ----

int cmd_field(const Ctx& c, const std::string& action, const std::string& x_arg) {
  Json j = read_json(x_arg, "--x");
  LS2 x = with_flag("--x", [&] { return ls2_from_json(j); });
  if (action == "val") {
    ValInfo v = x.val_info();
    emit(c, {{"determined", v.determined}, {"valuation", to_json(v.lower)},
             {"text", (v.determined ? "v = " : "v >= ") + v.lower.to_string()}});
  } else if (action == "inv") {
    emit(c, to_json(with_precision_retry([&] { return x.inverse(); })));
  } else if (action == "residue") {
    emit(c, to_json(residue_to_F1(x)));
  } else {
    RingFlags f = ring_membership(x);
    emit(c, {{"O_F", f.in_OF}, {"ScrO_F", f.in_ScrOF}, {"unit_O_F", f.in_OF && is_unit_OF(x)}});
  }
  return kOk;
}

// ---- sl2 ----

struct Sl2Args {
  std::string g, h, pair = "01", x, y, z, u;
};

int cmd_sl2(const Ctx& c, const std::string& action, const Sl2Args& a) {
  auto verdict = [&](Json checks) {
    bool pass = true;
    for (const auto& [k, v] : checks.items()) pass = pass && v.get<bool>();
    return std::pair{checks, pass};
  };
  if (action == "cellprod") {
    CellProductReport r = verify_cell_product_w2w2(c.g.samples > 0 ? c.g.samples : 500, c.g.seed, c.g.q);
    Json wit = Json::array();
    for (const auto& w : r.witnesses) {
      Json e = {{"kind", std::string(1, w.target.kind)}, {"param", w.target.param},
                {"K", to_json(w.target.K)}, {"found", w.found}, {"method", w.method}};
      if (w.found) e["g1"] = to_json(w.g1), e["g2"] = to_json(w.g2);
      wit.push_back(e);
    }
    Json counts = Json::object();
    for (const auto& [k, n] : r.label_counts) counts[k] = n;
    emit(c, {{"pass", r.ok()}, {"samples", r.samples}, {"in_family", r.in_family},
             {"counterexamples", r.counterexamples}, {"labels", counts}, {"witnesses", wit}});
    return r.ok() ? kOk : kCounterexample;
  }
  if (action == "fixer") {
    int samples = c.g.samples > 0 ? c.g.samples : 200;
    FixerReport r;
    if (a.x.empty()) {
      r = fixer_example_instance(samples, c.g.seed, c.g.q);
    } else {
      auto ll = [&](const std::string& s, const std::string& flag) {
        Json j = read_json(s, flag);
        return with_flag(flag, [&] { return linlex_from_json(j, 2); });
      };
      r = fixer_product_check(ll(a.x, "--x"), ll(a.y, "--y"), ll(a.z, "--z"), ll(a.u, "--u"), samples,
                              c.g.seed, c.g.q);
    }
    emit(c, {{"pass", r.ok()}, {"samples", r.samples}, {"passed", r.passed}, {"failures", r.failures},
             {"assumption", r.assumption}});
    return r.ok() ? kOk : kCounterexample;
  }

  Mat2 g = c.matrix(a.g, "--g");
  if (!det_is_one(g)) throw Error(Errc::InvalidInput, "--g: determinant is not 1 to the tracked precision");
  Json out;
  bool pass = true;
  if (action == "bruhat") {
    BruhatResult r = with_precision_retry([&] { return bruhat_decompose(g); });
    auto [checks, ok] = verdict({{"round_trip", mat_agrees(r.b * r.n * r.bp, g)},
                                 {"b_in_B", in_B(r.b)}, {"n_in_N", in_N(r.n)}, {"bp_in_B", in_B(r.bp)},
                                 {"label_is_nu_n", nu_monomial(r.n) == r.label}});
    out = {{"b", to_json(r.b)}, {"n", to_json(r.n)}, {"bp", to_json(r.bp)}, {"label", to_json(r.label)},
           {"checks", checks}};
    pass = ok;
  } else if (action == "cartan") {
    CartanResult r = with_precision_retry([&] { return cartan_decompose(g); });
    auto [checks, ok] = verdict({{"round_trip", mat_agrees(r.k * r.t * r.kp, g)}, {"k_in_K", in_K(r.k)},
                                 {"kp_in_K", in_K(r.kp)}, {"dominant", r.m >= Val2{0, 0}}});
    out = {{"k", to_json(r.k)}, {"t", to_json(r.t)}, {"kp", to_json(r.kp)}, {"m", to_json(r.m)},
           {"checks", checks}};
    pass = ok;
  } else if (action == "kapranov") {
    if (a.pair != "01" && a.pair != "12") throw Error(Errc::InvalidInput, "--pair must be 01 or 12");
    bool p01 = a.pair == "01";
    KapranovResult r = with_precision_retry(
        [&] { return kapranov_decompose(g, p01 ? KapranovPair::P01 : KapranovPair::P12); });
    auto [checks, ok] = verdict({{"round_trip", mat_agrees(r.left * r.n * r.right, g)},
                                 {p01 ? "left_in_B" : "left_in_S1", p01 ? in_B(r.left) : in_S1(r.left)},
                                 {"n_in_N", in_N(r.n)},
                                 {p01 ? "right_in_S1" : "right_in_S2", p01 ? in_S1(r.right) : in_S2(r.right)}});
    out = {{"pair", a.pair}, {"left", to_json(r.left)}, {"n", to_json(r.n)}, {"right", to_json(r.right)},
           {"checks", checks}};
    pass = ok;
  } else if (action == "cell") {
    out = {{"label", to_json(with_precision_retry([&] { return cell_of(g); }))}};
  } else if (action == "dist") {
    Mat2 h = c.matrix(a.h, "--g2");
    out = {{"dist", to_json(with_precision_retry([&] { return building_dist(g, h); }))}};
  } else if (action == "rho") {
    out = {{"image", point_to_json(with_precision_retry([&] { return retract_rho(g); }))}};
  } else {
    Mat1 r = residue_sl2(g);
    out = {{"residue", to_json(r)}, {"label", to_json(with_precision_retry([&] { return residue_bruhat(r); }))}};
  }
  out["pass"] = pass;
  emit(c, out);
  return pass ? kOk : kCounterexample;
}

// ---- render ----

int cmd_render(const Ctx& c, const std::string& kind, const std::string& out, const std::string& x,
               const std::string& y) {
  std::string svg;
  if (kind == "apartment") {
    svg = render_apartment_svg(c.type());
  } else {
    std::vector<Point> pair = enclosure_example_pair();
    auto pt = [&](const std::string& s, const std::string& flag) {
      Json j = read_json(s, flag);
      return with_flag(flag, [&] { return point_from_json(j, 2, 2); });
    };
    if (!x.empty()) pair[0] = pt(x, "--x");
    if (!y.empty()) pair[1] = pt(y, "--y");
    svg = render_enclosure_svg(pair[0], pair[1]);
  }
  if (out.empty() || out == "-") {
    std::cout << svg;
    return kOk;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(Errc::InvalidInput, "--out: cannot write " + out);
  f << svg;
  if (!f) throw Error(Errc::InvalidInput, "--out: write failed for " + out);
  emit(c, {{"written", out}, {"bytes", svg.size()}});
  return kOk;
}

// ---- suite ----

int cmd_suite(const Ctx& c, const std::string& action, const std::string& name) {
  if (action == "list") {
    emit(c, suite_names());
    return kOk;
  }
  SuiteConfig cfg;
  cfg.seed = c.g.seed;
  cfg.samples = c.g.samples;
  cfg.q = c.g.q;
  cfg.precision = current_precision();
  cfg.phi = c.type();
  cfg.n = c.g.n;
  cfg.threads = c.g.threads;
  SuiteReport r = suite_run(cfg, name);
  emit(c, to_json(r));
  if (r.ok()) return kOk;
  // Only precision shortfalls, no mathematical counterexample: report as such.
  bool precision_only = true;
  for (const auto& p : r.properties) {
    if (p.passed) continue;
    precision_only = precision_only && !p.counterexamples.empty();
    for (const auto& ce : p.counterexamples)
      precision_only = precision_only && ce.contains("error") && ce["error"] == "PrecisionExhausted";
  }
  return precision_only ? kPrecision : kCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"babel: exact computations in level-2 apartments and SL2 over F_q((t1))((t2))"};
  app.require_subcommand(1);
  app.fallthrough();
  Ctx ctx;
  Globals& g = ctx.g;
  app.add_option("--q", g.q, "field size (prime)")->check(CLI::Range(2u, 65521u));
  app.add_option("--prec", g.prec, "working precision P1,P2 (t1 terms per level, t2 levels)");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--samples", g.samples, "sample count (0 = default)")->check(CLI::NonNegativeNumber);
  app.add_option("--phi", g.phi, "root datum")->check(CLI::IsMember({"A1", "A2", "B2"}));
  app.add_option("--n", g.n, "level")->check(CLI::Range(1, 6));
  app.add_option("--threads", g.threads, "worker threads for suites")->check(CLI::Range(1, 256));
  app.add_flag("--json", g.json, "compact single-line JSON output");

  std::string action, a1, a2, word, point, out, x, y, name;
  ApartmentArgs ap;
  Sl2Args sa;

  auto* lex = app.add_subcommand("lex", "hyper-real arithmetic on LexPoly JSON");
  lex->add_option("action", action)->required()->check(CLI::IsMember({"cmp", "level", "sqrt", "add", "mul"}));
  lex->add_option("--a", a1, "LexPoly JSON");
  lex->add_option("--b", a2, "LexPoly JSON");

  auto* weyl = app.add_subcommand("weyl", "n-level Weyl groups");
  weyl->add_option("action", action)->required()->check(CLI::IsMember({"nf", "relations", "act"}));
  weyl->add_option("--word", word, "word in s, s1.., w1..wn, e");
  weyl->add_option("--point", point, "point JSON");

  auto* apt = app.add_subcommand("apartment", "Babel apartment queries");
  apt->add_option("action", action)
      ->required()
      ->check(CLI::IsMember({"locate", "dist", "retract", "enclosure", "sector", "circumcenter"}));
  apt->add_option("--point", ap.point, "point JSON");
  apt->add_option("--point2", ap.point2, "second point JSON");
  apt->add_option("--points", ap.points, "JSON array of points");
  apt->add_option("--chamber", ap.chamber, "word of the chamber for retract");
  apt->add_option("--apex", ap.apex, "sector apex");
  apt->add_option("--apex2", ap.apex2, "second sector apex");
  apt->add_option("--level", ap.level, "sector level")->check(CLI::Range(0, 6));

  auto* field = app.add_subcommand("field", "elements of F_q((t1))((t2))");
  field->add_option("action", action)->required()->check(CLI::IsMember({"val", "inv", "residue", "member"}));
  field->add_option("--x", x, "series JSON");

  auto* sl2 = app.add_subcommand("sl2", "SL2 decompositions and building queries");
  sl2->add_option("action", action)
      ->required()
      ->check(CLI::IsMember({"bruhat", "cartan", "kapranov", "cell", "cellprod", "dist", "rho", "residue", "fixer"}));
  sl2->add_option("--g", sa.g, "matrix JSON [a, b, c, d]");
  sl2->add_option("--g2", sa.h, "second matrix JSON");
  sl2->add_option("--pair", sa.pair, "Kapranov pair 01 or 12");
  sl2->add_option("--x", sa.x, "fixer vertex x (LinLex)");
  sl2->add_option("--y", sa.y, "fixer vertex y");
  sl2->add_option("--z", sa.z, "fixer vertex z");
  sl2->add_option("--u", sa.u, "fixer vertex u");

  auto* render = app.add_subcommand("render", "SVG pictures");
  render->add_option("kind", action)->required()->check(CLI::IsMember({"apartment", "enclosure"}));
  render->add_option("--out", out, "output file (default stdout)");
  render->add_option("--x", x, "enclosure point x (A2, level 2)");
  render->add_option("--y", y, "enclosure point y");

  auto* suite = app.add_subcommand("suite", "seeded property suites");
  suite->add_option("action", action)->required()->check(CLI::IsMember({"run", "list"}));
  suite->add_option("name", name, "suite name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    std::string prec = g.prec;
    if (prec.empty()) {
      const char* env = std::getenv("BABEL_PRECISION");
      if (env && *env) prec = env;
    }
    Precision p = prec.empty() ? Precision{} : parse_precision(prec);
    PrecisionScope scope(p);
    if (!is_prime(g.q)) throw Error(Errc::InvalidInput, "--q must be prime, got " + std::to_string(g.q));
    if (*lex) return cmd_lex(ctx, action, a1, a2);
    if (*weyl) return cmd_weyl(ctx, action, word, point);
    if (*apt) return cmd_apartment(ctx, action, ap);
    if (*field) return cmd_field(ctx, action, x);
    if (*sl2) return cmd_sl2(ctx, action, sa);
    if (*render) return cmd_render(ctx, action, out, x, y);
    if (action == "run" && name.empty()) throw Error(Errc::InvalidInput, "suite run needs a suite name");
    return cmd_suite(ctx, action, name);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::PrecisionExhausted ? kPrecision : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
