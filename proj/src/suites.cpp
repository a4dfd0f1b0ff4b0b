#include "babel/suites.hpp"

#include <map>
#include <thread>

#include "babel/apartment.hpp"
#include "babel/random.hpp"
#include "babel/render.hpp"
#include "babel/sl2.hpp"

namespace babel {

namespace {

constexpr size_t kMaxCounterexamples = 5;

int count_or(const SuiteConfig& c, int def) { return c.samples > 0 ? c.samples : def; }

uint64_t stream_of(const std::string& name) {
  uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (char ch : name) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ULL;
  return h;
}

Rng sample_rng(const SuiteConfig& c, const std::string& prop, int i) {
  return Rng::derive(c.seed, stream_of(prop), static_cast<uint64_t>(i));
}

PropertyResult named(std::string name) {
  PropertyResult r;
  r.name = std::move(name);
  return r;
}

Json fail(int i, Json detail) { return {{"sample", i}, {"detail", std::move(detail)}}; }

// Random point of Sigma(2, Phi): lattice w2 part, rational real part.
Point random_member(const Apartment& ap, Rng& rng, int wbound = 3) {
  const RootDatum& R = ap.datum();
  Point p = zero_point(R.rank, ap.n());
  for (int i = 0; i < R.rank; ++i) {
    for (int lv = 2; lv <= ap.n(); ++lv) p[i][lv] = R.d[i] * Q(rng.range(-wbound, wbound));
    p[i][1] = rng.rational(20, 7);
  }
  return p;
}

const std::vector<RootType> kAllTypes = {RootType::A1, RootType::A2, RootType::B2};

Sl2Sampler sampler(const SuiteConfig& c) {
  Sl2Sampler s;
  s.q = c.q;
  return s;
}

// ---- suites ----

std::vector<PropertyResult> suite_presentation(const SuiteConfig&) {
  std::vector<PropertyResult> out;
  PropertyResult rel = named("relations W2(A1)");
  for (const auto& r : presentation_A1_level2()) {
    ++rel.checked;
    if (!r.holds) {
      ++rel.failed;
      rel.counterexamples.push_back({{"relation", r.relation}, {"value", r.value}});
    }
  }
  rel.passed = rel.failed == 0;
  out.push_back(rel);

  PropertyResult nu = named("nu of matrix representatives");
  const RootDatum& R = root_datum(RootType::A1);
  uint32_t q = 5;
  std::vector<std::pair<const char*, Mat2>> reps = {
      {"s", Mat2::weyl_s(q)}, {"w1", Mat2::rep_w1(q)}, {"w2", Mat2::rep_w2(q)}};
  for (const auto& [word, m] : reps) {
    ++nu.checked;
    WeylElement got = nu_monomial(m), want = word_to_element(R, 2, word);
    if (got != want) {
      ++nu.failed;
      nu.counterexamples.push_back({{"word", word}, {"nu", got.to_string()}, {"want", want.to_string()}});
    }
  }
  nu.passed = nu.failed == 0;
  out.push_back(nu);
  return out;
}

std::vector<PropertyResult> suite_parallelogram(const SuiteConfig& c) {
  std::vector<PropertyResult> out;
  for (RootType t : kAllTypes) {
    Apartment ap(root_datum(t), c.n);
    std::string name = std::string("parallelogram ") + root_type_name(t);
    out.push_back(run_property(name, count_or(c, 1000), c.threads, [&](int i) -> std::optional<Json> {
      Rng rng = sample_rng(c, name, i);
      Point x = random_member(ap, rng), y = random_member(ap, rng), z = random_member(ap, rng);
      Q tt(rng.range(0, 12), 12);
      tt.canonicalize();
      if (ap.parallelogram_check(x, y, z, tt)) return std::nullopt;
      return fail(i, {{"x", point_to_json(x)}, {"y", point_to_json(y)}, {"z", point_to_json(z)},
                      {"t", q_to_json(tt)}});
    }));
  }
  return out;
}

std::vector<PropertyResult> suite_metric(const SuiteConfig& c) {
  std::vector<PropertyResult> out;
  for (RootType t : kAllTypes) {
    Apartment ap(root_datum(t), c.n);
    std::string tn = root_type_name(t);
    std::string sym = "symmetry " + tn, def = "definiteness " + tn, tri = "triangle " + tn;
    out.push_back(run_property(sym, count_or(c, 1000), c.threads, [&](int i) -> std::optional<Json> {
      Rng rng = sample_rng(c, sym, i);
      Point x = random_member(ap, rng), y = random_member(ap, rng);
      if (ap.dist2(x, y) == ap.dist2(y, x)) return std::nullopt;
      return fail(i, {{"x", point_to_json(x)}, {"y", point_to_json(y)}});
    }));
    out.push_back(run_property(def, count_or(c, 1000), c.threads, [&](int i) -> std::optional<Json> {
      Rng rng = sample_rng(c, def, i);
      Point x = random_member(ap, rng);
      Point y = rng.below(4) == 0 ? x : random_member(ap, rng);
      LexPoly d = ap.dist2(x, y);
      if (d.is_zero() == points_equal(x, y) && d.sign() >= 0) return std::nullopt;
      return fail(i, {{"x", point_to_json(x)}, {"y", point_to_json(y)}, {"dist2", d.to_string()}});
    }));
    out.push_back(run_property(tri, count_or(c, 1000), c.threads, [&](int i) -> std::optional<Json> {
      Rng rng = sample_rng(c, tri, i);
      Point x = random_member(ap, rng), y = random_member(ap, rng), z = random_member(ap, rng);
      if (rng.below(5) == 0) y = Q(1, 2) * (x + z);  // equality case
      if (ap.triangle_cmp(x, y, z) != Order::Less) return std::nullopt;
      return fail(i, {{"x", point_to_json(x)}, {"y", point_to_json(y)}, {"z", point_to_json(z)}});
    }));
  }
  return out;
}

std::vector<PropertyResult> suite_sigma(const SuiteConfig& c) {
  Apartment ap(root_datum(RootType::A1), 2);
  const std::string name = "membership vs union of 2k w2 + R";
  PropertyResult r = run_property(name, count_or(c, 1000), c.threads, [&](int i) -> std::optional<Json> {
    Rng rng = sample_rng(c, name, i);
    // Even samples walk a grid of half-integers, odd ones are random rationals.
    Q w2 = i % 2 == 0 ? Q(i / 2 % 41 - 20, 2) : rng.rational(12, 3);
    Q re = i % 2 == 0 ? Q(i / 82 % 13 - 6, 4) : rng.rational(50, 9);
    w2.canonicalize();
    re.canonicalize();
    bool want = is_integer(w2) && w2.get_num() % 2 == 0;
    Point p{LinLex({re, w2})};
    if (ap.contains(p) == want) return std::nullopt;
    return fail(i, {{"point", point_to_json(p)}, {"expected", want}});
  });
  PropertyResult neg = named("w2 is not in Sigma(2,A1)");
  neg.checked = 1;
  if (ap.contains(Point{LinLex({Q(0), Q(1)})})) {
    neg.failed = 1;
    neg.passed = false;
  }
  return {r, neg};
}

std::vector<PropertyResult> suite_bruhat(const SuiteConfig& c) {
  Sl2Sampler s = sampler(c);
  std::vector<PropertyResult> out;
  const std::string rt = "bruhat round trip and membership";
  out.push_back(run_property(rt, count_or(c, 500), c.threads, [&](int i) -> std::optional<Json> {
    Rng rng = sample_rng(c, rt, i);
    Mat2 g = random_sl2(s, rng);
    BruhatResult r = with_precision_retry([&] { return bruhat_decompose(g); });
    Json bad = Json::array();
    if (!mat_agrees(r.b * r.n * r.bp, g)) bad.push_back("b n b' != g");
    if (!in_B(r.b) || !in_B(r.bp)) bad.push_back("factor not in B");
    if (!in_N(r.n)) bad.push_back("middle factor not monomial");
    if (nu_monomial(r.n) != r.label) bad.push_back("label != nu(n)");
    if (bad.empty()) return std::nullopt;
    return fail(i, {{"g", to_json(g)}, {"failed", bad}, {"label", to_json(r.label)}});
  }));
  const std::string inv = "cell_of invariant under 100 B-translates per side";
  out.push_back(run_property(inv, count_or(c, 500), c.threads, [&](int i) -> std::optional<Json> {
    Rng rng = sample_rng(c, inv, i);
    Mat2 g = random_sl2(s, rng);
    WeylElement w = with_precision_retry([&] { return cell_of(g); });
    for (int k = 0; k < 200; ++k) {
      Rng sub = Rng::derive(rng.next(), 0xb, static_cast<uint64_t>(k));
      bool left = k < 100;
      // Re-drawn inside the retry so a retry also refines the translate's truncation.
      WeylElement got = with_precision_retry([&] {
        Rng r2 = sub;
        Mat2 b = random_B(s, r2);
        return cell_of(left ? b * g : g * b);
      });
      if (got != w)
        return fail(i, {{"g", to_json(g)}, {"side", left ? "left" : "right"}, {"translate", k},
                        {"cell", to_json(w)}, {"translated cell", to_json(got)}});
    }
    return std::nullopt;
  }));
  const std::string con = "cells of b rep(w) b' (disjointness)";
  out.push_back(run_property(con, count_or(c, 500), c.threads, [&](int i) -> std::optional<Json> {
    Rng rng = sample_rng(c, con, i);
    WeylElement w = random_weyl(root_datum(RootType::A1), 2, rng, 3);
    Mat2 g = random_in_cell(s, w, rng);
    WeylElement got = with_precision_retry([&] { return cell_of(g); });
    if (got == w) return std::nullopt;
    return fail(i, {{"w", to_json(w)}, {"g", to_json(g)}, {"cell", to_json(got)}});
  }));
  return out;
}

std::vector<PropertyResult> suite_cartan(const SuiteConfig& c) {
  Sl2Sampler s = sampler(c);
  const std::string name = "cartan round trip, dominance, K-bi-invariance";
  return {run_property(name, count_or(c, 500), c.threads, [&](int i) -> std::optional<Json> {
    Rng rng = sample_rng(c, name, i);
    Mat2 g = random_sl2(s, rng);
    CartanResult r = with_precision_retry([&] { return cartan_decompose(g); });
    Json bad = Json::array();
    if (!mat_agrees(r.k * r.t * r.kp, g)) bad.push_back("k t k' != g");
    if (!in_K(r.k) || !in_K(r.kp)) bad.push_back("factor not in K");
    if (r.m < Val2{0, 0}) bad.push_back("m not dominant");
    for (int k = 0; k < 5 && bad.empty(); ++k) {
      Rng sub = Rng::derive(rng.next(), 0xc, static_cast<uint64_t>(k));
      Val2 m = with_precision_retry([&] {
        Rng r2 = sub;
        Mat2 x = random_K(s, r2), y = random_K(s, r2);
        return cartan_decompose(x * g * y).m;
      });
      if (m != r.m) bad.push_back("m(x g y) = " + m.to_string());
    }
    if (bad.empty()) return std::nullopt;
    return fail(i, {{"g", to_json(g)}, {"m", to_json(r.m)}, {"failed", bad}});
  })};
}

std::vector<PropertyResult> suite_kapranov(const SuiteConfig& c) {
  Sl2Sampler s = sampler(c);
  std::vector<PropertyResult> out;
  for (KapranovPair p : {KapranovPair::P01, KapranovPair::P12}) {
    bool p01 = p == KapranovPair::P01;
    std::string name = p01 ? "kapranov (0,1): G = B N S1" : "kapranov (1,2): G = S1 N S2";
    out.push_back(run_property(name, count_or(c, 500), c.threads, [&](int i) -> std::optional<Json> {
      Rng rng = sample_rng(c, name, i);
      Mat2 g = random_sl2(s, rng);
      KapranovResult r = with_precision_retry([&] { return kapranov_decompose(g, p); });
      Json bad = Json::array();
      if (!mat_agrees(r.left * r.n * r.right, g)) bad.push_back("product != g");
      if (!(p01 ? in_B(r.left) : in_S1(r.left))) bad.push_back("left factor");
      if (!in_N(r.n)) bad.push_back("middle factor not monomial");
      if (!(p01 ? in_S1(r.right) : in_S2(r.right))) bad.push_back("right factor");
      if (bad.empty()) return std::nullopt;
      return fail(i, {{"g", to_json(g)}, {"failed", bad}});
    }));
  }
  return out;
}

std::vector<PropertyResult> suite_cellprod(const SuiteConfig& c) {
  CellProductReport rep = verify_cell_product_w2w2(count_or(c, 500), c.seed, c.q);
  std::vector<PropertyResult> out;
  PropertyResult fam = named("sampled C(w2)C(w2) products in the family");
  fam.checked = rep.samples;
  fam.failed = rep.samples - rep.in_family;
  fam.passed = fam.failed == 0;
  for (size_t k = 0; k < rep.counterexamples.size() && k < kMaxCounterexamples; ++k)
    fam.counterexamples.push_back(rep.counterexamples[k]);
  Json counts = Json::object();
  for (const auto& [label, n] : rep.label_counts) counts[label] = n;
  fam.note = counts.dump();
  out.push_back(fam);
  for (const auto& w : rep.witnesses) {
    PropertyResult p = named(std::string("witness ") + w.target.kind + "=" + std::to_string(w.target.param) +
                     " (x -> " + w.target.K.to_string() + " - x)");
    p.checked = 1;
    p.passed = w.found;
    p.failed = w.found ? 0 : 1;
    p.note = w.method;
    if (w.found)
      p.witness = {{"g1", to_json(w.g1)}, {"g2", to_json(w.g2)}};
    out.push_back(p);
  }
  return out;
}

std::vector<PropertyResult> suite_retraction(const SuiteConfig& c) {
  Sl2Sampler s = sampler(c);
  Apartment ap(root_datum(RootType::A1), 2);
  const std::string name = "dist(rho(g.o), rho(h.o)) <= building_dist(g, h)";
  return {run_property(name, count_or(c, 200), c.threads, [&](int i) -> std::optional<Json> {
    Rng rng = sample_rng(c, name, i);
    Mat2 g = random_sl2(s, rng), h = random_sl2(s, rng);
    Point rg = with_precision_retry([&] { return retract_rho(g); });
    Point rh = with_precision_retry([&] { return retract_rho(h); });
    LinLex bd = with_precision_retry([&] { return building_dist(g, h); });
    LinLex ad = rg[0] - rh[0];
    if (ad.sign() < 0) ad = -ad;
    bool consistent = ap.dist2(rg, rh) == ad.to_poly() * ad.to_poly();
    if (ad <= bd && consistent) return std::nullopt;
    return fail(i, {{"g", to_json(g)}, {"h", to_json(h)}, {"rho g", point_to_json(rg)},
                    {"rho h", point_to_json(rh)}, {"building_dist", to_json(bd)}});
  })};
}

std::vector<PropertyResult> suite_residue(const SuiteConfig& c) {
  Sl2Sampler s = sampler(c);
  std::vector<PropertyResult> out;
  const std::string hom = "residue lands in SL2(F1) and is multiplicative";
  out.push_back(run_property(hom, count_or(c, 500), c.threads, [&](int i) -> std::optional<Json> {
    Rng rng = sample_rng(c, hom, i);
    Mat2 g = random_SL2_ScrOF(s, rng), h = random_SL2_ScrOF(s, rng);
    Mat1 rg = residue_sl2(g), rh = residue_sl2(h);
    Json bad = Json::array();
    if (!agrees(LS2::from_level(rg.det()), LS2::one(c.q))) bad.push_back("det r(g) != 1");
    if (!mat1_agrees(residue_sl2(g * h), rg * rh)) bad.push_back("r(gh) != r(g) r(h)");
    if (bad.empty()) return std::nullopt;
    return fail(i, {{"g", to_json(g)}, {"h", to_json(h)}, {"failed", bad}});
  }));
  const std::string lab = "residue Bruhat label matches level-1 decomposition";
  out.push_back(run_property(lab, count_or(c, 500), c.threads, [&](int i) -> std::optional<Json> {
    Rng rng = sample_rng(c, lab, i);
    Mat2 g = random_SL2_ScrOF(s, rng);
    Mat1 rg = residue_sl2(g);
    WeylElement l2 = with_precision_retry([&] { return cell_of(g); });
    WeylElement l1 = with_precision_retry([&] { return residue_bruhat(rg); });
    bool ok = l2.trans()[0].zero_above(1) && l1.fin() == l2.fin() && l1.trans()[0][1] == l2.trans()[0][1];
    if (ok) return std::nullopt;
    return fail(i, {{"g", to_json(g)}, {"level-2 cell", to_json(l2)}, {"level-1 cell", to_json(l1)}});
  }));
  const std::string lift = "lifts hit SL2(F1) targets";
  out.push_back(run_property(lift, count_or(c, 500), c.threads, [&](int i) -> std::optional<Json> {
    Rng rng = sample_rng(c, lift, i);
    Mat1 target = random_sl2_F1(s, rng);
    Mat2 g = lift_from_F1(target, s, rng);
    if (in_SL2_ScrOF(g) && det_is_one(g) && mat1_agrees(residue_sl2(g), target)) return std::nullopt;
    return fail(i, {{"target", to_json(target)}, {"lift", to_json(g)}});
  }));
  return out;
}

// w2-parts u (on the coroot lattice) of Sigma(2, A2) near Omega, split by their root
// pairings against Omega: strictly inside for every root, or outside for some root.
struct LatticeSplit {
  std::vector<Point> inside, outside;
};

LatticeSplit split_lattice(const Apartment& ap, const std::vector<Point>& om) {
  const RootDatum& R = ap.datum();
  LatticeSplit out;
  for (int m0 = -8; m0 <= 8; ++m0)
    for (int m1 = -8; m1 <= 8; ++m1) {
      Point u = zero_point(R.rank, 2);
      u[0][2] = R.d[0] * m0;
      u[1][2] = R.d[1] * m1;
      bool strict = true, outside = false;
      for (const auto& a : R.roots) {
        Q v = pair_root(R, a, u)[2], lo = pair_root(R, a, om[0])[2], hi = pair_root(R, a, om[1])[2];
        if (lo > hi) std::swap(lo, hi);
        strict = strict && lo < v && v < hi;
        outside = outside || v < lo || v > hi;
      }
      if (strict) out.inside.push_back(u);
      if (outside) out.outside.push_back(u);
    }
  return out;
}

std::vector<PropertyResult> suite_enclosure(const SuiteConfig& c) {
  Apartment ap(root_datum(RootType::A2), 2);
  const RootDatum& R = ap.datum();
  std::vector<Point> om = enclosure_example_pair();
  LatticeSplit lat = split_lattice(ap, om);
  std::vector<PropertyResult> out;
  auto with_real = [&](Point u, Rng& rng) {
    for (auto& x : u) x[1] = rng.rational(40, 7);
    return u;
  };
  const std::string in = "enclosure interior members";
  out.push_back(run_property(in, count_or(c, 60), c.threads, [&](int i) -> std::optional<Json> {
    Rng rng = sample_rng(c, in, i);
    Point z = with_real(lat.inside[rng.below(lat.inside.size())], rng);
    if (ap.enclosure_contains(om, z)) return std::nullopt;
    return fail(i, {{"z", point_to_json(z)}});
  }));
  out.back().note = std::to_string(lat.inside.size()) + " real components strictly inside";
  const std::string ex = "enclosure exterior non-members";
  out.push_back(run_property(ex, count_or(c, 60), c.threads, [&](int i) -> std::optional<Json> {
    Rng rng = sample_rng(c, ex, i);
    Point z = with_real(lat.outside[rng.below(lat.outside.size())], rng);
    if (!ap.enclosure_contains(om, z)) return std::nullopt;
    return fail(i, {{"z", point_to_json(z)}});
  }));
  // cl-fix: a reflection fixing two points of its wall fixes their enclosure.
  const std::string fix = "cl-fix for wall reflections";
  out.push_back(run_property(fix, count_or(c, 40), c.threads, [&](int i) -> std::optional<Json> {
    Rng rng = sample_rng(c, fix, i);
    const IntVec& a = R.positive[rng.below(R.positive.size())];
    Point p = random_member(ap, rng, 2), q = random_member(ap, rng, 2);
    for (int k = 0; k < R.rank; ++k) q[k][2] = p[k][2];
    LinLex k = pair_root(R, a, p);
    k[1] = Q(rng.range(-3, 3));
    Q n2 = R.root_norm2(a);
    auto project = [&](const Point& v) {
      LinLex e = pair_root(R, a, v) - k;
      Point r = v;
      for (int m = 0; m < R.rank; ++m) r[m] -= e * (Q(a[static_cast<size_t>(m)]) / n2);
      return r;
    };
    std::vector<Point> wall = {project(p), project(q)};
    WeylElement s = reflection(R, a, k);
    ClFixReport rep = ap.cl_fix_check(s, wall, 30, rng.next());
    if (rep.ok) return std::nullopt;
    return fail(i, {{"omega", Json::array({point_to_json(wall[0]), point_to_json(wall[1])})},
                    {"witness", point_to_json(*rep.witness)}});
  }));
  return out;
}

std::vector<PropertyResult> suite_circumcenter(const SuiteConfig& c) {
  std::vector<PropertyResult> out;
  for (RootType t : {RootType::A2, RootType::B2}) {
    Apartment ap(root_datum(t), 2);
    const RootDatum& R = ap.datum();
    std::string name = std::string("circumcenter optimal and unique ") + root_type_name(t);
    out.push_back(run_property(name, count_or(c, 50), c.threads, [&](int i) -> std::optional<Json> {
      Rng rng = sample_rng(c, name, i);
      Point hi = random_member(ap, rng);
      std::vector<Point> B;
      std::vector<std::vector<Q>> reals;
      for (int m = 0; m < 3; ++m) {
        Point p = hi;
        std::vector<Q> r;
        for (int k = 0; k < R.rank; ++k) {
          r.push_back(rng.rational(10, 3));
          p[k][1] = r.back();
        }
        B.push_back(p);
        reals.push_back(r);
      }
      CircumResult res = ap.circumcenter(B);
      auto [mc, mr2] = min_enclosing_ball(R.gram, reals);
      Json bad = Json::array();
      if (res.radius2 != LexPoly(mr2)) bad.push_back("radius differs from real-component ball");
      if (ap.circumradius2(res.center, B) != res.radius2) bad.push_back("radius not attained");
      for (int m = 0; m < 10; ++m) {
        Point c2 = res.center;
        for (auto& x : c2) x[1] += rng.rational(3, 50);
        if (points_equal(c2, res.center)) continue;
        if (ap.circumradius2(c2, B) < res.radius2) bad.push_back("perturbed center is better");
        Cat0Witness w = ap.cat0_witness(B, res.center, c2);
        if (!w.contradiction) bad.push_back("second center without CAT(0) contradiction");
      }
      if (bad.empty()) return std::nullopt;
      Json pts = Json::array();
      for (const auto& p : B) pts.push_back(point_to_json(p));
      return fail(i, {{"B", pts}, {"failed", bad}});
    }));
  }
  return out;
}

std::vector<PropertyResult> suite_fixer(const SuiteConfig& c) {
  FixerReport rep = fixer_example_instance(count_or(c, 200), c.seed, c.q);
  PropertyResult p = named("fixer product instance x=0, y=2, z=2w2-2, u=2w2");
  p.checked = rep.samples;
  p.failed = rep.samples - rep.passed;
  p.passed = rep.ok();
  for (size_t k = 0; k < rep.failures.size() && k < kMaxCounterexamples; ++k)
    p.counterexamples.push_back(rep.failures[k]);
  p.note = "assumption: " + rep.assumption;
  return {p};
}

using SuiteFn = std::vector<PropertyResult> (*)(const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"presentation", suite_presentation}, {"parallelogram", suite_parallelogram},
      {"metric", suite_metric},             {"sigma", suite_sigma},
      {"bruhat", suite_bruhat},             {"cartan", suite_cartan},
      {"kapranov", suite_kapranov},         {"cellprod", suite_cellprod},
      {"retraction", suite_retraction},     {"residue", suite_residue},
      {"enclosure", suite_enclosure},       {"circumcenter", suite_circumcenter},
      {"fixer", suite_fixer},
  };
  return r;
}

const std::map<std::string, std::vector<std::string>>& aggregates() {
  static const std::map<std::string, std::vector<std::string>> a = {
      {"decomp", {"bruhat", "cartan", "kapranov"}},
      {"apartment", {"parallelogram", "metric", "sigma", "enclosure", "circumcenter"}},
  };
  return a;
}

}  // namespace

bool SuiteReport::ok() const {
  for (const auto& p : properties)
    if (!p.passed) return false;
  return true;
}

Json to_json(const SuiteConfig& c) {
  return {{"seed", c.seed},
          {"samples", c.samples},
          {"q", c.q},
          {"prec", {{"p1", c.precision.p1}, {"p2", c.precision.p2}}},
          {"phi", root_type_name(c.phi)},
          {"n", c.n}};
}

Json to_json(const PropertyResult& r) {
  Json j = {{"name", r.name}, {"pass", r.passed}, {"checked", r.checked}, {"failed", r.failed}};
  if (!r.counterexamples.empty()) j["counterexamples"] = r.counterexamples;
  if (!r.witness.is_null()) j["witness"] = r.witness;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const SuiteReport& r) {
  Json props = Json::array();
  for (const auto& p : r.properties) props.push_back(to_json(p));
  return {{"suite", r.suite}, {"config", to_json(r.config)}, {"pass", r.ok()}, {"properties", props}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    for (const auto& [name, parts] : aggregates()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

SuiteReport suite_run(const SuiteConfig& config, const std::string& name) {
  std::vector<std::string> parts;
  auto agg = aggregates().find(name);
  if (name == "all") {
    for (const auto& [n, fn] : registry()) parts.push_back(n);
  } else if (agg != aggregates().end()) {
    parts = agg->second;
  } else {
    parts.push_back(name);
  }
  SuiteReport rep{name, config, {}};
  PrecisionScope scope(config.precision);
  for (const auto& part : parts) {
    auto it = std::find_if(registry().begin(), registry().end(), [&](const auto& e) { return e.first == part; });
    if (it == registry().end()) throw Error(Errc::UnknownSuite, "no suite named '" + name + "'");
    for (auto& p : it->second(config)) rep.properties.push_back(std::move(p));
  }
  return rep;
}

PropertyResult run_property(const std::string& name, int count, int threads,
                            const std::function<std::optional<Json>(int)>& sample) {
  std::vector<std::optional<Json>> results(static_cast<size_t>(std::max(count, 0)));
  Precision prec = current_precision();
  auto worker = [&](int shard, int shards) {
    PrecisionScope scope(prec);
    for (int i = shard; i < count; i += shards) {
      try {
        results[static_cast<size_t>(i)] = sample(i);
      } catch (const Error& e) {
        results[static_cast<size_t>(i)] =
            Json{{"sample", i}, {"error", errc_name(e.code())}, {"detail", e.what()}};
      }
    }
  };
  int shards = std::max(1, std::min(threads, count));
  if (shards == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int s = 0; s < shards; ++s) pool.emplace_back(worker, s, shards);
    for (auto& t : pool) t.join();
  }
  PropertyResult r = named(name);
  r.checked = count;
  for (auto& res : results) {
    if (!res) continue;
    ++r.failed;
    if (r.counterexamples.size() < kMaxCounterexamples) r.counterexamples.push_back(std::move(*res));
  }
  r.passed = r.failed == 0;
  return r;
}

}  // namespace babel
