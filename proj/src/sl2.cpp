#include "babel/sl2.hpp"

#include <sstream>

#include "babel/random.hpp"

namespace babel {

namespace {

const RootDatum& A1() { return root_datum(RootType::A1); }
int s_index() { return A1().simple_refl[0]; }

LS2 mono(uint32_t q, const Val2& v, long c = 1) {
  return LS2::monomial(q, c, static_cast<int>(v.i), static_cast<int>(v.j));
}

Val2 val_of(const LinLex& x) {
  if (x.n() > 2 || !x.is_integral())
    throw Error(Errc::InvalidInput, "vertex must be an integral point of level <= 2");
  Val2 v{0, x[1].get_num().get_si(), false};
  if (x.n() == 2) v.j = x[2].get_num().get_si();
  return v;
}

LinLex linlex_of(const Val2& v) { return v.to_linlex(); }

Point coroot_point(const LinLex& x) { return Point{x}; }

WeylElement translation_label(const Val2& coroot) {
  return WeylElement(A1(), 0, coroot_point(linlex_of(coroot)));
}

WeylElement reflection_label(const Val2& coroot) {
  return WeylElement(A1(), s_index(), coroot_point(linlex_of(coroot)));
}

// Determined valuation or PrecisionExhausted; exact zero gives infinity.
Val2 det_val(const LS2& x) {
  ValInfo v = x.val_info();
  if (v.determined) return v.lower;
  throw Error(Errc::PrecisionExhausted, "entry valuation not determined at current precision");
}

// v(x) >= bound, decided or PrecisionExhausted.
bool ge(const LS2& x, const Val2& bound) { return val_at_least(x, bound); }

Val2 wt(const Val2& v, int delta) { return {4 * v.j, 4 * v.i + delta, false}; }

enum Entry { EA, EB, EC, ED };

const LS2& entry(const Mat2& g, Entry e) {
  switch (e) {
    case EA: return g.a;
    case EB: return g.b;
    case EC: return g.c;
    case ED: return g.d;
  }
  return g.a;
}

// Entry of least weighted valuation; `order` lists entries by tie preference.
Entry pivot(const Mat2& g, const int (&delta)[4], const Entry (&order)[4], int weight_scale) {
  bool found = false;
  Entry best = EA;
  Val2 bw;
  for (Entry e : order) {
    ValInfo v = entry(g, e).val_info();
    if (!v.determined || v.lower.inf) continue;
    Val2 w = weight_scale == 4 ? wt(v.lower, delta[e]) : v.lower;
    if (!found || w < bw) {
      found = true;
      best = e;
      bw = w;
    }
  }
  if (!found) throw Error(Errc::PrecisionExhausted, "no entry with determined valuation");
  for (Entry e : order) {
    ValInfo v = entry(g, e).val_info();
    if (v.determined) continue;
    Val2 lw = weight_scale == 4 ? Val2{4 * v.lower.j, v.lower.i <= kNegInf ? kNegInf : 4 * v.lower.i + delta[e], false}
                                : v.lower;
    if (lw < bw) throw Error(Errc::PrecisionExhausted, "pivot comparison undecidable at current precision");
  }
  return best;
}

constexpr int kBruhatDelta[4] = {1, 2, 0, 1};  // a, b, c, d
constexpr Entry kBruhatOrder[4] = {EC, EA, ED, EB};
constexpr int kNoDelta[4] = {0, 0, 0, 0};
constexpr Entry kCartanOrder[4] = {ED, EA, EC, EB};

Entry bruhat_pivot(const Mat2& g) { return pivot(g, kBruhatDelta, kBruhatOrder, 4); }

// x = m * eps with m the leading monomial (with its coefficient) and eps in O_F^x.
struct MonoSplit {
  LS2 m, eps;
};

MonoSplit split(const LS2& x) {
  LS2 m = x.leading_monomial();
  return {m, x * m.inverse()};
}

// The factors must reproduce g. For exact g a vacuous agreement (truncation swallowed
// a leading term) is a working-precision shortfall; for truncated g it is the most the
// input supports.
void certify(const Mat2& product, const Mat2& g) {
  const LS2* p[4] = {&product.a, &product.b, &product.c, &product.d};
  const LS2* e[4] = {&g.a, &g.b, &g.c, &g.d};
  bool exact = g.a.exact() && g.b.exact() && g.c.exact() && g.d.exact();
  for (int k = 0; k < 4; ++k) {
    LS2 diff = *p[k] - *e[k];
    if (!diff.is_zero_to_precision())
      throw Error(Errc::PreconditionViolated, "factors do not recombine; is det(g) = 1?");
    if (exact && !agrees(*p[k], *e[k]))
      throw Error(Errc::PrecisionExhausted, "recombination not certified at current precision");
  }
}

Mat2 diag2(const LS2& x, const LS2& y) {
  return {x, LS2::zero(x.q()), LS2::zero(x.q()), y};
}

}  // namespace

// ---- Mat2 ----

Mat2 Mat2::identity(uint32_t q) { return diag2(LS2::one(q), LS2::one(q)); }
Mat2 Mat2::upper(const LS2& x) { return {LS2::one(x.q()), x, LS2::zero(x.q()), LS2::one(x.q())}; }
Mat2 Mat2::lower(const LS2& y) { return {LS2::one(y.q()), LS2::zero(y.q()), y, LS2::one(y.q())}; }
Mat2 Mat2::diag(const LS2& x) { return diag2(x, x.inverse()); }
Mat2 Mat2::antidiag(const LS2& y) { return {LS2::zero(y.q()), y, -y.inverse(), LS2::zero(y.q())}; }
Mat2 Mat2::weyl_s(uint32_t q) { return antidiag(LS2::one(q)); }
Mat2 Mat2::rep_w1(uint32_t q) { return antidiag(LS2::monomial(q, -1, -1, 0)); }
Mat2 Mat2::rep_w2(uint32_t q) { return antidiag(LS2::monomial(q, -1, 0, -1)); }
Mat2 Mat2::torus(uint32_t q, const Val2& v) { return diag(mono(q, v)); }

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::inverse() const { return {d, -b, -c, a}; }

LS2 Mat2::det() const { return a * d - b * c; }

std::string Mat2::to_string() const {
  return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " +
         d.to_string() + "]]";
}

bool mat_agrees(const Mat2& x, const Mat2& y) {
  return agrees(x.a, y.a) && agrees(x.b, y.b) && agrees(x.c, y.c) && agrees(x.d, y.d);
}

bool det_is_one(const Mat2& g) { return agrees(g.det(), LS2::one(g.q())); }

// ---- predicates ----

bool in_B(const Mat2& g) {
  return is_unit_OF(g.a) && is_unit_OF(g.d) && ge(g.b, {0, 0}) && ge(g.c, {0, 1});
}

bool in_N(const Mat2& g) {
  bool diag = g.b.is_zero_to_precision() && g.c.is_zero_to_precision() &&
              !g.a.is_zero_to_precision() && !g.d.is_zero_to_precision();
  bool anti = g.a.is_zero_to_precision() && g.d.is_zero_to_precision() &&
              !g.b.is_zero_to_precision() && !g.c.is_zero_to_precision();
  return diag || anti;
}

bool in_H(const Mat2& g) {
  return g.b.is_zero_to_precision() && g.c.is_zero_to_precision() && is_unit_OF(g.a) &&
         is_unit_OF(g.d);
}

bool in_K(const Mat2& g) {
  return ge(g.a, {0, 0}) && ge(g.b, {0, 0}) && ge(g.c, {0, 0}) && ge(g.d, {0, 0});
}

bool in_S1(const Mat2& g) {
  return is_unit_OF(g.a) && is_unit_OF(g.d) && ge(g.b, {0, kNegInf}) && ge(g.c, {1, kNegInf});
}

bool in_S2(const Mat2& g) {
  LS2 one = LS2::one(g.q());
  return agrees(g.a, one) && agrees(g.d, one) && g.c.is_zero_to_precision();
}

bool in_SL2_ScrOF(const Mat2& g) {
  Val2 b{0, kNegInf};
  return ge(g.a, b) && ge(g.b, b) && ge(g.c, b) && ge(g.d, b);
}

bool in_vertex_fixer(const Mat2& g, const LinLex& x) {
  Val2 v = val_of(x);
  return ge(g.a, {0, 0}) && ge(g.d, {0, 0}) && ge(g.b, -v) && ge(g.c, v);
}

bool in_subgroup(SubgroupTag tag, const Mat2& g) {
  switch (tag) {
    case SubgroupTag::B: return in_B(g);
    case SubgroupTag::N: return in_N(g);
    case SubgroupTag::K: return in_K(g);
    case SubgroupTag::S1: return in_S1(g);
    case SubgroupTag::S2: return in_S2(g);
    case SubgroupTag::H: return in_H(g);
  }
  return false;
}

const char* subgroup_name(SubgroupTag tag) {
  switch (tag) {
    case SubgroupTag::B: return "B";
    case SubgroupTag::N: return "N";
    case SubgroupTag::K: return "K";
    case SubgroupTag::S1: return "S1";
    case SubgroupTag::S2: return "S2";
    case SubgroupTag::H: return "H";
  }
  return "?";
}

// ---- nu ----

WeylElement nu_monomial(const Mat2& m) {
  if (!in_N(m)) throw Error(Errc::NotMonomial, "matrix is not monomial");
  if (!m.a.is_zero_to_precision()) return translation_label(-det_val(m.a));
  return reflection_label(-det_val(m.b));
}

Mat2 label_rep(uint32_t q, const WeylElement& w) {
  if (&w.datum() != &A1()) throw Error(Errc::DatumMismatch, "labels live in W(A1)");
  LinLex t = w.trans()[0];
  if (t.n() < 2) t = t.resized(2);
  Val2 v = -val_of(t);
  return w.is_translation() ? Mat2::torus(q, v) : Mat2::antidiag(mono(q, v));
}

// ---- Bruhat ----

WeylElement cell_of(const Mat2& g) {
  Entry p = bruhat_pivot(g);
  switch (p) {
    case EA: return translation_label(-det_val(g.a));
    case ED: return translation_label(det_val(g.d));
    case EC: return reflection_label(det_val(g.c));
    case EB: return reflection_label(-det_val(g.b));
  }
  throw Error(Errc::InvalidInput, "pivot");
}

namespace {

BruhatResult bruhat_raw(const Mat2& g) {
  Entry p = bruhat_pivot(g);
  const LS2 &a = g.a, &b = g.b, &c = g.c, &d = g.d;
  switch (p) {
    case EA: {
      // g = L(c/a) diag(m, 1/m) . diag(e, 1/e) U(b/a)
      LS2 ai = a.inverse();
      MonoSplit s = split(a);
      Mat2 n = Mat2::diag(s.m);
      return {Mat2::lower(c * ai), n, Mat2::diag(s.eps) * Mat2::upper(b * ai), nu_monomial(n)};
    }
    case ED: {
      // g = U(b/d) diag(1/m, m) . diag(1/e, e) L(c/d)
      LS2 di = d.inverse();
      MonoSplit s = split(d);
      Mat2 n = Mat2::diag(s.m.inverse());
      return {Mat2::upper(b * di), n, Mat2::diag(s.eps.inverse()) * Mat2::lower(c * di),
              nu_monomial(n)};
    }
    case EC: {
      // g = U(a/c) [[0,-1/m],[m,0]] . diag(e, 1/e) U(d/c)
      LS2 ci = c.inverse();
      MonoSplit s = split(c);
      Mat2 n = Mat2::antidiag(-s.m.inverse());
      return {Mat2::upper(a * ci), n, Mat2::diag(s.eps) * Mat2::upper(d * ci), nu_monomial(n)};
    }
    case EB: {
      // g = L(d/b) [[0,m],[-1/m,0]] . diag(1/e, e) L(a/b)
      LS2 bi = b.inverse();
      MonoSplit s = split(b);
      Mat2 n = Mat2::antidiag(s.m);
      return {Mat2::lower(d * bi), n, Mat2::diag(s.eps.inverse()) * Mat2::lower(a * bi),
              nu_monomial(n)};
    }
  }
  throw Error(Errc::InvalidInput, "pivot");
}

CartanResult cartan_raw(const Mat2& g) {
  uint32_t q = g.q();
  Entry p = pivot(g, kNoDelta, kCartanOrder, 1);
  Mat2 s = Mat2::weyl_s(q), si = s.inverse(), one = Mat2::identity(q);
  // Move the pivot to position (2,2): g = L gp R.
  Mat2 L = one, R = one, gp = g;
  switch (p) {
    case ED: break;
    case EA: gp = s * g * si; L = si; R = s; break;
    case EC: gp = g * s; R = si; break;
    case EB: gp = s * g; L = si; break;
  }
  Val2 v = det_val(gp.d);
  if (v > Val2{0, 0})
    throw Error(Errc::PreconditionViolated, "determinant is not a unit; not in SL2");
  // gp = U(b/d) diag(1/d, d) L(c/d), diag(1/d, d) = diag(1/e, e) diag(t^-v, t^v).
  LS2 di = gp.d.inverse();
  LS2 eps = gp.d * mono(q, -v);
  Mat2 k = L * Mat2::upper(gp.b * di) * Mat2::diag(eps.inverse());
  Mat2 kp = Mat2::lower(gp.c * di) * R;
  Val2 m = -v;
  return {k, Mat2::torus(q, m), kp, m};
}

KapranovResult kapranov_raw(const Mat2& g, KapranovPair pair) {
  uint32_t q = g.q();
  const LS2 &a = g.a, &b = g.b, &c = g.c, &d = g.d;
  if (pair == KapranovPair::P12) {
    bool diag_case;
    if (c.is_exact_zero()) {
      diag_case = true;
    } else if (a.is_exact_zero()) {
      diag_case = false;
    } else {
      Val2 va = det_val(a);
      diag_case = ge(c, {va.j + 1, kNegInf});
    }
    if (diag_case) {
      // g = L(c/a) diag(e, 1/e) . diag(m, 1/m) . U(b/a)
      LS2 ai = a.inverse();
      MonoSplit s = split(a);
      return {Mat2::lower(c * ai) * Mat2::diag(s.eps), Mat2::diag(s.m), Mat2::upper(b * ai)};
    }
    // g = U(a/c) diag(1/e, e) . [[0,-1/m],[m,0]] . U(d/c)
    LS2 ci = c.inverse();
    MonoSplit s = split(c);
    return {Mat2::upper(a * ci) * Mat2::diag(s.eps.inverse()), Mat2::antidiag(-s.m.inverse()),
            Mat2::upper(d * ci)};
  }

  // (0,1): g = b n s. Candidates in a fixed order, each guarded by the
  // valuation inequalities that put its outer factors in B and S1.
  bool undecided = false;
  auto holds = [&](auto cond) {
    try {
      return static_cast<bool>(cond());
    } catch (const Error& e) {
      if (e.code() != Errc::PrecisionExhausted) throw;
      undecided = true;
      return false;
    }
  };
  auto nonzero = [](const LS2& x) {
    ValInfo v = x.val_info();
    return v.determined && !v.lower.inf;
  };
  Mat2 one = Mat2::identity(q);
  if (nonzero(c)) {
    Val2 vc = det_val(c);
    if (holds([&] { return ge(a, vc) && ge(d, {vc.j, kNegInf}); })) {
      LS2 ci = c.inverse();
      MonoSplit s = split(c);
      return {Mat2::upper(a * ci), Mat2::antidiag(-s.m.inverse()),
              Mat2::diag(s.eps) * Mat2::upper(d * ci)};
    }
  }
  if (nonzero(a)) {
    Val2 va = det_val(a);
    if (holds([&] { return ge(c, va + Val2{0, 1}) && ge(b, {va.j, kNegInf}); })) {
      LS2 ai = a.inverse();
      MonoSplit s = split(a);
      return {Mat2::lower(c * ai), Mat2::diag(s.m), Mat2::diag(s.eps) * Mat2::upper(b * ai)};
    }
  }
  if (nonzero(d)) {
    Val2 vd = det_val(d);
    if (holds([&] { return ge(b, vd) && ge(c, {vd.j + 1, kNegInf}); })) {
      LS2 di = d.inverse();
      MonoSplit s = split(d);
      return {Mat2::upper(b * di), Mat2::diag(s.m.inverse()),
              Mat2::diag(s.eps.inverse()) * Mat2::lower(c * di)};
    }
  }
  if (nonzero(b)) {
    Val2 vb = det_val(b);
    if (holds([&] { return ge(d, vb + Val2{0, 1}) && ge(a, {vb.j + 1, kNegInf}); })) {
      LS2 bi = b.inverse();
      MonoSplit s = split(b);
      return {Mat2::lower(d * bi), Mat2::antidiag(s.m),
              Mat2::diag(s.eps.inverse()) * Mat2::lower(a * bi)};
    }
  }
  // Variants moving the S1-side unipotent across n into B.
  if (nonzero(c)) {
    Val2 vc = det_val(c);
    if (holds([&] { return ge(a, vc) && ge(d, Val2{0, 1} + -vc); })) {
      MonoSplit s = split(c);
      return {Mat2::upper(a * c.inverse()) * Mat2::lower(-(c * d)) * Mat2::diag(s.eps.inverse()),
              Mat2::antidiag(-s.m.inverse()), one};
    }
  }
  if (nonzero(a)) {
    Val2 va = det_val(a);
    if (holds([&] { return ge(c, va + Val2{0, 1}) && ge(b, -va); })) {
      MonoSplit s = split(a);
      return {Mat2::lower(c * a.inverse()) * Mat2::upper(a * b) * Mat2::diag(s.eps),
              Mat2::diag(s.m), one};
    }
  }
  if (nonzero(d)) {
    Val2 vd = det_val(d);
    if (holds([&] { return ge(b, vd) && ge(c, Val2{0, 1} + -vd); })) {
      MonoSplit s = split(d);
      return {Mat2::upper(b * d.inverse()) * Mat2::lower(c * d) * Mat2::diag(s.eps.inverse()),
              Mat2::diag(s.m.inverse()), one};
    }
  }
  if (nonzero(b)) {
    Val2 vb = det_val(b);
    if (holds([&] { return ge(d, vb + Val2{0, 1}) && ge(a, -vb); })) {
      MonoSplit s = split(b);
      return {Mat2::lower(d * b.inverse()) * Mat2::upper(-(a * b)) * Mat2::diag(s.eps),
              Mat2::antidiag(s.m), one};
    }
  }
  if (undecided) throw Error(Errc::PrecisionExhausted, "Kapranov pivot undecidable at current precision");
  throw Error(Errc::PreconditionViolated, "no (0,1) factorization found; matrix not in SL2?");
}

}  // namespace

BruhatResult bruhat_decompose(const Mat2& g) {
  BruhatResult r = bruhat_raw(g);
  certify(r.b * r.n * r.bp, g);
  return r;
}

CartanResult cartan_decompose(const Mat2& g) {
  CartanResult r = cartan_raw(g);
  certify(r.k * r.t * r.kp, g);
  return r;
}

KapranovResult kapranov_decompose(const Mat2& g, KapranovPair pair) {
  KapranovResult r = kapranov_raw(g, pair);
  certify(r.left * r.n * r.right, g);
  return r;
}

// ---- distance and retraction ----

LinLex building_dist(const Mat2& g, const Mat2& h) {
  CartanResult r = cartan_raw(g.inverse() * h);
  LinLex m = r.m.to_linlex();
  return m * Q(2);
}

Point retract_rho(const Mat2& g) {
  WeylElement w = cell_of(g);
  return w.act(zero_point(1, 2));
}

Mat2 vertex_matrix(uint32_t q, const LinLex& x) {
  Val2 v = val_of(x);
  if (v.i % 2 != 0 || v.j % 2 != 0)
    throw Error(Errc::InvalidConfiguration, "vertex " + x.to_string() + " is not in the orbit of o");
  return Mat2::torus(q, {-v.j / 2, -v.i / 2, false});
}

// ---- residue ----

Mat1 Mat1::operator*(const Mat1& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

LS1 Mat1::det() const { return a * d - b * c; }

std::string Mat1::to_string() const {
  return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " +
         d.to_string() + "]]";
}

bool mat1_agrees(const Mat1& x, const Mat1& y) {
  return mat_agrees(embed_level0(x), embed_level0(y));
}

Mat1 residue_sl2(const Mat2& g) {
  return {residue_to_F1(g.a), residue_to_F1(g.b), residue_to_F1(g.c), residue_to_F1(g.d)};
}

Mat2 embed_level0(const Mat1& g) {
  return {LS2::from_level(g.a), LS2::from_level(g.b), LS2::from_level(g.c), LS2::from_level(g.d)};
}

WeylElement residue_bruhat(const Mat1& g) {
  WeylElement w = cell_of(embed_level0(g));
  const LinLex& t = w.trans()[0];
  if (!t.zero_above(1)) throw Error(Errc::InvalidInput, "residue label above level 1");
  return WeylElement(A1(), w.fin(), Point{LinLex::real(1, t[1])});
}

// ---- sampling ----

namespace {

LS2 poly(const Sl2Sampler& s, Rng& rng, int imin, int imax, int jmin, int jmax) {
  return random_poly(s.q, rng, 1 + static_cast<int>(rng.below(static_cast<uint64_t>(s.terms))),
                     imin, imax, jmin, jmax);
}

// Exact element of O_F (j = 0 terms with i >= imin0, j > 0 terms unrestricted in i).
LS2 poly_OF(const Sl2Sampler& s, Rng& rng, int imin0) {
  LS2 x = poly(s, rng, std::max(imin0, 0), std::max(imin0, 0) + 3, 0, 0);
  if (rng.coin()) x = x + poly(s, rng, s.imin, s.imax, 1, std::max(1, s.jmax));
  return x;
}

LS2 unit_F(const Sl2Sampler& s, Rng& rng) {
  return LS2::constant(s.q, rng.range(1, s.q - 1));
}

// Unit of O_F; a quarter of them are non-monomial so that inverses are truncated.
LS2 unit_OF(const Sl2Sampler& s, Rng& rng) {
  LS2 u = unit_F(s, rng);
  if (!s.exact_units && rng.below(4) == 0) u = u + poly(s, rng, 1, 3, 0, 0);
  return u;
}

}  // namespace

Mat2 random_sl2(const Sl2Sampler& s, Rng& rng) {
  Mat2 g = Mat2::identity(s.q);
  for (int k = 0; k < s.factors; ++k) {
    switch (rng.below(4)) {
      case 0: g = g * Mat2::upper(poly(s, rng, s.imin, s.imax, s.jmin, s.jmax)); break;
      case 1: g = g * Mat2::lower(poly(s, rng, s.imin, s.imax, s.jmin, s.jmax)); break;
      case 2:
        g = g * Mat2::diag(mono(s.q, {rng.range(s.jmin, s.jmax), rng.range(s.imin, s.imax)},
                                rng.range(1, s.q - 1)));
        break;
      default: g = g * Mat2::weyl_s(s.q); break;
    }
  }
  return g;
}

Mat2 random_B(const Sl2Sampler& s, Rng& rng) {
  return Mat2::lower(poly_OF(s, rng, 1)) * Mat2::diag(unit_OF(s, rng)) *
         Mat2::upper(poly_OF(s, rng, 0));
}

Mat2 random_K(const Sl2Sampler& s, Rng& rng) {
  Mat2 g = Mat2::identity(s.q);
  for (int k = 0; k < 3; ++k) {
    switch (rng.below(4)) {
      case 0: g = g * Mat2::upper(poly_OF(s, rng, 0)); break;
      case 1: g = g * Mat2::lower(poly_OF(s, rng, 0)); break;
      case 2: g = g * Mat2::diag(unit_OF(s, rng)); break;
      default: g = g * Mat2::weyl_s(s.q); break;
    }
  }
  return g;
}

Mat2 random_SL2_ScrOF(const Sl2Sampler& s, Rng& rng) {
  Mat2 g = Mat2::identity(s.q);
  int jmax = std::max(0, s.jmax);
  for (int k = 0; k < s.factors; ++k) {
    switch (rng.below(4)) {
      case 0: g = g * Mat2::upper(poly(s, rng, s.imin, s.imax, 0, jmax)); break;
      case 1: g = g * Mat2::lower(poly(s, rng, s.imin, s.imax, 0, jmax)); break;
      case 2:
        g = g * Mat2::diag(mono(s.q, {0, rng.range(s.imin, s.imax)}, rng.range(1, s.q - 1)));
        break;
      default: g = g * Mat2::weyl_s(s.q); break;
    }
  }
  return g;
}

Mat1 random_sl2_F1(const Sl2Sampler& s, Rng& rng) {
  Sl2Sampler f = s;
  f.jmin = f.jmax = 0;
  Mat2 g = random_SL2_ScrOF(f, rng);
  return residue_sl2(g);
}

Mat2 random_in_cell(const Sl2Sampler& s, const WeylElement& w, Rng& rng) {
  return random_B(s, rng) * label_rep(s.q, w) * random_B(s, rng);
}

Mat2 lift_from_F1(const Mat1& g, const Sl2Sampler& s, Rng& rng) {
  int jmax = std::max(1, s.jmax);
  Mat2 kernel = Mat2::upper(poly(s, rng, s.imin, s.imax, 1, jmax)) *
                Mat2::lower(poly(s, rng, s.imin, s.imax, 1, jmax));
  return rng.coin() ? embed_level0(g) * kernel : kernel * embed_level0(g);
}

Mat2 random_in_fixers(const Sl2Sampler& s, const LinLex& x, const LinLex& y, Rng& rng) {
  Val2 bmin = -val_of(x), cmin = val_of(y);
  if (val_of(y) < val_of(x)) throw Error(Errc::InvalidInput, "random_in_fixers needs x <= y");
  auto above = [&](const Val2& lo) {
    LS2 r = LS2::zero(s.q);
    int terms = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(s.terms)));
    for (int k = 0; k < terms; ++k) {
      long dj = rng.range(0, 1);
      long di = dj == 0 ? rng.range(0, 3) : rng.range(-3, 3);
      r = r + mono(s.q, {lo.j + dj, lo.i + di}, rng.range(0, s.q - 1));
    }
    return r;
  };
  Mat2 u = Mat2::upper(above(bmin)), l = Mat2::lower(above(cmin));
  Mat2 h = Mat2::diag(unit_OF(s, rng));
  return (rng.coin() ? u * l : l * u) * h;
}

// ---- cell products ----

bool in_w2w2_family(const WeylElement& label) {
  if (label.is_identity()) return true;
  if (label.is_translation()) return false;
  LinLex K = label.trans_root()[0];
  if (K.n() < 2) K = K.resized(2);
  if (!K.is_integral()) return false;
  mpz_class k2 = K[2].get_num(), k1 = K[1].get_num();
  if (k1 % 2 != 0) return false;
  if (k2 == 4) return k1 <= 0;
  if (k2 == 2) return true;
  if (k2 == 0) return k1 >= 2;
  return false;
}

std::vector<CellFamilyTarget> w2w2_witness_targets() {
  std::vector<CellFamilyTarget> t;
  auto K = [](long k2, long k1) {
    LinLex r(2);
    r[2] = Q(k2);
    r[1] = Q(k1);
    return r;
  };
  for (long a : {0L, 1L, 2L}) t.push_back({'a', a, K(4, -2 * a)});
  for (long b = -2; b <= 2; ++b) t.push_back({'b', b, K(2, -2 * b)});
  for (long c : {-1L, -2L}) t.push_back({'c', c, K(0, -2 * c)});
  return t;
}

namespace {

WeylElement target_label(const CellFamilyTarget& t) {
  LinLex half = t.K * Q(1, 2);
  return WeylElement(A1(), s_index(), Point{half});
}

std::string label_key(const WeylElement& w) {
  if (w.is_identity()) return "1";
  LinLex K = w.trans_root()[0];
  return std::string(w.is_translation() ? "x -> x + " : "x -> ") +
         (w.is_translation() ? "" : "-x + ") + K.to_string();
}

}  // namespace

bool CellProductReport::ok() const {
  if (!counterexamples.empty() || in_family != samples) return false;
  for (const auto& w : witnesses)
    if (!w.found) return false;
  return true;
}

CellProductReport verify_cell_product_w2w2(int samples, uint64_t seed, uint32_t q,
                                           int witness_search) {
  CellProductReport rep;
  Sl2Sampler s;
  s.q = q;
  WeylElement w2 = word_to_element(A1(), 2, "w2");
  for (int k = 0; k < samples; ++k) {
    Rng rng = Rng::derive(seed, 0xce11, static_cast<uint64_t>(k));
    Mat2 g1 = random_in_cell(s, w2, rng), g2 = random_in_cell(s, w2, rng);
    WeylElement l = with_precision_retry([&] { return cell_of(g1 * g2); });
    ++rep.samples;
    ++rep.label_counts[label_key(l)];
    if (in_w2w2_family(l))
      ++rep.in_family;
    else
      rep.counterexamples.push_back("sample " + std::to_string(k) + ": " + label_key(l));
  }

  Mat2 n = Mat2::rep_w2(q);
  for (const auto& t : w2w2_witness_targets()) {
    WitnessResult r{t, false, Mat2::identity(q), Mat2::identity(q), "none"};
    WeylElement want = target_label(t);
    auto check = [&](const Mat2& g1, const Mat2& g2) {
      return with_precision_retry([&] {
        return cell_of(g1) == w2 && cell_of(g2) == w2 && cell_of(g1 * g2) == want;
      });
    };
    // n L(y) n lands in the cell of U(-y / t2^2); pick v(y) accordingly.
    Val2 vy = t.kind == 'a' ? Val2{0, t.param} : t.kind == 'b' ? Val2{1, t.param} : Val2{2, t.param};
    Mat2 g2 = Mat2::lower(mono(q, vy)) * n;
    if (check(n, g2)) {
      r.found = true;
      r.g1 = n;
      r.g2 = g2;
      r.method = "explicit";
    }
    for (int k = 0; k < witness_search && !r.found; ++k) {
      Rng rng = Rng::derive(seed, 0x5ea7, static_cast<uint64_t>(k));
      Mat2 h1 = random_in_cell(s, w2, rng), h2 = random_in_cell(s, w2, rng);
      if (check(h1, h2)) {
        r.found = true;
        r.g1 = h1;
        r.g2 = h2;
        r.method = "search";
      }
    }
    rep.witnesses.push_back(r);
  }
  return rep;
}

// ---- fixers ----

FixerReport fixer_product_check(const LinLex& x, const LinLex& y, const LinLex& z,
                                const LinLex& u, int samples, uint64_t seed, uint32_t q) {
  FixerReport rep;
  rep.assumption =
      "orbit oracle: g in P_v P_w iff building_dist(v, g.w) == building_dist(v, w)";
  for (const LinLex* p : {&x, &y, &z, &u}) vertex_matrix(q, *p);
  const LinLex& lo = x < u ? x : u;
  const LinLex& hi = x < u ? u : x;
  for (const LinLex* p : {&y, &z})
    if (*p < lo || *p > hi)
      throw Error(Errc::InvalidConfiguration, p->to_string() + " is not between x and u");
  LinLex dxy = y - x, dxz = z - x;
  if (dxy.sign() < 0) dxy = -dxy;
  if (dxz.sign() < 0) dxz = -dxz;
  if (dxy > dxz) throw Error(Errc::InvalidConfiguration, "dist(x,y) > dist(x,z)");

  Sl2Sampler s;
  s.q = q;
  Mat2 Dx = vertex_matrix(q, x), Dy = vertex_matrix(q, y), Dz = vertex_matrix(q, z),
       Du = vertex_matrix(q, u);
  LinLex dxu = with_precision_retry([&] { return building_dist(Dx, Du); });
  LinLex dyz = with_precision_retry([&] { return building_dist(Dy, Dz); });
  for (int k = 0; k < samples; ++k) {
    Rng rng = Rng::derive(seed, 0xf1e, static_cast<uint64_t>(k));
    ++rep.samples;
    Mat2 p = random_in_fixers(s, x < y ? x : y, x < y ? y : x, rng);
    Mat2 pp = random_in_fixers(s, z < u ? z : u, z < u ? u : z, rng);
    try {
      bool member = with_precision_retry([&] {
        return in_vertex_fixer(p, x) && in_vertex_fixer(p, y) && in_vertex_fixer(pp, z) &&
               in_vertex_fixer(pp, u);
      });
      if (!member) {
        rep.failures.push_back("sample " + std::to_string(k) + ": sampled factor not in fixer");
        continue;
      }
      Mat2 g = p * pp;
      bool left = with_precision_retry([&] { return building_dist(Dx, g * Du) == dxu; });
      bool right = with_precision_retry([&] { return building_dist(Dy, g * Dz) == dyz; });
      if (left && right)
        ++rep.passed;
      else
        rep.failures.push_back("sample " + std::to_string(k) + ": " +
                               (left ? "P_y P_z" : "P_x P_u") + " orbit test failed");
    } catch (const Error& e) {
      rep.failures.push_back("sample " + std::to_string(k) + ": " + e.what());
    }
  }
  return rep;
}

FixerReport fixer_example_instance(int samples, uint64_t seed, uint32_t q) {
  auto pt = [](long k2, long k1) {
    LinLex r(2);
    r[2] = Q(k2);
    r[1] = Q(k1);
    return r;
  };
  return fixer_product_check(pt(0, 0), pt(0, 2), pt(2, -2), pt(2, 0), samples, seed, q);
}

}  // namespace babel
