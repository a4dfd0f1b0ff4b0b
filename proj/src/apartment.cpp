#include "babel/apartment.hpp"

#include <algorithm>
#include <deque>

#include "babel/random.hpp"

namespace babel {

bool HalfSpace::contains(const RootDatum& R, const Point& v) const {
  return pair_root(R, root, v) + k >= LinLex(k.n());
}

Apartment::Apartment(const RootDatum& R, int n) : R_(&R), n_(n) {
  if (n < 1) throw Error(Errc::InvalidInput, "level n must be >= 1");
}

Point Apartment::point(const std::vector<LinLex>& coords) const {
  Point p;
  for (const auto& c : coords) p.push_back(c.resized(n_));
  check(p);
  return p;
}

Point Apartment::real_point(const std::vector<Q>& coords) const {
  Point p;
  for (const auto& c : coords) p.push_back(LinLex::real(n_, c));
  check(p);
  return p;
}

Point Apartment::interior_point() const { return real_point(R_->interior); }

void Apartment::check(const Point& p) const {
  if (static_cast<int>(p.size()) != R_->rank)
    throw Error(Errc::DimensionMismatch, "point has " + std::to_string(p.size()) +
                                             " coordinates, rank is " + std::to_string(R_->rank));
  for (const auto& x : p)
    if (x.n() != n_) throw Error(Errc::DimensionMismatch, "coordinate level count differs from n");
}

namespace {

Q pair_q(const RootDatum& R, const IntVec& a, const Point& y) {
  return pair_root(R, a, y)[1];
}

}  // namespace

std::vector<WeylElement> Apartment::locate_all(const Point& p) const {
  check(p);
  const RootDatum& R = *R_;
  // Levels >= 2 must sit on the coroot lattice.
  Point hi = zero_point(R.rank, n_);
  for (int i = 0; i < R.rank; ++i)
    for (int j = 2; j <= n_; ++j) {
      Q c = p[i][j] / R.d[i];
      if (!is_integer(c))
        throw Error(Errc::NotInApartment, point_to_string(p) + " has a non-lattice w" +
                                              std::to_string(j) + " component");
      hi[i][j] = c;
    }
  WeylElement t_hi = WeylElement::translation(R, hi);
  Point y = zero_point(R.rank, n_);
  for (int i = 0; i < R.rank; ++i) y[i][1] = p[i][1];

  // Coarse move near the origin, then fold into the closed alcove.
  Point lam = zero_point(R.rank, n_);
  for (int i = 0; i < R.rank; ++i) lam[i][1] = -floor_q(y[i][1] / R.d[i]);
  WeylElement g = WeylElement::translation(R, lam);
  y = g.act(y);
  const IntVec& theta = R.positive[static_cast<size_t>(R.highest)];
  WeylElement s_theta = reflection(R, theta, LinLex::real(n_, 1));
  for (int guard = 0; guard < 10000; ++guard) {
    bool moved = false;
    for (int i = 0; i < R.rank && !moved; ++i) {
      IntVec e(static_cast<size_t>(R.rank), 0);
      e[i] = 1;
      if (pair_q(R, e, y) < 0) {
        WeylElement s = WeylElement::finite(R, n_, R.simple_refl[i]);
        g = s * g;
        y = s.act(y);
        moved = true;
      }
    }
    if (!moved && pair_q(R, theta, y) > 1) {
      g = s_theta * g;
      y = s_theta.act(y);
      moved = true;
    }
    if (!moved) break;
  }

  // Stabiliser of y: generated by reflections in the walls of C0-bar through y.
  std::vector<WeylElement> gens;
  for (int i = 0; i < R.rank; ++i) {
    IntVec e(static_cast<size_t>(R.rank), 0);
    e[i] = 1;
    if (pair_q(R, e, y) == 0) gens.push_back(WeylElement::finite(R, n_, R.simple_refl[i]));
  }
  if (pair_q(R, theta, y) == 1) gens.push_back(s_theta);
  std::vector<WeylElement> stab{WeylElement(R, n_)};
  std::deque<size_t> queue{0};
  while (!queue.empty()) {
    size_t k = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      WeylElement h = stab[k] * s;
      if (std::find(stab.begin(), stab.end(), h) == stab.end()) {
        stab.push_back(h);
        queue.push_back(stab.size() - 1);
      }
    }
  }
  WeylElement base = t_hi * g.inverse();
  std::vector<WeylElement> out;
  for (const auto& h : stab) out.push_back(base * h);
  std::sort(out.begin(), out.end());
  return out;
}

WeylElement Apartment::locate(const Point& p) const { return locate_all(p).front(); }

bool Apartment::contains(const Point& p) const {
  check(p);
  for (int i = 0; i < R_->rank; ++i)
    for (int j = 2; j <= n_; ++j)
      if (!is_integer(p[i][j] / R_->d[i])) return false;
  return true;
}

bool Apartment::in_closed_chamber(const Point& p) const {
  check(p);
  for (const auto& x : p)
    if (!x.zero_above(1)) return false;
  for (int i = 0; i < R_->rank; ++i) {
    IntVec e(static_cast<size_t>(R_->rank), 0);
    e[i] = 1;
    if (pair_q(*R_, e, p) < 0) return false;
  }
  return pair_q(*R_, R_->positive[static_cast<size_t>(R_->highest)], p) <= 1;
}

LexPoly Apartment::dist2(const Point& p, const Point& q) const {
  Point d = p - q;
  return inner(*R_, d, d);
}

SqrtExpr Apartment::dist(const Point& p, const Point& q) const { return SqrtExpr(dist2(p, q)); }

bool Apartment::parallelogram_check(const Point& x, const Point& y, const Point& z, const Q& t) const {
  Point pt = (1 - t) * x + t * y;
  LexPoly lhs = dist2(pt, z);
  LexPoly rhs = (1 - t) * dist2(x, z) + t * dist2(y, z) - (t * (1 - t)) * dist2(x, y);
  return lhs == rhs;
}

Order Apartment::triangle_cmp(const Point& x, const Point& y, const Point& z) const {
  return sqrt_sum_cmp(dist(x, y), dist(y, z), dist(x, z));
}

namespace {

LexPoly det(const std::vector<std::vector<LexPoly>>& m) {
  size_t n = m.size();
  if (n == 0) return LexPoly(1);
  if (n == 1) return m[0][0];
  LexPoly s;
  for (size_t c = 0; c < n; ++c) {
    std::vector<std::vector<LexPoly>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<LexPoly> row;
      for (size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    LexPoly t = m[0][c] * det(minor);
    if (c % 2) s -= t;
    else s += t;
  }
  return s;
}

}  // namespace

bool Apartment::affinely_independent(const std::vector<Point>& pts) const {
  if (pts.empty() || static_cast<int>(pts.size()) > R_->rank + 1) return false;
  std::vector<Point> v;
  for (size_t k = 1; k < pts.size(); ++k) v.push_back(pts[k] - pts[0]);
  std::vector<std::vector<LexPoly>> G(v.size(), std::vector<LexPoly>(v.size()));
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) G[i][j] = inner(*R_, v[i], v[j]);
  return !det(G).is_zero();
}

bool Apartment::unique_from_distances(const std::vector<Point>& basis, const Point& p,
                                      const Point& q) const {
  if (static_cast<int>(basis.size()) != R_->rank + 1 || !affinely_independent(basis))
    throw Error(Errc::DegenerateBasis, "need rank+1 affinely independent points");
  for (const auto& x : basis)
    if (dist2(x, p) != dist2(x, q)) return true;
  return points_equal(p, q);
}

Point Apartment::retract_tau(const WeylElement& c, const Point& p) const {
  WeylElement w = locate(p);
  return c.act(w.inverse().act(p));
}

namespace {

bool lattice_rec(const LinLex& u, const LinLex& v, int j, bool lo, bool hi, LinLex& K) {
  if (j == 0) return !lo;
  if (!lo && !hi) {
    for (int k = j; k >= 1; --k) K[k] = 0;
    return true;
  }
  if (lo && !hi) {
    K[j] = floor_q(u[j]) + 1;
    for (int k = j - 1; k >= 1; --k) K[k] = 0;
    return true;
  }
  if (!lo && hi) {
    K[j] = ceil_q(v[j]) - 1;
    for (int k = j - 1; k >= 1; --k) K[k] = 0;
    return true;
  }
  Q a = ceil_q(u[j]), b = floor_q(v[j]);
  for (Q m = a; m <= b && m <= a + 2; m += 1) {
    K[j] = m;
    if (lattice_rec(u, v, j - 1, m == u[j], m == v[j], K)) return true;
  }
  return false;
}

std::optional<LinLex> lattice_point(const LinLex& u, const LinLex& v) {
  int n = std::max(u.n(), v.n());
  LinLex uu = u.resized(n), vv = v.resized(n), K(n);
  if (lattice_rec(uu, vv, n, true, true, K)) return K;
  return std::nullopt;
}

}  // namespace

bool lattice_point_in_lex_interval(const LinLex& u, const LinLex& v) {
  return lattice_point(u, v).has_value();
}

std::vector<HalfSpace> Apartment::separating_halfspaces(const std::vector<Point>& omega,
                                                        const Point& z) const {
  if (omega.empty()) throw Error(Errc::EmptyOmega, "enclosure of the empty set");
  check(z);
  std::vector<HalfSpace> out;
  for (const auto& a : R_->roots) {
    LinLex m = pair_root(*R_, a, omega[0]);
    for (size_t k = 1; k < omega.size(); ++k) {
      LinLex x = pair_root(*R_, a, omega[k]);
      if (x < m) m = x;
    }
    auto K = lattice_point(pair_root(*R_, a, z), m);
    if (K) out.push_back({a, -*K});
  }
  return out;
}

bool Apartment::enclosure_contains(const std::vector<Point>& omega, const Point& z) const {
  return separating_halfspaces(omega, z).empty();
}

ClFixReport Apartment::cl_fix_check(const WeylElement& g, const std::vector<Point>& omega,
                                    int samples, uint64_t seed) const {
  if (omega.empty()) throw Error(Errc::EmptyOmega, "cl_fix_check");
  for (const auto& w : omega)
    if (!points_equal(g.act(w), w))
      throw Error(Errc::PreconditionViolated, "g moves " + point_to_string(w));
  ClFixReport rep;
  for (int s = 0; s < samples; ++s) {
    Rng rng = Rng::derive(seed, 0xC1F1, static_cast<uint64_t>(s));
    const Point& x = omega[rng.below(omega.size())];
    const Point& y = omega[rng.below(omega.size())];
    Q t(rng.range(0, 16), 16);
    t.canonicalize();
    Point z = (1 - t) * x + t * y;
    if (rng.coin()) {
      for (auto& c : z) c[1] += rng.rational(4, 8);
    }
    if (!enclosure_contains(omega, z)) continue;
    ++rep.checked;
    if (!points_equal(g.act(z), z)) {
      rep.ok = false;
      rep.witness = z;
      return rep;
    }
  }
  return rep;
}

bool Apartment::sector_contains(const Sector& s, const Point& p) const {
  if (!contains(p)) return false;
  Point x = p - s.apex;
  int top = std::max(s.level, 1);
  for (const auto& c : x)
    if (!c.zero_above(top)) return false;
  for (int i = 0; i < R_->rank; ++i) {
    IntVec e(static_cast<size_t>(R_->rank), 0);
    e[i] = 1;
    if (pair_root(*R_, e, x).sign() < 0) return false;
  }
  if (s.level == 0) return pair_q(*R_, R_->positive[static_cast<size_t>(R_->highest)], x) <= 1;
  return true;
}

Sector Apartment::sector_intersect(const Sector& a, const Sector& b) const {
  if (a.level != b.level || a.level < 0 || a.level > n_)
    throw Error(Errc::InvalidInput, "sectors must share a level in 0..n");
  if (!contains(a.apex) || !contains(b.apex))
    throw Error(Errc::NotInApartment, "sector apex outside the apartment");
  const RootDatum& R = *R_;
  int i = a.level;
  Point delta = a.apex - b.apex;
  int top = std::max(i, 1);
  for (const auto& c : delta)
    if (!c.zero_above(top)) throw Error(Errc::Disjoint, "apices differ above level " + std::to_string(top));
  if (points_equal(a.apex, b.apex)) return a;
  if (i == 0) {
    const IntVec& theta = R.positive[static_cast<size_t>(R.highest)];
    Q need = 0;
    for (int s = 0; s < R.rank; ++s) {
      IntVec e(static_cast<size_t>(R.rank), 0);
      e[s] = 1;
      Q v = -pair_q(R, e, delta);
      if (v > 0) need += theta[s] * v;
    }
    Q cap = std::min(Q(1), Q(1 - pair_q(R, theta, delta)));
    if (need > cap) throw Error(Errc::Disjoint, "chambers do not meet");
    throw Error(Errc::NotASector, "chambers meet in a proper face");
  }
  // Join: (alpha_s, join) = max of (alpha_s, apex) over both apices.
  std::vector<LinLex> lam;
  for (int s = 0; s < R.rank; ++s) {
    IntVec e(static_cast<size_t>(R.rank), 0);
    e[s] = 1;
    LinLex u = pair_root(R, e, a.apex), v = pair_root(R, e, b.apex);
    lam.push_back(u < v ? v : u);
  }
  // Invert the Gram matrix (rank <= 2).
  QMat inv(static_cast<size_t>(R.rank), std::vector<Q>(static_cast<size_t>(R.rank)));
  if (R.rank == 1) {
    inv[0][0] = 1 / R.gram[0][0];
  } else {
    Q dt = R.gram[0][0] * R.gram[1][1] - R.gram[0][1] * R.gram[1][0];
    inv[0][0] = R.gram[1][1] / dt;
    inv[1][1] = R.gram[0][0] / dt;
    inv[0][1] = -R.gram[0][1] / dt;
    inv[1][0] = -R.gram[1][0] / dt;
  }
  Point join = zero_point(R.rank, n_);
  for (int r = 0; r < R.rank; ++r)
    for (int s = 0; s < R.rank; ++s) join[r] += lam[s] * inv[r][s];
  if (!contains(join)) throw Error(Errc::NotASector, "join of apices " + point_to_string(join) + " is not in the apartment");
  return Sector{join, i};
}

// ---- circumcenters ----

namespace {

using RVec = std::vector<Q>;

Q rdot(const QMat& g, const RVec& u, const RVec& v) {
  Q s = 0;
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (g[i][j] != 0) s += g[i][j] * u[i] * v[j];
  return s;
}

RVec rsub(const RVec& a, const RVec& b) {
  RVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Q rdist2(const QMat& g, const RVec& a, const RVec& b) {
  RVec d = rsub(a, b);
  return rdot(g, d, d);
}

struct Ball {
  RVec c;
  Q r2;
};

bool inside(const QMat& g, const Ball& b, const RVec& p) { return rdist2(g, b.c, p) <= b.r2; }

Ball diam(const QMat& g, const RVec& a, const RVec& b) {
  RVec c = a;
  for (size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + b[i]) / 2;
  return {c, rdist2(g, c, a)};
}

}  // namespace

std::optional<std::vector<Q>> affine_circumcenter(const QMat& gram, const std::vector<std::vector<Q>>& pts) {
  if (pts.empty()) return std::nullopt;
  size_t m = pts.size() - 1;
  std::vector<RVec> v;
  for (size_t k = 1; k <= m; ++k) v.push_back(rsub(pts[k], pts[0]));
  // Sum_l beta_l (v_l, v_k) = (v_k, v_k) / 2.
  QMat A(m, RVec(m + 1));
  for (size_t k = 0; k < m; ++k) {
    for (size_t l = 0; l < m; ++l) A[k][l] = rdot(gram, v[l], v[k]);
    A[k][m] = rdot(gram, v[k], v[k]) / 2;
  }
  for (size_t c = 0; c < m; ++c) {
    size_t p = c;
    while (p < m && A[p][c] == 0) ++p;
    if (p == m) return std::nullopt;
    std::swap(A[p], A[c]);
    for (size_t r = 0; r < m; ++r) {
      if (r == c || A[r][c] == 0) continue;
      Q f = A[r][c] / A[c][c];
      for (size_t k = c; k <= m; ++k) A[r][k] -= f * A[c][k];
    }
  }
  RVec c = pts[0];
  for (size_t l = 0; l < m; ++l) {
    Q beta = A[l][m] / A[l][l];
    for (size_t i = 0; i < c.size(); ++i) c[i] += beta * v[l][i];
  }
  return c;
}

std::pair<std::vector<Q>, Q> min_enclosing_ball(const QMat& gram, const std::vector<std::vector<Q>>& pts) {
  if (pts.empty()) throw Error(Errc::EmptyOmega, "minimum enclosing ball of no points");
  Ball b{pts[0], 0};
  for (size_t i = 1; i < pts.size(); ++i) {
    if (inside(gram, b, pts[i])) continue;
    b = {pts[i], 0};
    for (size_t j = 0; j < i; ++j) {
      if (inside(gram, b, pts[j])) continue;
      b = diam(gram, pts[i], pts[j]);
      for (size_t k = 0; k < j; ++k) {
        if (inside(gram, b, pts[k])) continue;
        auto c = affine_circumcenter(gram, {pts[i], pts[j], pts[k]});
        if (c) {
          b = {*c, rdist2(gram, *c, pts[i])};
        } else {
          // Collinear: the diametral ball of the two extreme points.
          Ball b1 = diam(gram, pts[i], pts[k]), b2 = diam(gram, pts[j], pts[k]);
          b = b1.r2 >= b2.r2 ? b1 : b2;
        }
      }
    }
  }
  return {b.c, b.r2};
}

CircumResult Apartment::circumcenter(const std::vector<Point>& B) const {
  if (B.empty()) throw Error(Errc::EmptyOmega, "circumcenter of the empty set");
  for (const auto& b : B) check(b);
  for (size_t i = 0; i < B.size(); ++i)
    for (size_t j = i + 1; j < B.size(); ++j)
      if (dist2(B[i], B[j]).level() > 1)
        throw Error(Errc::MixedLevels, "points lie in different real components");
  Point hi = B[0];
  for (auto& c : hi) c[1] = 0;
  std::vector<RVec> pts;
  for (const auto& b : B) {
    RVec r;
    for (const auto& c : b) r.push_back(c[1]);
    pts.push_back(r);
  }
  auto [c, r2] = min_enclosing_ball(R_->gram, pts);
  Point center = hi;
  for (int i = 0; i < R_->rank; ++i) center[i][1] = c[i];
  return {center, LexPoly(r2)};
}

LexPoly Apartment::circumradius2(const Point& c, const std::vector<Point>& B) const {
  if (B.empty()) throw Error(Errc::EmptyOmega, "circumradius of the empty set");
  LexPoly m = dist2(c, B[0]);
  for (size_t k = 1; k < B.size(); ++k) {
    LexPoly d = dist2(c, B[k]);
    if (m < d) m = d;
  }
  return m;
}

Cat0Witness Apartment::cat0_witness(const std::vector<Point>& B, const Point& c1, const Point& c2) const {
  Cat0Witness w;
  LexPoly r1 = circumradius2(c1, B), r2 = circumradius2(c2, B);
  w.radius2 = r1 < r2 ? r2 : r1;
  w.midpoint = Q(1, 2) * (c1 + c2);
  w.midpoint_radius2 = circumradius2(w.midpoint, B);
  w.bound = w.radius2 - Q(1, 4) * dist2(c1, c2);
  w.contradiction = w.midpoint_radius2 <= w.bound && w.bound < w.radius2;
  return w;
}

bool Apartment::residue_point_filter(const Point& p, const Point& q) const {
  return dist2(p, q).level() <= std::max(n_ - 1, 1);
}

}  // namespace babel
