#include "babel/rootsystem.hpp"

#include <deque>
#include <sstream>

namespace babel {

RootType parse_root_type(const std::string& s) {
  if (s == "A1") return RootType::A1;
  if (s == "A2") return RootType::A2;
  if (s == "B2") return RootType::B2;
  throw Error(Errc::UnsupportedType, "root type '" + s + "'");
}

const char* root_type_name(RootType t) {
  switch (t) {
    case RootType::A1: return "A1";
    case RootType::A2: return "A2";
    case RootType::B2: return "B2";
  }
  return "?";
}

IntMat identity_mat(int r) {
  IntMat m(static_cast<size_t>(r), IntVec(static_cast<size_t>(r), 0));
  for (int i = 0; i < r; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  size_t r = a.size();
  IntMat m(r, IntVec(r, 0));
  for (size_t i = 0; i < r; ++i)
    for (size_t k = 0; k < r; ++k)
      for (size_t j = 0; j < r; ++j) m[i][j] += a[i][k] * b[k][j];
  return m;
}

IntVec mat_vec(const IntMat& a, const IntVec& v) {
  IntVec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

Q RootDatum::root_norm2(const IntVec& a) const {
  Q s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += gram[i][j] * a[i] * a[j];
  return s;
}

std::vector<Q> RootDatum::coroot(const IntVec& a) const {
  Q f = Q(2) / root_norm2(a);
  std::vector<Q> r(static_cast<size_t>(rank));
  for (int i = 0; i < rank; ++i) r[i] = f * a[i];
  return r;
}

int RootDatum::root_index(const IntVec& a) const {
  for (size_t k = 0; k < roots.size(); ++k)
    if (roots[k] == a) return static_cast<int>(k);
  return -1;
}

int RootDatum::find_weyl(const IntMat& m) const {
  for (size_t k = 0; k < finite_weyl.size(); ++k)
    if (finite_weyl[k] == m) return static_cast<int>(k);
  return -1;
}

namespace {

// Reflection s_a on root coordinates: v -> v - 2(a,v)/(a,a) a.
IntMat reflection_matrix(const RootDatum& R, const IntVec& a) {
  Q n2 = R.root_norm2(a);
  IntMat m(static_cast<size_t>(R.rank), IntVec(static_cast<size_t>(R.rank), 0));
  for (int j = 0; j < R.rank; ++j) {
    Q av = 0;
    for (int i = 0; i < R.rank; ++i) av += R.gram[j][i] * a[i];  // (alpha_j, a)
    Q f = 2 * av / n2;
    if (!is_integer(f)) throw Error(Errc::InvalidInput, "non-crystallographic datum");
    int fi = static_cast<int>(f.get_num().get_si());
    for (int i = 0; i < R.rank; ++i) m[i][j] = (i == j ? 1 : 0) - fi * a[i];
  }
  return m;
}

std::vector<Q> solve(QMat a, std::vector<Q> b) {
  size_t n = b.size();
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Q f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (size_t c = 0; c < n; ++c) b[c] /= a[c][c];
  return b;
}

RootDatum build(RootType t) {
  RootDatum R;
  R.type = t;
  switch (t) {
    case RootType::A1:
      R.rank = 1;
      R.gram = {{Q(1)}};
      R.positive = {{1}};
      R.highest = 0;
      break;
    case RootType::A2:
      R.rank = 2;
      R.gram = {{Q(4), Q(-2)}, {Q(-2), Q(4)}};
      R.positive = {{1, 0}, {0, 1}, {1, 1}};
      R.highest = 2;
      break;
    case RootType::B2:
      R.rank = 2;
      R.gram = {{Q(4), Q(-4)}, {Q(-4), Q(8)}};
      R.positive = {{1, 0}, {0, 1}, {1, 1}, {2, 1}};
      R.highest = 3;
      break;
  }
  R.roots = R.positive;
  for (const auto& a : R.positive) {
    IntVec na = a;
    for (auto& x : na) x = -x;
    R.roots.push_back(na);
  }
  for (int i = 0; i < R.rank; ++i) R.d.push_back(Q(2) / R.gram[i][i]);

  std::vector<IntMat> gens;
  for (int i = 0; i < R.rank; ++i) {
    IntVec e(static_cast<size_t>(R.rank), 0);
    e[i] = 1;
    gens.push_back(reflection_matrix(R, e));
  }
  R.finite_weyl.push_back(identity_mat(R.rank));
  std::deque<size_t> queue{0};
  while (!queue.empty()) {
    size_t k = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      IntMat m = mat_mul(R.finite_weyl[k], g);
      if (R.find_weyl(m) < 0) {
        R.finite_weyl.push_back(m);
        queue.push_back(R.finite_weyl.size() - 1);
      }
    }
  }
  size_t W = R.finite_weyl.size();
  for (const auto& m : R.finite_weyl) {
    IntMat c = m;
    for (int i = 0; i < R.rank; ++i)
      for (int j = 0; j < R.rank; ++j) {
        Q v = m[i][j] * R.d[j] / R.d[i];
        c[i][j] = static_cast<int>(v.get_num().get_si());
      }
    R.finite_weyl_co.push_back(c);
  }
  R.mult.assign(W, std::vector<int>(W, -1));
  R.inverse.assign(W, -1);
  for (size_t i = 0; i < W; ++i)
    for (size_t j = 0; j < W; ++j) {
      R.mult[i][j] = R.find_weyl(mat_mul(R.finite_weyl[i], R.finite_weyl[j]));
      if (R.mult[i][j] == 0) R.inverse[i] = static_cast<int>(j);
    }
  for (const auto& g : gens) R.simple_refl.push_back(R.find_weyl(g));
  for (const auto& a : R.roots) R.root_refl.push_back(R.find_weyl(reflection_matrix(R, a)));

  // Interior point: (alpha_i, c) = 1/(h+1) where theta = sum m_i alpha_i, h = sum m_i.
  int h = 0;
  for (int x : R.positive[static_cast<size_t>(R.highest)]) h += x;
  std::vector<Q> rhs(static_cast<size_t>(R.rank), Q(1, h + 1));
  R.interior = solve(R.gram, rhs);
  return R;
}

}  // namespace

const RootDatum& root_datum(RootType t) {
  static const RootDatum a1 = build(RootType::A1);
  static const RootDatum a2 = build(RootType::A2);
  static const RootDatum b2 = build(RootType::B2);
  switch (t) {
    case RootType::A1: return a1;
    case RootType::A2: return a2;
    case RootType::B2: return b2;
  }
  throw Error(Errc::UnsupportedType, "root type");
}

static void check_dims(const RootDatum& R, const Point& u) {
  if (static_cast<int>(u.size()) != R.rank)
    throw Error(Errc::DimensionMismatch, "point of dimension " + std::to_string(u.size()) +
                                             " for rank " + std::to_string(R.rank));
}

LexPoly inner(const RootDatum& R, const Point& u, const Point& v) {
  check_dims(R, u);
  check_dims(R, v);
  // Collect w_i w_j coefficients directly; cheaper than generic products.
  LexPoly s;
  for (int i = 0; i < R.rank; ++i) {
    LinLex gv(v[0].n());
    for (int j = 0; j < R.rank; ++j)
      if (R.gram[i][j] != 0) gv += v[j] * R.gram[i][j];
    s += u[i].to_poly() * gv.to_poly();
  }
  return s;
}

LinLex pair_root(const RootDatum& R, const IntVec& a, const Point& v) {
  check_dims(R, v);
  LinLex r(v[0].n());
  for (int i = 0; i < R.rank; ++i) {
    Q ga = 0;
    for (int k = 0; k < R.rank; ++k) ga += R.gram[i][k] * a[k];  // (alpha_i, a)
    if (ga != 0) r += v[i] * ga;
  }
  return r;
}

Q inner_q(const RootDatum& R, const std::vector<Q>& u, const std::vector<Q>& v) {
  Q s = 0;
  for (int i = 0; i < R.rank; ++i)
    for (int j = 0; j < R.rank; ++j) s += R.gram[i][j] * u[i] * v[j];
  return s;
}

Point zero_point(int rank, int n) { return Point(static_cast<size_t>(rank), LinLex(n)); }

Point operator+(const Point& a, const Point& b) {
  Point r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  Point r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Point operator*(const Q& s, const Point& a) {
  Point r = a;
  for (auto& x : r) x *= s;
  return r;
}

Point apply_mat(const IntMat& m, const Point& p) {
  Point r(p.size(), LinLex(p.empty() ? 0 : p[0].n()));
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p.size(); ++j)
      if (m[i][j] != 0) r[i] += p[j] * Q(m[i][j]);
  return r;
}

bool points_equal(const Point& a, const Point& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

int point_level(const Point& p) {
  int lv = 1;
  for (const auto& x : p) lv = std::max(lv, x.level());
  return lv;
}

std::string point_to_string(const Point& p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i].to_string();
  os << ")";
  return os.str();
}

}  // namespace babel
