#include "babel/weyl.hpp"

#include <sstream>

#include "babel/random.hpp"

namespace babel {

WeylElement::WeylElement(const RootDatum& R, int n)
    : R_(&R), n_(n), fin_(0), trans_(zero_point(R.rank, n)) {}

WeylElement::WeylElement(const RootDatum& R, int fin, Point trans)
    : R_(&R), n_(trans.empty() ? 1 : trans[0].n()), fin_(fin), trans_(std::move(trans)) {
  if (static_cast<int>(trans_.size()) != R.rank)
    throw Error(Errc::DimensionMismatch, "translation has wrong rank");
  for (const auto& t : trans_)
    if (!t.is_integral()) throw Error(Errc::InvalidInput, "translation not in Z^n(Phi^vee)");
}

WeylElement WeylElement::translation(const RootDatum& R, Point coroot_coords) {
  return WeylElement(R, 0, std::move(coroot_coords));
}

WeylElement WeylElement::finite(const RootDatum& R, int n, int fin) {
  return WeylElement(R, fin, zero_point(R.rank, n));
}

Point WeylElement::trans_root() const {
  Point r = trans_;
  for (int i = 0; i < R_->rank; ++i) r[i] *= R_->d[i];
  return r;
}

bool WeylElement::is_identity() const {
  if (fin_ != 0) return false;
  for (const auto& t : trans_)
    if (!t.is_zero()) return false;
  return true;
}

Point WeylElement::act(const Point& p) const {
  return apply_mat(R_->finite_weyl[fin_], p) + trans_root();
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  if (R_ != o.R_) throw Error(Errc::DatumMismatch, "composing elements of different Weyl groups");
  int f = R_->mult[fin_][o.fin_];
  Point t = apply_mat(R_->finite_weyl_co[fin_], o.trans_) + trans_;
  return WeylElement(*R_, f, std::move(t));
}

WeylElement WeylElement::inverse() const {
  int fi = R_->inverse[fin_];
  Point t = apply_mat(R_->finite_weyl_co[fi], trans_);
  for (auto& x : t) x = -x;
  return WeylElement(*R_, fi, std::move(t));
}

bool operator==(const WeylElement& a, const WeylElement& b) {
  return a.R_ == b.R_ && a.fin_ == b.fin_ && points_equal(a.trans_, b.trans_);
}

bool operator<(const WeylElement& a, const WeylElement& b) {
  if (a.fin_ != b.fin_) return a.fin_ < b.fin_;
  for (size_t i = 0; i < a.trans_.size(); ++i) {
    int c = compare(a.trans_[i], b.trans_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string WeylElement::to_string() const {
  std::ostringstream os;
  os << "{fin: " << fin_ << ", trans: " << point_to_string(trans_) << "}";
  return os.str();
}

WeylElement reflection(const RootDatum& R, const IntVec& a, const LinLex& k) {
  int idx = R.root_index(a);
  if (idx < 0) throw Error(Errc::NotARoot, "vector is not a root");
  if (!k.is_integral()) throw Error(Errc::InvalidInput, "reflection level must be integral");
  // k a^vee on the coroot basis: coefficient of alpha_i^vee is a_i (alpha_i,alpha_i)/(a,a).
  Q n2 = R.root_norm2(a);
  Point t = zero_point(R.rank, k.n());
  for (int i = 0; i < R.rank; ++i) t[i] = k * (Q(a[i]) * R.gram[i][i] / n2);
  return WeylElement(R, R.root_refl[idx], std::move(t));
}

WeylElement word_to_element(const RootDatum& R, int n, const std::string& word) {
  std::istringstream is(word);
  std::string tok;
  WeylElement g(R, n);
  const IntVec& theta = R.positive[static_cast<size_t>(R.highest)];
  while (is >> tok) {
    auto num = [&](size_t from) -> int {
      std::string s = tok.substr(from);
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw Error(Errc::InvalidInput, "bad word token '" + tok + "'");
      return std::stoi(s);
    };
    if (tok == "e" || tok == "1") continue;
    if (tok == "s") {
      g = g * WeylElement::finite(R, n, R.simple_refl[0]);
    } else if (tok[0] == 's') {
      int i = num(1);
      if (i < 1 || i > R.rank) throw Error(Errc::InvalidInput, "no simple reflection " + tok);
      g = g * WeylElement::finite(R, n, R.simple_refl[i - 1]);
    } else if (tok[0] == 'w') {
      int j = num(1);
      if (j < 1 || j > n) throw Error(Errc::InvalidInput, "no generator " + tok);
      g = g * reflection(R, theta, LinLex::unit(n, j));
    } else {
      throw Error(Errc::InvalidInput, "bad word token '" + tok + "'");
    }
  }
  return g;
}

std::vector<RelationResult> presentation_A1_level2() {
  const RootDatum& R = root_datum(RootType::A1);
  std::vector<RelationResult> out;
  for (const char* w : {"s s", "w1 w1", "w2 w2", "s w1 w2 s w1 w2"}) {
    WeylElement g = word_to_element(R, 2, w);
    std::string name = std::string(w) == "s w1 w2 s w1 w2" ? "(s w1 w2)^2" : std::string(w);
    if (name == "s s") name = "s^2";
    if (name == "w1 w1") name = "w1^2";
    if (name == "w2 w2") name = "w2^2";
    out.push_back({name + " = 1", g.is_identity(), g.to_string()});
  }
  return out;
}

bool verify_presentation_A1_level2() {
  for (const auto& r : presentation_A1_level2())
    if (!r.holds) return false;
  return true;
}

namespace {

// Floor of (a, w c0) for every positive root: identifies which strip
// between consecutive parallel walls holds the open chamber w C0.
std::vector<LinLex> strip_indices(const WeylElement& w) {
  const RootDatum& R = w.datum();
  Point c0 = zero_point(R.rank, w.n());
  for (int i = 0; i < R.rank; ++i) c0[i] = LinLex::real(w.n(), R.interior[i]);
  Point x = w.act(c0);
  std::vector<LinLex> r;
  for (const auto& a : R.positive) r.push_back(pair_root(R, a, x).floor());
  return r;
}

}  // namespace

bool bruhat_leq(const WeylElement& v, const WeylElement& w) {
  if (&v.datum() != &w.datum()) throw Error(Errc::DatumMismatch, "bruhat_leq");
  WeylElement one(v.datum(), w.n());
  auto k1 = strip_indices(one), kv = strip_indices(v), kw = strip_indices(w);
  for (size_t a = 0; a < k1.size(); ++a) {
    const LinLex& lo = k1[a] < kw[a] ? k1[a] : kw[a];
    const LinLex& hi = k1[a] < kw[a] ? kw[a] : k1[a];
    if (kv[a] < lo || kv[a] > hi) return false;
  }
  return true;
}

WeylElement random_weyl(const RootDatum& R, int n, Rng& rng, int bound) {
  int fin = static_cast<int>(rng.below(R.finite_weyl.size()));
  Point t = zero_point(R.rank, n);
  for (auto& x : t)
    for (int j = 1; j <= n; ++j) x[j] = Q(rng.range(-bound, bound));
  return WeylElement(R, fin, std::move(t));
}

}  // namespace babel
