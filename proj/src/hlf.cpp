#include "babel/hlf.hpp"

#include <algorithm>
#include <sstream>

#include "babel/error.hpp"
#include "babel/random.hpp"

namespace babel {

namespace {

thread_local Precision g_prec{};

int sat_add(int a, int b) {
  if (a >= kInf || b >= kInf) return kInf;
  long s = static_cast<long>(a) + b;
  return static_cast<int>(std::clamp<long>(s, kNegInf, kInf));
}

uint32_t reduce(long c, uint32_t q) {
  long r = c % static_cast<long>(q);
  return static_cast<uint32_t>(r < 0 ? r + q : r);
}

void check_q(uint32_t a, uint32_t b) {
  if (a != b) throw Error(Errc::InvalidInput, "mixing series over different residue fields");
}

std::string pow_str(const char* var, long e) {
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

Precision current_precision() { return g_prec; }

PrecisionScope::PrecisionScope(Precision p) : saved_(g_prec) {
  if (p.p1 < 1 || p.p2 < 1) throw Error(Errc::InvalidInput, "precision must be positive");
  g_prec = p;
}

PrecisionScope::~PrecisionScope() { g_prec = saved_; }

bool is_prime(uint32_t q) {
  if (q < 2) return false;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

uint32_t mod_inv(uint32_t a, uint32_t q) {
  if (a % q == 0) throw Error(Errc::ZeroDivision, "inverse of 0 in F_q");
  uint64_t r = 1, b = a % q, e = q - 2;
  while (e) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

// ---- Val2 ----

int compare(const Val2& a, const Val2& b) {
  if (a.inf || b.inf) return a.inf == b.inf ? 0 : (a.inf ? 1 : -1);
  if (a.j != b.j) return a.j < b.j ? -1 : 1;
  if (a.i != b.i) return a.i < b.i ? -1 : 1;
  return 0;
}

Val2 operator+(const Val2& a, const Val2& b) {
  if (a.inf || b.inf) return Val2::infinity();
  return {a.j + b.j, a.i + b.i, false};
}

Val2 operator-(const Val2& a) {
  if (a.inf) throw Error(Errc::InvalidInput, "negating an infinite valuation");
  return {-a.j, -a.i, false};
}

LinLex Val2::to_linlex() const {
  if (inf) throw Error(Errc::InvalidInput, "infinite valuation has no LinLex form");
  LinLex r(2);
  r[1] = Q(i);
  r[2] = Q(j);
  return r;
}

std::string Val2::to_string() const {
  if (inf) return "inf";
  return "(" + std::to_string(j) + "," + std::to_string(i) + ")";
}

// ---- LS1 ----

LS1 LS1::zero(uint32_t q, int prec) {
  LS1 r(q);
  r.prec_ = prec;
  return r;
}

LS1 LS1::monomial(uint32_t q, uint32_t c, int e) {
  LS1 r(q);
  r.lo_ = e;
  r.c_ = {c % q};
  r.normalize();
  return r;
}

LS1 LS1::from_terms(uint32_t q, const std::map<int, long>& terms, int prec) {
  LS1 r(q);
  r.prec_ = prec;
  if (!terms.empty()) {
    r.lo_ = terms.begin()->first;
    r.c_.assign(static_cast<size_t>(terms.rbegin()->first - r.lo_ + 1), 0);
    for (auto [e, c] : terms) r.c_[static_cast<size_t>(e - r.lo_)] = reduce(c, q);
  }
  r.normalize();
  return r;
}

void LS1::normalize() {
  if (!c_.empty() && hi() > prec_) {
    long keep = static_cast<long>(prec_) - lo_;
    c_.resize(static_cast<size_t>(std::max(0L, keep)));
  }
  size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  if (k) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
    lo_ += static_cast<int>(k);
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) lo_ = 0;
}

uint32_t LS1::coeff(int e) const {
  if (e < lo_ || e >= hi()) return 0;
  return c_[static_cast<size_t>(e - lo_)];
}

bool LS1::is_monomial() const { return c_.size() == 1; }

std::map<int, uint32_t> LS1::terms() const {
  std::map<int, uint32_t> m;
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k]) m[lo_ + static_cast<int>(k)] = c_[k];
  return m;
}

LS1 LS1::operator-() const {
  LS1 r = *this;
  for (auto& c : r.c_) c = c ? q_ - c : 0;
  return r;
}

LS1 LS1::operator+(const LS1& o) const {
  check_q(q_, o.q_);
  LS1 r(q_);
  r.prec_ = std::min(prec_, o.prec_);
  if (c_.empty() && o.c_.empty()) return r;
  int lo = c_.empty() ? o.lo_ : (o.c_.empty() ? lo_ : std::min(lo_, o.lo_));
  int top = std::min(std::max(c_.empty() ? lo : hi(), o.c_.empty() ? lo : o.hi()), r.prec_);
  if (top <= lo) return r;
  r.lo_ = lo;
  r.c_.assign(static_cast<size_t>(top - lo), 0);
  for (int e = lo; e < top; ++e) r.c_[static_cast<size_t>(e - lo)] = (coeff(e) + o.coeff(e)) % q_;
  r.normalize();
  return r;
}

LS1 LS1::operator-(const LS1& o) const { return *this + (-o); }

LS1 LS1::operator*(const LS1& o) const {
  check_q(q_, o.q_);
  if ((c_.empty() && exact()) || (o.c_.empty() && o.exact())) return zero(q_);
  LS1 r(q_);
  r.prec_ = std::min(sat_add(prec_, o.val_bound()), sat_add(o.prec_, val_bound()));
  if (c_.empty() || o.c_.empty()) return r;
  r.lo_ = lo_ + o.lo_;
  long len = std::min<long>(static_cast<long>(c_.size() + o.c_.size() - 1),
                            static_cast<long>(r.prec_) - r.lo_);
  if (len <= 0) {
    r.normalize();
    return r;
  }
  std::vector<uint64_t> acc(static_cast<size_t>(len), 0);
  for (size_t a = 0; a < c_.size() && a < acc.size(); ++a) {
    if (!c_[a]) continue;
    for (size_t b = 0; b < o.c_.size() && a + b < acc.size(); ++b)
      acc[a + b] = (acc[a + b] + static_cast<uint64_t>(c_[a]) * o.c_[b]) % q_;
  }
  r.c_.assign(acc.begin(), acc.end());
  r.normalize();
  return r;
}

LS1 LS1::scaled(uint32_t s) const {
  LS1 r = *this;
  for (auto& c : r.c_) c = static_cast<uint32_t>(static_cast<uint64_t>(c) * (s % q_) % q_);
  r.normalize();
  return r;
}

LS1 LS1::shifted(int e) const {
  LS1 r = *this;
  if (!r.c_.empty()) r.lo_ += e;
  r.prec_ = sat_add(prec_, e);
  return r;
}

LS1 LS1::inverse() const {
  if (c_.empty()) throw Error(Errc::ZeroDivision, "inverse of a series that is zero to precision");
  int v = lo_;
  uint32_t c0inv = mod_inv(c_.front(), q_);
  int rel;
  if (exact()) {
    if (is_monomial()) return monomial(q_, c0inv, -v);
    rel = g_prec.p1;
  } else {
    rel = prec_ - v;
  }
  // u = x t^-v / c0 = 1 + u_1 t + ...; b = u^-1 by the triangular recurrence.
  std::vector<uint64_t> u(static_cast<size_t>(rel), 0);
  for (int k = 0; k < rel && k < static_cast<int>(c_.size()); ++k)
    u[static_cast<size_t>(k)] = static_cast<uint64_t>(c_[static_cast<size_t>(k)]) * c0inv % q_;
  std::vector<uint64_t> b(static_cast<size_t>(rel), 0);
  b[0] = 1;
  for (int k = 1; k < rel; ++k) {
    uint64_t s = 0;
    for (int m = 1; m <= k; ++m)
      if (u[static_cast<size_t>(m)]) s = (s + u[static_cast<size_t>(m)] * b[static_cast<size_t>(k - m)]) % q_;
    b[static_cast<size_t>(k)] = (q_ - s) % q_;
  }
  LS1 r(q_);
  r.lo_ = -v;
  r.prec_ = -v + rel;
  r.c_.resize(b.size());
  for (size_t k = 0; k < b.size(); ++k) r.c_[k] = static_cast<uint32_t>(b[k] * c0inv % q_);
  r.normalize();
  return r;
}

LS1 LS1::truncated(int prec) const {
  LS1 r = *this;
  r.prec_ = std::min(prec_, prec);
  r.normalize();
  return r;
}

std::string LS1::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (!c_[k]) continue;
    int e = lo_ + static_cast<int>(k);
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << c_[k];
    } else {
      if (c_[k] != 1) os << c_[k] << "*";
      os << pow_str("t1", e);
    }
  }
  if (!exact()) {
    if (!first) os << " + ";
    first = false;
    os << "O(" << pow_str("t1", prec_) << ")";
  }
  if (first) os << "0";
  return os.str();
}

// ---- LS2 ----

LS2 LS2::zero(uint32_t q, int prec2) {
  LS2 r(q);
  r.prec2_ = prec2;
  return r;
}

LS2 LS2::constant(uint32_t q, long c) { return monomial(q, c, 0, 0); }

LS2 LS2::monomial(uint32_t q, long c, int i, int j) {
  LS2 r(q);
  r.lv_[j] = LS1::monomial(q, reduce(c, q), i);
  r.normalize();
  return r;
}

LS2 LS2::from_level(const LS1& x, int j) {
  LS2 r(x.q());
  r.lv_[j] = x;
  r.normalize();
  return r;
}

LS2 LS2::from_levels(uint32_t q, std::map<int, LS1> levels, int prec2) {
  LS2 r(q);
  r.lv_ = std::move(levels);
  r.prec2_ = prec2;
  r.normalize();
  return r;
}

LS2 LS2::from_terms(uint32_t q, const std::map<std::pair<int, int>, long>& terms) {
  std::map<int, std::map<int, long>> by_level;
  for (const auto& [ji, c] : terms) by_level[ji.first][ji.second] += c;
  LS2 r(q);
  for (const auto& [j, t] : by_level) r.lv_[j] = LS1::from_terms(q, t);
  r.normalize();
  return r;
}

void LS2::normalize() {
  for (auto it = lv_.begin(); it != lv_.end();) {
    if (it->first >= prec2_ || (it->second.is_zero() && it->second.exact()))
      it = lv_.erase(it);
    else
      ++it;
  }
}

LS1 LS2::level(int j) const {
  auto it = lv_.find(j);
  if (it != lv_.end()) return it->second;
  if (j >= prec2_) throw Error(Errc::PrecisionExhausted, "t2 level beyond precision");
  return LS1::zero(q_);
}

bool LS2::exact() const {
  if (prec2_ < kInf) return false;
  for (const auto& [j, x] : lv_)
    if (!x.exact()) return false;
  return true;
}

bool LS2::is_zero_to_precision() const {
  for (const auto& [j, x] : lv_)
    if (!x.is_zero()) return false;
  return true;
}

ValInfo LS2::val_info() const {
  for (const auto& [j, x] : lv_) {
    if (!x.is_zero()) return {{j, x.lo(), false}, true};
    return {{j, x.prec(), false}, false};
  }
  if (prec2_ < kInf) return {{prec2_, kNegInf, false}, false};
  return {Val2::infinity(), true};
}

Val2 LS2::valuation() const {
  ValInfo v = val_info();
  if (v.determined) return v.lower;
  if (is_zero_to_precision()) throw Error(Errc::ZeroToPrecision, "element is zero to precision");
  throw Error(Errc::PrecisionExhausted, "leading term not determined at current precision");
}

long LS2::val2_lower_bound() const { return lv_.empty() ? prec2_ : lv_.begin()->first; }

LS2 LS2::leading_monomial() const {
  Val2 v = valuation();
  if (v.inf) throw Error(Errc::ZeroDivision, "zero has no leading monomial");
  return monomial(q_, lv_.begin()->second.leading(), static_cast<int>(v.i), static_cast<int>(v.j));
}

uint32_t LS2::leading_coeff() const {
  Val2 v = valuation();
  if (v.inf) throw Error(Errc::ZeroDivision, "zero has no leading coefficient");
  return lv_.begin()->second.leading();
}

LS2 LS2::operator-() const {
  LS2 r = *this;
  for (auto& [j, x] : r.lv_) x = -x;
  return r;
}

LS2 LS2::operator+(const LS2& o) const {
  check_q(q_, o.q_);
  LS2 r(q_);
  r.prec2_ = std::min(prec2_, o.prec2_);
  for (const auto& [j, x] : lv_)
    if (j < r.prec2_) r.lv_[j] = o.lv_.count(j) ? x + o.lv_.at(j) : x;
  for (const auto& [j, x] : o.lv_)
    if (j < r.prec2_ && !lv_.count(j)) r.lv_[j] = x;
  r.normalize();
  return r;
}

LS2 LS2::operator-(const LS2& o) const { return *this + (-o); }

LS2 LS2::operator*(const LS2& o) const {
  check_q(q_, o.q_);
  if (is_exact_zero() || o.is_exact_zero()) return zero(q_);
  LS2 r(q_);
  r.prec2_ = std::min(sat_add(prec2_, static_cast<int>(o.val2_lower_bound())),
                      sat_add(o.prec2_, static_cast<int>(val2_lower_bound())));
  for (const auto& [i, x] : lv_)
    for (const auto& [j, y] : o.lv_) {
      if (i + j >= r.prec2_) break;
      auto it = r.lv_.find(i + j);
      if (it == r.lv_.end())
        r.lv_.emplace(i + j, x * y);
      else
        it->second = it->second + x * y;
    }
  r.normalize();
  return r;
}

LS2 LS2::scaled(long s) const {
  LS2 r = *this;
  uint32_t c = reduce(s, q_);
  for (auto& [j, x] : r.lv_) x = x.scaled(c);
  r.normalize();
  return r;
}

LS2 LS2::shifted(int i, int j) const {
  LS2 r(q_);
  r.prec2_ = sat_add(prec2_, j);
  for (const auto& [k, x] : lv_) r.lv_[k + j] = x.shifted(i);
  r.normalize();
  return r;
}

LS2 LS2::inverse() const {
  if (is_zero_to_precision())
    throw Error(Errc::ZeroDivision, "inverse of an element that is zero to precision");
  Val2 v = valuation();
  int j0 = static_cast<int>(v.j);
  LS1 x0inv = lv_.begin()->second.inverse();
  // x = t2^j0 X0 (1 + z) with z = sum_{k>0} (x_{j0+k} / X0) t2^k.
  LS2 z(q_);
  for (const auto& [j, x] : lv_)
    if (j > j0) z.lv_[j - j0] = x * x0inv;
  int rel;
  if (prec2_ < kInf)
    rel = prec2_ - j0;
  else
    rel = z.lv_.empty() ? kInf : g_prec.p2;
  z.prec2_ = rel;
  z.normalize();
  LS2 one = LS2::one(q_).truncated(rel);
  LS2 y = one;
  if (rel < kInf)
    for (int k = 1; k < rel; ++k) y = one - z * y;
  return (y * from_level(x0inv)).shifted(0, -j0);
}

LS2 LS2::truncated(int prec2) const {
  LS2 r = *this;
  r.prec2_ = std::min(prec2_, prec2);
  r.normalize();
  return r;
}

LS1 LS2::residue() const { return residue_to_F1(*this); }

std::string LS2::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, x] : lv_) {
    if (!first) os << " + ";
    first = false;
    if (j == 0) {
      os << x.to_string();
    } else {
      os << pow_str("t2", j) << "*(" << x.to_string() << ")";
    }
  }
  if (prec2_ < kInf) {
    if (!first) os << " + ";
    first = false;
    os << "O(" << pow_str("t2", prec2_) << ")";
  }
  if (first) os << "0";
  return os.str();
}

// ---- predicates ----

bool val_at_least(const LS2& x, const Val2& bound) {
  ValInfo v = x.val_info();
  if (v.lower >= bound) return true;
  if (v.determined) return false;
  throw Error(Errc::PrecisionExhausted, "valuation comparison undecidable at current precision");
}

bool is_unit_OF(const LS2& x) {
  ValInfo v = x.val_info();
  if (v.determined) return v.lower == Val2{0, 0};
  if (v.lower > Val2{0, 0}) return false;
  throw Error(Errc::PrecisionExhausted, "unit test undecidable at current precision");
}

RingFlags ring_membership(const LS2& x) {
  return {val_at_least(x, {0, 0}), val_at_least(x, {0, kNegInf})};
}

LS1 residue_to_F1(const LS2& x) {
  if (!val_at_least(x, {0, kNegInf})) throw Error(Errc::NotInScrOF, "element has negative t2-order");
  if (x.prec2() <= 0) throw Error(Errc::PrecisionExhausted, "residue beyond t2 precision");
  return x.level(0);
}

bool agrees(const LS2& a, const LS2& b) {
  LS2 d = a - b;
  if (!d.is_zero_to_precision()) return false;
  for (const auto& [j, x] : b.levels()) {
    if (x.is_zero()) continue;
    if (j >= d.prec2()) return false;
    auto it = d.levels().find(j);
    if (it != d.levels().end() && it->second.prec() <= x.lo()) return false;
  }
  return true;
}

bool dist_leq(const LS2& x, const LS2& y, const LS2& z) {
  ValInfo a = (x - y).val_info(), b = (x - z).val_info();
  if (b.determined && a.lower >= b.lower) return true;
  if (a.determined && a.lower < b.lower) return false;
  throw Error(Errc::PrecisionExhausted, "distance comparison undecidable at current precision");
}

// ---- sampling ----

LS2 random_series(uint32_t q, const SeriesRange& r, Precision p, Rng& rng) {
  if (r.hi < r.lo) throw Error(Errc::InvalidInput, "empty valuation range");
  long j0 = rng.range(r.lo.j, r.hi.j);
  long ilo = j0 == r.lo.j ? std::max(r.lo.i, -8L) : -8;
  long ihi = j0 == r.hi.j ? std::min(r.hi.i, 8L) : 8;
  if (j0 == r.lo.j && r.lo.i > ihi) ihi = r.lo.i;
  if (j0 == r.hi.j && r.hi.i < ilo) ilo = r.hi.i;
  long i0 = rng.range(ilo, ihi);
  LS2 x = LS2::zero(q, static_cast<int>(j0) + p.p2);
  for (int k = 0; k < p.p2; ++k) {
    int start = static_cast<int>(k == 0 ? i0 : rng.range(i0 - 2, i0 + 2));
    std::map<int, long> t;
    for (int e = 0; e < p.p1; ++e) {
      long c = (k == 0 && e == 0 && r.unit) ? rng.range(1, q - 1) : rng.range(0, q - 1);
      if (c) t[start + e] = c;
    }
    x = x + LS2::from_level(LS1::from_terms(q, t, start + p.p1), static_cast<int>(j0) + k);
  }
  return x;
}

LS2 random_poly(uint32_t q, Rng& rng, int terms, int imin, int imax, int jmin, int jmax) {
  std::map<std::pair<int, int>, long> t;
  for (int k = 0; k < terms; ++k)
    t[{static_cast<int>(rng.range(jmin, jmax)), static_cast<int>(rng.range(imin, imax))}] +=
        rng.range(1, q - 1);
  return LS2::from_terms(q, t);
}

}  // namespace babel
