#pragma once

// Truncated arithmetic in F = F_q((t1))((t2)), q prime.

#include <climits>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "babel/lexring.hpp"

namespace babel {

class Rng;

constexpr int kInf = INT_MAX / 4;   // precision of an exact value
constexpr int kNegInf = -kInf;

// Relative precisions used when an exact value has an infinite inverse:
// p1 coefficients of t1 per level, p2 levels of t2.
struct Precision {
  int p1 = 12;
  int p2 = 6;
};

Precision current_precision();

// Sets the thread's working precision for its lifetime.
class PrecisionScope {
 public:
  explicit PrecisionScope(Precision p);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  Precision saved_;
};

// Rank-2 valuation (j, i) <-> j w2 + i w1, ordered lexicographically.
struct Val2 {
  long j = 0;
  long i = 0;
  bool inf = false;

  static Val2 infinity() { return {0, 0, true}; }
  LinLex to_linlex() const;  // requires finite
  std::string to_string() const;

  friend int compare(const Val2& a, const Val2& b);
  friend bool operator==(const Val2& a, const Val2& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Val2& a, const Val2& b) { return compare(a, b) != 0; }
  friend bool operator<(const Val2& a, const Val2& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Val2& a, const Val2& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Val2& a, const Val2& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Val2& a, const Val2& b) { return compare(a, b) >= 0; }
  friend Val2 operator+(const Val2& a, const Val2& b);
  friend Val2 operator-(const Val2& a);
};

// Element of F_q((t1)) known modulo t1^prec: sum c[k] t1^(lo+k).
class LS1 {
 public:
  LS1() = default;
  explicit LS1(uint32_t q) : q_(q) {}
  static LS1 zero(uint32_t q, int prec = kInf);
  static LS1 monomial(uint32_t q, uint32_t c, int e);
  static LS1 from_terms(uint32_t q, const std::map<int, long>& terms, int prec = kInf);

  uint32_t q() const { return q_; }
  int lo() const { return lo_; }
  int prec() const { return prec_; }
  bool exact() const { return prec_ >= kInf; }
  bool is_zero() const { return c_.empty(); }  // zero to precision (exactly zero if exact())
  uint32_t coeff(int e) const;
  uint32_t leading() const { return c_.front(); }
  int hi() const { return lo_ + static_cast<int>(c_.size()); }  // one past last stored exponent
  bool is_monomial() const;
  // Lower bound of the valuation: lo if nonzero, else prec.
  int val_bound() const { return c_.empty() ? prec_ : lo_; }
  std::map<int, uint32_t> terms() const;

  LS1 operator-() const;
  LS1 operator+(const LS1& o) const;
  LS1 operator-(const LS1& o) const;
  LS1 operator*(const LS1& o) const;
  LS1 scaled(uint32_t s) const;
  LS1 shifted(int e) const;  // multiply by t1^e
  LS1 inverse() const;
  LS1 truncated(int prec) const;

  std::string to_string() const;

 private:
  void normalize();
  uint32_t q_ = 5;
  int lo_ = 0;
  std::vector<uint32_t> c_;
  int prec_ = kInf;
};

// Lower bound and (when determined) exact valuation of a truncated element.
struct ValInfo {
  Val2 lower;          // valuation >= lower
  bool determined;     // valuation == lower
};

// Element of F known modulo t2^prec2, each stored level an LS1.
// Levels below prec2 that are not stored are exactly zero.
class LS2 {
 public:
  LS2() = default;
  explicit LS2(uint32_t q) : q_(q) {}
  static LS2 zero(uint32_t q, int prec2 = kInf);
  static LS2 one(uint32_t q) { return constant(q, 1); }
  static LS2 constant(uint32_t q, long c);
  static LS2 monomial(uint32_t q, long c, int i, int j);  // c t1^i t2^j
  static LS2 from_level(const LS1& x, int j = 0);
  // Exact Laurent polynomial from (j, i) -> coefficient.
  static LS2 from_terms(uint32_t q, const std::map<std::pair<int, int>, long>& terms);
  static LS2 from_levels(uint32_t q, std::map<int, LS1> levels, int prec2 = kInf);

  uint32_t q() const { return q_; }
  int prec2() const { return prec2_; }
  const std::map<int, LS1>& levels() const { return lv_; }
  LS1 level(int j) const;  // zero (exact) if absent below prec2
  bool exact() const;
  bool is_zero_to_precision() const;
  bool is_exact_zero() const { return exact() && is_zero_to_precision(); }

  ValInfo val_info() const;
  Val2 valuation() const;  // throws ZeroToPrecision / PrecisionExhausted
  Val2 val_lower_bound() const { return val_info().lower; }
  long val2_lower_bound() const;  // t2-order lower bound
  // Leading monomial c t1^i t2^j as an exact element; needs a determined valuation.
  LS2 leading_monomial() const;
  uint32_t leading_coeff() const;

  LS2 operator-() const;
  LS2 operator+(const LS2& o) const;
  LS2 operator-(const LS2& o) const;
  LS2 operator*(const LS2& o) const;
  LS2 scaled(long s) const;
  LS2 shifted(int i, int j) const;  // multiply by t1^i t2^j
  LS2 inverse() const;
  LS2 truncated(int prec2) const;

  // Residue modulo t2 (the level-0 series).
  LS1 residue() const;

  std::string to_string() const;

 private:
  void normalize();
  uint32_t q_ = 5;
  std::map<int, LS1> lv_;
  int prec2_ = kInf;
};

struct RingFlags {
  bool in_OF;
  bool in_ScrOF;
};

// Decides whether v(x) >= bound; throws PrecisionExhausted when undecidable.
bool val_at_least(const LS2& x, const Val2& bound);
bool is_unit_OF(const LS2& x);  // v(x) == (0,0)
RingFlags ring_membership(const LS2& x);
LS1 residue_to_F1(const LS2& x);  // throws NotInScrOF

// a == b to the precision of a - b, and that precision reaches past the
// leading t1-term of every nonzero t2-level of b (so the agreement is not vacuous).
bool agrees(const LS2& a, const LS2& b);

// Ultrametric comparison d(x,y) <= d(x,z) iff v(x-y) >= v(x-z).
bool dist_leq(const LS2& x, const LS2& y, const LS2& z);

uint32_t mod_inv(uint32_t a, uint32_t q);
bool is_prime(uint32_t q);

struct SeriesRange {
  Val2 lo{0, 0};
  Val2 hi{0, 0};
  bool unit = true;  // leading coefficient nonzero at exactly the drawn valuation
};

// Random element: the t2-order j is uniform in [lo.j, hi.j], then the
// t1-order i is uniform in the bounds the range allows at that j (clamped to
// [-8, 8] where unbounded). Level j holds p1 uniform coefficients from t1^i
// (the first nonzero when unit); each of the next p2 - 1 levels holds p1
// uniform coefficients from a start uniform in [i - 2, i + 2].
LS2 random_series(uint32_t q, const SeriesRange& r, Precision p, Rng& rng);
// Random exact Laurent polynomial with terms t1^i t2^j, i in [imin,imax], j in [jmin,jmax].
LS2 random_poly(uint32_t q, Rng& rng, int terms, int imin, int imax, int jmin, int jmax);

}  // namespace babel
