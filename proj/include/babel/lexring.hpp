#pragma once

// Finite-support model of the n-fold hyper-real line: polynomials in
// commuting symbols w2..wn (w1 = 1) with rational coefficients, ordered
// lexicographically with the highest symbol dominating.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "babel/error.hpp"

namespace babel {

using Q = mpq_class;

enum class Order { Less = -1, Equal = 0, Greater = 1 };

inline Order order_of(int s) { return s < 0 ? Order::Less : (s > 0 ? Order::Greater : Order::Equal); }
const char* order_name(Order o);

// Exponent vector; slot k holds the exponent of w_{k+2}. Trailing zeros are
// trimmed, so the empty monomial is the constant 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<uint32_t> exps);

  // w_j^e for j >= 2; j == 1 gives the constant monomial.
  static Monomial var(int j, uint32_t e = 1);

  uint32_t exp(int j) const;  // exponent of w_j (j >= 2)
  const std::vector<uint32_t>& exps() const { return e_; }
  bool is_one() const { return e_.empty(); }
  int top_var() const { return e_.empty() ? 1 : static_cast<int>(e_.size()) + 1; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires divides
  bool all_even() const;
  Monomial half() const;

  friend int compare(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

 private:
  void trim();
  std::vector<uint32_t> e_;
};

class LinLex;

class LexPoly {
 public:
  struct Term {
    Monomial mono;
    Q coeff;
  };

  LexPoly() = default;
  LexPoly(const Q& c);  // NOLINT: implicit constant embedding
  LexPoly(long c) : LexPoly(Q(c)) {}  // NOLINT
  LexPoly(int c) : LexPoly(Q(c)) {}   // NOLINT

  static LexPoly omega(int j);  // w_j; omega(1) == 1
  static LexPoly term(const Monomial& m, const Q& c);
  static LexPoly from_terms(std::vector<Term> terms);  // any order, merges duplicates

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int sign() const;
  const Term& leading() const { return t_.front(); }
  Q coeff(const Monomial& m) const;

  // Largest j such that w_j occurs; 1 for constants (including 0).
  int level() const;
  int degree() const;  // total degree
  bool is_linear() const { return degree() <= 1; }
  std::optional<LinLex> to_linlex(int n) const;

  LexPoly operator-() const;
  LexPoly& operator+=(const LexPoly& o);
  LexPoly& operator-=(const LexPoly& o);
  LexPoly& operator*=(const LexPoly& o);
  LexPoly& operator*=(const Q& s);

  friend LexPoly operator+(LexPoly a, const LexPoly& b) { return a += b; }
  friend LexPoly operator-(LexPoly a, const LexPoly& b) { return a -= b; }
  friend LexPoly operator*(const LexPoly& a, const LexPoly& b);
  friend LexPoly operator*(LexPoly a, const Q& s) { return a *= s; }
  friend LexPoly operator*(const Q& s, LexPoly a) { return a *= s; }

  friend bool operator==(const LexPoly& a, const LexPoly& b);
  friend bool operator!=(const LexPoly& a, const LexPoly& b) { return !(a == b); }
  friend bool operator<(const LexPoly& a, const LexPoly& b);
  friend bool operator>(const LexPoly& a, const LexPoly& b) { return b < a; }
  friend bool operator<=(const LexPoly& a, const LexPoly& b) { return !(b < a); }
  friend bool operator>=(const LexPoly& a, const LexPoly& b) { return !(a < b); }

  std::string to_string() const;

 private:
  std::vector<Term> t_;  // strictly descending monomials, nonzero coefficients
};

Order lex_cmp(const LexPoly& p, const LexPoly& q);
inline int level_of(const LexPoly& p) { return p.level(); }

// sum r_i w_i with r_1 the real part; size() == n.
class LinLex {
 public:
  LinLex() = default;
  explicit LinLex(int n) : c_(static_cast<size_t>(n)) {}
  explicit LinLex(std::vector<Q> coeffs) : c_(std::move(coeffs)) {}

  static LinLex real(int n, const Q& r);
  static LinLex unit(int n, int j, const Q& r = 1);  // r * w_j

  int n() const { return static_cast<int>(c_.size()); }
  const Q& operator[](int j) const { return c_[static_cast<size_t>(j - 1)]; }  // 1-based level
  Q& operator[](int j) { return c_[static_cast<size_t>(j - 1)]; }
  const std::vector<Q>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_integral() const;
  bool integral_above(int level) const;  // coefficients at levels > level are integers
  bool zero_above(int level) const;
  int level() const;  // highest nonzero level, 1 if zero
  int sign() const;

  LinLex floor() const;  // floors the real part only
  LinLex truncated_above(int level) const;  // zero out levels > level
  LinLex resized(int n) const;

  LexPoly to_poly() const;

  LinLex operator-() const;
  LinLex& operator+=(const LinLex& o);
  LinLex& operator-=(const LinLex& o);
  LinLex& operator*=(const Q& s);
  friend LinLex operator+(LinLex a, const LinLex& b) { return a += b; }
  friend LinLex operator-(LinLex a, const LinLex& b) { return a -= b; }
  friend LinLex operator*(LinLex a, const Q& s) { return a *= s; }
  friend LinLex operator*(const Q& s, LinLex a) { return a *= s; }

  friend int compare(const LinLex& a, const LinLex& b);
  friend bool operator==(const LinLex& a, const LinLex& b) { return compare(a, b) == 0; }
  friend bool operator!=(const LinLex& a, const LinLex& b) { return compare(a, b) != 0; }
  friend bool operator<(const LinLex& a, const LinLex& b) { return compare(a, b) < 0; }
  friend bool operator>(const LinLex& a, const LinLex& b) { return compare(a, b) > 0; }
  friend bool operator<=(const LinLex& a, const LinLex& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const LinLex& a, const LinLex& b) { return compare(a, b) >= 0; }

  std::string to_string() const;

 private:
  std::vector<Q> c_;
};

Q floor_q(const Q& x);
Q ceil_q(const Q& x);
bool is_integer(const Q& x);

// Formal square root of a non-negative LexPoly.
struct SqrtExpr {
  LexPoly radicand;

  explicit SqrtExpr(LexPoly r);
  static SqrtExpr of_square(const LexPoly& p);  // sqrt(p^2), p >= 0 not required

  std::optional<LexPoly> exact() const;
  std::string to_string() const;
};

// Exact square root when the radicand is a perfect square in Q[w2..wn]
// with non-negative root; nullopt otherwise.
std::optional<LexPoly> exact_sqrt(const LexPoly& p);

Order sqrt_cmp(const SqrtExpr& a, const SqrtExpr& b);
// Order of sqrt(a) + sqrt(b) against sqrt(c).
Order sqrt_sum_cmp(const SqrtExpr& a, const SqrtExpr& b, const SqrtExpr& c);

std::string q_to_string(const Q& q);
Q q_from_string(const std::string& s);

}  // namespace babel
