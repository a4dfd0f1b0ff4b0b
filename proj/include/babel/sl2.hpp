#pragma once

// SL2 over F = F_q((t1))((t2)) and its action on the level-2 building of type A1.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "babel/error.hpp"
#include "babel/hlf.hpp"
#include "babel/weyl.hpp"

namespace babel {

class Rng;

struct Mat2 {
  LS2 a, b, c, d;

  static Mat2 identity(uint32_t q);
  static Mat2 upper(const LS2& x);                 // [[1,x],[0,1]]
  static Mat2 lower(const LS2& y);                 // [[1,0],[y,1]]
  static Mat2 diag(const LS2& x);                  // diag(x, 1/x)
  static Mat2 antidiag(const LS2& y);              // [[0,y],[-1/y,0]]
  static Mat2 weyl_s(uint32_t q);                  // [[0,1],[-1,0]]
  static Mat2 rep_w1(uint32_t q);                  // [[0,-1/t1],[t1,0]]
  static Mat2 rep_w2(uint32_t q);                  // [[0,-1/t2],[t2,0]]
  // diag(t^v, t^-v) with t^(j,i) = t1^i t2^j.
  static Mat2 torus(uint32_t q, const Val2& v);

  uint32_t q() const { return a.q(); }
  Mat2 operator*(const Mat2& o) const;
  Mat2 inverse() const;  // adjugate; assumes det 1
  LS2 det() const;
  std::string to_string() const;
};

// Entry-wise agreement to the tracked precision (see agrees()).
bool mat_agrees(const Mat2& x, const Mat2& y);
bool det_is_one(const Mat2& g);

// Subgroup predicates; they throw PrecisionExhausted when undecidable.
bool in_B(const Mat2& g);
bool in_N(const Mat2& g);
bool in_H(const Mat2& g);
bool in_K(const Mat2& g);
bool in_S1(const Mat2& g);
bool in_S2(const Mat2& g);
bool in_SL2_ScrOF(const Mat2& g);
// Stabiliser of the apartment vertex x (root coordinate, integral LinLex of level <= 2):
// v(a), v(d) >= 0, v(b) >= -x, v(c) >= x.
bool in_vertex_fixer(const Mat2& g, const LinLex& x);

enum class SubgroupTag { B, N, K, S1, S2, H };
bool in_subgroup(SubgroupTag tag, const Mat2& g);
const char* subgroup_name(SubgroupTag tag);

// nu: N -> W_2(A1). diag(x, 1/x) is translation by -2 v(x); [[0,y],[z,0]] is x -> -x - 2 v(y).
WeylElement nu_monomial(const Mat2& m);
// Monomial representative of a label (inverse of nu up to H).
Mat2 label_rep(uint32_t q, const WeylElement& w);

struct BruhatResult {
  Mat2 b, n, bp;
  WeylElement label;
};
struct CartanResult {
  Mat2 k, t, kp;  // t = diag(t^m, t^-m)
  Val2 m;         // m2 w2 + m1 w1, lex >= 0
};
struct KapranovResult {
  Mat2 left, n, right;
};
enum class KapranovPair { P01, P12 };

WeylElement cell_of(const Mat2& g);
BruhatResult bruhat_decompose(const Mat2& g);
CartanResult cartan_decompose(const Mat2& g);
KapranovResult kapranov_decompose(const Mat2& g, KapranovPair pair);

// 2(m2 w2 + m1 w1) for the Cartan m of g^-1 h.
LinLex building_dist(const Mat2& g, const Mat2& h);
// Vertex n.o of the standard apartment, for g = b n b'.
Point retract_rho(const Mat2& g);
// Matrix whose action sends o to the even vertex x.
Mat2 vertex_matrix(uint32_t q, const LinLex& x);

// Runs f, doubling the working precision up to `tries` times on PrecisionExhausted.
template <class F>
auto with_precision_retry(F&& f, int tries = 3) -> decltype(f()) {
  Precision p = current_precision();
  for (int k = 0;; ++k) {
    try {
      PrecisionScope scope(p);
      return f();
    } catch (const Error& e) {
      if (e.code() != Errc::PrecisionExhausted || k >= tries) throw;
      p = {2 * p.p1, 2 * p.p2};
    }
  }
}

// ---- residue ----

struct Mat1 {
  LS1 a, b, c, d;
  Mat1 operator*(const Mat1& o) const;
  LS1 det() const;
  std::string to_string() const;
};
bool mat1_agrees(const Mat1& x, const Mat1& y);
Mat1 residue_sl2(const Mat2& g);   // throws NotInScrOF
Mat2 embed_level0(const Mat1& g);
// Level-1 Iwahori cell of g in SL2(F_q((t1))), same elimination engine.
WeylElement residue_bruhat(const Mat1& g);

// ---- sampling ----

struct Sl2Sampler {
  uint32_t q = 5;
  int imin = -3, imax = 3;  // t1 exponents of polynomial entries
  int jmin = -1, jmax = 1;  // t2 exponents
  int terms = 3;
  int factors = 4;
  // Units of O_F are constants when set; otherwise a quarter are 1 + t1*poly, whose
  // inverses are truncated series.
  bool exact_units = false;
};

Mat2 random_sl2(const Sl2Sampler& s, Rng& rng);
Mat2 random_B(const Sl2Sampler& s, Rng& rng);
Mat2 random_K(const Sl2Sampler& s, Rng& rng);
Mat2 random_SL2_ScrOF(const Sl2Sampler& s, Rng& rng);
Mat1 random_sl2_F1(const Sl2Sampler& s, Rng& rng);
Mat2 random_in_cell(const Sl2Sampler& s, const WeylElement& w, Rng& rng);
// Residue-preserving lift into SL2(ScrO_F).
Mat2 lift_from_F1(const Mat1& g, const Sl2Sampler& s, Rng& rng);
// Element of the fixer of both vertices (even vertices, x <= y as LinLex).
Mat2 random_in_fixers(const Sl2Sampler& s, const LinLex& x, const LinLex& y, Rng& rng);

// ---- reports ----

struct CellFamilyTarget {
  char kind;   // 'a', 'b' or 'c'
  long param;
  LinLex K;    // the label is x -> K - x
};

bool in_w2w2_family(const WeylElement& label);
std::vector<CellFamilyTarget> w2w2_witness_targets();

struct WitnessResult {
  CellFamilyTarget target;
  bool found;
  Mat2 g1, g2;  // valid only when found
  std::string method;
};

struct CellProductReport {
  int samples = 0;
  int in_family = 0;
  std::vector<std::string> counterexamples;
  std::vector<WitnessResult> witnesses;
  std::map<std::string, int> label_counts;
  bool ok() const;
};

CellProductReport verify_cell_product_w2w2(int samples, uint64_t seed, uint32_t q = 5,
                                           int witness_search = 400);

struct FixerReport {
  int samples = 0;
  int passed = 0;
  std::vector<std::string> failures;
  std::string assumption;
  bool ok() const { return failures.empty() && passed == samples; }
};

FixerReport fixer_product_check(const LinLex& x, const LinLex& y, const LinLex& z,
                                const LinLex& u, int samples, uint64_t seed, uint32_t q = 5);
// x = 0, y = 2, z = 2 w2 - 2, u = 2 w2: K(w2Kw2) cap (w1Kw1)(w2w1Kw1w2)
// contains (K cap w1Kw1)(w2w1Kw1w2 cap w2Kw2).
FixerReport fixer_example_instance(int samples, uint64_t seed, uint32_t q = 5);

}  // namespace babel
