#pragma once

#include <string>
#include <vector>

#include "babel/rootsystem.hpp"

namespace babel {

// Element of W_n(Phi) = W(Phi) x| Z^n(Phi^vee) in normal form: p -> fin(p) + trans.
// trans is stored on the simple-coroot basis with integral LinLex coefficients.
class WeylElement {
 public:
  WeylElement(const RootDatum& R, int n);  // identity
  WeylElement(const RootDatum& R, int fin, Point trans);

  static WeylElement translation(const RootDatum& R, Point coroot_coords);
  static WeylElement finite(const RootDatum& R, int n, int fin);

  const RootDatum& datum() const { return *R_; }
  int n() const { return n_; }
  int fin() const { return fin_; }
  const Point& trans() const { return trans_; }        // coroot coordinates
  Point trans_root() const;                            // same vector on root coordinates
  bool is_identity() const;
  bool is_translation() const { return fin_ == 0; }

  Point act(const Point& p) const;
  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b);
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
  // Tie-break order: finite index, then translation coordinates lexicographically.
  friend bool operator<(const WeylElement& a, const WeylElement& b);

  std::string to_string() const;

 private:
  const RootDatum* R_;
  int n_;
  int fin_;
  Point trans_;
};

// s_{a,k}: v -> v - 2((a,v) - k)/(a,a) a, for k integral.
WeylElement reflection(const RootDatum& R, const IntVec& a, const LinLex& k);

// Evaluates a space-separated word: s (= s1), s1..s_rank, w1..wn (= s_{theta, w_j}),
// e (identity). The word is read as a product left to right.
WeylElement word_to_element(const RootDatum& R, int n, const std::string& word);

struct RelationResult {
  std::string relation;
  bool holds;
  std::string value;
};

std::vector<RelationResult> presentation_A1_level2();
bool verify_presentation_A1_level2();

// v <= w iff every half-space containing C0 and wC0 also contains vC0.
bool bruhat_leq(const WeylElement& v, const WeylElement& w);

// Random element with translation coefficients in [-bound, bound].
class Rng;
WeylElement random_weyl(const RootDatum& R, int n, Rng& rng, int bound);

}  // namespace babel
