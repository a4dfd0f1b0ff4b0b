#pragma once

#include <string>
#include <vector>

#include "babel/lexring.hpp"

namespace babel {

enum class RootType { A1, A2, B2 };

RootType parse_root_type(const std::string& s);
const char* root_type_name(RootType t);

using IntVec = std::vector<int>;
using IntMat = std::vector<IntVec>;  // row-major
using QMat = std::vector<std::vector<Q>>;

// A vector of n*V written on the simple-root basis.
using Point = std::vector<LinLex>;

struct RootDatum {
  RootType type;
  int rank;
  QMat gram;                       // (alpha_i, alpha_j)
  std::vector<IntVec> positive;    // positive roots on the simple-root basis
  std::vector<IntVec> roots;       // positive roots followed by their negatives
  int highest;                     // index into positive
  std::vector<Q> d;                // alpha_i^vee = d_i alpha_i, d_i = 2/(alpha_i, alpha_i)
  std::vector<IntMat> finite_weyl; // action on root coordinates, identity first
  std::vector<IntMat> finite_weyl_co;  // same elements on coroot coordinates
  std::vector<std::vector<int>> mult;  // index of w_i w_j
  std::vector<int> inverse;
  std::vector<int> simple_refl;        // index of s_{alpha_i}
  std::vector<int> root_refl;          // index of s_a for each entry of roots
  std::vector<Q> interior;             // a point of the open fundamental alcove

  Q root_norm2(const IntVec& a) const;
  std::vector<Q> coroot(const IntVec& a) const;  // a^vee on the simple-root basis
  int root_index(const IntVec& a) const;         // -1 when not a root
  int find_weyl(const IntMat& m) const;          // -1 when absent
};

const RootDatum& root_datum(RootType t);

// Bilinear extension of the Gram matrix.
LexPoly inner(const RootDatum& R, const Point& u, const Point& v);
// (a, v) for a root a on the simple-root basis; linear in v.
LinLex pair_root(const RootDatum& R, const IntVec& a, const Point& v);
Q inner_q(const RootDatum& R, const std::vector<Q>& u, const std::vector<Q>& v);

Point zero_point(int rank, int n);
Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Q& s, const Point& a);
Point apply_mat(const IntMat& m, const Point& p);
bool points_equal(const Point& a, const Point& b);
int point_level(const Point& p);
std::string point_to_string(const Point& p);

IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_vec(const IntMat& a, const IntVec& v);
IntMat identity_mat(int r);

}  // namespace babel
