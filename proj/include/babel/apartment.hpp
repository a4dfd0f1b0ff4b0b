#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "babel/weyl.hpp"

namespace babel {

struct HalfSpace {
  IntVec root;
  LinLex k;  // {v : (a, v) + k >= 0}
  bool contains(const RootDatum& R, const Point& v) const;
};

struct Sector {
  Point apex;
  int level;  // 0 = chamber, 1 = affine sector, ..., n
};

struct ClFixReport {
  bool ok = true;
  int checked = 0;  // sampled enclosure members tested
  std::optional<Point> witness;
};

struct CircumResult {
  Point center;
  LexPoly radius2;
};

struct Cat0Witness {
  Point midpoint;
  LexPoly midpoint_radius2;  // r^2(midpoint, B)
  LexPoly bound;             // R^2 - d^2(c1, c2) / 4
  LexPoly radius2;           // R^2
  bool contradiction;        // midpoint_radius2 <= bound < radius2
};

// Sigma(n, Phi) = union of w C0-bar over W_n(Phi).
class Apartment {
 public:
  Apartment(const RootDatum& R, int n);

  const RootDatum& datum() const { return *R_; }
  int n() const { return n_; }

  Point point(const std::vector<LinLex>& coords) const;
  Point real_point(const std::vector<Q>& coords) const;
  Point interior_point() const;  // the fixed interior point of C0
  void check(const Point& p) const;

  // Least (by WeylElement order) w with p in w C0-bar.
  WeylElement locate(const Point& p) const;
  bool contains(const Point& p) const;
  // All w with p in w C0-bar, sorted.
  std::vector<WeylElement> locate_all(const Point& p) const;
  bool in_closed_chamber(const Point& p) const;  // p in C0-bar

  LexPoly dist2(const Point& p, const Point& q) const;
  SqrtExpr dist(const Point& p, const Point& q) const;
  bool parallelogram_check(const Point& x, const Point& y, const Point& z, const Q& t) const;
  Order triangle_cmp(const Point& x, const Point& y, const Point& z) const;  // d(x,y)+d(y,z) vs d(x,z)

  bool affinely_independent(const std::vector<Point>& pts) const;
  bool unique_from_distances(const std::vector<Point>& basis, const Point& p, const Point& q) const;

  // tau_C with C = c C0.
  Point retract_tau(const WeylElement& c, const Point& p) const;

  bool enclosure_contains(const std::vector<Point>& omega, const Point& z) const;
  // Walls separating z from Omega, one per root (the tightest), if any.
  std::vector<HalfSpace> separating_halfspaces(const std::vector<Point>& omega, const Point& z) const;
  ClFixReport cl_fix_check(const WeylElement& g, const std::vector<Point>& omega, int samples,
                           uint64_t seed) const;

  bool sector_contains(const Sector& s, const Point& p) const;
  Sector sector_intersect(const Sector& a, const Sector& b) const;  // throws Disjoint / NotASector

  CircumResult circumcenter(const std::vector<Point>& B) const;
  LexPoly circumradius2(const Point& c, const std::vector<Point>& B) const;
  Cat0Witness cat0_witness(const std::vector<Point>& B, const Point& c1, const Point& c2) const;

  bool residue_point_filter(const Point& p, const Point& q) const;

 private:
  const RootDatum* R_;
  int n_;
};

// Exists K in Z^n with u < K <= v (lex)?
bool lattice_point_in_lex_interval(const LinLex& u, const LinLex& v);

// Exact minimum enclosing ball of real points (root coordinates) under a
// Gram matrix, for dimension <= 2. Returns (center, squared radius).
std::pair<std::vector<Q>, Q> min_enclosing_ball(const QMat& gram, const std::vector<std::vector<Q>>& pts);
// Circumcenter of the affine hull of pts (affinely independent), nullopt if degenerate.
std::optional<std::vector<Q>> affine_circumcenter(const QMat& gram, const std::vector<std::vector<Q>>& pts);

}  // namespace babel
