#include <gtest/gtest.h>

#include "babel/apartment.hpp"
#include "babel/random.hpp"
#include "babel/weyl.hpp"

using namespace babel;

namespace {

const RootDatum& A1() { return root_datum(RootType::A1); }

Point scalar_point(const LinLex& x) { return Point{x}; }

LinLex ll(std::initializer_list<int> c) {
  std::vector<Q> v;
  for (int x : c) v.push_back(Q(x));
  return LinLex(v);
}

// Brute force over half-spaces alpha_{a,k} with k in a box around the
// chambers' pairing values.
bool bruhat_oracle(const WeylElement& v, const WeylElement& w) {
  const RootDatum& R = v.datum();
  int n = v.n();
  Point c0 = zero_point(R.rank, n);
  for (int i = 0; i < R.rank; ++i) c0[i] = LinLex::real(n, R.interior[i]);
  WeylElement one(R, n);
  Point p1 = one.act(c0), pv = v.act(c0), pw = w.act(c0);
  for (const auto& a : R.roots) {
    LinLex x1 = pair_root(R, a, p1), xv = pair_root(R, a, pv), xw = pair_root(R, a, pw);
    std::vector<std::pair<long, long>> box;
    for (int j = 1; j <= n; ++j) {
      Q lo = std::min({x1[j], xv[j], xw[j]}), hi = std::max({x1[j], xv[j], xw[j]});
      box.push_back({floor_q(lo).get_num().get_si() - 2, ceil_q(hi).get_num().get_si() + 2});
    }
    std::vector<long> k(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) k[j] = -box[j].second;
    while (true) {
      LinLex K(n);
      for (int j = 1; j <= n; ++j) K[j] = Q(k[j - 1]);
      auto in = [&](const LinLex& x) { return (x + K).sign() > 0; };
      if (in(x1) && in(xw) && !in(xv)) return false;
      int j = 0;
      while (j < n && ++k[j] > -box[j].first) {
        k[j] = -box[j].second;
        ++j;
      }
      if (j == n) break;
    }
  }
  return true;
}

}  // namespace

TEST(Reflection, A1Generators) {
  const auto& R = A1();
  WeylElement s = reflection(R, {1}, LinLex(2));
  WeylElement w2 = reflection(R, {1}, LinLex::unit(2, 2));
  Point x = scalar_point(LinLex({Q(3, 7), Q(-2)}));
  EXPECT_TRUE(points_equal(s.act(x), scalar_point(LinLex({Q(-3, 7), Q(2)}))));
  EXPECT_TRUE(points_equal(w2.act(x), scalar_point(LinLex({Q(-3, 7), Q(4)}))));
  EXPECT_TRUE((s * s).is_identity());
  Rng rng(3);
  for (auto t : {RootType::A1, RootType::A2, RootType::B2}) {
    const auto& D = root_datum(t);
    for (int k = 0; k < 50; ++k) {
      const auto& a = D.roots[rng.below(D.roots.size())];
      LinLex lvl({Q(rng.range(-5, 5)), Q(rng.range(-5, 5))});
      WeylElement r = reflection(D, a, lvl);
      EXPECT_TRUE((r * r).is_identity());
      // Fixes its wall: points with (a, v) = k.
      Point v = zero_point(D.rank, 2);
      for (auto& c : v) c = LinLex({rng.rational(5, 3), Q(rng.range(-3, 3))});
      LinLex av = pair_root(D, a, v);
      Q n2 = D.root_norm2(a);
      Point corr = zero_point(D.rank, 2);
      for (int i = 0; i < D.rank; ++i) corr[i] = (av - lvl) * (Q(a[i]) / n2);
      Point onwall = v - corr;
      EXPECT_TRUE(points_equal(r.act(onwall), onwall));
    }
  }
  EXPECT_THROW(reflection(root_datum(RootType::A2), {1, -1}, LinLex(2)), Error);
}

TEST(Compose, A1Examples) {
  const auto& R = A1();
  WeylElement s = word_to_element(R, 2, "s"), w1 = word_to_element(R, 2, "w1"), w2 = word_to_element(R, 2, "w2");
  WeylElement t1 = w1 * s, t2 = w2 * s;
  EXPECT_TRUE(t1.is_translation());
  EXPECT_EQ(t1.trans_root()[0], ll({2, 0}));
  EXPECT_EQ(t2.trans_root()[0], ll({0, 2}));
  EXPECT_NE(s * w1, w1 * s);
  EXPECT_EQ((s * w1).trans_root()[0], ll({-2, 0}));
  Point p = scalar_point(LinLex({Q(1, 3), Q(5)}));
  EXPECT_TRUE(points_equal(WeylElement(R, 2).act(p), p));
}

TEST(Presentation, A1Level2) {
  EXPECT_TRUE(verify_presentation_A1_level2());
  auto rel = presentation_A1_level2();
  ASSERT_EQ(rel.size(), 4u);
  for (const auto& r : rel) EXPECT_TRUE(r.holds) << r.relation;
  EXPECT_TRUE(word_to_element(A1(), 2, "s w1 w2 s w1 w2").is_identity());
  EXPECT_THROW(word_to_element(A1(), 2, "w3"), Error);
  EXPECT_THROW(word_to_element(A1(), 2, "q"), Error);
}

TEST(GroupAxioms, RandomTriples) {
  Rng rng(17);
  for (auto t : {RootType::A1, RootType::A2, RootType::B2}) {
    const auto& R = root_datum(t);
    Apartment ap(R, 2);
    for (int k = 0; k < 1000; ++k) {
      WeylElement a = random_weyl(R, 2, rng, 4), b = random_weyl(R, 2, rng, 4), c = random_weyl(R, 2, rng, 4);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_TRUE((a * a.inverse()).is_identity());
      EXPECT_TRUE((a.inverse() * a).is_identity());
      EXPECT_EQ(a * WeylElement(R, 2), a);
      Point p = zero_point(R.rank, 2), q = zero_point(R.rank, 2);
      for (auto& x : p) x = LinLex({rng.rational(7, 4), rng.rational(7, 4)});
      for (auto& x : q) x = LinLex({rng.rational(7, 4), rng.rational(7, 4)});
      EXPECT_TRUE(points_equal((a * b).act(p), a.act(b.act(p))));
      EXPECT_EQ(ap.dist2(a.act(p), a.act(q)), ap.dist2(p, q));
      // Translations are normal.
      WeylElement tr = WeylElement::translation(R, b.trans());
      EXPECT_TRUE((a * tr * a.inverse()).is_translation());
    }
  }
}

TEST(Bruhat, BasicAndOracle) {
  Rng rng(9);
  for (auto t : {RootType::A1, RootType::A2, RootType::B2}) {
    const auto& R = root_datum(t);
    WeylElement one(R, 2);
    for (int k = 0; k < 150; ++k) {
      WeylElement v = random_weyl(R, 2, rng, 2), w = random_weyl(R, 2, rng, 2);
      EXPECT_TRUE(bruhat_leq(one, w));
      EXPECT_TRUE(bruhat_leq(w, w));
      EXPECT_EQ(bruhat_leq(v, w), bruhat_oracle(v, w)) << v.to_string() << " " << w.to_string();
    }
  }
  const auto& R = A1();
  WeylElement s = word_to_element(R, 2, "s"), w2 = word_to_element(R, 2, "w2");
  EXPECT_EQ(bruhat_leq(s, w2), bruhat_oracle(s, w2));
  EXPECT_FALSE(bruhat_leq(s, w2));  // C0 = (0,1), sC0 = (-1,0), w2C0 = (2w2-1, 2w2)
  EXPECT_TRUE(bruhat_leq(word_to_element(R, 2, "w1"), w2));
}

TEST(Bruhat, Transitivity) {
  Rng rng(10);
  const auto& R = root_datum(RootType::A2);
  int chains = 0;
  for (int k = 0; k < 3000; ++k) {
    WeylElement a = random_weyl(R, 2, rng, 1), b = random_weyl(R, 2, rng, 1), c = random_weyl(R, 2, rng, 1);
    if (bruhat_leq(a, b) && bruhat_leq(b, c)) {
      ++chains;
      EXPECT_TRUE(bruhat_leq(a, c));
    }
  }
  EXPECT_GT(chains, 0);
}
