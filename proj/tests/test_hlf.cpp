#include <gtest/gtest.h>

#include <map>

#include "babel/error.hpp"
#include "babel/hlf.hpp"
#include "babel/random.hpp"

using namespace babel;

namespace {

constexpr uint32_t kQ = 5;

LS2 t1(int e = 1) { return LS2::monomial(kQ, 1, e, 0); }
LS2 t2(int e = 1) { return LS2::monomial(kQ, 1, 0, e); }
LS2 c(long v) { return LS2::constant(kQ, v); }

bool zero_to_prec(const LS1& x) { return x.is_zero(); }

// Naive product of exact Laurent polynomials held as (j,i) -> coefficient.
using Terms = std::map<std::pair<int, int>, long>;

Terms terms_of(const LS2& x) {
  Terms t;
  for (const auto& [j, l] : x.levels())
    for (auto [i, cf] : l.terms()) t[{j, i}] = cf;
  return t;
}

Terms naive_mul(const Terms& a, const Terms& b) {
  Terms r;
  for (auto [ka, ca] : a)
    for (auto [kb, cb] : b) {
      auto& x = r[{ka.first + kb.first, ka.second + kb.second}];
      x = (x + ca * cb) % kQ;
    }
  for (auto it = r.begin(); it != r.end();) it = it->second ? std::next(it) : r.erase(it);
  return r;
}

LS2 random_unit_or_not(Rng& rng, bool unit) {
  SeriesRange r{{-2, -5}, {2, 5}, unit};
  return random_series(kQ, r, {8, 4}, rng);
}

}  // namespace

TEST(Hlf, InverseExamples) {
  LS2 x = c(1) - t1();
  LS2 y = x.inverse();
  EXPECT_EQ(y.prec2(), kInf);
  LS1 l = y.level(0);
  EXPECT_EQ(l.prec(), 12);
  for (int e = 0; e < 12; ++e) EXPECT_EQ(l.coeff(e), 1u) << e;

  LS2 z = t2().inverse();
  EXPECT_TRUE(z.exact());
  EXPECT_EQ(z.valuation(), (Val2{-1, 0}));
  EXPECT_TRUE(agrees(z, t2(-1)));

  EXPECT_THROW(LS2::zero(kQ).inverse(), Error);
  try {
    LS2::zero(kQ, 3).inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroDivision);
  }
}

TEST(Hlf, InverseUsesWorkingPrecision) {
  PrecisionScope s({5, 2});
  LS2 y = (c(1) - t1()).inverse();
  EXPECT_EQ(y.level(0).prec(), 5);
  LS2 w = (c(1) + t2()).inverse();
  EXPECT_EQ(w.prec2(), 2);
}

TEST(Hlf, RoundTripInverse) {
  int checked = 0;
  for (uint64_t k = 0; k < 500; ++k) {
    Rng rng = Rng::derive(11, 1, k);
    LS2 x = random_unit_or_not(rng, true);
    LS2 p = x * x.inverse();
    EXPECT_TRUE(agrees(p, c(1))) << x.to_string() << " -> " << p.to_string();
    ++checked;
  }
  EXPECT_EQ(checked, 500);
  for (uint64_t k = 0; k < 200; ++k) {
    Rng rng = Rng::derive(11, 2, k);
    LS2 x = random_poly(kQ, rng, 4, -3, 3, -1, 2);
    if (x.is_exact_zero()) continue;
    EXPECT_TRUE(agrees(x * x.inverse(), c(1))) << x.to_string();
  }
}

TEST(Hlf, ProductMatchesNaiveConvolution) {
  for (uint64_t k = 0; k < 300; ++k) {
    Rng rng = Rng::derive(12, 0, k);
    LS2 a = random_poly(kQ, rng, 5, -4, 4, -2, 2);
    LS2 b = random_poly(kQ, rng, 5, -4, 4, -2, 2);
    EXPECT_EQ(terms_of(a * b), naive_mul(terms_of(a), terms_of(b)));
    Terms s = terms_of(a);
    for (auto [kb, cb] : terms_of(b)) s[kb] = (s[kb] + cb) % kQ;
    for (auto it = s.begin(); it != s.end();) it = it->second ? std::next(it) : s.erase(it);
    EXPECT_EQ(terms_of(a + b), s);
  }
}

TEST(Hlf, ValuationExamples) {
  EXPECT_EQ(t1().valuation(), (Val2{0, 1}));
  EXPECT_EQ(t2().valuation(), (Val2{1, 0}));
  LS2 x = (t1(-3) * t2(2)) + t2(3) + t1(4) * t2(2);
  EXPECT_EQ(x.valuation(), (Val2{2, -3}));
  EXPECT_EQ(t1().valuation().to_linlex().to_string(), LinLex::unit(2, 1).to_string());
  EXPECT_EQ(t2().valuation().to_linlex().to_string(), LinLex::unit(2, 2).to_string());
  try {
    LS2::zero(kQ, 4).valuation();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroToPrecision);
  }
  EXPECT_TRUE(LS2::zero(kQ).valuation().inf);
  // Lowest level known only to be 0 mod t1^3 while a higher level is nonzero.
  LS2 y = LS2::from_level(LS1::zero(kQ, 3), 0) + t2();
  try {
    y.valuation();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PrecisionExhausted);
  }
}

TEST(Hlf, RingMembershipExamples) {
  auto f = ring_membership(t1(-1));
  EXPECT_FALSE(f.in_OF);
  EXPECT_TRUE(f.in_ScrOF);
  f = ring_membership(t2() * t1(-5));
  EXPECT_TRUE(f.in_OF);
  EXPECT_TRUE(f.in_ScrOF);
  f = ring_membership(t2(-1));
  EXPECT_FALSE(f.in_OF);
  EXPECT_FALSE(f.in_ScrOF);
  f = ring_membership(LS2::zero(kQ));
  EXPECT_TRUE(f.in_OF);
  EXPECT_TRUE(f.in_ScrOF);
  f = ring_membership(c(3) + t1());
  EXPECT_TRUE(f.in_OF);
  EXPECT_TRUE(is_unit_OF(c(3) + t1()));
  EXPECT_FALSE(is_unit_OF(t1()));
  EXPECT_FALSE(is_unit_OF(t1(-1) * t2()));
  // 0 mod t1^-1 at level 0: can't tell whether it lies in O_F.
  EXPECT_THROW(ring_membership(LS2::from_level(LS1::zero(kQ, -1), 0)), Error);
}

TEST(Hlf, ResidueExamples) {
  LS2 y = c(2) + t1(7);
  LS1 r = residue_to_F1(t1(-1) + t2() * y);
  EXPECT_TRUE(zero_to_prec(r - LS1::monomial(kQ, 1, -1)));
  EXPECT_TRUE(r.exact());
  EXPECT_TRUE(zero_to_prec(residue_to_F1(c(1)) - LS1::monomial(kQ, 1, 0)));
  try {
    residue_to_F1(t2(-1) + c(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotInScrOF);
  }
}

TEST(Hlf, ResidueIsHomomorphism) {
  for (uint64_t k = 0; k < 500; ++k) {
    Rng rng = Rng::derive(13, 0, k);
    SeriesRange r{{0, -6}, {1, 6}, true};
    LS2 x = random_series(kQ, r, {8, 4}, rng);
    LS2 y = random_series(kQ, r, {8, 4}, rng);
    LS1 rx = residue_to_F1(x), ry = residue_to_F1(y);
    EXPECT_TRUE(zero_to_prec(residue_to_F1(x * y) - rx * ry));
    EXPECT_TRUE(zero_to_prec(residue_to_F1(x + y) - (rx + ry)));
  }
}

TEST(Hlf, RandomSeriesContract) {
  SeriesRange r{{-1, -3}, {2, 4}, true};
  for (uint64_t k = 0; k < 1000; ++k) {
    Rng a = Rng::derive(14, 0, k), b = Rng::derive(14, 0, k);
    LS2 x = random_series(kQ, r, {6, 3}, a);
    LS2 y = random_series(kQ, r, {6, 3}, b);
    EXPECT_EQ(x.to_string(), y.to_string());
    Val2 v = x.valuation();
    EXPECT_GE(v, r.lo);
    EXPECT_LE(v, r.hi);
    EXPECT_NE(x.leading_coeff(), 0u);
    EXPECT_EQ(x.prec2(), v.j + 3);
  }
}

TEST(Hlf, ValuationAxioms) {
  int strict = 0;
  for (uint64_t k = 0; k < 1000; ++k) {
    Rng rng = Rng::derive(15, 0, k);
    LS2 x = random_unit_or_not(rng, true), y = random_unit_or_not(rng, true);
    Val2 vx = x.valuation(), vy = y.valuation();
    EXPECT_EQ((x * y).valuation(), vx + vy);
    ValInfo s = (x + y).val_info();
    Val2 m = std::min(vx, vy);
    EXPECT_GE(s.lower, m);
    if (vx != vy) {
      ++strict;
      ASSERT_TRUE(s.determined);
      EXPECT_EQ(s.lower, m);
    }
  }
  EXPECT_GT(strict, 900);
}

TEST(Hlf, StrongTriangle) {
  int decided = 0;
  for (uint64_t k = 0; k < 1000; ++k) {
    Rng rng = Rng::derive(16, 0, k);
    // Exact points half the time; truncated series otherwise.
    bool ex = k % 2 == 0;
    auto draw = [&]() {
      return ex ? random_poly(kQ, rng, 3, -2, 2, -1, 1) : random_unit_or_not(rng, true);
    };
    LS2 x = draw(), y = draw(), z = draw();
    try {
      bool xy_le_yz = dist_leq(y, x, z);  // d(y,x) <= d(y,z)
      const LS2& far = xy_le_yz ? z : x;  // max(d(x,y), d(y,z)) = d(y, far)
      // d(x,z) <= d(y,far)  iff  v(x-z) >= v(y-far)
      ValInfo vxz = (x - z).val_info();
      ValInfo vmax = (y - far).val_info();
      ASSERT_TRUE(vmax.determined);
      EXPECT_GE(vxz.lower, vmax.lower);
      ++decided;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::PrecisionExhausted);
    }
  }
  EXPECT_GT(decided, 800);
}

TEST(Hlf, DistLeqExamples) {
  LS2 x = c(1), y = c(1) + t1(3), z = c(1) + t2();
  EXPECT_TRUE(dist_leq(x, z, y));   // t2 is closer than t1^3
  EXPECT_FALSE(dist_leq(x, y, z));
  EXPECT_TRUE(dist_leq(x, x, y));
}

TEST(Hlf, PrecisionSoundnessMetamorphic) {
  // Recomputing at higher precision never contradicts the low-precision value.
  for (uint64_t k = 0; k < 300; ++k) {
    Rng rng = Rng::derive(17, 0, k);
    LS2 a = random_poly(kQ, rng, 3, -2, 2, 0, 1);
    LS2 b = random_poly(kQ, rng, 3, -2, 2, -1, 1);
    if (a.is_exact_zero() || b.is_exact_zero()) continue;
    a = a + c(1);
    auto pipeline = [&]() { return (a * b + c(1)).inverse() * a.inverse() - b; };
    LS2 lo, hi;
    {
      PrecisionScope s({4, 2});
      try {
        lo = pipeline();
      } catch (const Error&) {
        continue;
      }
    }
    {
      PrecisionScope s({16, 7});
      hi = pipeline();
    }
    LS2 d = lo - hi;
    EXPECT_TRUE(d.is_zero_to_precision()) << lo.to_string() << " vs " << hi.to_string();
    EXPECT_LE(lo.prec2(), hi.prec2());
  }
}

TEST(Hlf, PrimeCheck) {
  EXPECT_TRUE(is_prime(5));
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(9));
  EXPECT_FALSE(is_prime(1));
  EXPECT_EQ(mod_inv(2, 5), 3u);
}
