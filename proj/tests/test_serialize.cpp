#include <gtest/gtest.h>

#include "babel/random.hpp"
#include "babel/serialize.hpp"

using namespace babel;

namespace {

template <class F>
void expect_invalid(F&& f) {
  try {
    f();
    FAIL() << "expected InvalidInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidInput) << e.what();
  }
}

LexPoly random_lexpoly(Rng& rng) {
  std::vector<LexPoly::Term> terms;
  int k = static_cast<int>(rng.range(0, 4));
  for (int t = 0; t < k; ++t) {
    Monomial m({static_cast<uint32_t>(rng.range(0, 2)), static_cast<uint32_t>(rng.range(0, 2))});
    terms.push_back({m, rng.rational(9, 5)});
  }
  return LexPoly::from_terms(terms);
}

}  // namespace

TEST(Serialize, RationalForms) {
  EXPECT_EQ(q_from_json(Json("-3/6")), Q(-1, 2));
  EXPECT_EQ(q_from_json(Json(7)), Q(7));
  EXPECT_EQ(q_to_json(Q(-6)), Json("-6"));
  EXPECT_EQ(q_to_json(Q(3, 4)), Json("3/4"));
  expect_invalid([] { q_from_json(Json("1/0")); });
  expect_invalid([] { q_from_json(Json("x")); });
  expect_invalid([] { q_from_json(Json(1.5)); });
}

TEST(Serialize, LexPolyRoundTrip) {
  Rng rng(11);
  for (int s = 0; s < 300; ++s) {
    LexPoly p = random_lexpoly(rng);
    Json j = to_json(p, 3);
    LexPoly back = lexpoly_from_json(j);
    EXPECT_EQ(back, p) << j.dump();
    EXPECT_EQ(to_json(back, 3), j);
  }
}

TEST(Serialize, LinLexAndPointRoundTrip) {
  Rng rng(12);
  for (int s = 0; s < 200; ++s) {
    Point p;
    for (int i = 0; i < 2; ++i) p.push_back(LinLex({rng.rational(9, 4), Q(rng.range(-5, 5))}));
    EXPECT_EQ(point_from_json(point_to_json(p), 2, 2), p);
  }
  expect_invalid([] { point_from_json(Json::parse(R"([["1","2"]])"), 2, 2); });
  expect_invalid([] { linlex_from_json(Json::parse(R"(["1"])"), 2); });
}

TEST(Serialize, WeylRoundTrip) {
  const RootDatum& R = root_datum(RootType::B2);
  Rng rng(13);
  for (int s = 0; s < 100; ++s) {
    WeylElement w = random_weyl(R, 2, rng, 3);
    EXPECT_EQ(weyl_from_json(R, 2, to_json(w)), w);
  }
  expect_invalid([&] { weyl_from_json(R, 2, Json::parse(R"({"fin":99,"trans":[[0,0],[0,0]]})")); });
}

TEST(Serialize, SeriesRoundTrip) {
  Rng rng(14);
  for (int s = 0; s < 200; ++s) {
    LS2 x = s % 2 ? random_poly(5, rng, 4, -3, 3, -1, 1)
                  : random_series(5, SeriesRange{{-1, -2}, {1, 2}, true}, Precision{5, 3}, rng);
    Json j = to_json(x);
    LS2 back = ls2_from_json(j);
    EXPECT_EQ(to_json(back), j);
    EXPECT_TRUE(agrees(back, x));
    EXPECT_EQ(back.prec2(), x.prec2());
  }
}

TEST(Serialize, SeriesValidation) {
  expect_invalid([] { ls2_from_json(Json::parse(R"({"q":6,"terms":[]})")); });
  expect_invalid([] { ls2_from_json(Json::parse(R"({"q":5,"terms":[{"j":0,"i":0}]})")); });
  expect_invalid([] { ls2_from_json(Json::parse(R"({"q":5,"prec":[1],"terms":[]})")); });
  LS2 x = ls2_from_json(Json::parse(R"({"q":5,"prec":null,"terms":[{"j":0,"i":0,"c":7}]})"));
  EXPECT_EQ(to_json(x), to_json(LS2::constant(5, 2)));
}

TEST(Serialize, MatrixRoundTrip) {
  Sl2Sampler s;
  Rng rng(15);
  for (int k = 0; k < 50; ++k) {
    Mat2 g = random_sl2(s, rng);
    Json j = to_json(g);
    EXPECT_EQ(to_json(mat2_from_json(j)), j);
  }
  expect_invalid([] { mat2_from_json(Json::parse("[1,2,3]")); });
}

TEST(Serialize, ParseErrors) {
  expect_invalid([] { parse_json("{oops"); });
  EXPECT_EQ(parse_json("[1]").size(), 1u);
}
