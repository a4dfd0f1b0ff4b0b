#include <gtest/gtest.h>

#include <cmath>

#include "babel/render.hpp"

using namespace babel;

namespace {

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Render, PlanarRootsMatchGram) {
  for (RootType t : {RootType::A1, RootType::A2, RootType::B2}) {
    const RootDatum& R = root_datum(t);
    auto v = planar_simple_roots(t);
    ASSERT_EQ(static_cast<int>(v.size()), R.rank);
    // Dot products agree with the Gram matrix up to one common positive scale.
    double scale = (v[0][0] * v[0][0] + v[0][1] * v[0][1]) / R.gram[0][0].get_d();
    for (int i = 0; i < R.rank; ++i)
      for (int j = 0; j < R.rank; ++j) {
        double dot = v[i][0] * v[j][0] + v[i][1] * v[j][1];
        EXPECT_NEAR(dot, scale * R.gram[i][j].get_d(), 1e-9) << root_type_name(t) << i << j;
      }
  }
}

TEST(Render, ApartmentPictures) {
  EXPECT_EQ(count(render_apartment_svg(RootType::A2), "<circle"), 7);
  EXPECT_EQ(count(render_apartment_svg(RootType::B2), "<circle"), 9);
  std::string a1 = render_apartment_svg(RootType::A1);
  for (const char* label : {"w₁", "w₂", "ω₂"}) EXPECT_NE(a1.find(label), std::string::npos) << label;
  for (RootType t : {RootType::A1, RootType::A2, RootType::B2}) {
    std::string s = render_apartment_svg(t);
    EXPECT_EQ(s, render_apartment_svg(t));
    EXPECT_EQ(s.rfind("<svg", 0), 0u);
    EXPECT_EQ(count(s, "<svg"), 1);
    EXPECT_NE(s.find("</svg>"), std::string::npos);
  }
}

TEST(Render, EnclosureExample) {
  auto pair = enclosure_example_pair();
  ASSERT_EQ(pair.size(), 2u);
  for (const Point& p : pair) {
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(std::max(p[0].level(), p[1].level()), 2);
  }
  std::string s = render_enclosure_svg(pair[0], pair[1]);
  EXPECT_EQ(s, render_enclosure_svg(pair[0], pair[1]));
  EXPECT_GT(count(s, "fill=\"#808080\""), 0);
  EXPECT_THROW(render_enclosure_svg(pair[0], Point{LinLex(2)}), Error);
}
