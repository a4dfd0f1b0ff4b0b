#include "babel/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace babel {

namespace {

using Vec = std::array<double, 2>;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

// Canvas with y pointing up, centred at (cx, cy), `scale` pixels per unit.
class Svg {
 public:
  Svg(int w, int h, double cx, double cy, double scale) : w_(w), h_(h), cx_(cx), cy_(cy), s_(scale) {}

  double X(double x) const { return cx_ + s_ * x; }
  double Y(double y) const { return cy_ - s_ * y; }
  double S(double r) const { return s_ * r; }

  void circle(Vec c, double r, const std::string& style) {
    body_ << "<circle cx=\"" << num(X(c[0])) << "\" cy=\"" << num(Y(c[1])) << "\" r=\"" << num(S(r))
          << "\" " << style << "/>\n";
  }
  void line(Vec a, Vec b, const std::string& style) {
    body_ << "<line x1=\"" << num(X(a[0])) << "\" y1=\"" << num(Y(a[1])) << "\" x2=\"" << num(X(b[0]))
          << "\" y2=\"" << num(Y(b[1])) << "\" " << style << "/>\n";
  }
  void rect(Vec lo, double w, double h, const std::string& style) {
    body_ << "<rect x=\"" << num(X(lo[0])) << "\" y=\"" << num(Y(lo[1] + h)) << "\" width=\"" << num(S(w))
          << "\" height=\"" << num(S(h)) << "\" " << style << "/>\n";
  }
  void polygon(const std::vector<Vec>& pts, const std::string& style) {
    body_ << "<polygon points=\"";
    for (size_t k = 0; k < pts.size(); ++k)
      body_ << (k ? " " : "") << num(X(pts[k][0])) << "," << num(Y(pts[k][1]));
    body_ << "\" " << style << "/>\n";
  }
  void text(Vec p, const std::string& s, const std::string& anchor = "middle", int size = 14) {
    body_ << "<text x=\"" << num(X(p[0])) << "\" y=\"" << num(Y(p[1])) << "\" font-size=\"" << size
          << "\" text-anchor=\"" << anchor << "\" font-family=\"serif\">" << s << "</text>\n";
  }
  // Quadratic arc from a to b bending through ctrl, arrowheads at both ends.
  void arc_arrow(Vec a, Vec ctrl, Vec b) {
    body_ << "<path d=\"M " << num(X(a[0])) << " " << num(Y(a[1])) << " Q " << num(X(ctrl[0])) << " "
          << num(Y(ctrl[1])) << " " << num(X(b[0])) << " " << num(Y(b[1]))
          << "\" fill=\"none\" stroke=\"black\" marker-start=\"url(#head)\" marker-end=\"url(#head)\"/>\n";
  }
  void arrow(Vec a, Vec b) {
    line(a, b, "stroke=\"black\" stroke-width=\"2\" marker-end=\"url(#head)\"");
  }

  std::string str() const {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_ << "\" height=\"" << h_
       << "\" viewBox=\"0 0 " << w_ << " " << h_ << "\">\n"
       << "<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"7\" "
          "markerHeight=\"7\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << body_.str() << "</svg>\n";
    return os.str();
  }

 private:
  int w_, h_;
  double cx_, cy_, s_;
  std::ostringstream body_;
};

const char* kShade = "fill=\"#d3d3d3\"";
const char* kDashed = "stroke=\"black\" stroke-dasharray=\"6,4\"";
const char* kDotted = "stroke=\"black\" stroke-dasharray=\"2,3\"";

Vec add(Vec a, Vec b) { return {a[0] + b[0], a[1] + b[1]}; }
Vec mul(double s, Vec a) { return {s * a[0], s * a[1]}; }
double norm(Vec a) { return std::hypot(a[0], a[1]); }

std::string root_name(const IntVec& a) {
  std::string s;
  const char* sym[] = {"a", "b"};
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += a[i] > 0 ? "+" : "-";
    else if (a[i] < 0) s += "-";
    if (std::abs(a[i]) != 1) s += std::to_string(std::abs(a[i]));
    s += sym[i];
  }
  return s;
}

// Coroot lattice points (on the root basis) with planar length <= radius.
std::vector<std::vector<Q>> lattice_ball(RootType t, double radius) {
  const RootDatum& R = root_datum(t);
  std::vector<std::vector<Q>> out;
  for (int m0 = -6; m0 <= 6; ++m0)
    for (int m1 = -6; m1 <= 6; ++m1) {
      std::vector<Q> u = {R.d[0] * m0, R.d[1] * m1};
      if (norm(planar(t, u)) <= radius + 1e-9) out.push_back(u);
    }
  return out;
}

std::string render_a1() {
  Svg svg(760, 230, 380, 110, 1);
  const double gap = 150, half = 58, unit = 24;  // pixels
  auto px = [&](int comp, double r) -> Vec { return {comp * gap + r * unit, 0}; };
  for (int n = -2; n <= 2; ++n) {
    svg.line(px(n, -half / unit), px(n, half / unit), "stroke=\"black\" stroke-width=\"2\"");
    if (n < 2) svg.line(px(n, half / unit + 0.3), px(n + 1, -half / unit - 0.3), kDashed);
    std::string label = n == 0 ? "ℝ" : std::to_string(2 * n) + "ω₂ + ℝ";
    if (n == 1 || n == -1) label = (n < 0 ? "-" : "") + std::string("2ω₂ + ℝ");
    svg.text(add(px(n, 0), {0, 62}), label);
  }
  svg.line({-2 * gap - half - 40, 0}, px(-2, -half / unit - 0.3), kDashed);
  svg.line(px(2, half / unit + 0.3), {2 * gap + half + 40, 0}, kDashed);
  // Walls of the generators: s at 0, w1 at w1 = 1, w2 at w2 (between components).
  struct Mark {
    Vec at;
    const char* label;
    const char* gen;
    bool member;
  };
  std::vector<Mark> marks = {{px(0, 0), "0", "s", true},
                             {px(0, 1), "1", "w₁", true},
                             {{gap / 2, 0}, "ω₂", "w₂", false}};
  for (const auto& m : marks) {
    svg.line(add(m.at, {0, 22}), add(m.at, {0, -22}), kDotted);
    svg.circle(m.at, 4, m.member ? "fill=\"black\"" : "fill=\"white\" stroke=\"black\"");
    svg.text(add(m.at, {6, 10}), m.label, "start");
    svg.arc_arrow(add(m.at, {12, -30}), add(m.at, {0, -52}), add(m.at, {-12, -30}));
    svg.text(add(m.at, {0, -68}), m.gen);
  }
  svg.text({0, 96}, "Σ(2, A₁): components 2nω₂ + ℝ, n ∈ ℤ", "middle", 16);
  return svg.str();
}

std::string render_rank2(RootType t) {
  const RootDatum& R = root_datum(t);
  Svg svg(640, 560, 320, 290, 150);
  const double disk = 0.3;
  auto ball = lattice_ball(t, 1.0);
  for (const auto& u : ball) {
    Vec p = planar(t, u);
    svg.circle(p, disk, kShade);
    double len = norm(p);
    if (len > 0.5) svg.line(mul((len + 0.35) / len, p), mul((len + 0.75) / len, p), kDashed);
  }
  // Coroots of the positive roots, drawn on the w2 level.
  for (const auto& a : R.positive) {
    std::vector<Q> c = R.coroot(a);
    Vec p = planar(t, c);
    svg.arrow({0, 0}, mul(0.97, p));
    Vec lab = add(p, mul(0.22 / norm(p), p));
    std::string n = root_name(a);
    svg.text(add(lab, {0, -0.05}), (n.size() == 1 ? n : "(" + n + ")") + "∨ω₂");
  }
  // The wall H_{a, w2}: (a, v) = w2, between 0 and the component at a^vee.
  Vec a = planar(t, {Q(1), Q(0)});
  double x = 1.0 / norm(a);
  svg.line({x, -0.55}, {x, 0.55}, "stroke=\"black\"");
  svg.text({x + 0.04, -0.68}, "H(a, ω₂)", "start");
  svg.text({0, -1.65}, std::string("Σ(2, ") + root_type_name(t) + "): " + std::to_string(ball.size()) +
                           " real components shown, each a copy of ℝ²",
           "middle", 16);
  return svg.str();
}

// Convex polygon { v : lo_k <= n_k . v <= hi_k } by clipping a large square.
std::vector<Vec> clip_strips(const std::vector<Vec>& normals, const std::vector<double>& lo,
                             const std::vector<double>& hi) {
  std::vector<Vec> poly = {{-100, -100}, {100, -100}, {100, 100}, {-100, 100}};
  auto clip = [&](Vec n, double c) {  // keep n . v <= c
    std::vector<Vec> out;
    for (size_t k = 0; k < poly.size(); ++k) {
      Vec p = poly[k], q = poly[(k + 1) % poly.size()];
      double fp = n[0] * p[0] + n[1] * p[1] - c, fq = n[0] * q[0] + n[1] * q[1] - c;
      if (fp <= 0) out.push_back(p);
      if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) out.push_back(add(p, mul(fp / (fp - fq), add(q, mul(-1, p)))));
    }
    poly = out;
  };
  for (size_t k = 0; k < normals.size(); ++k) {
    clip(normals[k], hi[k]);
    clip(mul(-1, normals[k]), -lo[k]);
  }
  return poly;
}

std::vector<Q> w2_part(const Point& p) {
  std::vector<Q> r;
  for (const auto& c : p) r.push_back(c[2]);
  return r;
}

}  // namespace

std::vector<std::array<double, 2>> planar_simple_roots(RootType t) {
  switch (t) {
    case RootType::A1: return {{1, 0}};
    case RootType::A2: return {{2, 0}, {-1, std::sqrt(3.0)}};
    case RootType::B2: return {{2, 0}, {-2, 2}};
  }
  return {};
}

std::array<double, 2> planar(RootType t, const std::vector<Q>& c) {
  auto base = planar_simple_roots(t);
  Vec p{0, 0};
  for (size_t i = 0; i < base.size() && i < c.size(); ++i) p = add(p, mul(c[i].get_d(), base[i]));
  return p;
}

std::string render_apartment_svg(RootType t) { return t == RootType::A1 ? render_a1() : render_rank2(t); }

std::vector<Point> enclosure_example_pair() {
  const RootDatum& R = root_datum(RootType::A2);
  Point x = zero_point(R.rank, 2), y = zero_point(R.rank, 2);
  x[0][2] = R.d[0] * -3;
  x[1][2] = R.d[1] * -3;
  y[0][2] = R.d[0] * 2;
  y[1][2] = R.d[1] * 1;
  return {x, y};
}

std::string render_enclosure_svg(const Point& x, const Point& y) {
  const RootType t = RootType::A2;
  const RootDatum& R = root_datum(t);
  Apartment ap(R, 2);
  ap.check(x);
  ap.check(y);
  if (x[0].n() != 2 || y[0].n() != 2) throw Error(Errc::InvalidInput, "enclosure rendering needs level-2 points");
  std::vector<Point> om = {x, y};
  Vec px = planar(t, w2_part(x)), py = planar(t, w2_part(y));
  Vec lo{std::min(px[0], py[0]) - 0.8, std::min(px[1], py[1]) - 0.8};
  Vec hi{std::max(px[0], py[0]) + 0.8, std::max(px[1], py[1]) + 0.8};
  double scale = std::min(700 / (hi[0] - lo[0]), 620 / (hi[1] - lo[1]));
  int W = static_cast<int>(scale * (hi[0] - lo[0])) + 40, H = static_cast<int>(scale * (hi[1] - lo[1])) + 80;
  Svg svg(W, H, 20 - scale * lo[0], 20 + scale * hi[1], scale);

  // Root coordinates of a planar offset: solve c0 a + c1 b = v.
  auto base = planar_simple_roots(t);
  double det = base[0][0] * base[1][1] - base[1][0] * base[0][1];
  auto to_root = [&](Vec v) -> std::vector<double> {
    return {(v[0] * base[1][1] - v[1] * base[1][0]) / det, (base[0][0] * v[1] - base[0][1] * v[0]) / det};
  };

  const double disk = 0.42, real_per_unit = 12;  // a disk shows |real offset| <~ 5
  const int N = 15;
  const double cell = 2 * disk / N;
  for (int m0 = -12; m0 <= 12; ++m0)
    for (int m1 = -12; m1 <= 12; ++m1) {
      std::vector<Q> u = {R.d[0] * m0, R.d[1] * m1};
      Vec c = planar(t, u);
      if (c[0] < lo[0] + 0.3 || c[0] > hi[0] - 0.3 || c[1] < lo[1] + 0.3 || c[1] > hi[1] - 0.3) continue;
      svg.circle(c, disk, "fill=\"#f0f0f0\" stroke=\"#b0b0b0\"");
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          Vec off{-disk + (i + 0.5) * cell, -disk + (j + 0.5) * cell};
          if (norm(off) > disk - cell / 2) continue;
          std::vector<double> r = to_root(mul(real_per_unit, off));
          Point z = zero_point(R.rank, 2);
          for (int k = 0; k < R.rank; ++k) {
            z[k][2] = u[static_cast<size_t>(k)];
            z[k][1] = Q(std::lround(r[static_cast<size_t>(k)] * 64), 64);
          }
          if (ap.enclosure_contains(om, z))
            svg.rect(add(c, add(off, {-cell / 2, -cell / 2})), cell, cell, "fill=\"#808080\"");
        }
    }

  // The w2-level region cut out by the root pairings of x and y.
  std::vector<Vec> normals;
  std::vector<double> los, his;
  for (const auto& a : R.positive) {
    std::vector<Q> av(a.begin(), a.end());
    normals.push_back(planar(t, av));
    double vx = pair_root(R, a, x)[2].get_d(), vy = pair_root(R, a, y)[2].get_d();
    los.push_back(std::min(vx, vy));
    his.push_back(std::max(vx, vy));
  }
  svg.polygon(clip_strips(normals, los, his), "fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"");
  for (auto [p, name] : {std::pair{px, "x"}, std::pair{py, "y"}}) {
    svg.circle(p, 0.04, "fill=\"black\"");
    svg.text(add(p, {0.08, 0.08}), name, "start", 18);
  }
  svg.text({(lo[0] + hi[0]) / 2, lo[1] + 0.25}, "cl({x, y}) in Σ(2, A₂)", "middle", 16);
  return svg.str();
}

}  // namespace babel
