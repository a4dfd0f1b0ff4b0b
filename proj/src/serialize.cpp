#include "babel/serialize.hpp"

#include <climits>

namespace babel {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

long get_long(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long>();
}

int get_int(const Json& j, const char* what) {
  long v = get_long(j, what);
  if (v < INT_MIN / 8 || v > INT_MAX / 8) bad(std::string(what) + " out of range");
  return static_cast<int>(v);
}

Json prec_to_json(int p) { return p >= kInf ? Json(nullptr) : Json(p); }

int prec_from_json(const Json& j) { return j.is_null() ? kInf : get_int(j, "precision"); }

}  // namespace

Json q_to_json(const Q& x) { return q_to_string(x); }

Q q_from_json(const Json& j) {
  if (j.is_number_integer()) return Q(j.get<long>());
  if (j.is_string()) return q_from_string(j.get<std::string>());
  bad("rational must be a string or an integer");
}

Json to_json(const LexPoly& p, int n) {
  Json out = Json::array();
  for (const auto& t : p.terms()) {
    Json exps = Json::array();
    for (int v = n; v >= 2; --v) exps.push_back(t.mono.exp(v));
    out.push_back({{"exps", exps},
                   {"num", t.coeff.get_num().get_str()},
                   {"den", t.coeff.get_den().get_str()}});
  }
  return out;
}

LexPoly lexpoly_from_json(const Json& j) {
  if (!j.is_array()) bad("LexPoly must be an array of terms");
  std::vector<LexPoly::Term> terms;
  for (const Json& t : j) {
    const Json& ex = field(t, "exps");
    if (!ex.is_array()) bad("exps must be an array");
    std::vector<uint32_t> e(ex.size());
    for (size_t k = 0; k < ex.size(); ++k) {
      long v = get_long(ex[k], "exponent");
      if (v < 0) bad("negative exponent");
      e[ex.size() - 1 - k] = static_cast<uint32_t>(v);  // stored w2 first
    }
    Q num = q_from_json(field(t, "num"));
    Q den = t.contains("den") ? q_from_json(t.at("den")) : Q(1);
    if (den == 0) bad("zero denominator");
    terms.push_back({Monomial(e), num / den});
  }
  return LexPoly::from_terms(std::move(terms));
}

Json to_json(const LinLex& x) {
  Json out = Json::array();
  for (int j = x.n(); j >= 1; --j) out.push_back(q_to_json(x[j]));
  return out;
}

LinLex linlex_from_json(const Json& j, int n) {
  if (!j.is_array()) bad("LinLex must be an array");
  if (static_cast<int>(j.size()) != n)
    bad("LinLex has " + std::to_string(j.size()) + " entries, expected " + std::to_string(n));
  LinLex x(n);
  for (int k = 0; k < n; ++k) x[n - k] = q_from_json(j[static_cast<size_t>(k)]);
  return x;
}

Json point_to_json(const Point& p) {
  Json out = Json::array();
  for (const LinLex& c : p) out.push_back(to_json(c));
  return out;
}

Point point_from_json(const Json& j, int rank, int n) {
  if (!j.is_array()) bad("point must be an array of LinLex coordinates");
  if (static_cast<int>(j.size()) != rank)
    bad("point has " + std::to_string(j.size()) + " coordinates, expected " + std::to_string(rank));
  Point p;
  for (const Json& c : j) p.push_back(linlex_from_json(c, n));
  return p;
}

Json to_json(const WeylElement& w) {
  return {{"fin", w.fin()}, {"trans", point_to_json(w.trans())}, {"text", w.to_string()}};
}

WeylElement weyl_from_json(const RootDatum& R, int n, const Json& j) {
  long fin = get_long(field(j, "fin"), "fin");
  if (fin < 0 || fin >= static_cast<long>(R.finite_weyl.size())) bad("fin index out of range");
  return WeylElement(R, static_cast<int>(fin), point_from_json(field(j, "trans"), R.rank, n));
}

Json to_json(const Val2& v) {
  if (v.inf) return nullptr;
  return {{"j", v.j}, {"i", v.i}};
}

Json to_json(const LS1& x) {
  Json terms = Json::array();
  for (auto [e, c] : x.terms()) terms.push_back({{"i", e}, {"c", c}});
  return {{"q", x.q()}, {"prec", prec_to_json(x.prec())}, {"terms", terms}};
}

LS1 ls1_from_json(const Json& j) {
  long q = get_long(field(j, "q"), "q");
  if (q < 2 || q > 65521 || !is_prime(static_cast<uint32_t>(q))) bad("q must be a prime below 2^16");
  int prec = j.contains("prec") ? prec_from_json(j.at("prec")) : kInf;
  std::map<int, long> terms;
  const Json& ts = field(j, "terms");
  if (!ts.is_array()) bad("terms must be an array");
  for (const Json& t : ts) terms[get_int(field(t, "i"), "i")] += get_long(field(t, "c"), "c");
  return LS1::from_terms(static_cast<uint32_t>(q), terms, prec);
}

Json to_json(const LS2& x) {
  int p1 = kInf;
  for (const auto& [j, l] : x.levels()) p1 = std::min(p1, l.prec());
  Json terms = Json::array();
  Json level_prec = Json::object();
  for (const auto& [j, l] : x.levels()) {
    for (auto [i, c] : l.terms()) terms.push_back({{"j", j}, {"i", i}, {"c", c}});
    if (l.prec() != p1 || l.is_zero()) level_prec[std::to_string(j)] = prec_to_json(l.prec());
  }
  Json out = {{"q", x.q()},
              {"prec", Json::array({prec_to_json(x.prec2()), prec_to_json(p1)})},
              {"terms", terms}};
  if (!level_prec.empty()) out["level_prec"] = level_prec;
  return out;
}

LS2 ls2_from_json(const Json& j) {
  long q = get_long(field(j, "q"), "q");
  if (q < 2 || q > 65521 || !is_prime(static_cast<uint32_t>(q))) bad("q must be a prime below 2^16");
  uint32_t uq = static_cast<uint32_t>(q);
  int p2 = kInf, p1 = kInf;
  if (j.contains("prec") && !j.at("prec").is_null()) {
    const Json& p = j.at("prec");
    if (!p.is_array() || p.size() != 2) bad("prec must be [P2, P1]");
    p2 = prec_from_json(p[0]);
    p1 = prec_from_json(p[1]);
  }
  const Json& ts = field(j, "terms");
  if (!ts.is_array()) bad("terms must be an array");
  std::map<int, std::map<int, long>> by_level;
  for (const Json& t : ts)
    by_level[get_int(field(t, "j"), "j")][get_int(field(t, "i"), "i")] += get_long(field(t, "c"), "c");
  std::map<int, int> lp;
  for (const auto& [lvl, t] : by_level) lp[lvl] = p1;
  if (j.contains("level_prec")) {
    const Json& l = j.at("level_prec");
    if (!l.is_object()) bad("level_prec must be an object");
    for (const auto& [k, v] : l.items()) {
      try {
        lp[std::stoi(k)] = prec_from_json(v);
      } catch (const std::logic_error&) {
        bad("level_prec key '" + k + "' is not an integer");
      }
    }
  }
  std::map<int, LS1> levels;
  for (auto [lvl, prec] : lp) levels[lvl] = LS1::from_terms(uq, by_level[lvl], prec);
  return LS2::from_levels(uq, std::move(levels), p2);
}

Json to_json(const Mat2& g) { return Json::array({to_json(g.a), to_json(g.b), to_json(g.c), to_json(g.d)}); }

Mat2 mat2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) bad("matrix must be an array of 4 series [a, b, c, d]");
  Mat2 g{ls2_from_json(j[0]), ls2_from_json(j[1]), ls2_from_json(j[2]), ls2_from_json(j[3])};
  if (g.b.q() != g.a.q() || g.c.q() != g.a.q() || g.d.q() != g.a.q()) bad("entries over different fields");
  return g;
}

Json to_json(const Mat1& g) { return Json::array({to_json(g.a), to_json(g.b), to_json(g.c), to_json(g.d)}); }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace babel
