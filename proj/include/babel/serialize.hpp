#pragma once

// JSON forms of the library values. Rationals are strings "p" or "p/q"; readers
// also accept JSON integers. Malformed input raises Error(InvalidInput).

#include <nlohmann/json.hpp>

#include "babel/apartment.hpp"
#include "babel/hlf.hpp"
#include "babel/sl2.hpp"

namespace babel {

using Json = nlohmann::ordered_json;

Json q_to_json(const Q& x);
Q q_from_json(const Json& j);

// [{"exps":[e_n,...,e_2], "num":..., "den":...}], sorted descending, no zero terms.
Json to_json(const LexPoly& p, int n);
LexPoly lexpoly_from_json(const Json& j);

// [r_n, ..., r_1]
Json to_json(const LinLex& x);
LinLex linlex_from_json(const Json& j, int n);

// One LinLex per simple-root coordinate.
Json point_to_json(const Point& p);
Point point_from_json(const Json& j, int rank, int n);

Json to_json(const WeylElement& w);
WeylElement weyl_from_json(const RootDatum& R, int n, const Json& j);

Json to_json(const Val2& v);

// {"q":5, "prec":[P2,P1], "terms":[{"j":..,"i":..,"c":..}]}. null precisions are
// exact. P1 is the least level precision; "level_prec" lists the levels that differ
// from it, including inexact zero levels.
Json to_json(const LS2& x);
LS2 ls2_from_json(const Json& j);

Json to_json(const LS1& x);
LS1 ls1_from_json(const Json& j);

// [a, b, c, d]
Json to_json(const Mat2& g);
Mat2 mat2_from_json(const Json& j);
Json to_json(const Mat1& g);

Json parse_json(const std::string& text);

}  // namespace babel
