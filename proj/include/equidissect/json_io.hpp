#pragma once

#include <json.hpp>

#include "equidissect/balanced.hpp"
#include "equidissect/coloring.hpp"
#include "equidissect/dissection.hpp"
#include "equidissect/geometry.hpp"
#include "equidissect/rational.hpp"

namespace equidissect {

// All wire JSON uses insertion-ordered objects so that identical data always
// serializes to identical bytes.
using Json = nlohmann::ordered_json;

// Rationals serialize as canonical strings "p/q" (or "p" when q = 1).
// Parsing also accepts plain JSON integers; anything else is a ParseError.
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

// Point = [x, y].
Json point_json(const Point& p);
Point point_from_json(const Json& j);

// Broken line / polygon = {"vertices": [[x, y], ...]}.
Json vertices_json(const BrokenLine& line);
BrokenLine broken_line_from_json(const Json& j);
Json polygon_json(const Polygon& poly);
Polygon polygon_from_json(const Json& j);  // structural only; no simplicity check

// Triangle = [[x,y], [x,y], [x,y]].
Json triangle_json(const Triangle& t);
Triangle triangle_from_json(const Json& j);

// Dissection = {"polygon": {...}, "triangles": [triangle, ...]}.
Json dissection_json(const Dissection& d);
Dissection dissection_from_json(const Json& j);

// Affine map = {"matrix": [[a,b],[c,d]], "translation": [tx,ty]}; parsing
// also accepts the generator names "E", "U", "V" as a JSON string.
Json affine_map_json(const AffineMap& map);
AffineMap affine_map_from_json(const Json& j);

// λ and μ triples as arrays of three JSON integers.
Json k4_class_json(const K4Class& c);
Json mu_json(const MuDecomposition& m);

// Edge pairing as 1-based index pairs [[α, β], ...].
Json pairing_json(const EdgePairing& pairing);

// Validation verdict with its failure details.
Json verdict_json(const Verdict& v);

// Full certificate (polygon, hypotheses, λ/μ, conclusion, proof trace).
Json certificate_json(const Certificate& c);

}  // namespace equidissect
