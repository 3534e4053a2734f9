#include "equidissect/json_io.hpp"

namespace equidissect {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing object key \"") + key + '"');
    return j.at(key);
}

}  // namespace

Json rational_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const ParseError&) {
            bad("bad rational literal: " + j.dump());
        }
    }
    bad("expected a rational (string \"p/q\" or integer), got " + j.dump());
}

Json point_json(const Point& p) { return Json::array({rational_json(p.x), rational_json(p.y)}); }

Point point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) bad("a point must be an [x, y] array, got " + j.dump());
    return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Json vertices_json(const BrokenLine& line) {
    Json verts = Json::array();
    for (const Point& p : line.vertices) verts.push_back(point_json(p));
    Json out = Json::object();
    out["vertices"] = std::move(verts);
    return out;
}

BrokenLine broken_line_from_json(const Json& j) {
    const Json& verts = member(j, "vertices");
    if (!verts.is_array() || verts.empty()) bad("\"vertices\" must be a nonempty array");
    BrokenLine line;
    for (const Json& v : verts) line.vertices.push_back(point_from_json(v));
    return line;
}

Json polygon_json(const Polygon& poly) { return vertices_json(poly.boundary); }

Polygon polygon_from_json(const Json& j) {
    BrokenLine boundary = broken_line_from_json(j);
    if (boundary.vertices.size() < 3) bad("a polygon needs at least 3 vertices");
    return {std::move(boundary)};
}

Json triangle_json(const Triangle& t) {
    return Json::array({point_json(t[0]), point_json(t[1]), point_json(t[2])});
}

Triangle triangle_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) bad("a triangle must be an array of 3 points");
    return {point_from_json(j[0]), point_from_json(j[1]), point_from_json(j[2])};
}

Json dissection_json(const Dissection& d) {
    Json out = Json::object();
    out["polygon"] = polygon_json(d.polygon);
    Json ts = Json::array();
    for (const Triangle& t : d.triangles) ts.push_back(triangle_json(t));
    out["triangles"] = std::move(ts);
    return out;
}

Dissection dissection_from_json(const Json& j) {
    Dissection d;
    d.polygon = polygon_from_json(member(j, "polygon"));
    const Json& ts = member(j, "triangles");
    if (!ts.is_array()) bad("\"triangles\" must be an array");
    for (const Json& t : ts) d.triangles.push_back(triangle_from_json(t));
    return d;
}

Json affine_map_json(const AffineMap& map) {
    const auto& m = map.matrix();
    const auto& t = map.translation();
    Json out = Json::object();
    out["matrix"] = Json::array({Json::array({rational_json(m[0]), rational_json(m[1])}),
                                 Json::array({rational_json(m[2]), rational_json(m[3])})});
    out["translation"] = Json::array({rational_json(t[0]), rational_json(t[1])});
    return out;
}

AffineMap affine_map_from_json(const Json& j) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        try {
            return AffineMap::named(name);
        } catch (const std::exception&) {
            bad("unknown transform name \"" + name + '"');
        }
    }
    const Json& m = member(j, "matrix");
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
        !m[1].is_array() || m[1].size() != 2)
        bad("\"matrix\" must be a 2x2 array");
    std::array<Rational, 4> mat = {rational_from_json(m[0][0]), rational_from_json(m[0][1]),
                                   rational_from_json(m[1][0]), rational_from_json(m[1][1])};
    std::array<Rational, 2> tr = {Rational(0), Rational(0)};
    if (j.contains("translation")) {
        const Json& t = j.at("translation");
        if (!t.is_array() || t.size() != 2) bad("\"translation\" must be a 2-vector");
        tr = {rational_from_json(t[0]), rational_from_json(t[1])};
    }
    return AffineMap(mat, tr);
}

Json k4_class_json(const K4Class& c) { return Json::array({c.lambda1, c.lambda2, c.lambda3}); }

Json mu_json(const MuDecomposition& m) { return Json::array({m.mu1, m.mu2, m.mu3}); }

Json pairing_json(const EdgePairing& pairing) {
    Json out = Json::array();
    for (const auto& [a, b] : pairing.pairs) out.push_back(Json::array({a + 1, b + 1}));
    return out;
}

Json verdict_json(const Verdict& v) {
    Json out = Json::object();
    out["verdict"] = verdict_name(v.kind);
    if (v.first) out["first"] = *v.first;
    if (v.second) out["second"] = *v.second;
    if (v.sum) out["sum"] = rational_json(*v.sum);
    if (v.polygon_area) out["polygonArea"] = rational_json(*v.polygon_area);
    return out;
}

Json certificate_json(const Certificate& c) {
    Json out = Json::object();
    out["polygon"] = polygon_json(c.polygon);
    out["isLattice"] = c.is_lattice;
    out["pairing"] = c.pairing ? pairing_json(*c.pairing) : Json(nullptr);
    out["area"] = rational_json(c.area);
    out["classLambda"] = c.class_lambda ? k4_class_json(*c.class_lambda) : Json(nullptr);
    out["mu"] = c.mu ? mu_json(*c.mu) : Json(nullptr);
    out["conclusion"] = c.conclusion == Certificate::Conclusion::NoOddEquidissection
                            ? "NoOddEquidissection"
                            : "NotApplicable";
    if (c.conclusion == Certificate::Conclusion::NotApplicable) out["reason"] = c.reason;
    out["trace"] = c.trace;
    return out;
}

}  // namespace equidissect
