#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equidissect/balanced.hpp"
#include "equidissect/coloring.hpp"
#include "equidissect/cycles.hpp"
#include "equidissect/dissection.hpp"
#include "equidissect/json_io.hpp"
#include "equidissect/search.hpp"
#include "equidissect/tropical.hpp"

namespace py = pybind11;
namespace eq = equidissect;
using eq::Json;

namespace {

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw eq::ParseError("input is not valid JSON");
    return j;
}

eq::AffineMap map_from(const std::string& text) {
    if (!text.empty() && text.front() == '{') return eq::affine_map_from_json(parse_json(text));
    return eq::AffineMap::named(text);
}

eq::Polygon simple_polygon(const std::string& text) {
    eq::Polygon poly = eq::polygon_from_json(parse_json(text));
    if (!eq::is_simple(poly.boundary))
        throw eq::not_simple_error("the polygon boundary must be simple");
    return poly;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact-arithmetic core for equidissection obstructions (JSON-string interface)";

    py::register_exception<eq::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<eq::PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    m.def(
        "val2",
        [](const std::string& value) { return eq::val2(eq::Rational::parse(value)).str(); },
        py::arg("value"), "2-adic valuation of a rational literal; 'inf' for zero");

    m.def(
        "color",
        [](const std::string& x, const std::string& y, const std::string& transform) {
            eq::Point p{eq::Rational::parse(x), eq::Rational::parse(y)};
            return std::string(1, eq::color_name(eq::color_under(map_from(transform), p)));
        },
        py::arg("x"), py::arg("y"), py::arg("transform") = "E",
        "tropical color 'A'/'B'/'C' of a rational point under a family member");

    m.def(
        "degree",
        [](const std::string& line_json, const std::string& transform) {
            eq::BrokenLine line = eq::broken_line_from_json(parse_json(line_json));
            return eq::degree_of_line(line, map_from(transform));
        },
        py::arg("line_json"), py::arg("transform") = "E",
        "degree of the colored vertex walk of a closed broken line");

    m.def(
        "classify",
        [](const std::string& line_json) {
            eq::BrokenLine line = eq::broken_line_from_json(parse_json(line_json));
            eq::K4Class c = eq::class_of_lattice_line(line);
            auto mu = eq::decompose_mu(c);
            Json out = Json::object();
            out["lambda"] = eq::k4_class_json(c);
            out["mu"] = mu ? eq::mu_json(*mu) : Json(nullptr);
            return out.dump();
        },
        py::arg("line_json"), "cycle-space class (lambda, and mu when it exists) as JSON");

    m.def(
        "pair_edges",
        [](const std::string& polygon_json)
            -> std::optional<std::vector<std::pair<std::size_t, std::size_t>>> {
            auto pairing = eq::pair_edges(simple_polygon(polygon_json));
            if (!pairing) return std::nullopt;
            std::vector<std::pair<std::size_t, std::size_t>> out;
            for (const auto& [i, j] : pairing->pairs) out.emplace_back(i + 1, j + 1);
            return out;
        },
        py::arg("polygon_json"),
        "opposite-side pairing as 1-based index pairs, or None if not balanced");

    m.def(
        "certify",
        [](const std::string& polygon_json) {
            return eq::certificate_json(eq::certify(simple_polygon(polygon_json))).dump();
        },
        py::arg("polygon_json"), "no-odd-equidissection certificate as JSON");

    m.def(
        "validate",
        [](const std::string& dissection_json) {
            eq::Dissection d = eq::dissection_from_json(parse_json(dissection_json));
            if (!eq::is_simple(d.polygon.boundary))
                throw eq::not_simple_error("the polygon boundary must be simple");
            eq::Verdict v = eq::validate(d);
            Json out = eq::verdict_json(v);
            if (v.ok()) {
                eq::EqualAreaResult areas = eq::equal_area_check(d);
                out["equalAreas"] = areas.equal();
                if (areas.equal()) out["commonArea"] = eq::rational_json(*areas.common_area);
            }
            return out.dump();
        },
        py::arg("dissection_json"), "validity verdict for a claimed dissection as JSON");

    m.def(
        "search",
        [](const std::string& polygon_json, std::size_t pieces, long long denominator,
           std::uint64_t budget, bool first_only, bool symmetry) {
            eq::SearchSpace space;
            space.polygon = simple_polygon(polygon_json);
            space.piece_count = pieces;
            space.denominator = denominator;
            space.symmetry_reduction = symmetry;
            eq::SearchOptions options;
            options.node_budget = budget;
            options.first_only = first_only;
            eq::SearchResult result = eq::enumerate_equidissections(space, options);
            Json out = Json::object();
            Json found = Json::array();
            for (const eq::Dissection& d : result.dissections)
                found.push_back(eq::dissection_json(d));
            out["dissections"] = std::move(found);
            out["nodes"] = result.nodes;
            out["completed"] = result.completed;
            return out.dump();
        },
        py::arg("polygon_json"), py::arg("pieces"), py::arg("denominator") = 1,
        py::arg("budget") = std::uint64_t{10'000'000}, py::arg("first_only") = false,
        py::arg("symmetry") = false,
        "enumerate equal-area dissections with vertices on the 1/D grid, as JSON");

    m.def(
        "momentum_p2",
        [](const std::string& x, const std::string& y, const std::string& z) {
            eq::ProjectivePoint p(eq::Rational::parse(x), eq::Rational::parse(y),
                                  eq::Rational::parse(z));
            eq::MomentumImage image = eq::momentum_p2(p);
            auto [u, v] = image.position();
            return std::make_pair(u.str(), v.str());
        },
        py::arg("x"), py::arg("y"), py::arg("z"),
        "momentum-map image of a projective point, as a rational coordinate pair");

    m.def(
        "momentum_torus",
        [](const std::string& x, const std::string& y) {
            auto [vx, vy] =
                eq::momentum_torus(eq::Rational::parse(x), eq::Rational::parse(y));
            return std::make_pair(vx.str(), vy.str());
        },
        py::arg("x"), py::arg("y"),
        "valuation pair of a torus point, as strings ('inf' never occurs here)");
}
