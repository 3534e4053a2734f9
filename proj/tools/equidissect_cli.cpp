#include <CLI11.hpp>
#include <array>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "equidissect/balanced.hpp"
#include "equidissect/coloring.hpp"
#include "equidissect/cycles.hpp"
#include "equidissect/dissection.hpp"
#include "equidissect/json_io.hpp"
#include "equidissect/search.hpp"
#include "equidissect/tropical.hpp"

namespace eq = equidissect;
using eq::Json;

namespace {

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw eq::ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw eq::ParseError("input is not valid JSON");
    return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// "E"/"U"/"V", or an inline JSON object {"matrix": ..., "translation": ...}.
eq::AffineMap transform_from_flag(const std::string& text) {
    if (!text.empty() && text.front() == '{') return eq::affine_map_from_json(parse_json(text));
    return eq::AffineMap::named(text);
}

eq::Polygon simple_polygon_from(const Json& j) {
    eq::Polygon poly = eq::polygon_from_json(j);
    if (!eq::is_simple(poly.boundary))
        throw eq::not_simple_error("the polygon boundary must be simple");
    return poly;
}

std::vector<std::string> split_on_commas(const std::string& text, std::size_t expected) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        parts.push_back(text.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (parts.size() != expected)
        throw eq::ParseError("expected " + std::to_string(expected) +
                             " comma-separated rationals, got '" + text + "'");
    return parts;
}

eq::Point point_from_flag(const std::string& text) {
    auto parts = split_on_commas(text, 2);
    return {eq::Rational::parse(parts[0]), eq::Rational::parse(parts[1])};
}

// The input may be a bare JSON array of points or {"points": [...]}.
Json points_payload(const Json& j) {
    if (j.is_array()) return j;
    if (j.is_object() && j.contains("points")) return j.at("points");
    throw eq::ParseError("expected an array of points or {\"points\": [...]}");
}

int run_valuate(const std::string& value, const std::string& input) {
    Json out = Json::object();
    if (!value.empty()) {
        out["value"] = eq::val2(eq::Rational::parse(value)).str();
    } else {
        Json in = parse_json(read_all(input));
        if (in.is_array()) {
            Json values = Json::array();
            for (const Json& v : in) values.push_back(eq::val2(eq::rational_from_json(v)).str());
            out["values"] = std::move(values);
        } else {
            out["value"] = eq::val2(eq::rational_from_json(in)).str();
        }
    }
    out["traceRefs"] = Json::array({"Property 4", "Property 5"});
    emit(out);
    return 0;
}

int run_color(const std::string& point_arg, const std::string& input,
              const std::string& transform) {
    eq::AffineMap map = transform_from_flag(transform);
    Json out = Json::object();
    if (!point_arg.empty()) {
        eq::Color c = eq::color_under(map, point_from_flag(point_arg));
        out["color"] = std::string(1, eq::color_name(c));
    } else {
        Json pts = points_payload(parse_json(read_all(input)));
        Json colors = Json::array();
        for (const Json& p : pts) {
            eq::Color c = eq::color_under(map, eq::point_from_json(p));
            colors.push_back(std::string(1, eq::color_name(c)));
        }
        out["colors"] = std::move(colors);
    }
    out["traceRefs"] = Json::array({"Section 2"});
    emit(out);
    return 0;
}

int run_degree(const std::string& input, const std::string& transform) {
    eq::AffineMap map = transform_from_flag(transform);
    eq::BrokenLine line = eq::broken_line_from_json(parse_json(read_all(input)));
    Json out = Json::object();
    out["degree"] = eq::degree_of_line(line, map);
    out["traceRefs"] = Json::array({"Section 3"});
    emit(out);
    return 0;
}

int run_class(const std::string& input) {
    eq::BrokenLine line = eq::broken_line_from_json(parse_json(read_all(input)));
    eq::K4Class c = eq::class_of_lattice_line(line);
    auto mu = eq::decompose_mu(c);
    Json out = Json::object();
    out["lambda"] = eq::k4_class_json(c);
    out["mu"] = mu ? eq::mu_json(*mu) : Json(nullptr);
    out["traceRefs"] =
        mu ? Json::array({"Section 4", "Lemma 4"}) : Json::array({"Section 4"});
    emit(out);
    return 0;
}

int run_balanced(const std::string& input) {
    eq::Polygon poly = simple_polygon_from(parse_json(read_all(input)));
    auto pairing = eq::pair_edges(poly);
    Json out = Json::object();
    out["balanced"] = pairing.has_value();
    out["pairing"] = pairing ? eq::pairing_json(*pairing) : Json(nullptr);
    out["traceRefs"] = Json::array({"Section 1"});
    emit(out);
    return 0;
}

int run_certify(const std::string& input) {
    eq::Polygon poly = simple_polygon_from(parse_json(read_all(input)));
    eq::Certificate cert = eq::certify(poly);
    Json out = eq::certificate_json(cert);
    out["traceRefs"] =
        cert.conclusion == eq::Certificate::Conclusion::NoOddEquidissection
            ? Json::array({"Lemma 1", "Lemma 2", "Lemma 3", "Lemma 4", "Lemma 5", "Theorem 2"})
            : Json::array({"Theorem 2"});
    emit(out);
    return 0;
}

int run_verify(const std::string& input) {
    eq::Dissection d = eq::dissection_from_json(parse_json(read_all(input)));
    if (!eq::is_simple(d.polygon.boundary))
        throw eq::not_simple_error("the polygon boundary must be simple");
    eq::Verdict v = eq::validate(d);
    Json out = eq::verdict_json(v);
    out["pieces"] = d.triangles.size();
    if (v.ok()) {
        eq::EqualAreaResult areas = eq::equal_area_check(d);
        out["equalAreas"] = areas.equal();
        if (areas.equal()) {
            out["commonArea"] = eq::rational_json(*areas.common_area);
        } else {
            Json distinct = Json::array();
            for (const eq::Rational& a : areas.distinct_areas)
                distinct.push_back(eq::rational_json(a));
            out["distinctAreas"] = std::move(distinct);
        }
    } else {
        out["error"] = "InvalidDissection";
    }
    out["traceRefs"] = Json::array({"Footnote 1"});
    emit(out);
    return v.ok() ? 0 : 1;
}

int run_search(const std::string& input, std::size_t pieces, long long denominator,
               std::uint64_t budget, bool first_only, bool symmetry) {
    eq::Polygon poly = simple_polygon_from(parse_json(read_all(input)));
    eq::SearchSpace space;
    space.polygon = poly;
    space.piece_count = pieces;
    space.denominator = denominator;
    space.symmetry_reduction = symmetry;
    eq::SearchOptions options;
    options.node_budget = budget;
    options.first_only = first_only;
    eq::SearchResult result = eq::enumerate_equidissections(space, options);
    for (const eq::Dissection& d : result.dissections)
        std::cout << eq::dissection_json(d).dump() << '\n';
    Json summary = Json::object();
    summary["pieces"] = pieces;
    summary["denominator"] = denominator;
    summary["count"] = result.dissections.size();
    summary["nodes"] = result.nodes;
    summary["completed"] = result.completed;
    if (!result.completed) summary["error"] = "BudgetExceeded";
    summary["traceRefs"] = Json::array({"Theorem 1"});
    std::cout << summary.dump() << '\n';
    return result.completed ? 0 : 1;
}

void write_svg(const std::string& path, const std::vector<std::array<double, 2>>& pts) {
    std::ofstream out(path);
    if (!out) throw eq::ParseError("cannot open SVG output file: " + path);
    auto sx = [](double u) { return 40.0 + 400.0 * u; };
    auto sy = [](double v) { return 460.0 - 400.0 * v; };
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='500' height='500'>\n"
        << "<rect width='500' height='500' fill='white'/>\n"
        << "<polygon points='" << sx(1) << ',' << sy(0) << ' ' << sx(0) << ',' << sy(1) << ' '
        << sx(0) << ',' << sy(0) << "' fill='none' stroke='black'/>\n";
    // Overlay: the image of the line x+y+z=0, a tripod from the center to the
    // three edge midpoints, separating the regions of the three vertices.
    const double c = 1.0 / 3;
    const std::array<std::array<double, 2>, 3> mids = {{{0.5, 0.5}, {0.5, 0.0}, {0.0, 0.5}}};
    for (const auto& m : mids)
        out << "<line x1='" << sx(c) << "' y1='" << sy(c) << "' x2='" << sx(m[0]) << "' y2='"
            << sy(m[1]) << "' stroke='gray' stroke-dasharray='4'/>\n";
    for (const auto& p : pts)
        out << "<circle cx='" << sx(p[0]) << "' cy='" << sy(p[1])
            << "' r='3' fill='crimson'/>\n";
    out << "</svg>\n";
}

double to_double(const eq::Rational& q) {
    return static_cast<double>(q.num()) / static_cast<double>(q.den());
}

int run_momentum(const std::string& input, const std::string& line, int count, bool torus,
                 const std::string& svg) {
    std::ostringstream csv;
    csv << "input,weights,image-x,image-y\n";
    std::vector<std::array<double, 2>> scatter;
    auto add_row = [&](const std::string& label, const eq::MomentumImage& m) {
        csv << label << ',' << m.weight_x.str() << ';' << m.weight_y.str() << ';'
            << m.weight_z.str() << ',' << m.weight_x.str() << ',' << m.weight_y.str() << '\n';
        scatter.push_back({to_double(m.weight_x), to_double(m.weight_y)});
    };
    if (!line.empty()) {
        auto parts = split_on_commas(line, 3);
        auto images = eq::sample_line_image(eq::Rational::parse(parts[0]),
                                            eq::Rational::parse(parts[1]),
                                            eq::Rational::parse(parts[2]), count);
        for (std::size_t k = 0; k < images.size(); ++k)
            add_row("sample" + std::to_string(k), images[k]);
    } else if (torus) {
        if (!svg.empty())
            throw eq::PreconditionError("SvgUnsupported",
                                        "the SVG scatter only renders the reference triangle");
        Json pts = points_payload(parse_json(read_all(input)));
        for (const Json& pj : pts) {
            if (!pj.is_array() || pj.size() != 2)
                throw eq::ParseError("torus points must be [x, y] pairs");
            eq::Rational x = eq::rational_from_json(pj[0]);
            eq::Rational y = eq::rational_from_json(pj[1]);
            auto [vx, vy] = eq::momentum_torus(x, y);
            csv << x.str() << ';' << y.str() << ",," << vx.str() << ',' << vy.str() << '\n';
        }
    } else {
        Json pts = points_payload(parse_json(read_all(input)));
        for (const Json& pj : pts) {
            if (!pj.is_array() || pj.size() != 3)
                throw eq::ParseError("projective points must be [x, y, z] triples");
            eq::ProjectivePoint p(eq::rational_from_json(pj[0]), eq::rational_from_json(pj[1]),
                                  eq::rational_from_json(pj[2]));
            add_row(p.x().str() + ':' + p.y().str() + ':' + p.z().str(), eq::momentum_p2(p));
        }
    }
    std::cout << csv.str();
    if (!svg.empty()) write_svg(svg, scatter);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for equidissection obstructions of lattice polygons"};
    app.require_subcommand(1);
    int rc = 0;

    std::string val_value, val_input = "-";
    auto* valuate = app.add_subcommand("valuate", "2-adic valuation of rationals");
    valuate->add_option("value", val_value, "rational literal, e.g. 12/5");
    valuate->add_option("-i,--input", val_input,
                        "JSON file ('-' = stdin) with a rational or an array of rationals");
    valuate->callback([&] { rc = run_valuate(val_value, val_input); });

    std::string col_point, col_input = "-", col_transform = "E";
    auto* color_cmd = app.add_subcommand("color", "tropical 3-coloring of rational points");
    color_cmd->add_option("point", col_point, "point literal 'x,y', e.g. '1/2,1/3'");
    color_cmd->add_option("-i,--input", col_input, "JSON file with points (or {\"points\": ...})");
    color_cmd->add_option("-t,--transform", col_transform,
                          "family member: E, U, V, or inline JSON {\"matrix\": ...}");
    color_cmd->callback([&] { rc = run_color(col_point, col_input, col_transform); });

    std::string deg_input = "-", deg_transform = "E";
    auto* degree_cmd = app.add_subcommand("degree", "degree of a closed colored vertex walk");
    degree_cmd->add_option("-i,--input", deg_input, "polygon/broken-line JSON {\"vertices\": ...}");
    degree_cmd->add_option("-t,--transform", deg_transform, "family member (as for color)");
    degree_cmd->callback([&] { rc = run_degree(deg_input, deg_transform); });

    std::string cls_input = "-";
    auto* class_cmd =
        app.add_subcommand("class", "cycle-space class of a lattice broken line (λ and μ)");
    class_cmd->add_option("-i,--input", cls_input, "polygon/broken-line JSON");
    class_cmd->callback([&] { rc = run_class(cls_input); });

    std::string bal_input = "-";
    auto* balanced_cmd = app.add_subcommand("balanced", "opposite-side pairing of a polygon");
    balanced_cmd->add_option("-i,--input", bal_input, "polygon JSON");
    balanced_cmd->callback([&] { rc = run_balanced(bal_input); });

    std::string cert_input = "-";
    auto* certify_cmd =
        app.add_subcommand("certify", "no-odd-equidissection certificate for a polygon");
    certify_cmd->add_option("-i,--input", cert_input, "polygon JSON");
    certify_cmd->callback([&] { rc = run_certify(cert_input); });

    std::string ver_input = "-";
    auto* verify_cmd = app.add_subcommand("verify", "validate a claimed dissection");
    verify_cmd->add_option("-i,--input", ver_input, "dissection JSON");
    verify_cmd->callback([&] { rc = run_verify(ver_input); });

    std::string sea_input = "-";
    std::size_t sea_pieces = 1;
    long long sea_denominator = 1;
    std::uint64_t sea_budget = 10'000'000;
    bool sea_first_only = false, sea_emit_all = false, sea_symmetry = false;
    auto* search_cmd =
        app.add_subcommand("search", "enumerate equal-area dissections over a rational grid");
    search_cmd->add_option("-i,--input", sea_input, "polygon JSON");
    search_cmd->add_option("--pieces", sea_pieces, "number of triangles")->required();
    search_cmd->add_option("--denominator", sea_denominator, "grid denominator D (default 1)");
    search_cmd->add_option("--budget", sea_budget, "node budget (default 10^7)");
    auto* emit_all_flag =
        search_cmd->add_flag("--emit-all", sea_emit_all, "emit every dissection (default)");
    search_cmd->add_flag("--first-only", sea_first_only, "stop after the first dissection")
        ->excludes(emit_all_flag);
    search_cmd->add_flag("--symmetry", sea_symmetry,
                         "keep one representative per polygon-symmetry orbit");
    search_cmd->callback([&] {
        rc = run_search(sea_input, sea_pieces, sea_denominator, sea_budget, sea_first_only,
                        sea_symmetry);
    });

    std::string mom_input = "-", mom_line, mom_svg;
    int mom_count = 100;
    bool mom_torus = false;
    auto* momentum_cmd =
        app.add_subcommand("momentum", "momentum-map images (CSV; optional SVG scatter)");
    momentum_cmd->add_option("-i,--input", mom_input,
                             "JSON file with [x,y,z] triples (or [x,y] pairs with --torus)");
    momentum_cmd->add_option("--line", mom_line, "sample the line a·x+b·y+c·z=0, e.g. '1,1,1'");
    momentum_cmd->add_option("--count", mom_count, "number of line samples (default 100)");
    momentum_cmd->add_flag("--torus", mom_torus, "valuation pairs of torus points instead");
    momentum_cmd->add_option("--svg", mom_svg, "also write an SVG scatter to this file");
    momentum_cmd->callback(
        [&] { rc = run_momentum(mom_input, mom_line, mom_count, mom_torus, mom_svg); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const eq::ParseError& e) {
        Json err = Json::object();
        err["error"] = "ParseError";
        err["message"] = e.what();
        emit(err);
        return 2;
    } catch (const eq::PreconditionError& e) {
        Json err = Json::object();
        err["error"] = e.kind;
        err["message"] = e.what();
        emit(err);
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 70;
    }
    return rc;
}
