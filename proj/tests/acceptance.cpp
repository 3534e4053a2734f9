// Acceptance gate: one line per criterion, exit code = number of failed
// criteria.  Each criterion is independent; a failure records the first
// offending detail so the line stays readable.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "equidissect/balanced.hpp"
#include "equidissect/coloring.hpp"
#include "equidissect/cycles.hpp"
#include "equidissect/dissection.hpp"
#include "equidissect/geometry.hpp"
#include "equidissect/rational.hpp"
#include "equidissect/search.hpp"
#include "equidissect/tropical.hpp"
#include "equidissect/valuation.hpp"
#include "support/generators.hpp"

using namespace equidissect;
namespace tg = equidissect::testgen;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    long long checks = 0;
    long long failures = 0;
    std::string first_failure;

    void require(bool ok, const std::string& detail) {
        ++checks;
        if (!ok) {
            ++failures;
            if (first_failure.empty()) first_failure = detail;
        }
    }
};

int g_failed_criteria = 0;

void report(int number, const std::string& label, const Criterion& c, double seconds,
            std::optional<double> budget_seconds = std::nullopt) {
    bool pass = c.failures == 0;
    if (budget_seconds && seconds >= *budget_seconds) {
        pass = false;
    }
    std::ostringstream line;
    line << (pass ? "[PASS] " : "[FAIL] ") << number << ". " << label << " — " << c.checks
         << " checks";
    if (c.failures > 0) line << ", " << c.failures << " failed (first: " << c.first_failure << ")";
    if (budget_seconds && seconds >= *budget_seconds)
        line << ", over time budget of " << *budget_seconds << " s";
    char buf[32];
    std::snprintf(buf, sizeof buf, "  [%.2f s]", seconds);
    line << buf;
    std::cout << line.str() << std::endl;
    if (!pass) ++g_failed_criteria;
}

template <typename F>
void run_criterion(int number, const std::string& label, std::optional<double> budget_seconds,
                   F&& body) {
    Criterion c;
    auto t0 = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("unexpected exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    report(number, label, c, seconds, budget_seconds);
}

Point P(long long x, long long y) { return {Rational(x), Rational(y)}; }

// --- CLI plumbing (criteria 9 and 11) --------------------------------------

struct CliRun {
    int status = -1;
    std::string out;
};

CliRun run_cli(const std::string& cli, const std::string& args) {
    CliRun r;
    std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int rc = pclose(pipe);
    r.status = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/equidissect_accept_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

// --- canonical dissection keys (criteria 8 and 11) --------------------------

std::string point_key(const Point& p) { return "(" + p.x.str() + "," + p.y.str() + ")"; }

std::string dissection_key(const Dissection& d) {
    std::vector<std::string> tris;
    for (const Triangle& t : d.triangles) {
        std::array<std::string, 3> corners{point_key(t[0]), point_key(t[1]), point_key(t[2])};
        std::sort(corners.begin(), corners.end());
        tris.push_back(corners[0] + corners[1] + corners[2]);
    }
    std::sort(tris.begin(), tris.end());
    std::string key;
    for (const auto& t : tris) key += t + ";";
    return key;
}

const Polygon kUnitSquare{BrokenLine{{P(0, 0), P(1, 0), P(1, 1), P(0, 1)}}};

// ----------------------------------------------------------------------------

void criterion_valuation_axioms(Criterion& c) {
    tg::Rng rng(1001);
    for (int i = 0; i < 10'000; ++i) {
        Rational a = tg::random_nonzero_rational(rng);
        Rational b = tg::random_nonzero_rational(rng);
        // multiplicativity, and its division form
        c.require(val2(a * b) == val2(a) + val2(b),
                  "val2(ab) != val2(a)+val2(b) at a=" + a.str() + " b=" + b.str());
        c.require(val2(a / b) == val2(a) - val2(b),
                  "val2(a/b) != val2(a)-val2(b) at a=" + a.str() + " b=" + b.str());
        // ultrametric inequality, occasionally exercising a zero operand
        Rational a2 = (i % 97 == 0) ? Rational(0) : a;
        Valuation lhs = val2(a2 + b);
        Valuation bound = min(val2(a2), val2(b));
        c.require(bound <= lhs, "ultrametric fails at a=" + a2.str() + " b=" + b.str());
        // equality whenever the two valuations differ
        if (val2(a2) != val2(b))
            c.require(lhs == bound,
                      "strict ultrametric equality fails at a=" + a2.str() + " b=" + b.str());
    }
    // integer valuation against direct factorization
    for (int i = 0; i < 1'000; ++i) {
        long long m = tg::random_int(rng, -1'000'000'000'000LL, 1'000'000'000'000LL);
        if (m == 0) m = 6;
        long long twos = 0;
        for (long long v = m; v % 2 == 0; v /= 2) ++twos;
        c.require(val2(BigInt(m)) == Valuation(twos),
                  "factorization mismatch at m=" + std::to_string(m));
        // and the closed form on odd · 2^s
        long long odd = 2 * tg::random_int(rng, -500'000, 500'000) + 1;
        long long s = tg::random_int(rng, 0, 60);
        BigInt n = BigInt(odd) << s;
        c.require(val2(n) == Valuation(s),
                  "odd*2^s mismatch at odd=" + std::to_string(odd) + " s=" + std::to_string(s));
    }
}

void criterion_rainbow_area_bound(Criterion& c) {
    tg::Rng rng(1002);
    const Valuation minus_one(-1);
    for (int t = 0; t < 10; ++t) {
        AffineMap map = tg::random_affine_map(rng);
        AffineMap inv = map.inverse();
        for (int i = 0; i < 1'000; ++i) {
            // a rainbow triangle: draw one point of each color in the image
            // plane and pull it back, so the corners are rainbow under `map`
            std::array<Point, 3> corner;
            for (int target = 0; target < 3; ++target)
                corner[target] =
                    inv.apply(tg::random_point_of_color(rng, static_cast<Color>(target)));
            c.require(is_rainbow(corner[0], corner[1], corner[2], map), "corner colors collide");
            Valuation v = val2(triangle_signed_area(corner[0], corner[1], corner[2]).abs());
            c.require(v <= minus_one,
                      "val2|area| > -1 at " + point_key(corner[0]) + point_key(corner[1]) +
                          point_key(corner[2]));
        }
    }
}

void criterion_lines_two_colors(Criterion& c) {
    tg::Rng rng(1003);
    for (int i = 0; i < 1'000; ++i) {
        Point base = tg::random_rational_point(rng);
        Vector dir{Rational(0), Rational(0)};
        while (dir.is_zero()) dir = {tg::random_rational(rng), tg::random_rational(rng)};
        std::set<char> seen;
        for (int j = 0; j < 100; ++j) {
            Rational t = tg::random_rational(rng, 1000, 1000);
            seen.insert(color_name(color(base + t * dir)));
        }
        c.require(seen.size() <= 2, "three colors on one line at base " + point_key(base));
    }
}

void criterion_doubled_triangulations(Criterion& c) {
    tg::Rng rng(1004);
    const std::array<const char*, 3> maps{"E", "U", "V"};
    for (int i = 0; i < 200; ++i) {
        Polygon poly = tg::random_lattice_polygon(rng, 12);
        std::vector<Triangle> tris = tg::ear_clip(poly);
        // scale everything by 2: every piece area gains val2 >= 0
        Polygon doubled = poly;
        for (Point& v : doubled.boundary.vertices) v = {v.x * Rational(2), v.y * Rational(2)};
        Dissection d{doubled, {}};
        for (Triangle t : tris) {
            for (Point& v : t) v = {v.x * Rational(2), v.y * Rational(2)};
            d.triangles.push_back(t);
        }
        for (const char* name : maps) {
            DegreeCheckReport rep = degree_vanishing_check(d, AffineMap::named(name));
            c.require(rep.status == DegreeCheckReport::Status::Pass,
                      std::string("hypothesis not met under ") + name);
            c.require(rep.degree.has_value() && *rep.degree == 0,
                      std::string("nonzero boundary degree under ") + name);
        }
    }
}

void criterion_parallelogram_dichotomy(Criterion& c) {
    const std::array<K4Class, 6> six{K4Class{1, 1, 0},  K4Class{-1, -1, 0}, K4Class{0, 1, 1},
                                     K4Class{0, -1, -1}, K4Class{1, 0, 1},  K4Class{-1, 0, -1}};
    long long visited = 0;
    for (int x0 = 0; x0 <= 4; ++x0)
     for (int y0 = 0; y0 <= 4; ++y0)
      for (int x1 = 0; x1 <= 4; ++x1)
       for (int y1 = 0; y1 <= 4; ++y1)
        for (int x2 = 0; x2 <= 4; ++x2)
         for (int y2 = 0; y2 <= 4; ++y2) {
            int x3 = x2 - x1 + x0, y3 = y2 - y1 + y0;
            if (x3 < 0 || x3 > 4 || y3 < 0 || y3 > 4) continue;
            long long wx = (x1 - x0) * (long long)(y2 - y1) - (y1 - y0) * (long long)(x2 - x1);
            if (wx == 0) continue;  // degenerate
            ++visited;
            std::array<Point, 4> quad{P(x0, y0), P(x1, y1), P(x2, y2), P(x3, y3)};
            K4Class cls = parallelogram_class(quad);  // asserts the dichotomy internally
            bool even = (wx % 2) == 0;                // |area| = |v0 ∧ v1|
            if (even) {
                c.require(cls.is_zero(), "even area, nonzero class at " + point_key(quad[0]) +
                                             point_key(quad[1]) + point_key(quad[2]));
            } else {
                bool in_six = false;
                for (const K4Class& s : six) in_six = in_six || cls == s;
                c.require(in_six, "odd area, class outside the six at " + point_key(quad[0]) +
                                      point_key(quad[1]) + point_key(quad[2]));
            }
        }
    c.require(visited > 1000, "exhaustive sweep visited too few parallelograms");
}

void criterion_transposition_identities(Criterion& c) {
    tg::Rng rng(1006);
    for (int i = 0; i < 10'000; ++i) {
        BrokenLine line = tg::random_lattice_broken_line(rng);
        const std::size_t n = line.vertices.size();
        std::size_t k = static_cast<std::size_t>(
            tg::random_int(rng, 0, static_cast<long long>(n) - 1));
        std::vector<Vector> sides = side_vectors(line);
        BrokenLine tau = adjacent_transposition(line, k);
        c.require(generalized_area(tau) ==
                      generalized_area(line) - wedge(sides[k], sides[(k + 1) % n]),
                  "area identity fails at i=" + std::to_string(i));
        // class identity: the delta call itself asserts the parallelogram form
        K4Class delta = transposition_class_delta(line, k);
        c.require(delta == class_of_lattice_line(line) - class_of_lattice_line(tau),
                  "class identity fails at i=" + std::to_string(i));
    }
}

void criterion_balanced_parity(Criterion& c) {
    tg::Rng rng(1007);
    for (int i = 0; i < 500; ++i) {
        Polygon poly = tg::random_balanced_polygon(rng);
        Rational area = generalized_area(poly.boundary).abs();
        c.require(area.is_integer(), "non-integer area at i=" + std::to_string(i));
        std::optional<MuDecomposition> mu = decompose_mu(class_of_lattice_line(poly.boundary));
        c.require(mu.has_value(), "class does not decompose at i=" + std::to_string(i));
        if (!mu || !area.is_integer()) continue;
        long long area_parity = static_cast<long long>(area.num() % 2);
        long long mu_parity = ((mu->mu1 + mu->mu2 + mu->mu3) % 2 + 2) % 2;
        c.require(area_parity == mu_parity, "parity mismatch at i=" + std::to_string(i));
    }
}

void criterion_desk_searches(Criterion& c) {
    // three pieces on the unit square, denominators up to 4 (grid lcm 12):
    // completes with no dissections, well inside the node budget
    SearchResult three = enumerate_equidissections({kUnitSquare, 3, 12});
    c.require(three.completed, "3-piece search exhausted its node budget");
    c.require(three.dissections.empty(),
              "3-piece search claims " + std::to_string(three.dissections.size()) +
                  " dissections");

    // two pieces: exactly the two diagonal cuts
    SearchResult two = enumerate_equidissections({kUnitSquare, 2, 4});
    c.require(two.completed, "2-piece search exhausted its node budget");
    std::set<std::string> found;
    for (const Dissection& d : two.dissections) found.insert(dissection_key(d));
    std::set<std::string> diagonals{
        dissection_key({kUnitSquare, {{P(0, 0), P(1, 0), P(0, 1)}, {P(0, 1), P(1, 0), P(1, 1)}}}),
        dissection_key({kUnitSquare, {{P(0, 0), P(1, 0), P(1, 1)}, {P(0, 0), P(1, 1), P(0, 1)}}})};
    c.require(found == diagonals, "2-piece search is not exactly the two diagonal cuts");

    // four pieces at denominator 2: finds the center cut
    SearchResult four = enumerate_equidissections({kUnitSquare, 4, 2});
    c.require(four.completed, "4-piece search exhausted its node budget");
    Point center{Rational::parse("1/2"), Rational::parse("1/2")};
    Dissection center_cut{kUnitSquare,
                          {{P(0, 0), P(1, 0), center},
                           {P(1, 0), P(1, 1), center},
                           {P(1, 1), P(0, 1), center},
                           {P(0, 1), P(0, 0), center}}};
    std::string wanted = dissection_key(center_cut);
    bool has_center = false;
    for (const Dissection& d : four.dissections) has_center = has_center || dissection_key(d) == wanted;
    c.require(has_center, "4-piece search at denominator 2 misses the center cut");
}

void criterion_certificate_cli(Criterion& c) {
    const char* cli = std::getenv("EQUIDISSECT_CLI");
    if (!cli) {
        c.require(false, "EQUIDISSECT_CLI is not set");
        return;
    }
    struct Case {
        const char* name;
        const char* polygon;
        const char* conclusion;
        const char* reason;  // nullptr when not applicable
    };
    const std::array<Case, 5> cases{
        Case{"square", R"({"vertices":[[0,0],[1,0],[1,1],[0,1]]})", "NoOddEquidissection",
             nullptr},
        Case{"hexagon", R"({"vertices":[[0,0],[2,0],[3,1],[3,2],[1,2],[0,1]]})",
             "NoOddEquidissection", nullptr},
        Case{"triangle", R"({"vertices":[[0,0],[1,0],[0,1]]})", "NotApplicable", "notBalanced"},
        Case{"rectangle", R"({"vertices":[[0,0],[2,0],[2,1],[0,1]]})", "NotApplicable",
             "evenArea"},
        Case{"halfsquare", R"({"vertices":[[0,0],["1/2",0],["1/2","1/2"],[0,"1/2"]]})",
             "NotApplicable", "notLattice"},
    };
    for (const Case& k : cases) {
        std::string path = write_temp(std::string("certify_") + k.name + ".json", k.polygon);
        CliRun r = run_cli(cli, "certify -i " + path);
        c.require(r.status == 0, std::string(k.name) + ": exit code " + std::to_string(r.status));
        nlohmann::json j = nlohmann::json::parse(r.out, nullptr, false);
        if (j.is_discarded()) {
            c.require(false, std::string(k.name) + ": output is not JSON");
            continue;
        }
        c.require(j.value("conclusion", "") == k.conclusion,
                  std::string(k.name) + ": wrong conclusion");
        if (k.reason)
            c.require(j.value("reason", "") == k.reason, std::string(k.name) + ": wrong reason");
        if (std::string(k.name) == "hexagon")
            c.require(j.value("area", "") == "5", "hexagon: wrong area");
    }
}

void criterion_chart_agreement(Criterion& c) {
    tg::Rng rng(1010);
    for (int i = 0; i < 1'000; ++i) {
        Point p = tg::random_rational_point(rng);
        c.require(chart_agreement(p), "chart disagreement at " + point_key(p));
    }
}

void criterion_search_verify_roundtrip(Criterion& c) {
    const char* cli = std::getenv("EQUIDISSECT_CLI");
    if (!cli) {
        c.require(false, "EQUIDISSECT_CLI is not set");
        return;
    }
    std::string square =
        write_temp("square.json", R"({"vertices":[[0,0],[1,0],[1,1],[0,1]]})");
    const std::array<std::string, 2> searches{
        "search --pieces 2 --denominator 1 -i " + square,
        "search --pieces 4 --denominator 2 -i " + square,
    };
    for (const std::string& args : searches) {
        CliRun first = run_cli(cli, args);
        CliRun second = run_cli(cli, args);
        c.require(first.status == 0, args + ": exit code " + std::to_string(first.status));
        c.require(first.out == second.out && first.status == second.status,
                  args + ": two runs differ");
        std::istringstream lines(first.out);
        std::string line;
        int verified = 0;
        while (std::getline(lines, line)) {
            if (line.rfind("{\"polygon\"", 0) != 0) continue;  // summary line
            std::string path = write_temp("roundtrip.json", line);
            CliRun v = run_cli(cli, "verify -i " + path);
            c.require(v.status == 0, "verify exit code " + std::to_string(v.status));
            nlohmann::json j = nlohmann::json::parse(v.out, nullptr, false);
            bool ok = !j.is_discarded() && j.value("verdict", "") == "OK" &&
                      j.value("equalAreas", false);
            c.require(ok, "emitted dissection did not re-validate: " + line);
            ++verified;
        }
        c.require(verified > 0, args + ": no dissections emitted");
    }
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    run_criterion(1, "valuation axioms on random rationals, and against direct factorization",
                  5.0, criterion_valuation_axioms);
    run_criterion(2, "rainbow triangles have val2|area| <= -1 under random unimodular maps",
                  30.0, criterion_rainbow_area_bound);
    run_criterion(3, "rational lines carry at most two colors", std::nullopt,
                  criterion_lines_two_colors);
    run_criterion(4, "doubled triangulations have boundary degree 0 under E, U, V", std::nullopt,
                  criterion_doubled_triangulations);
    run_criterion(5, "parallelogram class dichotomy, exhaustive on the [0,4]^2 grid", 10.0,
                  criterion_parallelogram_dichotomy);
    run_criterion(6, "adjacent-transposition area and class identities", std::nullopt,
                  criterion_transposition_identities);
    run_criterion(7, "balanced polygons decompose with matching area parity", std::nullopt,
                  criterion_balanced_parity);
    run_criterion(8, "desk-scale exhaustive searches on the unit square", 600.0,
                  criterion_desk_searches);
    run_criterion(9, "certificate CLI verdicts and reasons", std::nullopt,
                  criterion_certificate_cli);
    run_criterion(10, "momentum-region coloring agrees with the tropical coloring on z=1",
                  std::nullopt, criterion_chart_agreement);
    run_criterion(11, "search output re-validates through verify, byte-identical across runs",
                  std::nullopt, criterion_search_verify_roundtrip);
    double total = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << (g_failed_criteria == 0 ? "all criteria passed" : "criteria failed: ")
              << (g_failed_criteria == 0 ? "" : std::to_string(g_failed_criteria));
    char buf[32];
    std::snprintf(buf, sizeof buf, "  [total %.2f s]", total);
    std::cout << buf << std::endl;
    return g_failed_criteria;
}
