#include <doctest.h>

#include "equidissect/geometry.hpp"
#include "support/generators.hpp"

using namespace equidissect;
namespace tg = equidissect::testgen;

namespace {

Point P(long long x, long long y) { return {Rational(x), Rational(y)}; }

Point Q(const char* x, const char* y) { return {Rational::parse(x), Rational::parse(y)}; }

const Polygon kUnitSquare{BrokenLine{{P(0, 0), P(1, 0), P(1, 1), P(0, 1)}}};

const Polygon kHexagon{
    BrokenLine{{P(0, 0), P(2, 0), P(3, 1), P(3, 2), P(1, 2), P(0, 1)}}};

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("wedge, dot, orientation") {
    CHECK(wedge(Vector{Rational(3), Rational(1)}, Vector{Rational(1), Rational(2)}) ==
          Rational(5));
    CHECK(dot(Vector{Rational(3), Rational(1)}, Vector{Rational(1), Rational(2)}) ==
          Rational(5));
    CHECK(orientation(P(0, 0), P(1, 0), P(0, 1)) == 1);
    CHECK(orientation(P(0, 0), P(0, 1), P(1, 0)) == -1);
    CHECK(orientation(P(0, 0), P(1, 1), P(2, 2)) == 0);
    CHECK(collinear(P(0, 0), P(2, 4), P(3, 6)));
    CHECK_FALSE(collinear(P(0, 0), P(2, 4), P(3, 7)));
}

TEST_CASE("triangle areas") {
    CHECK(triangle_signed_area({P(0, 0), P(2, 1), P(1, 3)}) == Rational::parse("5/2"));
    CHECK(triangle_signed_area({P(0, 0), P(1, 3), P(2, 1)}) == Rational::parse("-5/2"));
    CHECK(triangle_area_abs({P(0, 0), P(1, 3), P(2, 1)}) == Rational::parse("5/2"));
    CHECK(triangle_signed_area({P(0, 0), P(1, 1), P(2, 2)}).is_zero());
}

TEST_CASE("generalized area of closed broken lines") {
    CHECK(generalized_area(kUnitSquare.boundary) == Rational(1));
    BrokenLine reversed{{P(0, 0), P(0, 1), P(1, 1), P(1, 0)}};
    CHECK(generalized_area(reversed) == Rational(-1));
    // The figure-eight walk encloses equal positive and negative lobes.
    BrokenLine bowtie{{P(0, 0), P(1, 0), P(0, 1), P(1, 1)}};
    CHECK(generalized_area(bowtie).is_zero());
    CHECK(polygon_area_abs(kHexagon) == Rational(5));
    CHECK(polygon_area_abs(kUnitSquare) == Rational(1));
}

TEST_CASE("translation invariance of generalized area") {
    tg::Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        BrokenLine line = tg::random_lattice_broken_line(rng);
        Vector shift{Rational(tg::random_int(rng, -20, 20)),
                     Rational(tg::random_int(rng, -20, 20))};
        BrokenLine moved = line;
        for (Point& p : moved.vertices) p = p + shift;
        CHECK(generalized_area(moved) == generalized_area(line));
    }
}

TEST_CASE("point on segment") {
    CHECK(point_on_segment(P(1, 1), P(0, 0), P(2, 2)));
    CHECK(point_on_segment(P(0, 0), P(0, 0), P(2, 2)));
    CHECK_FALSE(point_on_segment(P(3, 3), P(0, 0), P(2, 2)));
    CHECK_FALSE(point_on_segment(P(1, 2), P(0, 0), P(2, 2)));
    CHECK(point_on_segment(Q("1/2", "1/2"), P(0, 0), P(1, 1)));
}

TEST_CASE("segment intersection") {
    CHECK(segments_intersect(P(0, 0), P(2, 2), P(0, 2), P(2, 0)));    // proper crossing
    CHECK(segments_intersect(P(0, 0), P(2, 0), P(1, 0), P(1, 5)));    // T-touch
    CHECK(segments_intersect(P(0, 0), P(2, 0), P(1, 0), P(3, 0)));    // collinear overlap
    CHECK(segments_intersect(P(0, 0), P(1, 0), P(1, 0), P(2, 1)));    // shared endpoint
    CHECK_FALSE(segments_intersect(P(0, 0), P(1, 0), P(0, 1), P(1, 1)));
    CHECK_FALSE(segments_intersect(P(0, 0), P(1, 0), P(2, 0), P(3, 0)));
}

TEST_CASE("simplicity") {
    CHECK(is_simple(kUnitSquare.boundary));
    CHECK(is_simple(kHexagon.boundary));
    CHECK_FALSE(is_simple(BrokenLine{{P(0, 0), P(1, 0), P(0, 1), P(1, 1)}}));  // bowtie
    CHECK_FALSE(is_simple(BrokenLine{{P(0, 0), P(2, 0), P(1, 0), P(1, 1)}}));  // overlap
}

TEST_CASE("point location") {
    CHECK(locate_point(Q("1/2", "1/2"), kUnitSquare) == Location::Interior);
    CHECK(locate_point(P(0, 0), kUnitSquare) == Location::Boundary);
    CHECK(locate_point(Q("1/2", "0"), kUnitSquare) == Location::Boundary);
    CHECK(locate_point(P(2, 0), kUnitSquare) == Location::Exterior);
    CHECK(locate_point(Q("-1/7", "1/2"), kUnitSquare) == Location::Exterior);
    CHECK(locate_point(P(1, 1), kHexagon) == Location::Interior);
    CHECK(locate_point(Q("5/2", "3/2"), kHexagon) == Location::Interior);
    CHECK(locate_point(Q("5/2", "1/2"), kHexagon) == Location::Boundary);
    CHECK(locate_point(P(3, 0), kHexagon) == Location::Exterior);
}

TEST_CASE("point location agrees on random grid probes") {
    // Oracle: a point is interior iff it is neither on an edge nor outside by
    // ray parity counted on a generic translated copy; here we cross-check
    // via the triangle clip instead: interior or boundary iff a tiny triangle
    // centred at the point meets the polygon with positive area.
    tg::Rng rng(32);
    for (int i = 0; i < 60; ++i) {
        Polygon poly = tg::random_lattice_polygon(rng, 8);
        for (int j = 0; j < 10; ++j) {
            Point p = tg::random_lattice_point(rng, 14);
            Location loc = locate_point(p, poly);
            Rational eps = Rational::parse("1/1000");
            Triangle probe{p,
                           p + Vector{eps, Rational(0)},
                           p + Vector{Rational(0), eps}};
            Rational meets = triangle_polygon_intersection_area(probe, poly);
            if (loc == Location::Interior) CHECK(meets == triangle_area_abs(probe));
            if (loc == Location::Exterior) CHECK(meets < triangle_area_abs(probe));
        }
    }
}

TEST_CASE("normalization to counterclockwise") {
    Polygon cw{BrokenLine{{P(0, 0), P(0, 1), P(1, 1), P(1, 0)}}};
    Polygon ccw = normalized_ccw(cw);
    CHECK(generalized_area(ccw.boundary) == Rational(1));
    CHECK(normalized_ccw(kHexagon).boundary.vertices == kHexagon.boundary.vertices);
}

TEST_CASE("triangle-polygon clipped area, frozen cases") {
    CHECK(triangle_polygon_intersection_area({P(0, 0), P(2, 0), P(0, 2)}, kUnitSquare) ==
          Rational(1));
    CHECK(triangle_polygon_intersection_area({P(0, 0), Q("3/2", "0"), Q("0", "3/2")},
                                             kUnitSquare) == Rational::parse("7/8"));
    CHECK(triangle_polygon_intersection_area({P(0, 0), P(1, 0), P(0, 1)}, kUnitSquare) ==
          Rational::parse("1/2"));
    CHECK(triangle_polygon_intersection_area({P(5, 5), P(6, 5), P(5, 6)}, kUnitSquare)
              .is_zero());
}

TEST_CASE("pairwise triangle intersection area") {
    Triangle t1{P(0, 0), P(2, 0), P(0, 2)};
    CHECK(triangle_intersection_area(t1, t1) == Rational(2));
    Triangle shifted{P(1, 0), P(3, 0), P(1, 2)};
    CHECK(triangle_intersection_area(t1, shifted) == Rational::parse("1/2"));
    Triangle far{P(10, 10), P(11, 10), P(10, 11)};
    CHECK(triangle_intersection_area(t1, far).is_zero());
}

TEST_CASE("interior disjointness, including edge-touching cases") {
    Triangle t1{P(0, 0), P(2, 0), P(0, 2)};
    // Shares only the segment of the line x+y=2; interiors stay disjoint.
    Triangle t2{P(1, 1), P(2, 2), P(0, 2)};
    CHECK(triangles_interior_disjoint(t1, t2));
    CHECK(triangle_intersection_area(t1, t2).is_zero());
    // Dipping below that line makes the interiors overlap.
    Triangle t3{P(1, 1), P(2, 2), P(0, 1)};
    CHECK_FALSE(triangles_interior_disjoint(t1, t3));
    CHECK(triangle_intersection_area(t1, t3) > Rational(0));
    // Vertex-touching only.
    Triangle t4{P(2, 0), P(3, 0), P(2, 1)};
    CHECK(triangles_interior_disjoint(t1, t4));
}

TEST_CASE("disjointness agrees with zero clipped area on random pairs") {
    tg::Rng rng(33);
    int overlapping = 0;
    for (int i = 0; i < 400; ++i) {
        auto tri = [&] {
            for (;;) {
                Triangle t{tg::random_lattice_point(rng, 4), tg::random_lattice_point(rng, 4),
                           tg::random_lattice_point(rng, 4)};
                if (!triangle_signed_area(t).is_zero()) return t;
            }
        };
        Triangle s = tri(), t = tri();
        bool disjoint = triangles_interior_disjoint(s, t);
        CHECK(disjoint == triangle_intersection_area(s, t).is_zero());
        if (!disjoint) ++overlapping;
    }
    CHECK(overlapping > 50);  // the sample actually exercises both outcomes
}

TEST_CASE("ear clipping produces a valid triangulation") {
    tg::Rng rng(34);
    for (int i = 0; i < 40; ++i) {
        Polygon poly = tg::random_lattice_polygon(rng, 10);
        auto tris = tg::ear_clip(poly);
        CHECK(tris.size() == poly.size() - 2);
        Rational total;
        for (const Triangle& t : tris) {
            Rational a = triangle_signed_area(t);
            CHECK(a > Rational(0));
            total += a;
            CHECK(triangle_polygon_intersection_area(t, poly) == a);
        }
        CHECK(total == polygon_area_abs(poly));
        for (std::size_t s = 0; s < tris.size(); ++s)
            for (std::size_t u = s + 1; u < tris.size(); ++u)
                CHECK(triangles_interior_disjoint(tris[s], tris[u]));
    }
}

}  // TEST_SUITE
