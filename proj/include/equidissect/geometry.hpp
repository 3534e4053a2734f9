#pragma once

#include <array>
#include <compare>
#include <optional>
#include <vector>

#include "equidissect/rational.hpp"

namespace equidissect {

struct Point {
    Rational x;
    Rational y;
    bool operator==(const Point&) const = default;
    // Lexicographic (x, then y); this is the order used to pick canonical
    // "first" points throughout the search.
    std::strong_ordering operator<=>(const Point& o) const {
        if (auto c = x <=> o.x; c != 0) return c;
        return y <=> o.y;
    }
    bool is_lattice() const { return x.is_integer() && y.is_integer(); }
};

struct Vector {
    Rational dx;
    Rational dy;
    bool operator==(const Vector&) const = default;
    bool is_zero() const { return dx.is_zero() && dy.is_zero(); }
    Vector operator-() const { return {-dx, -dy}; }
};

inline Vector operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(const Point& p, const Vector& v) { return {p.x + v.dx, p.y + v.dy}; }
inline Vector operator+(const Vector& a, const Vector& b) { return {a.dx + b.dx, a.dy + b.dy}; }
inline Vector operator*(const Rational& s, const Vector& v) { return {s * v.dx, s * v.dy}; }

// v ∧ w = v.dx·w.dy − v.dy·w.dx, the signed area of the spanned parallelogram.
Rational wedge(const Vector& v, const Vector& w);
Rational dot(const Vector& v, const Vector& w);

// Closed broken line: the vertex list is cyclic, the segment from the last
// vertex back to the first is implied.  Vertices may repeat and edges may
// cross; a Polygon is the special case with a simple boundary.
struct BrokenLine {
    std::vector<Point> vertices;
};

struct Polygon {
    BrokenLine boundary;
    std::size_t size() const { return boundary.vertices.size(); }
    const Point& vertex(std::size_t i) const { return boundary.vertices[i]; }
};

using Triangle = std::array<Point, 3>;

// Sign of the cross product (q−p) ∧ (r−p): +1 left turn, −1 right, 0 collinear.
int orientation(const Point& p, const Point& q, const Point& r);
bool collinear(const Point& p, const Point& q, const Point& r);

// ½ · (p2−p1) ∧ (p3−p1); positive when counterclockwise.
Rational triangle_signed_area(const Point& p1, const Point& p2, const Point& p3);
Rational triangle_signed_area(const Triangle& t);
Rational triangle_area_abs(const Triangle& t);

// Shoelace value ½ Σ OLi ∧ OL(i+1) over the cyclic vertex list.  For a simple
// counterclockwise boundary this is the enclosed area; for an arbitrary closed
// line it is the winding-weighted (generalized) area.
Rational generalized_area(const BrokenLine& line);
Rational polygon_area_abs(const Polygon& poly);

// True when q lies on the closed segment [a, b].
bool point_on_segment(const Point& q, const Point& a, const Point& b);
// True when the closed segments [a,b] and [c,d] share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

// Simplicity of the closed line: at least 3 vertices, all pairwise distinct,
// adjacent edges meeting only at their shared vertex (no backtracking), and
// non-adjacent edges sharing no point at all.
bool is_simple(const BrokenLine& line);

enum class Location { Interior, Boundary, Exterior };
Location locate_point(const Point& p, const Polygon& poly);

// Polygon with counterclockwise (positive-area) boundary; reverses if needed.
Polygon normalized_ccw(const Polygon& poly);

// Sutherland–Hodgman step: the part of the (convex) subject on the closed
// left side of the oriented line a→b.  Exact rational intersection points.
std::vector<Point> clip_halfplane(const std::vector<Point>& subject, const Point& a, const Point& b);

// Area of the intersection of two triangles (each may be degenerate → 0).
Rational triangle_intersection_area(const Triangle& s, const Triangle& t);

// Exact area of t ∩ P for a simple polygon P, via signed fan decomposition of
// P into triangles followed by convex clipping of each piece.
Rational triangle_polygon_intersection_area(const Triangle& t, const Polygon& poly);

// True when the open interiors share no point, i.e. intersection area is 0.
bool triangles_interior_disjoint(const Triangle& s, const Triangle& t);

}  // namespace equidissect
