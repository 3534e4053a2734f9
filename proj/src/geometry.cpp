#include "equidissect/geometry.hpp"

#include <algorithm>

namespace equidissect {

Rational wedge(const Vector& v, const Vector& w) { return v.dx * w.dy - v.dy * w.dx; }

Rational dot(const Vector& v, const Vector& w) { return v.dx * w.dx + v.dy * w.dy; }

int orientation(const Point& p, const Point& q, const Point& r) {
    return wedge(q - p, r - p).sign();
}

bool collinear(const Point& p, const Point& q, const Point& r) {
    return orientation(p, q, r) == 0;
}

Rational triangle_signed_area(const Point& p1, const Point& p2, const Point& p3) {
    return wedge(p2 - p1, p3 - p1) / Rational(2);
}

Rational triangle_signed_area(const Triangle& t) {
    return triangle_signed_area(t[0], t[1], t[2]);
}

Rational triangle_area_abs(const Triangle& t) {
    return triangle_signed_area(t[0], t[1], t[2]).abs();
}

Rational generalized_area(const BrokenLine& line) {
    const auto& v = line.vertices;
    const std::size_t n = v.size();
    Rational twice(0);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        twice += a.x * b.y - b.x * a.y;
    }
    return twice / Rational(2);
}

Rational polygon_area_abs(const Polygon& poly) { return generalized_area(poly.boundary).abs(); }

bool point_on_segment(const Point& q, const Point& a, const Point& b) {
    if (!collinear(a, b, q)) return false;
    return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    int d1 = orientation(c, d, a);
    int d2 = orientation(c, d, b);
    int d3 = orientation(a, b, c);
    int d4 = orientation(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && point_on_segment(a, c, d)) return true;
    if (d2 == 0 && point_on_segment(b, c, d)) return true;
    if (d3 == 0 && point_on_segment(c, a, b)) return true;
    if (d4 == 0 && point_on_segment(d, a, b)) return true;
    return false;
}

bool is_simple(const BrokenLine& line) {
    const auto& v = line.vertices;
    const std::size_t n = v.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (v[i] == v[j]) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        // Adjacent edge (b, c): rejecting a backtrack means the triple may be
        // collinear only when b lies strictly between a and c.
        const Point& c = v[(i + 2) % n];
        if (collinear(a, b, c) && dot(a - b, c - b).sign() > 0) return false;
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
            const Point& p = v[j];
            const Point& q = v[(j + 1) % n];
            if (segments_intersect(a, b, p, q)) return false;
        }
    }
    return true;
}

Location locate_point(const Point& p, const Polygon& poly) {
    const auto& v = poly.boundary.vertices;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        if (point_on_segment(p, v[i], v[(i + 1) % n])) return Location::Boundary;
    // Crossing parity of an upward vertical ray, with the half-open rule that
    // makes vertex crossings count exactly once.
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        bool a_left = a.x <= p.x;
        bool b_left = b.x <= p.x;
        if (a_left == b_left) continue;
        // Edge spans the vertical line x = p.x; the upward ray crosses it
        // exactly when p lies strictly below the edge.
        int o = orientation(a, b, p);
        if (a.x < b.x ? o < 0 : o > 0) inside = !inside;
    }
    return inside ? Location::Interior : Location::Exterior;
}

Polygon normalized_ccw(const Polygon& poly) {
    if (generalized_area(poly.boundary).is_negative()) {
        Polygon r = poly;
        std::reverse(r.boundary.vertices.begin(), r.boundary.vertices.end());
        return r;
    }
    return poly;
}

std::vector<Point> clip_halfplane(const std::vector<Point>& subject, const Point& a, const Point& b) {
    std::vector<Point> out;
    const std::size_t n = subject.size();
    if (n == 0) return out;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& cur = subject[i];
        const Point& nxt = subject[(i + 1) % n];
        Rational oc = wedge(b - a, cur - a);
        Rational on = wedge(b - a, nxt - a);
        bool cur_in = !oc.is_negative();
        bool nxt_in = !on.is_negative();
        if (cur_in) out.push_back(cur);
        if (cur_in != nxt_in) {
            // Exact crossing of segment cur→nxt with the line a→b.
            Rational t = oc / (oc - on);
            out.push_back(cur + t * (nxt - cur));
        }
    }
    return out;
}

namespace {

// Shoelace of an (open) vertex list interpreted cyclically.
Rational loop_area(const std::vector<Point>& pts) {
    if (pts.size() < 3) return Rational(0);
    Rational twice(0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point& p = pts[i];
        const Point& q = pts[(i + 1) % pts.size()];
        twice += p.x * q.y - q.x * p.y;
    }
    return twice / Rational(2);
}

// CCW-ordered copy of a triangle, or empty when degenerate.
std::optional<Triangle> ccw_triangle(const Triangle& t) {
    int o = orientation(t[0], t[1], t[2]);
    if (o == 0) return std::nullopt;
    if (o > 0) return t;
    return Triangle{t[0], t[2], t[1]};
}

Rational clip_triangle_pair(const Triangle& s_ccw, const Triangle& t_ccw) {
    std::vector<Point> poly(s_ccw.begin(), s_ccw.end());
    for (int i = 0; i < 3 && !poly.empty(); ++i)
        poly = clip_halfplane(poly, t_ccw[i], t_ccw[(i + 1) % 3]);
    return loop_area(poly);
}

}  // namespace

Rational triangle_intersection_area(const Triangle& s, const Triangle& t) {
    auto sc = ccw_triangle(s);
    auto tc = ccw_triangle(t);
    if (!sc || !tc) return Rational(0);
    return clip_triangle_pair(*sc, *tc);
}

Rational triangle_polygon_intersection_area(const Triangle& t, const Polygon& poly) {
    auto tc = ccw_triangle(t);
    if (!tc) return Rational(0);
    const auto& v = poly.boundary.vertices;
    const std::size_t n = v.size();
    // Fan decomposition from the first vertex.  Signed fan triangles sum to
    // the boundary's winding indicator, so weighting each convex clip by the
    // fan sign yields the exact intersection area even for non-convex P.
    Rational acc(0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        Triangle fan{v[0], v[i], v[i + 1]};
        int o = orientation(fan[0], fan[1], fan[2]);
        if (o == 0) continue;
        auto fc = ccw_triangle(fan);
        Rational piece = clip_triangle_pair(*tc, *fc);
        acc += o > 0 ? piece : -piece;
    }
    // The winding sign of the whole boundary normalizes a clockwise input.
    return generalized_area(poly.boundary).is_negative() ? -acc : acc;
}

bool triangles_interior_disjoint(const Triangle& s, const Triangle& t) {
    return triangle_intersection_area(s, t).is_zero();
}

}  // namespace equidissect
