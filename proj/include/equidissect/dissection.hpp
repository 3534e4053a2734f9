#pragma once

#include <optional>
#include <vector>

#include "equidissect/cycles.hpp"
#include "equidissect/geometry.hpp"

namespace equidissect {

// A claimed dissection: a simple polygon together with triangles that are
// supposed to tile it.  T-vertices (a triangle corner in the middle of a
// neighbour's edge) are allowed; validation never assumes edge-to-edge.
struct Dissection {
    Polygon polygon;
    std::vector<Triangle> triangles;
};

// Outcome of validation.  Conditions are checked in a fixed order across the
// whole triangle list, so the verdict kind does not depend on list order:
// degeneracy, then pairwise interior overlap, then containment, then the
// exact area sum.
struct Verdict {
    enum class Kind {
        Ok,
        DegenerateTriangle,     // triangle `first` has zero area
        OverlappingInteriors,   // triangles `first` < `second` overlap
        TriangleOutsidePolygon, // triangle `first` is not contained in the polygon
        AreaMismatch,           // `sum` of piece areas ≠ `polygon_area`
    };
    Kind kind = Kind::Ok;
    std::optional<std::size_t> first;
    std::optional<std::size_t> second;
    std::optional<Rational> sum;
    std::optional<Rational> polygon_area;
    bool ok() const { return kind == Kind::Ok; }
};

const char* verdict_name(Verdict::Kind k);

Verdict validate(const Dissection& d);

// All piece areas equal?  On success carries the common area; otherwise the
// sorted list of distinct areas seen.
struct EqualAreaResult {
    std::optional<Rational> common_area;
    std::vector<Rational> distinct_areas;
    bool equal() const { return common_area.has_value(); }
};

EqualAreaResult equal_area_check(const Dissection& d);

// Boundary walk of the polygon with every dissection vertex that lies on the
// boundary inserted as a subdivision point (in order along each edge).
BrokenLine subdivided_boundary(const Dissection& d);

// The degree-vanishing consistency check: when every piece area has
// ν2 ≥ 0 the colored boundary walk (with subdivision points) must have
// degree 0 under the given map; the check computes the degree and asserts
// this.  When some piece has ν2(area) < 0 the hypothesis fails and the
// offending pieces are reported instead.
struct DegreeCheckReport {
    enum class Status { Pass, HypothesisNotMet };
    Status status = Status::Pass;
    std::vector<std::size_t> offending;  // pieces with ν2(area) < 0
    std::optional<int> degree;           // present when the hypothesis held
};

DegreeCheckReport degree_vanishing_check(const Dissection& d, const AffineMap& map);

}  // namespace equidissect
