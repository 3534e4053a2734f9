#include "equidissect/dissection.hpp"

#include <algorithm>
#include <set>

namespace equidissect {

const char* verdict_name(Verdict::Kind k) {
    switch (k) {
        case Verdict::Kind::Ok: return "OK";
        case Verdict::Kind::DegenerateTriangle: return "DegenerateTriangle";
        case Verdict::Kind::OverlappingInteriors: return "OverlappingInteriors";
        case Verdict::Kind::TriangleOutsidePolygon: return "TriangleOutsidePolygon";
        case Verdict::Kind::AreaMismatch: return "AreaMismatch";
    }
    return "?";
}

Verdict validate(const Dissection& d) {
    const auto& ts = d.triangles;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (triangle_area_abs(ts[i]).is_zero()) {
            Verdict v;
            v.kind = Verdict::Kind::DegenerateTriangle;
            v.first = i;
            return v;
        }
    }
    for (std::size_t i = 0; i < ts.size(); ++i) {
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            if (!triangles_interior_disjoint(ts[i], ts[j])) {
                Verdict v;
                v.kind = Verdict::Kind::OverlappingInteriors;
                v.first = i;
                v.second = j;
                return v;
            }
        }
    }
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (triangle_polygon_intersection_area(ts[i], d.polygon) != triangle_area_abs(ts[i])) {
            Verdict v;
            v.kind = Verdict::Kind::TriangleOutsidePolygon;
            v.first = i;
            return v;
        }
    }
    Rational sum(0);
    for (const Triangle& t : ts) sum += triangle_area_abs(t);
    Rational target = polygon_area_abs(d.polygon);
    if (sum != target) {
        Verdict v;
        v.kind = Verdict::Kind::AreaMismatch;
        v.sum = sum;
        v.polygon_area = target;
        return v;
    }
    return {};
}

EqualAreaResult equal_area_check(const Dissection& d) {
    EqualAreaResult r;
    std::set<Rational> seen;
    for (const Triangle& t : d.triangles) seen.insert(triangle_area_abs(t));
    r.distinct_areas.assign(seen.begin(), seen.end());
    if (seen.size() == 1) r.common_area = *seen.begin();
    return r;
}

BrokenLine subdivided_boundary(const Dissection& d) {
    const auto& v = d.polygon.boundary.vertices;
    const std::size_t n = v.size();
    std::set<Point> candidates;
    for (const Triangle& t : d.triangles)
        for (const Point& p : t) candidates.insert(p);
    BrokenLine out;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        out.vertices.push_back(a);
        // Dissection vertices strictly inside edge a→b, ordered along it.
        std::vector<std::pair<Rational, Point>> inner;
        for (const Point& p : candidates) {
            if (p == a || p == b) continue;
            if (!point_on_segment(p, a, b)) continue;
            inner.emplace_back(dot(p - a, b - a), p);
        }
        std::sort(inner.begin(), inner.end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
        for (auto& [param, p] : inner) out.vertices.push_back(p);
    }
    return out;
}

DegreeCheckReport degree_vanishing_check(const Dissection& d, const AffineMap& map) {
    DegreeCheckReport report;
    Valuation zero(0);
    for (std::size_t i = 0; i < d.triangles.size(); ++i)
        if (val2(triangle_area_abs(d.triangles[i])) < zero) report.offending.push_back(i);
    if (!report.offending.empty()) {
        report.status = DegreeCheckReport::Status::HypothesisNotMet;
        return report;
    }
    int deg = degree_of_line(subdivided_boundary(d), map);
    report.degree = deg;
    if (deg != 0)
        throw std::logic_error(
            "boundary degree is nonzero although every piece area has ν2 ≥ 0");
    return report;
}

}  // namespace equidissect
