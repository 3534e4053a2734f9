#pragma once

#include <utility>
#include <vector>

#include "equidissect/coloring.hpp"
#include "equidissect/geometry.hpp"
#include "equidissect/valuation.hpp"

namespace equidissect {

// Point of the projective plane, stored canonically: the first nonzero
// coordinate is scaled to 1, so structural equality is projective equality.
class ProjectivePoint {
public:
    // Throws PreconditionError("ZeroPoint") when all three are zero.
    ProjectivePoint(const Rational& x, const Rational& y, const Rational& z);

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    const Rational& z() const { return z_; }

    bool operator==(const ProjectivePoint&) const = default;

private:
    Rational x_;
    Rational y_;
    Rational z_;
};

// Point of the closed reference triangle T with vertices X = (1,0),
// Y = (0,1), Z = (0,0), carried as exact barycentric weights over those
// vertices: nonnegative, summing to 1.  The planar position is
// wx·(1,0) + wy·(0,1) + wz·(0,0) = (wx, wy).
struct MomentumImage {
    Rational weight_x;
    Rational weight_y;
    Rational weight_z;
    Point position() const { return {weight_x, weight_y}; }
    bool operator==(const MomentumImage&) const = default;
};

// The momentum map on the projective plane: vertex weights 2^{−ν2(·)} per
// coordinate (a zero coordinate weighs 0), normalized to sum 1.  Well
// defined on projective classes since scaling shifts all three valuations
// by the same amount.
MomentumImage momentum_p2(const ProjectivePoint& p);

// The momentum map on the algebraic torus: (ν2(x), ν2(y)).
// Throws PreconditionError("ZeroCoordinate") when x or y is zero.
std::pair<Valuation, Valuation> momentum_torus(const Rational& x, const Rational& y);

// Momentum images of `count` points sampled on the projective line
// ax + by + cz = 0 by a deterministic sweep of a rational parameter along
// a fixed kernel basis (both basis points are themselves included when
// count permits).  Throws PreconditionError("ZeroLine") when a=b=c=0.
std::vector<MomentumImage> sample_line_image(const Rational& a, const Rational& b,
                                             const Rational& c, int count);

// The three regions into which the image of the line x+y+z = 0 cuts T,
// named after the vertex of T each one contains.
enum class Region { X, Y, Z };

const char* region_name(Region r);

// Region of T containing the image point: the vertex with the (weakly)
// maximal barycentric weight, ties resolved toward X, then Y — which is
// exactly the side of the cut walls a boundary point belongs to.
Region region_of(const MomentumImage& m);

// Region ↔ color dictionary, fixed once by evaluating the three lattice
// representatives (1,0), (0,1), (0,0) through both the momentum map and
// the coloring (and checking they land in three distinct regions).
Color region_color(Region r);

// True iff coloring by momentum region on the affine chart z = 1 agrees
// with the tropical coloring at p.
bool chart_agreement(const Point& p);

}  // namespace equidissect
