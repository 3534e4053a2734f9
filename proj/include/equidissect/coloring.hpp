#pragma once

#include <array>
#include <string>

#include "equidissect/geometry.hpp"
#include "equidissect/valuation.hpp"

namespace equidissect {

enum class Color { A, B, C };

char color_name(Color c);
Color color_from_name(char c);

// Residue of a lattice point mod 2; each coordinate is 0 or 1.
struct Residue {
    int x;
    int y;
    bool operator==(const Residue&) const = default;
};

// Throws NotLattice when either coordinate is not an integer.
Residue residue_of(const Point& p);

// The tropical three-coloring of the rational plane:
//   A  when ν2(x) > 0 and ν2(y) > 0,
//   B  when ν2(y) ≤ 0 and ν2(x) > ν2(y),
//   C  when ν2(x) ≤ 0 and ν2(y) ≥ ν2(x).
// The three cases are exhaustive and mutually exclusive.
Color color(const Point& p);

// Closed form on lattice points, where the color depends only on the residue:
//   (0,0) → A,  (0,1) → B,  (1,0) → C,  (1,1) → C.
Color lattice_color(const Residue& r);

// Affine map p ↦ M·p + t with |det M| == 1 (area-preserving up to sign).
// Lattice-level operations (residue action) additionally require all entries
// to be integers; rational entries are accepted for plane-level use.
class AffineMap {
public:
    AffineMap(std::array<Rational, 4> matrix, std::array<Rational, 2> translation);

    // The three named generators of the family used on lattice polygons:
    //   E : identity
    //   U : (x, y) → (x + y, y)
    //   V : (x, y) → (y + 1, x)
    static AffineMap named(const std::string& name);

    Point apply(const Point& p) const;
    AffineMap inverse() const;  // exists since |det| == 1
    Rational det() const;
    bool is_lattice() const;
    Residue apply_residue(const Residue& r) const;  // requires is_lattice()

    const std::array<Rational, 4>& matrix() const { return m_; }
    const std::array<Rational, 2>& translation() const { return t_; }

private:
    std::array<Rational, 4> m_;  // row-major: [a, b; c, d]
    std::array<Rational, 2> t_;
};

// Color of the transformed point: the member of the coloring family at map.
Color color_under(const AffineMap& map, const Point& p);

// True when the three transformed points receive three distinct colors.
bool is_rainbow(const Point& p1, const Point& p2, const Point& p3, const AffineMap& map);

}  // namespace equidissect
