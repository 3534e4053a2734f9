#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "equidissect/cycles.hpp"
#include "equidissect/geometry.hpp"

namespace equidissect {

// Perfect matching of the polygon's sides into opposite pairs: for every
// pair (α, β), side vector v_β == −v_α.  Indices are 0-based here; the JSON
// wire format is 1-based.
struct EdgePairing {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

// Side vectors v_i = L_{i+1} − L_i of the cyclic vertex list.
std::vector<Vector> side_vectors(const BrokenLine& line);

// Greedy matching of sides against negated sides, lowest indices first.
// Succeeds iff the side-vector multiset is symmetric under negation
// (the polygon is balanced); returns nullopt otherwise.
std::optional<EdgePairing> pair_edges(const Polygon& poly);

// The broken line with the same start whose side-vector sequence is the
// σ-permuted one: position k carries v_{σ⁻¹(k)}.  sigma[j] = new position of
// original side j (0-based permutation of 0..n−1).
BrokenLine apply_permutation(const BrokenLine& line, const std::vector<std::size_t>& sigma);

// Swap of adjacent sides i and i+1 (cyclic, 0-based).
BrokenLine adjacent_transposition(const BrokenLine& line, std::size_t i);

// class(L) − class(τ_i(L)); computed directly and asserted equal to the class
// of the parallelogram L_i, L_{i+1}, L_{i+2}, L_i + v_{i+1}.
K4Class transposition_class_delta(const BrokenLine& line, std::size_t i);

// Class of the boundary walk of a lattice parallelogram given as 4 vertices
// in cyclic order (opposite sides must negate).  Also asserts the dichotomy:
// even area → zero class, odd area → one of ±(σ2+σ3), ±(σ3+σ1), ±(σ1+σ2).
K4Class parallelogram_class(const std::array<Point, 4>& vertices);

// Certificate that a polygon admits no equidissection into an odd number of
// equal-area triangles, or the first hypothesis that failed.
struct Certificate {
    enum class Conclusion { NoOddEquidissection, NotApplicable };

    Polygon polygon;
    bool is_lattice = false;
    std::optional<EdgePairing> pairing;
    Rational area;                      // |generalized area| of the boundary
    std::optional<K4Class> class_lambda;
    std::optional<MuDecomposition> mu;
    Conclusion conclusion = Conclusion::NotApplicable;
    std::string reason;                 // notLattice | notBalanced | nonIntegerArea | evenArea
    std::vector<std::string> trace;     // human-readable proof steps
};

// Runs the full hypothesis chain: lattice vertices → balanced side pairing →
// odd integer area → boundary class → μ decomposition → parity comparison.
// Precondition: the polygon boundary is simple.
Certificate certify(const Polygon& poly);

}  // namespace equidissect
