#pragma once

#include <optional>
#include <vector>

#include "equidissect/coloring.hpp"
#include "equidissect/geometry.hpp"

namespace equidissect {

// Integer chain on the six edges of the complete graph on the four residue
// classes X1=(0,0), X2=(0,1), X3=(1,0), X4=(1,1).  Reference orientation of
// edge {i,j} is i→j for i < j; component order: e12 e13 e14 e23 e24 e34.
struct EdgeVector {
    std::array<long long, 6> e{};
    bool operator==(const EdgeVector&) const = default;
    EdgeVector& operator+=(const EdgeVector& o);
    EdgeVector& operator-=(const EdgeVector& o);
    bool is_cycle() const;  // zero boundary at every vertex
};

// Coordinates of a cycle in the basis
//   σ1 = X1X2 + X2X3 + X3X1
//   σ2 = X1X3 + X3X4 + X4X1
//   σ3 = X3X2 + X4X3 + X2X4
struct K4Class {
    long long lambda1 = 0;
    long long lambda2 = 0;
    long long lambda3 = 0;
    bool operator==(const K4Class&) const = default;
    K4Class operator+(const K4Class& o) const;
    K4Class operator-(const K4Class& o) const;
    K4Class operator-() const;
    bool is_zero() const { return lambda1 == 0 && lambda2 == 0 && lambda3 == 0; }
};

// Coordinates in the index-2 subgroup basis {σ2+σ3, σ3+σ1, σ1+σ2}.
struct MuDecomposition {
    long long mu1 = 0;
    long long mu2 = 0;
    long long mu3 = 0;
    bool operator==(const MuDecomposition&) const = default;
};

// The σ basis vectors as explicit edge chains (used by tests to cross-check
// the solver against a brute-force kernel computation).
std::array<EdgeVector, 3> sigma_basis();

// Residue (0|1, 0|1) → vertex number 1..4 in the X labelling above.
int residue_vertex(const Residue& r);

// Signed count of transitions across a regular value on edge AB (A→B = +1,
// B→A = −1) of the cyclic color sequence; the simplicial degree onto the
// three-cycle A→B→C→A, which this convention sends to +1.  The equivalent
// counts on edges BC and CA are computed too and asserted equal.
int k3_degree(const std::vector<Color>& colors);

// Degree of the colored boundary walk of the broken line under the map.
int degree_of_line(const BrokenLine& line, const AffineMap& map);

// Edge chain of the closed residue walk (consecutive equal residues skipped).
EdgeVector residue_walk_chain(const std::vector<Residue>& walk);

// Solve chain = Σ λi·σi; requires the chain to be a cycle.
K4Class k4_class(const EdgeVector& chain);
K4Class k4_class(const std::vector<Residue>& walk);

// Class of the closed walk of a lattice broken line; NotLattice otherwise.
K4Class class_of_lattice_line(const BrokenLine& line);

// λ1 = μ2+μ3, λ2 = μ3+μ1, λ3 = μ1+μ2; solvable iff λ1+λ2+λ3 is even
// (this failing signals the class cannot bound a balanced lattice polygon).
std::optional<MuDecomposition> decompose_mu(const K4Class& c);
K4Class recompose_mu(const MuDecomposition& m);

}  // namespace equidissect
