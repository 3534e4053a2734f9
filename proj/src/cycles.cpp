#include "equidissect/cycles.hpp"

#include <stdexcept>

namespace equidissect {

namespace {

// Edge slot for the unordered pair {i, j}, plus the sign of walking i→j
// relative to the reference orientation (low→high).
struct EdgeSlot {
    int index;
    int sign;
};

EdgeSlot edge_slot(int i, int j) {
    if (i == j || i < 1 || j < 1 || i > 4 || j > 4) throw std::logic_error("bad K4 vertex pair");
    int lo = std::min(i, j), hi = std::max(i, j);
    int idx = -1;
    if (lo == 1)
        idx = hi - 2;           // e12, e13, e14 → 0, 1, 2
    else if (lo == 2)
        idx = hi;               // e23, e24 → 3, 4
    else
        idx = 5;                // e34
    return {idx, i < j ? 1 : -1};
}

}  // namespace

EdgeVector& EdgeVector::operator+=(const EdgeVector& o) {
    for (int k = 0; k < 6; ++k) e[k] += o.e[k];
    return *this;
}

EdgeVector& EdgeVector::operator-=(const EdgeVector& o) {
    for (int k = 0; k < 6; ++k) e[k] -= o.e[k];
    return *this;
}

bool EdgeVector::is_cycle() const {
    // Boundary at each vertex: sum of signed incidences must vanish.
    // Edges incident to vertex v contribute −coef when v is the tail (low end)
    // and +coef when v is the head.
    static constexpr int ends[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    long long boundary[5] = {};
    for (int k = 0; k < 6; ++k) {
        boundary[ends[k][0]] -= e[k];
        boundary[ends[k][1]] += e[k];
    }
    for (int v = 1; v <= 4; ++v)
        if (boundary[v] != 0) return false;
    return true;
}

K4Class K4Class::operator+(const K4Class& o) const {
    return {lambda1 + o.lambda1, lambda2 + o.lambda2, lambda3 + o.lambda3};
}

K4Class K4Class::operator-(const K4Class& o) const {
    return {lambda1 - o.lambda1, lambda2 - o.lambda2, lambda3 - o.lambda3};
}

K4Class K4Class::operator-() const { return {-lambda1, -lambda2, -lambda3}; }

std::array<EdgeVector, 3> sigma_basis() {
    auto chain = [](std::initializer_list<std::pair<int, int>> steps) {
        EdgeVector v;
        for (auto [i, j] : steps) {
            EdgeSlot s = edge_slot(i, j);
            v.e[s.index] += s.sign;
        }
        return v;
    };
    return {
        chain({{1, 2}, {2, 3}, {3, 1}}),  // σ1
        chain({{1, 3}, {3, 4}, {4, 1}}),  // σ2
        chain({{3, 2}, {4, 3}, {2, 4}}),  // σ3
    };
}

int residue_vertex(const Residue& r) { return 1 + 2 * r.x + r.y; }

int k3_degree(const std::vector<Color>& colors) {
    const std::size_t n = colors.size();
    // Crossing counts over the regular values on edges AB, BC and CA.
    long long ab = 0, bc = 0, ca = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Color s = colors[i];
        Color t = colors[(i + 1) % n];
        if (s == t) continue;
        if (s == Color::A && t == Color::B) ++ab;
        if (s == Color::B && t == Color::A) --ab;
        if (s == Color::B && t == Color::C) ++bc;
        if (s == Color::C && t == Color::B) --bc;
        if (s == Color::C && t == Color::A) ++ca;
        if (s == Color::A && t == Color::C) --ca;
    }
    if (ab != bc || bc != ca)
        throw std::logic_error("regular values disagree: color sequence is not closed");
    return static_cast<int>(ab);
}

int degree_of_line(const BrokenLine& line, const AffineMap& map) {
    std::vector<Color> colors;
    colors.reserve(line.vertices.size());
    for (const Point& p : line.vertices) colors.push_back(color_under(map, p));
    return k3_degree(colors);
}

EdgeVector residue_walk_chain(const std::vector<Residue>& walk) {
    EdgeVector v;
    const std::size_t n = walk.size();
    for (std::size_t i = 0; i < n; ++i) {
        int s = residue_vertex(walk[i]);
        int t = residue_vertex(walk[(i + 1) % n]);
        if (s == t) continue;
        EdgeSlot slot = edge_slot(s, t);
        v.e[slot.index] += slot.sign;
    }
    return v;
}

K4Class k4_class(const EdgeVector& chain) {
    if (!chain.is_cycle())
        throw PreconditionError("NotACycle", "edge chain has nonzero boundary");
    // In the σ basis, coordinates e12, e14 and e24 each appear in exactly one
    // basis vector, which pins λ; the remaining three coordinates are then
    // consistency checks (they must match for any actual cycle).
    K4Class c{chain.e[0], -chain.e[2], chain.e[4]};
    bool ok = (-c.lambda1 + c.lambda2 == chain.e[1]) &&   // e13
              (c.lambda1 - c.lambda3 == chain.e[3]) &&    // e23
              (c.lambda2 - c.lambda3 == chain.e[5]);      // e34
    if (!ok) throw std::logic_error("cycle is outside the span of the σ basis");
    return c;
}

K4Class k4_class(const std::vector<Residue>& walk) { return k4_class(residue_walk_chain(walk)); }

K4Class class_of_lattice_line(const BrokenLine& line) {
    std::vector<Residue> walk;
    walk.reserve(line.vertices.size());
    for (const Point& p : line.vertices) walk.push_back(residue_of(p));
    return k4_class(walk);
}

std::optional<MuDecomposition> decompose_mu(const K4Class& c) {
    long long total = c.lambda1 + c.lambda2 + c.lambda3;
    if (total % 2 != 0) return std::nullopt;
    return MuDecomposition{(-c.lambda1 + c.lambda2 + c.lambda3) / 2,
                           (c.lambda1 - c.lambda2 + c.lambda3) / 2,
                           (c.lambda1 + c.lambda2 - c.lambda3) / 2};
}

K4Class recompose_mu(const MuDecomposition& m) {
    return {m.mu2 + m.mu3, m.mu3 + m.mu1, m.mu1 + m.mu2};
}

}  // namespace equidissect
