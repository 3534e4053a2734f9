#pragma once

#include <cstdint>
#include <vector>

#include "equidissect/dissection.hpp"
#include "equidissect/geometry.hpp"

namespace equidissect {

// The finite space searched: dissections of the polygon into `piece_count`
// triangles of equal area whose vertices all lie on the grid of rationals
// with denominator dividing `denominator` inside the polygon's bounding box.
struct SearchSpace {
    Polygon polygon;
    std::size_t piece_count = 1;
    long long denominator = 1;
    bool symmetry_reduction = false;  // quotient results by the polygon's grid symmetries
};

struct SearchOptions {
    std::uint64_t node_budget = 10'000'000;  // candidate placements examined
    bool first_only = false;                 // stop after the first dissection found
};

struct SearchResult {
    std::vector<Dissection> dissections;
    bool completed = true;   // false when the node budget was exhausted
    std::uint64_t nodes = 0;
};

// Exhaustive, deterministic enumeration.  Every emitted dissection is
// re-validated through `validate` and the equal-area check before being
// returned.  When the node budget runs out the result is flagged incomplete
// (never silently truncated).  The branching strategy: the next triangle is
// always anchored at the lexicographically smallest point of the closure of
// the uncovered region, with its first edge along the angularly first
// uncovered direction there — which makes every dissection reachable in
// exactly one placement order, so no deduplication is needed.
SearchResult enumerate_equidissections(const SearchSpace& space, const SearchOptions& options = {});

}  // namespace equidissect
