#include "equidissect/search.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace equidissect {

namespace {

namespace mp = boost::multiprecision;

// Primitive integer direction of a nonzero rational vector.
struct Dir {
    BigInt x;
    BigInt y;
    bool operator==(const Dir&) const = default;
};

Dir primitive(const Vector& v) {
    BigInt nx = v.dx.num() * v.dy.den();
    BigInt ny = v.dy.num() * v.dx.den();
    BigInt g = mp::gcd(nx < 0 ? BigInt(-nx) : nx, ny < 0 ? BigInt(-ny) : ny);
    if (g.is_zero()) throw std::logic_error("direction of a zero vector");
    return {nx / g, ny / g};
}

BigInt dir_cross(const Dir& a, const Dir& b) { return a.x * b.y - a.y * b.x; }

// Angular half: 0 for angles in [0, π), 1 for [π, 2π).
int half_of(const Dir& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

bool angular_less(const Dir& a, const Dir& b) {
    int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha < hb;
    return dir_cross(a, b) > 0;
}

Vector to_vector(const Dir& d) { return {Rational(d.x), Rational(d.y)}; }

// A direction strictly inside the counterclockwise sector from a to b.
Dir sector_probe(const Dir& a, const Dir& b) {
    if (dir_cross(a, b) > 0) return {a.x + b.x, a.y + b.y};
    return {-a.y, a.x};  // the sector spans ≥ π, so a quarter turn lands inside
}

// Local classification of point-vs-triangle (triangle is CCW).
struct TriangleContact {
    enum class Kind { Outside, Interior, Vertex, Edge };
    Kind kind = Kind::Outside;
    int index = 0;  // vertex index, or edge index (edge i runs t[i]→t[i+1])
};

TriangleContact classify(const Point& p, const Triangle& t) {
    for (int k = 0; k < 3; ++k)
        if (p == t[k]) return {TriangleContact::Kind::Vertex, k};
    int o[3];
    for (int k = 0; k < 3; ++k) o[k] = orientation(t[k], t[(k + 1) % 3], p);
    if (o[0] > 0 && o[1] > 0 && o[2] > 0) return {TriangleContact::Kind::Interior, 0};
    for (int k = 0; k < 3; ++k)
        if (o[k] == 0 && point_on_segment(p, t[k], t[(k + 1) % 3]))
            return {TriangleContact::Kind::Edge, k};
    return {TriangleContact::Kind::Outside, 0};
}

// Everything the searcher knows about directions around one point.
struct LocalView {
    bool in_region_closure = false;  // some strictly free direction exists
    std::vector<Dir> rays;           // sorted constraint directions
    std::vector<bool> sector_free;   // status of sector (ray[i], ray[i+1])
};

class Searcher {
public:
    Searcher(const SearchSpace& space, const SearchOptions& options)
        : space_(space), options_(options), ccw_(normalized_ccw(space.polygon)) {
        const auto& verts = ccw_.boundary.vertices;
        if (!is_simple(ccw_.boundary)) throw not_simple_error("search polygon must be simple");
        if (space_.piece_count == 0)
            throw PreconditionError("BadPieceCount", "piece count must be positive");
        if (space_.denominator < 1)
            throw PreconditionError("BadDenominator", "grid denominator must be positive");
        target_ = polygon_area_abs(ccw_) / Rational(static_cast<long long>(space_.piece_count));

        // Bounding box and candidate corner points: the grid plus any polygon
        // vertices that fall off the grid (those can still be region corners).
        min_x_ = max_x_ = verts[0].x;
        min_y_ = max_y_ = verts[0].y;
        for (const Point& p : verts) {
            min_x_ = std::min(min_x_, p.x);
            max_x_ = std::max(max_x_, p.x);
            min_y_ = std::min(min_y_, p.y);
            max_y_ = std::max(max_y_, p.y);
        }
        Rational d(space_.denominator);
        BigInt ax = ceil_of(min_x_ * d), bx = floor_of(max_x_ * d);
        BigInt ay = ceil_of(min_y_ * d), by = floor_of(max_y_ * d);
        for (BigInt gx = ax; gx <= bx; ++gx)
            for (BigInt gy = ay; gy <= by; ++gy)
                candidates_.push_back({Rational(gx, d.num()), Rational(gy, d.num())});
        for (const Point& p : verts)
            if (!on_grid(p)) candidates_.push_back(p);
        std::sort(candidates_.begin(), candidates_.end());
        candidates_.erase(std::unique(candidates_.begin(), candidates_.end()), candidates_.end());
    }

    SearchResult run() {
        result_.completed = true;
        dfs(0);
        result_.nodes = nodes_;
        if (space_.symmetry_reduction && !options_.first_only) reduce_by_symmetry();
        return result_;
    }

private:
    bool on_grid(const Point& p) const {
        return (p.x * Rational(space_.denominator)).is_integer() &&
               (p.y * Rational(space_.denominator)).is_integer() &&
               min_x_ <= p.x && p.x <= max_x_ && min_y_ <= p.y && p.y <= max_y_;
    }

    // Strictly free at p in direction d: infinitesimally inside the polygon
    // and outside every placed (closed) triangle.
    bool direction_free(const Point& p, const Dir& d, Location loc,
                        const std::vector<TriangleContact>& contacts) const {
        Vector dv = to_vector(d);
        if (loc == Location::Boundary) {
            auto [toward_next, toward_prev] = boundary_germs(p);
            if (!inside_ccw_sector_strict(toward_next, toward_prev, dv)) return false;
        }
        for (std::size_t k = 0; k < placed_.size(); ++k) {
            const TriangleContact& c = contacts[k];
            const Triangle& t = placed_[k];
            if (c.kind == TriangleContact::Kind::Vertex) {
                const Point& v = t[c.index];
                Vector dp = t[(c.index + 1) % 3] - v;
                Vector dq = t[(c.index + 2) % 3] - v;
                if (!wedge(dp, dv).is_negative() && !wedge(dv, dq).is_negative()) return false;
            } else if (c.kind == TriangleContact::Kind::Edge) {
                Vector e = t[(c.index + 1) % 3] - t[c.index];
                if (!wedge(e, dv).is_negative()) return false;
            }
        }
        return true;
    }

    // Germ directions of the CCW boundary at a boundary point: toward the
    // next vertex along the walk and toward the previous one.  The interior
    // cone is the CCW sector from the first to the second.
    std::pair<Vector, Vector> boundary_germs(const Point& p) const {
        const auto& v = ccw_.boundary.vertices;
        const std::size_t n = v.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i] == p)
                return {v[(i + 1) % n] - p, v[(i + n - 1) % n] - p};
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Point& a = v[i];
            const Point& b = v[(i + 1) % n];
            if (point_on_segment(p, a, b)) return {b - p, a - p};
        }
        throw std::logic_error("boundary germs of a non-boundary point");
    }

    // d strictly inside the CCW sector from a to b (handles reflex sectors).
    static bool inside_ccw_sector_strict(const Vector& a, const Vector& b, const Vector& d) {
        Rational ab = wedge(a, b);
        Rational ad = wedge(a, d);
        Rational db = wedge(d, b);
        if (ab.sign() > 0) return ad.sign() > 0 && db.sign() > 0;
        if (ab.sign() < 0) return ad.sign() > 0 || db.sign() > 0;
        // a and b collinear: either opposite (half-plane) or the degenerate
        // zero-angle sector, which contains nothing.
        if (dot(a, b).sign() < 0) return ad.sign() > 0;
        return false;
    }

    // Collect the local picture at a candidate point, or nullopt when the
    // point cannot be a corner of the uncovered region.
    std::optional<LocalView> local_view(const Point& p) const {
        Location loc = locate_point(p, ccw_);
        if (loc == Location::Exterior) return std::nullopt;

        std::vector<TriangleContact> contacts(placed_.size());
        std::vector<Dir> rays;
        for (std::size_t k = 0; k < placed_.size(); ++k) {
            contacts[k] = classify(p, placed_[k]);
            const Triangle& t = placed_[k];
            switch (contacts[k].kind) {
                case TriangleContact::Kind::Interior:
                    return std::nullopt;  // fully covered around p
                case TriangleContact::Kind::Vertex: {
                    const Point& v = t[contacts[k].index];
                    rays.push_back(primitive(t[(contacts[k].index + 1) % 3] - v));
                    rays.push_back(primitive(t[(contacts[k].index + 2) % 3] - v));
                    break;
                }
                case TriangleContact::Kind::Edge: {
                    Vector e = t[(contacts[k].index + 1) % 3] - t[contacts[k].index];
                    Dir de = primitive(e);
                    rays.push_back(de);
                    rays.push_back({-de.x, -de.y});
                    break;
                }
                case TriangleContact::Kind::Outside:
                    break;
            }
        }
        if (loc == Location::Boundary) {
            auto [toward_next, toward_prev] = boundary_germs(p);
            rays.push_back(primitive(toward_next));
            rays.push_back(primitive(toward_prev));
        }

        LocalView view;
        if (rays.empty()) {
            // Interior point with no placed geometry through it: free iff not
            // inside any triangle, which Interior contact already excluded.
            view.in_region_closure = true;
            return view;
        }
        std::sort(rays.begin(), rays.end(), angular_less);
        rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
        view.rays = std::move(rays);
        const std::size_t m = view.rays.size();
        view.sector_free.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            Dir probe = sector_probe(view.rays[i], view.rays[(i + 1) % m]);
            view.sector_free[i] = direction_free(p, probe, loc, contacts);
            if (view.sector_free[i]) view.in_region_closure = true;
        }
        return view;
    }

    // Grid points on the open ray p + t·dir, nearest first.
    std::vector<Point> grid_points_on_ray(const Point& p, const Dir& dir) const {
        std::vector<Point> out;
        Rational step_x(dir.x, BigInt(space_.denominator));
        Rational step_y(dir.y, BigInt(space_.denominator));
        Point q = p;
        while (true) {
            q = {q.x + step_x, q.y + step_y};
            if (q.x < min_x_ || q.x > max_x_ || q.y < min_y_ || q.y > max_y_) break;
            out.push_back(q);
        }
        return out;
    }

    // Grid points q with (p−v) ∧ (q−v) == 2·target and q CCW of ray dir,
    // i.e. the third-vertex candidates for a piece anchored at v with second
    // vertex p.  They lie on one rational line; enumerated via the integer
    // parametrization of that line's grid points.
    std::vector<Point> third_vertex_candidates(const Point& v, const Dir& dir,
                                               const Point& p) const {
        std::vector<Point> out;
        const BigInt D(space_.denominator);
        // p = v + (k/D)·dir with integer k ≥ 1; recover k from a nonzero coordinate.
        Vector pv = p - v;
        Rational k = dir.x.is_zero() ? pv.dy * Rational(D) / Rational(dir.y)
                                     : pv.dx * Rational(D) / Rational(dir.x);
        // For q = v + (m/D, n/D):  2·area(v,p,q) = (k/D²)·(dir.x·n − dir.y·m),
        // so the grid candidates with area exactly T solve
        //   dir.x·n − dir.y·m = 2·T·D²/k   (no solutions unless integral).
        Rational c = Rational(2) * target_ * Rational(D * D) / k;
        if (!c.is_integer()) return out;
        const BigInt c_int = c.num();
        // gcd(dir.x, dir.y) = 1: from α·dir.x + β·dir.y = 1, one solution is
        // (m0, n0) = (−β·c, α·c); the rest walk by (m, n) += s·(dir.x, dir.y).
        BigInt alpha, beta, g;
        extended_gcd(dir.x, dir.y, g, alpha, beta);
        if (g == -1) {
            g = 1;
            alpha = -alpha;
            beta = -beta;
        }
        if (g != 1) throw std::logic_error("direction not primitive");
        BigInt n0 = alpha * c_int;
        BigInt m0 = -beta * c_int;
        // Clamp s so the candidate stays inside the bounding box; at least one
        // of the two steps is nonzero, so the range always ends up finite.
        BigInt m_lo = ceil_of((min_x_ - v.x) * Rational(D));
        BigInt m_hi = floor_of((max_x_ - v.x) * Rational(D));
        BigInt n_lo = ceil_of((min_y_ - v.y) * Rational(D));
        BigInt n_hi = floor_of((max_y_ - v.y) * Rational(D));
        bool bounded = false;
        BigInt s_lo, s_hi;
        auto clamp = [&](const BigInt& base, const BigInt& step, const BigInt& lo,
                         const BigInt& hi) -> bool {
            if (step.is_zero()) return lo <= base && base <= hi;
            BigInt c_lo = step > 0 ? ceil_of(Rational(lo - base, step))
                                   : ceil_of(Rational(hi - base, step));
            BigInt c_hi = step > 0 ? floor_of(Rational(hi - base, step))
                                   : floor_of(Rational(lo - base, step));
            if (bounded) {
                s_lo = std::max(s_lo, c_lo);
                s_hi = std::min(s_hi, c_hi);
            } else {
                s_lo = c_lo;
                s_hi = c_hi;
                bounded = true;
            }
            return true;
        };
        if (!clamp(m0, dir.x, m_lo, m_hi)) return out;
        if (!clamp(n0, dir.y, n_lo, n_hi)) return out;
        for (BigInt s = s_lo; s <= s_hi; ++s) {
            BigInt m = m0 + s * dir.x;
            BigInt n = n0 + s * dir.y;
            out.push_back({v.x + Rational(m, D), v.y + Rational(n, D)});
        }
        return out;
    }

    static void extended_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& x, BigInt& y) {
        if (b.is_zero()) {
            g = a;
            x = 1;
            y = 0;
            return;
        }
        BigInt x1, y1;
        extended_gcd(b, a % b, g, x1, y1);
        x = y1;
        y = x1 - (a / b) * y1;
    }

    bool triangle_fits(const Triangle& t) const {
        for (const Point& p : t)
            if (locate_point(p, ccw_) == Location::Exterior) return false;
        for (const Triangle& placed : placed_)
            if (!triangles_interior_disjoint(t, placed)) return false;
        return triangle_polygon_intersection_area(t, ccw_) == triangle_area_abs(t);
    }

    void emit() {
        Dissection d{space_.polygon, placed_};
        if (!validate(d).ok()) throw std::logic_error("search emitted an invalid dissection");
        if (!equal_area_check(d).equal())
            throw std::logic_error("search emitted unequal piece areas");
        result_.dissections.push_back(std::move(d));
        if (options_.first_only) stop_ = true;
    }

    void dfs(std::size_t scan_from) {
        if (stop_ || !result_.completed) return;
        if (placed_.size() == space_.piece_count) {
            emit();
            return;
        }
        // Find the lexicographically smallest corner of the uncovered region.
        // Covered candidates stay covered deeper in the DFS, so scanning can
        // resume where the parent left off.
        for (std::size_t ci = scan_from; ci < candidates_.size(); ++ci) {
            const Point& v = candidates_[ci];
            auto view = local_view(v);
            if (!view || !view->in_region_closure) continue;
            if (view->rays.empty())
                throw std::logic_error("lexicographic scan reached a free interior point");
            if (!on_grid(v)) return;  // corner off the grid: nothing can cover it
            // The angularly first free sector; every completion covers its
            // opening directions with a piece whose first edge lies exactly
            // along the sector's lower ray.
            std::size_t first_free = view->rays.size();
            for (std::size_t i = 0; i < view->rays.size(); ++i) {
                if (view->sector_free[i]) {
                    first_free = i;
                    break;
                }
            }
            if (first_free == view->rays.size())
                throw std::logic_error("corner reported free without a free sector");
            const Dir ray = view->rays[first_free];
            for (const Point& p : grid_points_on_ray(v, ray)) {
                for (const Point& q : third_vertex_candidates(v, ray, p)) {
                    if (stop_ || !result_.completed) return;
                    if (++nodes_ > options_.node_budget) {
                        result_.completed = false;
                        return;
                    }
                    Triangle t{v, p, q};
                    if (!triangle_fits(t)) continue;
                    placed_.push_back(t);
                    dfs(ci);
                    placed_.pop_back();
                }
            }
            return;  // the corner is fixed; siblings were fully explored above
        }
        throw std::logic_error("uncovered area remains but no corner was found");
    }

    // ---- symmetry reduction -------------------------------------------------

    struct GridMap {
        std::array<Rational, 4> m;
        std::array<Rational, 2> t;
        Point apply(const Point& p) const {
            return {m[0] * p.x + m[1] * p.y + t[0], m[2] * p.x + m[3] * p.y + t[1]};
        }
        bool operator==(const GridMap&) const = default;
    };

    std::vector<GridMap> grid_symmetries() const {
        const auto& v = ccw_.boundary.vertices;
        const std::size_t n = v.size();
        std::vector<GridMap> maps;
        // Pick a non-collinear vertex triple once.
        std::size_t j = 1;
        while (j + 1 < n && collinear(v[0], v[j], v[j + 1])) ++j;
        if (j + 1 >= n) return maps;  // degenerate (cannot happen for simple P)
        std::array<std::size_t, 3> base{0, j, j + 1};
        for (int reflect = 0; reflect < 2; ++reflect) {
            for (std::size_t shift = 0; shift < n; ++shift) {
                auto image = [&](std::size_t k) -> const Point& {
                    std::size_t idx = reflect ? (shift + n - k % n) % n : (shift + k) % n;
                    return v[idx];
                };
                // Solve M·(v_b − v_a) for the two independent differences.
                Vector e1 = v[base[1]] - v[base[0]];
                Vector e2 = v[base[2]] - v[base[0]];
                Vector f1 = image(base[1]) - image(base[0]);
                Vector f2 = image(base[2]) - image(base[0]);
                Rational det = wedge(e1, e2);
                // M = [f1 f2]·[e1 e2]⁻¹ (columns).
                Rational a = (f1.dx * e2.dy - f2.dx * e1.dy) / det;
                Rational b = (f2.dx * e1.dx - f1.dx * e2.dx) / det;
                Rational c = (f1.dy * e2.dy - f2.dy * e1.dy) / det;
                Rational d = (f2.dy * e1.dx - f1.dy * e2.dx) / det;
                GridMap g{{a, b, c, d}, {}};
                Point v0 = v[base[0]];
                Point w0 = image(base[0]);
                g.t = {w0.x - (a * v0.x + b * v0.y), w0.y - (c * v0.x + d * v0.y)};
                Rational detm = a * d - b * c;
                if (detm != Rational(1) && detm != Rational(-1)) continue;
                // Must preserve the grid: integer linear part, grid translation.
                bool grid_ok = a.is_integer() && b.is_integer() && c.is_integer() &&
                               d.is_integer() &&
                               (g.t[0] * Rational(space_.denominator)).is_integer() &&
                               (g.t[1] * Rational(space_.denominator)).is_integer();
                if (!grid_ok) continue;
                bool fixes_polygon = true;
                for (std::size_t k = 0; k < n && fixes_polygon; ++k)
                    fixes_polygon = g.apply(v[k]) == image(k);
                if (!fixes_polygon) continue;
                if (std::find(maps.begin(), maps.end(), g) == maps.end()) maps.push_back(g);
            }
        }
        return maps;
    }

    using Key = std::vector<Triangle>;

    static Key canonical_key(const std::vector<Triangle>& triangles) {
        Key key = triangles;
        for (Triangle& t : key) std::sort(t.begin(), t.end());
        std::sort(key.begin(), key.end());
        return key;
    }

    void reduce_by_symmetry() {
        std::vector<GridMap> group = grid_symmetries();
        if (group.size() <= 1) return;
        std::vector<Dissection> kept;
        for (Dissection& d : result_.dissections) {
            Key self = canonical_key(d.triangles);
            bool minimal = true;
            for (const GridMap& g : group) {
                std::vector<Triangle> mapped = d.triangles;
                for (Triangle& t : mapped)
                    for (Point& p : t) p = g.apply(p);
                if (canonical_key(mapped) < self) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) kept.push_back(std::move(d));
        }
        result_.dissections = std::move(kept);
    }

    SearchSpace space_;
    SearchOptions options_;
    Polygon ccw_;
    Rational target_;
    Rational min_x_, max_x_, min_y_, max_y_;
    std::vector<Point> candidates_;
    std::vector<Triangle> placed_;
    SearchResult result_;
    std::uint64_t nodes_ = 0;
    bool stop_ = false;
};

}  // namespace

SearchResult enumerate_equidissections(const SearchSpace& space, const SearchOptions& options) {
    Searcher searcher(space, options);
    return searcher.run();
}

}  // namespace equidissect
