#include "equidissect/balanced.hpp"

#include <algorithm>
#include <stdexcept>

namespace equidissect {

std::vector<Vector> side_vectors(const BrokenLine& line) {
    const auto& v = line.vertices;
    const std::size_t n = v.size();
    std::vector<Vector> sides;
    sides.reserve(n);
    for (std::size_t i = 0; i < n; ++i) sides.push_back(v[(i + 1) % n] - v[i]);
    return sides;
}

std::optional<EdgePairing> pair_edges(const Polygon& poly) {
    std::vector<Vector> sides = side_vectors(poly.boundary);
    const std::size_t n = sides.size();
    if (n % 2 != 0) return std::nullopt;
    std::vector<bool> used(n, false);
    EdgePairing pairing;
    for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        Vector want = -sides[i];
        std::size_t match = n;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!used[j] && sides[j] == want) {
                match = j;
                break;
            }
        }
        if (match == n) return std::nullopt;
        used[i] = used[match] = true;
        pairing.pairs.emplace_back(i, match);
    }
    return pairing;
}

BrokenLine apply_permutation(const BrokenLine& line, const std::vector<std::size_t>& sigma) {
    const std::size_t n = line.vertices.size();
    if (sigma.size() != n) throw std::invalid_argument("permutation size mismatch");
    std::vector<std::size_t> inverse(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (sigma[j] >= n || inverse[sigma[j]] != n)
            throw std::invalid_argument("not a permutation");
        inverse[sigma[j]] = j;
    }
    std::vector<Vector> sides = side_vectors(line);
    BrokenLine out;
    out.vertices.reserve(n);
    Point cur = line.vertices[0];
    out.vertices.push_back(cur);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        cur = cur + sides[inverse[k]];
        out.vertices.push_back(cur);
    }
    return out;
}

BrokenLine adjacent_transposition(const BrokenLine& line, std::size_t i) {
    // Swapping the cyclic sides v_i and v_{i+1} moves exactly one vertex: the
    // junction L_{i+1} goes to L_i + v_{i+1}.  (Rebuilding the whole line from
    // L_0 with a permuted side list would instead translate the loop when the
    // swap wraps around the list end, which changes the mod-2 residues.)
    const std::size_t n = line.vertices.size();
    if (n < 2) throw std::invalid_argument("need at least two sides");
    i %= n;
    std::vector<Vector> sides = side_vectors(line);
    BrokenLine out = line;
    out.vertices[(i + 1) % n] = line.vertices[i] + sides[(i + 1) % n];
    return out;
}

K4Class transposition_class_delta(const BrokenLine& line, std::size_t i) {
    const std::size_t n = line.vertices.size();
    i %= n;
    K4Class before = class_of_lattice_line(line);
    K4Class after = class_of_lattice_line(adjacent_transposition(line, i));
    K4Class delta = before - after;

    std::vector<Vector> sides = side_vectors(line);
    const Point& a = line.vertices[i];
    const Point& b = line.vertices[(i + 1) % n];
    const Point& c = line.vertices[(i + 2) % n];
    Point x = a + sides[(i + 1) % n];
    BrokenLine parallelogram{{a, b, c, x}};
    K4Class expected = class_of_lattice_line(parallelogram);
    if (!(delta == expected))
        throw std::logic_error("transposition class delta disagrees with the parallelogram class");
    return delta;
}

K4Class parallelogram_class(const std::array<Point, 4>& vertices) {
    BrokenLine line{{vertices[0], vertices[1], vertices[2], vertices[3]}};
    std::vector<Vector> sides = side_vectors(line);
    if (!(sides[2] == -sides[0]) || !(sides[3] == -sides[1]))
        throw not_parallelogram_error("opposite sides do not negate");
    if (wedge(sides[0], sides[1]).is_zero())
        throw not_parallelogram_error("degenerate parallelogram");
    K4Class c = class_of_lattice_line(line);

    // Dichotomy: even area → zero class; odd area → one of the six classes
    // ±(σ2+σ3), ±(σ3+σ1), ±(σ1+σ2).
    Rational area = generalized_area(line).abs();
    bool odd = area.is_integer() && area.num() % 2 != 0;
    bool in_six = (c == K4Class{1, 1, 0}) || (c == K4Class{-1, -1, 0}) ||
                  (c == K4Class{0, 1, 1}) || (c == K4Class{0, -1, -1}) ||
                  (c == K4Class{1, 0, 1}) || (c == K4Class{-1, 0, -1});
    bool dichotomy = odd ? in_six : c.is_zero();
    if (!dichotomy) throw std::logic_error("parallelogram class dichotomy violated");
    return c;
}

namespace {

void note(Certificate& cert, std::string line) { cert.trace.push_back(std::move(line)); }

}  // namespace

Certificate certify(const Polygon& poly) {
    Certificate cert;
    cert.polygon = poly;
    cert.area = polygon_area_abs(poly);

    cert.is_lattice = std::all_of(poly.boundary.vertices.begin(), poly.boundary.vertices.end(),
                                  [](const Point& p) { return p.is_lattice(); });
    if (!cert.is_lattice) {
        cert.reason = "notLattice";
        note(cert, "some vertex has a non-integer coordinate; the lattice machinery does not apply");
        return cert;
    }
    note(cert, "all vertices are lattice points");

    cert.pairing = pair_edges(poly);
    if (!cert.pairing) {
        cert.reason = "notBalanced";
        note(cert, "side vectors cannot be matched into opposite pairs; the polygon is not balanced");
        return cert;
    }
    note(cert, "side vectors match into opposite pairs: the polygon is balanced");

    if (!cert.area.is_integer()) {
        cert.reason = "nonIntegerArea";
        note(cert, "area " + cert.area.str() + " is not an integer");
        return cert;
    }
    if (cert.area.num() % 2 == 0) {
        cert.reason = "evenArea";
        note(cert, "area " + cert.area.str() + " is even; the obstruction needs odd area");
        return cert;
    }
    note(cert, "area " + cert.area.str() + " is an odd integer");

    K4Class lambda = class_of_lattice_line(poly.boundary);
    cert.class_lambda = lambda;
    note(cert, "boundary class λ = (" + std::to_string(lambda.lambda1) + ", " +
                   std::to_string(lambda.lambda2) + ", " + std::to_string(lambda.lambda3) +
                   ") in the σ basis (Lemma 3 machinery)");

    std::optional<MuDecomposition> mu = decompose_mu(lambda);
    if (!mu)
        throw std::logic_error("balanced boundary class escaped the index-2 subgroup");
    cert.mu = mu;
    if (!(recompose_mu(*mu) == lambda))
        throw std::logic_error("μ decomposition fails to recompose");
    note(cert, "λ decomposes as μ = (" + std::to_string(mu->mu1) + ", " + std::to_string(mu->mu2) +
                   ", " + std::to_string(mu->mu3) + ") over {σ2+σ3, σ3+σ1, σ1+σ2} (Lemma 4)");

    long long mu_sum = mu->mu1 + mu->mu2 + mu->mu3;
    long long area_parity = static_cast<long long>(cert.area.num() % 2);
    if (((mu_sum % 2) + 2) % 2 != area_parity)
        throw std::logic_error("area parity disagrees with μ1+μ2+μ3");
    note(cert, "area ≡ μ1+μ2+μ3 (mod 2) holds (Lemma 4 parity)");
    note(cert,
         "an equidissection into n equal-area triangles forces ν2(area/n) ≥ 0 twice over "
         "(Lemma 1, Lemma 2), and for odd n the boundary class would have to vanish with even "
         "area (Lemma 3, Lemma 5) — contradicting the odd area above (Theorem 2)");

    cert.conclusion = Certificate::Conclusion::NoOddEquidissection;
    return cert;
}

}  // namespace equidissect
