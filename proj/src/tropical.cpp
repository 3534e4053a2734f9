#include "equidissect/tropical.hpp"

#include <array>
#include <stdexcept>

namespace equidissect {

namespace {

// 2^{−ν2(q)} as an exact rational; 0 when q is 0 (the weight of 2^{−∞}).
Rational dyadic_weight(const Rational& q) {
    Valuation v = val2(q);
    if (v.is_infinite()) return Rational(0);
    long long s = v.value();
    BigInt pw = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(s < 0 ? -s : s));
    return s >= 0 ? Rational(BigInt(1), pw) : Rational(pw);
}

}  // namespace

ProjectivePoint::ProjectivePoint(const Rational& x, const Rational& y, const Rational& z)
    : x_(x), y_(y), z_(z) {
    const Rational* first = nullptr;
    if (!x_.is_zero()) first = &x_;
    else if (!y_.is_zero()) first = &y_;
    else if (!z_.is_zero()) first = &z_;
    else throw PreconditionError("ZeroPoint", "projective point needs a nonzero coordinate");
    Rational scale = first->reciprocal();
    x_ *= scale;
    y_ *= scale;
    z_ *= scale;
}

MomentumImage momentum_p2(const ProjectivePoint& p) {
    Rational wx = dyadic_weight(p.x());
    Rational wy = dyadic_weight(p.y());
    Rational wz = dyadic_weight(p.z());
    Rational sum = wx + wy + wz;  // positive: some coordinate is nonzero
    return {wx / sum, wy / sum, wz / sum};
}

std::pair<Valuation, Valuation> momentum_torus(const Rational& x, const Rational& y) {
    if (x.is_zero() || y.is_zero())
        throw zero_coordinate_error("torus momentum map needs nonzero coordinates");
    return {val2(x), val2(y)};
}

std::vector<MomentumImage> sample_line_image(const Rational& a, const Rational& b,
                                             const Rational& c, int count) {
    if (a.is_zero() && b.is_zero() && c.is_zero())
        throw PreconditionError("ZeroLine", "line coefficients must not all vanish");
    // A basis of the solution plane of a·x + b·y + c·z = 0.
    std::array<Rational, 3> p0, p1;
    if (!a.is_zero()) {
        p0 = {-b, a, Rational(0)};
        p1 = {-c, Rational(0), a};
    } else if (!b.is_zero()) {
        p0 = {Rational(1), Rational(0), Rational(0)};
        p1 = {Rational(0), -c, b};
    } else {
        p0 = {Rational(1), Rational(0), Rational(0)};
        p1 = {Rational(0), Rational(1), Rational(0)};
    }
    std::vector<MomentumImage> out;
    out.reserve(static_cast<std::size_t>(count > 0 ? count : 0));
    for (int k = 0; k < count; ++k) {
        if (k == 0) {
            // Open the sweep with the first basis point itself (parameter 0).
            out.push_back(momentum_p2(ProjectivePoint(p0[0], p0[1], p0[2])));
            continue;
        }
        if (k == count - 1) {
            // Close the sweep with the second basis point itself (the
            // parameter value "infinity").
            out.push_back(momentum_p2(ProjectivePoint(p1[0], p1[1], p1[2])));
            break;
        }
        // Deterministic rational parameters with varied sign, odd part and
        // dyadic scale, so the samples spread across all valuation patterns:
        //   t = ±(2⌊j/13⌋ + 1) · 2^(j mod 13 − 6)   for j = k − 1
        long long j = k - 1;
        long long e = j % 13 - 6;
        BigInt odd = 2 * (j / 13) + 1;
        BigInt pw = boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(e < 0 ? -e : e));
        Rational t = e >= 0 ? Rational(odd * pw) : Rational(odd, pw);
        if (j % 2 == 1) t = -t;
        out.push_back(momentum_p2(ProjectivePoint(p0[0] + t * p1[0], p0[1] + t * p1[1],
                                                  p0[2] + t * p1[2])));
    }
    return out;
}

const char* region_name(Region r) {
    switch (r) {
        case Region::X: return "X";
        case Region::Y: return "Y";
        case Region::Z: return "Z";
    }
    throw std::logic_error("unreachable region");
}

Region region_of(const MomentumImage& m) {
    if (m.weight_x >= m.weight_y && m.weight_x >= m.weight_z) return Region::X;
    if (m.weight_y >= m.weight_z) return Region::Y;
    return Region::Z;
}

Color region_color(Region r) {
    struct Dictionary {
        std::array<Color, 3> by_region;
        Dictionary() {
            const std::array<Point, 3> reps = {Point{1, 0}, Point{0, 1}, Point{0, 0}};
            std::array<bool, 3> seen{};
            for (const Point& rep : reps) {
                Region reg = region_of(momentum_p2(ProjectivePoint(rep.x, rep.y, Rational(1))));
                auto idx = static_cast<std::size_t>(reg);
                if (seen[idx])
                    throw std::logic_error("representatives do not separate the regions");
                seen[idx] = true;
                by_region[idx] = color(rep);
            }
        }
    };
    static const Dictionary dict;
    return dict.by_region[static_cast<std::size_t>(r)];
}

bool chart_agreement(const Point& p) {
    MomentumImage image = momentum_p2(ProjectivePoint(p.x, p.y, Rational(1)));
    return region_color(region_of(image)) == color(p);
}

}  // namespace equidissect
