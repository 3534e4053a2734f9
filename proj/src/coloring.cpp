#include "equidissect/coloring.hpp"

namespace equidissect {

char color_name(Color c) {
    switch (c) {
        case Color::A: return 'A';
        case Color::B: return 'B';
        case Color::C: return 'C';
    }
    throw std::logic_error("bad color");
}

Color color_from_name(char c) {
    switch (c) {
        case 'A': return Color::A;
        case 'B': return Color::B;
        case 'C': return Color::C;
    }
    throw ParseError(std::string("bad color name: '") + c + "'");
}

namespace {

int mod2(const BigInt& n) { return static_cast<int>(n % 2 != 0); }

}  // namespace

Residue residue_of(const Point& p) {
    if (!p.is_lattice()) throw not_lattice_error("point has a non-integer coordinate");
    return {mod2(p.x.num()), mod2(p.y.num())};
}

Color color(const Point& p) {
    Valuation vx = val2(p.x);
    Valuation vy = val2(p.y);
    Valuation zero(0);
    if (vx > zero && vy > zero) return Color::A;
    if (vy <= zero && vx > vy) return Color::B;
    return Color::C;  // here ν2(x) ≤ 0 and ν2(y) ≥ ν2(x)
}

Color lattice_color(const Residue& r) {
    if (r.x == 0) return r.y == 0 ? Color::A : Color::B;
    return Color::C;
}

AffineMap::AffineMap(std::array<Rational, 4> matrix, std::array<Rational, 2> translation)
    : m_(std::move(matrix)), t_(std::move(translation)) {
    Rational d = det();
    if (d != Rational(1) && d != Rational(-1))
        throw PreconditionError("NotAreaPreserving", "affine map determinant must be ±1");
}

AffineMap AffineMap::named(const std::string& name) {
    if (name == "E")
        return AffineMap({Rational(1), Rational(0), Rational(0), Rational(1)},
                         {Rational(0), Rational(0)});
    if (name == "U")
        return AffineMap({Rational(1), Rational(1), Rational(0), Rational(1)},
                         {Rational(0), Rational(0)});
    if (name == "V")
        return AffineMap({Rational(0), Rational(1), Rational(1), Rational(0)},
                         {Rational(1), Rational(0)});
    throw ParseError("unknown transform name: '" + name + "'");
}

Point AffineMap::apply(const Point& p) const {
    return {m_[0] * p.x + m_[1] * p.y + t_[0], m_[2] * p.x + m_[3] * p.y + t_[1]};
}

AffineMap AffineMap::inverse() const {
    Rational d = det();  // ±1, so dividing by it is exact
    std::array<Rational, 4> inv{m_[3] / d, -m_[1] / d, -m_[2] / d, m_[0] / d};
    std::array<Rational, 2> shift{-(inv[0] * t_[0] + inv[1] * t_[1]),
                                  -(inv[2] * t_[0] + inv[3] * t_[1])};
    return {inv, shift};
}

Rational AffineMap::det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

bool AffineMap::is_lattice() const {
    for (const auto& e : m_)
        if (!e.is_integer()) return false;
    return t_[0].is_integer() && t_[1].is_integer();
}

Residue AffineMap::apply_residue(const Residue& r) const {
    if (!is_lattice())
        throw not_lattice_error("residue action requires an integer-entry map");
    auto bit = [](const Rational& q) { return static_cast<int>(q.num() % 2 != 0); };
    return {(bit(m_[0]) * r.x + bit(m_[1]) * r.y + bit(t_[0])) % 2,
            (bit(m_[2]) * r.x + bit(m_[3]) * r.y + bit(t_[1])) % 2};
}

Color color_under(const AffineMap& map, const Point& p) { return color(map.apply(p)); }

bool is_rainbow(const Point& p1, const Point& p2, const Point& p3, const AffineMap& map) {
    Color a = color_under(map, p1);
    Color b = color_under(map, p2);
    Color c = color_under(map, p3);
    return a != b && b != c && a != c;
}

}  // namespace equidissect
