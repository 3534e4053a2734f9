#include "equidissect/valuation.hpp"

#include <limits>

namespace equidissect {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("valuation overflow");
    return r;
}

}  // namespace

Valuation Valuation::operator+(const Valuation& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return Valuation(checked_add(value_, o.value_));
}

Valuation Valuation::operator-(const Valuation& o) const {
    if (o.infinite_) throw std::overflow_error("subtracting an infinite valuation");
    if (infinite_) return infinity();
    return Valuation(checked_add(value_, o.value_ == std::numeric_limits<long long>::min()
                                             ? throw std::overflow_error("valuation overflow")
                                             : -o.value_));
}

Valuation Valuation::operator-() const {
    if (infinite_) throw std::overflow_error("negating an infinite valuation");
    if (value_ == std::numeric_limits<long long>::min()) throw std::overflow_error("valuation overflow");
    return Valuation(-value_);
}

std::string Valuation::str() const { return infinite_ ? "inf" : std::to_string(value_); }

Valuation Valuation::parse(std::string_view text) {
    if (text == "inf") return infinity();
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(std::string(text), &pos);
    } catch (const std::exception&) {
        throw ParseError("bad valuation literal: '" + std::string(text) + "'");
    }
    if (pos != text.size()) throw ParseError("bad valuation literal: '" + std::string(text) + "'");
    return Valuation(v);
}

Valuation val2(const BigInt& n) {
    if (n.is_zero()) return Valuation::infinity();
    BigInt a = n < 0 ? BigInt(-n) : n;
    return Valuation(static_cast<long long>(boost::multiprecision::lsb(a)));
}

Valuation val2(const Rational& q) {
    if (q.is_zero()) return Valuation::infinity();
    return val2(q.num()) - val2(q.den());
}

Valuation val_add(const Valuation& a, const Valuation& b) { return a + b; }

}  // namespace equidissect
