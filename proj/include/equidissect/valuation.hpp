#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "equidissect/rational.hpp"

namespace equidissect {

// Value of the 2-adic valuation: a machine integer extended with +infinity
// (the valuation of 0).  Arithmetic treats infinity as absorbing for
// addition; overflow of the finite part is a hard error, never a wrap.
class Valuation {
public:
    static Valuation infinity() {
        Valuation v(0);
        v.infinite_ = true;
        return v;
    }
    explicit Valuation(long long value) : value_(value), infinite_(false) {}

    bool is_infinite() const { return infinite_; }
    long long value() const {
        if (infinite_) throw std::overflow_error("finite value of an infinite valuation");
        return value_;
    }

    Valuation operator+(const Valuation& o) const;
    Valuation operator-(const Valuation& o) const;  // finite - infinite is an error
    Valuation operator-() const;

    bool operator==(const Valuation& o) const {
        return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
    }
    std::strong_ordering operator<=>(const Valuation& o) const {
        if (infinite_ && o.infinite_) return std::strong_ordering::equal;
        if (infinite_) return std::strong_ordering::greater;
        if (o.infinite_) return std::strong_ordering::less;
        return value_ <=> o.value_;
    }

    // "inf" for infinity, otherwise the decimal value.
    std::string str() const;
    static Valuation parse(std::string_view text);

private:
    long long value_;
    bool infinite_;
};

inline Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

// ν2 of an integer: the exponent of 2 in the prime factorisation; ν2(0) = ∞.
Valuation val2(const BigInt& n);
// ν2 of a rational p/q in canonical form: ν2(p) − ν2(q); ν2(0) = ∞.
Valuation val2(const Rational& q);
// Sum of valuations (the valuation of a product); absorbing on infinity.
Valuation val_add(const Valuation& a, const Valuation& b);

}  // namespace equidissect
