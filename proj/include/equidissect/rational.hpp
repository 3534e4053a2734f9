#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>
#include <string_view>

#include "equidissect/errors.hpp"

namespace equidissect {

using BigInt = boost::multiprecision::cpp_int;

// Exact arbitrary-precision fraction, always kept in canonical form:
//   den > 0  and  gcd(|num|, den) == 1   (0 is stored as 0/1).
// Canonical form makes structural equality coincide with value equality.
// This is the only number type used for geometric quantities.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}   // NOLINT: implicit by design
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational abs() const;
    Rational reciprocal() const;   // throws on zero

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);   // throws on division by zero

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool operator==(const Rational& o) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    // Canonical text form: "p/q", or just "p" when the denominator is 1.
    std::string str() const;
    // Accepts exactly the canonical grammar: -?digits(/digits)?  with a
    // positive denominator; the result is reduced.
    static Rational parse(std::string_view text);

private:
    void reduce();
    BigInt num_;
    BigInt den_;
};

// Floor of the exact value (towards negative infinity).
BigInt floor_of(const Rational& q);
// Ceiling of the exact value (towards positive infinity).
BigInt ceil_of(const Rational& q);

}  // namespace equidissect
