#include "equidissect/rational.hpp"

#include <utility>

namespace equidissect {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw ParseError("rational with zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r(*this);
    r.num_ = -r.num_;
    return r;
}

Rational Rational::abs() const { return num_ < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
    if (is_zero()) throw ParseError("reciprocal of zero");
    return Rational(den_, num_);
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ParseError("division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    BigInt lhs = num_ * o.den_;
    BigInt rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return ParseError("bad rational literal: '" + std::string(text) + "'"); };
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
    }
    auto digits = [&](std::size_t from, std::size_t to) -> BigInt {
        if (from == to) throw bad();
        BigInt v = 0;
        for (std::size_t k = from; k < to; ++k) {
            if (text[k] < '0' || text[k] > '9') throw bad();
            v = v * 10 + (text[k] - '0');
        }
        return v;
    };
    std::size_t slash = text.find('/', i);
    if (slash == std::string_view::npos) {
        BigInt n = digits(i, text.size());
        return Rational(neg ? BigInt(-n) : n);
    }
    BigInt n = digits(i, slash);
    BigInt d = digits(slash + 1, text.size());
    if (d.is_zero()) throw bad();
    return Rational(neg ? BigInt(-n) : n, d);
}

BigInt floor_of(const Rational& q) {
    BigInt quo = q.num() / q.den();
    if (q.num() < 0 && quo * q.den() != q.num()) --quo;
    return quo;
}

BigInt ceil_of(const Rational& q) {
    BigInt quo = q.num() / q.den();
    if (q.num() > 0 && quo * q.den() != q.num()) ++quo;
    return quo;
}

}  // namespace equidissect
