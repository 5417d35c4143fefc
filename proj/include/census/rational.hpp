#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace census {

using i64 = std::int64_t;

/// Exact rational with small operands; enough for orbifold Euler
/// characteristics and Euler numbers.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n) : num(n), den(1) {}
    Rational(i64 n, i64 d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rational operator+(Rational x, Rational y) { return Rational(x.num * y.den + y.num * x.den, x.den * y.den); }
    friend Rational operator-(Rational x, Rational y) { return Rational(x.num * y.den - y.num * x.den, x.den * y.den); }
    friend Rational operator*(Rational x, Rational y) { return Rational(x.num * y.num, x.den * y.den); }
    friend Rational operator/(Rational x, Rational y) {
        if (y.num == 0) throw std::invalid_argument("Rational: division by zero");
        return Rational(x.num * y.den, x.den * y.num);
    }
    Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }
    Rational& operator+=(Rational y) { *this = *this + y; return *this; }
    Rational& operator-=(Rational y) { *this = *this - y; return *this; }

    friend bool operator==(const Rational& x, const Rational& y) { return x.num == y.num && x.den == y.den; }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) { return x.num * y.den < y.num * x.den; }

    int sign() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
    bool is_zero() const { return num == 0; }

    /// Rendered as "a/b", or "a" when integral.
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
};

} // namespace census
