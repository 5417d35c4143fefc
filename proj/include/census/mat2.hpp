#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace census {

using i64 = std::int64_t;

/// 2x2 integer matrix [[a,b],[c,d]] acting on column vectors.
struct Mat2 {
    i64 a = 1, b = 0, c = 0, d = 1;

    static Mat2 identity() { return {}; }

    i64 det() const { return a * d - b * c; }
    i64 trace() const { return a + d; }
    bool unimodular() const { i64 t = det(); return t == 1 || t == -1; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }

    /// Inverse, defined only for det = +-1.
    Mat2 inverse() const {
        i64 t = det();
        if (t != 1 && t != -1) throw std::invalid_argument("Mat2::inverse: matrix not unimodular");
        return {t * d, -t * b, -t * c, t * a};
    }

    Mat2 neg() const { return {-a, -b, -c, -d}; }

    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }
    friend bool operator<(const Mat2& x, const Mat2& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        if (x.c != y.c) return x.c < y.c;
        return x.d < y.d;
    }

    i64 max_abs_entry() const {
        i64 m = 0;
        for (i64 v : {a, b, c, d}) { if (v < 0) v = -v; if (v > m) m = v; }
        return m;
    }

    std::string str() const {
        return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
               std::to_string(c) + "," + std::to_string(d) + "]]";
    }
    friend std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << m.str(); }
};

/// True iff m^k = I for some k <= 12 (torsion bound in GL2(Z)).
inline bool is_periodic(const Mat2& m) {
    if (!m.unimodular()) throw std::invalid_argument("is_periodic: matrix not unimodular");
    Mat2 p = m;
    for (int k = 1; k <= 12; ++k) {
        if (p == Mat2::identity()) return true;
        p = p * m;
    }
    return false;
}

} // namespace census
