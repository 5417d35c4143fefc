#pragma once

#include <cstdlib>
#include <functional>
#include <optional>
#include <vector>

#include "census/gluing.hpp" // census::Error
#include "census/homology.hpp"
#include "census/mat2.hpp"
#include "census/seifert.hpp"

namespace census {

/// A conjugator P in GL2(Z) with P A P^{-1} = B, found by solving the linear
/// system P A = B P over the integer kernel lattice and searching the small
/// coefficient box for |det P| = 1. Positive answers are certified; a miss
/// within the box reports non-conjugacy.
inline std::optional<Mat2> find_conjugator(const Mat2& A, const Mat2& B, i64 box = 60) {
    if (A.trace() != B.trace() || A.det() != B.det()) return std::nullopt;
    // Unknowns x = (p, q, r, s) for P = [[p,q],[r,s]]; rows of P A - B P.
    IntMatrix m = {
        {A.a - B.a, A.c, -B.b, 0},
        {A.b, A.d - B.a, 0, -B.b},
        {-B.c, 0, A.a - B.d, A.c},
        {0, -B.c, A.b, A.d - B.d},
    };
    IntMatrix kernel = integer_kernel(m);
    auto make = [](const std::vector<i64>& x) { return Mat2{x[0], x[1], x[2], x[3]}; };
    auto check = [&](const Mat2& p) -> std::optional<Mat2> {
        if (!p.unimodular()) return std::nullopt;
        return (p * A == B * p) ? std::optional<Mat2>(p) : std::nullopt;
    };
    if (kernel.empty()) return std::nullopt;
    if (kernel.size() == 1) {
        for (i64 x = -box; x <= box; ++x) {
            if (x == 0) continue;
            std::vector<i64> v(4);
            for (int i = 0; i < 4; ++i) v[size_t(i)] = x * kernel[0][size_t(i)];
            if (auto p = check(make(v))) return p;
        }
        return std::nullopt;
    }
    i64 inner = kernel.size() >= 3 ? 8 : box;
    std::vector<i64> coeff(kernel.size(), 0);
    std::function<std::optional<Mat2>(size_t)> rec = [&](size_t k) -> std::optional<Mat2> {
        if (k == kernel.size()) {
            std::vector<i64> v(4, 0);
            for (size_t i = 0; i < kernel.size(); ++i)
                for (int j = 0; j < 4; ++j) v[size_t(j)] += coeff[i] * kernel[i][size_t(j)];
            return check(make(v));
        }
        for (i64 x = -inner; x <= inner; ++x) {
            coeff[k] = x;
            if (auto p = rec(k + 1)) return p;
        }
        return std::nullopt;
    };
    return rec(0);
}

inline bool conjugate_in_gl2(const Mat2& A, const Mat2& B) { return find_conjugator(A, B).has_value(); }

/// Conjugacy normal form: the lexicographically least matrix with the same
/// determinant and trace, of minimal max-entry, conjugate to A; found by
/// enumerating candidates in growing boxes, so it depends only on the
/// conjugacy class.
inline Mat2 conjugacy_normal_form(const Mat2& A) {
    if (!A.unimodular()) throw Error("conjugacy_normal_form: |det| != 1");
    for (i64 m = 1;; ++m) {
        if (m > A.max_abs_entry() + 2)
            throw std::logic_error("conjugacy_normal_form: no candidate found (search bug)");
        for (i64 a = -m; a <= m; ++a)
            for (i64 b = -m; b <= m; ++b)
                for (i64 c = -m; c <= m; ++c)
                    for (i64 d = -m; d <= m; ++d) {
                        Mat2 cand{a, b, c, d};
                        if (cand.max_abs_entry() != m && m > 1) continue; // smaller boxes already done
                        if (cand.det() != A.det() || cand.trace() != A.trace()) continue;
                        if (find_conjugator(A, cand)) return cand;
                    }
    }
}

struct TorusBundleClass {
    Geometry geometry = Geometry::NotClassifiedHere;
    Mat2 normal_form;
};

/// Geometry of the torus bundle with monodromy A: periodic monodromy gives a
/// flat manifold, hyperbolic (Anosov) monodromy gives Sol, and the remaining
/// non-periodic parabolic case gives Nil. For det = -1 the Sol normal form is
/// [[1,1],[1,0]] (trace 1) or its inverse [[0,1],[1,-1]] (trace -1) whenever
/// |trace| <= 1.
inline TorusBundleClass classify_torus_bundle(const Mat2& A) {
    if (!A.unimodular()) throw Error("classify_torus_bundle: |det| != 1");
    TorusBundleClass out;
    if (is_periodic(A)) {
        out.geometry = Geometry::E3;
        out.normal_form = conjugacy_normal_form(A);
        return out;
    }
    bool hyperbolic = (A.det() == 1 && std::abs(A.trace()) > 2) || (A.det() == -1 && A.trace() != 0);
    if (!hyperbolic) {
        out.geometry = Geometry::Nil;
        out.normal_form = conjugacy_normal_form(A);
        return out;
    }
    out.geometry = Geometry::Sol;
    if (A.det() == -1 && std::abs(A.trace()) <= 1) {
        Mat2 f{1, 1, 1, 0};
        Mat2 target = (A.trace() == 1) ? f : f.inverse();
        if (!find_conjugator(A, target))
            throw Error("classify_torus_bundle: det -1, |tr| <= 1 matrix not conjugate to the expected normal form");
        out.normal_form = target;
    } else {
        out.normal_form = conjugacy_normal_form(A);
    }
    return out;
}

/// First homology of the torus bundle with monodromy A: Z + coker(A - I).
inline AbelianGroup torus_bundle_h1(const Mat2& A) {
    IntMatrix rel = {{A.a - 1, A.b}, {A.c, A.d - 1}};
    AbelianGroup g = abelian_group(2, rel);
    g.rank += 1;
    return g;
}

/// Normal form of the bundle itself: mapping tori of A and A^{-1} coincide,
/// so the representative is taken with non-negative trace, ties broken
/// lexicographically. The classifier's anchored forms are reused, so the
/// det -1, |tr| <= 1 case lands on [[1,1],[1,0]].
inline Mat2 bundle_normal_form(const Mat2& A) {
    Mat2 n1 = classify_torus_bundle(A).normal_form;
    Mat2 n2 = classify_torus_bundle(A.inverse()).normal_form;
    if (n1.trace() != n2.trace()) return n1.trace() > n2.trace() ? n1 : n2;
    return n1 < n2 ? n1 : n2;
}

} // namespace census
