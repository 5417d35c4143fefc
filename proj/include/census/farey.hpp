#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "census/mat2.hpp"

namespace census {

/// Isotopy class of an essential simple closed curve on the torus: a coprime
/// pair up to sign, normalized so q > 0, with infinity = 1/0.
struct Slope {
    i64 p = 0;
    i64 q = 1;

    Slope() = default;
    Slope(i64 pp, i64 qq) : p(pp), q(qq) { normalize(); }

    static Slope infinity() { Slope s; s.p = 1; s.q = 0; return s; }
    static Slope integer(i64 n) { return Slope(n, 1); }

    void normalize() {
        if (p == 0 && q == 0) throw std::invalid_argument("Slope: (0,0) is not a slope");
        i64 g = std::gcd(std::abs(p), std::abs(q));
        p /= g; q /= g;
        if (q < 0 || (q == 0 && p < 0)) { p = -p; q = -q; }
    }

    bool is_infinity() const { return q == 0; }

    friend bool operator==(const Slope& x, const Slope& y) { return x.p == y.p && x.q == y.q; }
    friend bool operator!=(const Slope& x, const Slope& y) { return !(x == y); }
    /// Order by rational value with infinity greatest.
    friend bool operator<(const Slope& x, const Slope& y) {
        if (x.q == 0) return false;
        if (y.q == 0) return true;
        return (__int128)x.p * y.q < (__int128)y.p * x.q;
    }

    std::string str() const {
        if (q == 0) return "inf";
        if (q == 1) return std::to_string(p);
        return std::to_string(p) + "/" + std::to_string(q);
    }
    friend std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }
};

/// Geometric intersection number |p q' - q p'|.
inline i64 intersection(const Slope& x, const Slope& y) {
    return std::abs(x.p * y.q - x.q * y.p);
}

/// Image of a slope under a unimodular change of torus coordinates.
inline Slope apply_gl2(const Mat2& m, const Slope& s) {
    if (!m.unimodular()) throw std::invalid_argument("apply_gl2: |det| != 1");
    return Slope(m.a * s.p + m.b * s.q, m.c * s.p + m.d * s.q);
}

/// Trivalent graph in the torus whose complement is one open disc; determined
/// by its three pairwise-unimodular slopes, i.e. a Farey triangle.
struct ThetaGraph {
    std::array<Slope, 3> slopes; // sorted

    ThetaGraph(Slope s0, Slope s1, Slope s2) : slopes{s0, s1, s2} {
        sort_slopes();
        if (!(valid_triple(slopes[0], slopes[1], slopes[2])))
            throw std::invalid_argument("ThetaGraph: slopes not pairwise unimodular and distinct");
    }

    static bool valid_triple(const Slope& a, const Slope& b, const Slope& c) {
        return intersection(a, b) == 1 && intersection(b, c) == 1 && intersection(a, c) == 1;
    }

    /// The base triangle {0, 1, inf}.
    static ThetaGraph base() { return ThetaGraph(Slope(0, 1), Slope(1, 1), Slope::infinity()); }

    bool contains(const Slope& s) const {
        return slopes[0] == s || slopes[1] == s || slopes[2] == s;
    }

    friend bool operator==(const ThetaGraph& x, const ThetaGraph& y) { return x.slopes == y.slopes; }
    friend bool operator!=(const ThetaGraph& x, const ThetaGraph& y) { return !(x == y); }
    friend bool operator<(const ThetaGraph& x, const ThetaGraph& y) {
        for (int i = 0; i < 3; ++i) {
            if (x.slopes[i] != y.slopes[i]) return x.slopes[i] < y.slopes[i];
        }
        return false;
    }

    std::string str() const {
        return "{" + slopes[0].str() + "," + slopes[1].str() + "," + slopes[2].str() + "}";
    }
    friend std::ostream& operator<<(std::ostream& os, const ThetaGraph& t) { return os << t.str(); }

private:
    void sort_slopes() {
        if (slopes[1] < slopes[0]) std::swap(slopes[0], slopes[1]);
        if (slopes[2] < slopes[1]) std::swap(slopes[1], slopes[2]);
        if (slopes[1] < slopes[0]) std::swap(slopes[0], slopes[1]);
    }
};

/// True iff the three slopes span a Farey triangle.
inline bool is_theta(const Slope& a, const Slope& b, const Slope& c) {
    return ThetaGraph::valid_triple(a, b, c);
}

inline ThetaGraph apply_gl2(const Mat2& m, const ThetaGraph& t) {
    return ThetaGraph(apply_gl2(m, t.slopes[0]), apply_gl2(m, t.slopes[1]), apply_gl2(m, t.slopes[2]));
}

/// Replace `removed` by the unique other slope completing the remaining edge
/// to a Farey triangle: the second of the two solutions (p1 +- p2, q1 +- q2).
inline ThetaGraph flip(const ThetaGraph& t, const Slope& removed) {
    if (!t.contains(removed)) throw std::invalid_argument("flip: slope not in theta-graph");
    Slope u = t.slopes[0], v = t.slopes[1];
    if (u == removed) u = t.slopes[2];
    else if (v == removed) v = t.slopes[2];
    Slope sum(u.p + v.p, u.q + v.q);
    Slope diff(u.p - v.p, u.q - v.q);
    Slope other = (sum == removed) ? diff : sum;
    if (other == removed) throw std::logic_error("flip: degenerate triangle");
    return ThetaGraph(u, v, other);
}

/// The slope introduced by flip(t, removed).
inline Slope flip_new_slope(const ThetaGraph& t, const Slope& removed) {
    ThetaGraph f = flip(t, removed);
    for (const Slope& s : f.slopes)
        if (!t.contains(s)) return s;
    throw std::logic_error("flip_new_slope: flip returned the same triangle");
}

/// The three slopes one flip away from t (killable by the B2 brick when t is
/// the marking).
inline std::array<Slope, 3> one_flip_slopes(const ThetaGraph& t) {
    return {flip_new_slope(t, t.slopes[0]), flip_new_slope(t, t.slopes[1]),
            flip_new_slope(t, t.slopes[2])};
}

namespace detail {

/// Orientation predicate on the circle Q u {inf}: true iff b lies in the
/// open arc swept from a to c in the increasing direction (with wraparound
/// at infinity).
inline bool ccw(const Slope& a, const Slope& b, const Slope& c) {
    bool ab = a < b, bc = b < c, ca = c < a;
    return (ab && bc) || (bc && ca) || (ca && ab);
}

/// True iff x and y lie (weakly) on the same side of the Farey edge {u, v}.
/// x and y must not be endpoints of the edge.
inline bool same_side(const Slope& u, const Slope& v, const Slope& x, const Slope& y) {
    return ccw(u, x, v) == ccw(u, y, v);
}

} // namespace detail

/// The neighbor of `from` across the unique Farey edge separating it from
/// `to`; requires from != to.
inline ThetaGraph step_towards(const ThetaGraph& from, const ThetaGraph& to) {
    for (int i = 0; i < 3; ++i) {
        const Slope& third = from.slopes[i];
        const Slope& u = from.slopes[(i + 1) % 3];
        const Slope& v = from.slopes[(i + 2) % 3];
        // Pick a vertex of `to` that is not an endpoint of the edge {u,v}.
        const Slope* w = nullptr;
        for (const Slope& s : to.slopes)
            if (s != u && s != v) { w = &s; break; }
        if (!w) throw std::logic_error("step_towards: triangles share all slopes");
        if (*w == third) continue; // shares the opposite vertex: not separating
        if (!detail::same_side(u, v, *w, third)) return flip(from, third);
    }
    throw std::logic_error("step_towards: no separating edge (equal triangles?)");
}

/// The neighbor of `from` across the Farey edge separating it from the
/// tessellation vertex `target`; requires target not in `from`.
inline ThetaGraph step_towards_slope(const ThetaGraph& from, const Slope& target) {
    for (int i = 0; i < 3; ++i) {
        const Slope& third = from.slopes[i];
        const Slope& u = from.slopes[(i + 1) % 3];
        const Slope& v = from.slopes[(i + 2) % 3];
        if (target == u || target == v) continue;
        if (!detail::same_side(u, v, target, third)) return flip(from, third);
    }
    throw std::logic_error("step_towards_slope: no separating edge (target in triangle?)");
}

/// Distance in the dual tree of the Farey tessellation.
inline i64 flip_distance(ThetaGraph a, const ThetaGraph& b) {
    i64 d = 0;
    while (a != b) {
        a = step_towards(a, b);
        ++d;
        if (d > 100000) throw std::logic_error("flip_distance: runaway walk");
    }
    return d;
}

/// A unimodular matrix carrying slope triple (s0,s1,s2) to (t0,t1,t2), unique
/// up to global sign; empty if the pointwise correspondence is not realized
/// by any torus homeomorphism.
inline std::optional<Mat2> realize_slope_bijection(const std::array<Slope, 3>& s,
                                                   const std::array<Slope, 3>& t) {
    // M [s0 s1] = [e0*t0 e1*t1] determines M; then test the third slope.
    Mat2 sm{s[0].p, s[1].p, s[0].q, s[1].q};
    i64 ds = sm.det();
    if (ds != 1 && ds != -1) return std::nullopt;
    Mat2 si = sm.inverse();
    for (int e0 : {1, -1})
        for (int e1 : {1, -1}) {
            Mat2 tm{e0 * t[0].p, e1 * t[1].p, e0 * t[0].q, e1 * t[1].q};
            Mat2 m = tm * si;
            if (!m.unimodular()) continue;
            if (apply_gl2(m, s[2]) != t[2]) continue;
            // Canonical sign: first nonzero entry positive.
            for (i64 v : {m.a, m.b, m.c, m.d}) {
                if (v > 0) return m;
                if (v < 0) return m.neg();
            }
        }
    return std::nullopt;
}

/// A matrix taking the marking t to the base triangle {0,1,inf}; used to read
/// markings in normalized coordinates. The triangle stabilizer realizes every
/// vertex permutation, so the sorted-order correspondence always lifts.
inline Mat2 theta_normalizer(const ThetaGraph& t) {
    ThetaGraph base = ThetaGraph::base();
    auto m = realize_slope_bijection({t.slopes[0], t.slopes[1], t.slopes[2]},
                                     {base.slopes[0], base.slopes[1], base.slopes[2]});
    if (m) return *m;
    throw std::logic_error("theta_normalizer: no normalizing matrix found");
}

} // namespace census
