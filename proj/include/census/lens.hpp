#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "census/farey.hpp"

namespace census {

/// Lens space L(p,q) stored in canonical class form: q is the least element
/// of {+-q^{+-1} mod p}.
struct LensSpace {
    i64 p = 1;
    i64 q = 0;

    LensSpace(i64 pp, i64 qq) {
        if (pp < 1) throw std::invalid_argument("LensSpace: p must be >= 1");
        p = pp;
        qq = ((qq % p) + p) % p;
        if (p == 1) {
            q = 0;
            return;
        }
        if (qq == 0 || std::gcd(p, qq) != 1)
            throw std::invalid_argument("LensSpace: q must be a unit mod p");
        q = canonical_q(p, qq);
    }

    static i64 canonical_q(i64 p, i64 q) {
        i64 qi = mod_inverse(q, p);
        return std::min(std::min(q, p - q), std::min(qi, p - qi));
    }

    static i64 mod_inverse(i64 a, i64 m) {
        i64 t = 0, nt = 1, r = m, nr = a % m;
        while (nr != 0) {
            i64 quot = r / nr;
            std::swap(t -= quot * nt, nt);
            std::swap(r -= quot * nr, nr);
        }
        if (r != 1) throw std::invalid_argument("mod_inverse: not a unit");
        return ((t % m) + m) % m;
    }

    friend bool operator==(const LensSpace& x, const LensSpace& y) { return x.p == y.p && x.q == y.q; }
    friend bool operator<(const LensSpace& x, const LensSpace& y) {
        if (x.p != y.p) return x.p < y.p;
        return x.q < y.q;
    }

    std::string str() const { return "L(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

/// Sum of the digits of the ordinary continued fraction of p/q (positive
/// digits, p > q >= 1).
inline i64 cf_digit_sum(i64 p, i64 q) {
    i64 s = 0;
    while (q != 0) {
        s += p / q;
        i64 r = p % q;
        p = q;
        q = r;
    }
    return s;
}

/// Minimal continued-fraction digit sum over the canonical q-class of L(p,q).
inline i64 lens_digit_sum(const LensSpace& l) {
    if (l.p == 1) return 1; // S^3: one triangle crossed by the degenerate geodesic
    i64 best = -1;
    i64 qs[2] = {l.q, LensSpace::mod_inverse(l.q, l.p)};
    for (i64 q0 : qs)
        for (i64 q : {q0, l.p - q0}) {
            i64 s = cf_digit_sum(l.p, q);
            if (best < 0 || s < best) best = s;
        }
    return best;
}

/// Complexity of a lens space by the closed form max(0, S - 3), where S is
/// the minimal digit sum above. Cross-validated against the Farey path
/// oracle (lens_path_complexity) on all p <= 200 before use as the fast path;
/// see validate_lens_formula.
inline i64 lens_complexity(const LensSpace& l) {
    i64 s = lens_digit_sum(l);
    return std::max<i64>(0, s - 3);
}

/// Independent oracle: least number of flips joining a theta-graph that
/// admits a complexity-0 marked solid torus on the meridian of one side to
/// one admitting it on the other. Meridians are read as inf and r/p on the
/// splitting torus; a marked solid torus has complexity 0 when its meridian
/// lies in the marking or one flip away, so the fan-to-fan triangle distance
/// shortens by one flip on each end.
inline i64 lens_path_complexity(const LensSpace& l) {
    i64 best = -1;
    std::vector<i64> reps;
    if (l.p == 1) {
        reps.push_back(0);
    } else {
        i64 qi = LensSpace::mod_inverse(l.q, l.p);
        for (i64 r : {l.q, l.p - l.q, qi, l.p - qi}) reps.push_back(r);
    }
    for (i64 r : reps) {
        Slope target(r, l.p);
        // Walk the dual tree from the fan of infinity towards the fan of
        // target, counting triangles crossed by the connecting geodesic.
        i64 fl = target.is_infinity() ? 0 : target.p / target.q; // floor
        ThetaGraph cur(Slope::integer(fl), Slope::integer(fl + 1), Slope::infinity());
        i64 crossed = 1;
        while (!cur.contains(target)) {
            cur = step_towards_slope(cur, target);
            ++crossed;
            if (crossed > 100000) throw std::logic_error("lens_path_complexity: runaway walk");
        }
        i64 c = std::max<i64>(0, crossed - 3);
        if (best < 0 || c < best) best = c;
    }
    return best;
}

/// Fails loudly if the closed form and the flip-path oracle disagree for any
/// canonical class with p <= pmax.
inline void validate_lens_formula(i64 pmax = 200) {
    for (i64 p = 1; p <= pmax; ++p) {
        for (i64 q = (p == 1 ? 0 : 1); q < std::max<i64>(p, 1); ++q) {
            if (p > 1 && std::gcd(p, q) != 1) continue;
            LensSpace l(p, q);
            if (l.q != q && p > 1) continue; // only canonical representatives
            if (lens_complexity(l) != lens_path_complexity(l))
                throw std::logic_error("lens complexity formula disagrees with path oracle at " + l.str());
            if (p == 1) break;
        }
    }
}

/// Census row: complexity value, class count, sorted representatives.
struct LensCensusRow {
    i64 complexity = 0;
    std::vector<LensSpace> classes;
};

/// Counts of canonical lens classes at each complexity 0..c_max. The scan
/// bound is p <= Fib(c_max + 4): p is a continuant of the digit word, and a
/// continuant with digit sum S is at most Fib(S + 1), with S <= c_max + 3.
inline std::vector<LensCensusRow> lens_census(i64 c_max) {
    if (c_max < 0 || c_max > 12) throw std::invalid_argument("lens_census: c_max must be in [0, 12]");
    i64 fib0 = 1, fib1 = 1;
    for (i64 i = 2; i <= c_max + 4; ++i) { i64 t = fib0 + fib1; fib0 = fib1; fib1 = t; }
    i64 pmax = fib1;

    std::vector<LensCensusRow> rows(size_t(c_max) + 1);
    for (i64 c = 0; c <= c_max; ++c) rows[size_t(c)].complexity = c;

    for (i64 p = 1; p <= pmax; ++p) {
        i64 qhi = (p == 1) ? 0 : p - 1;
        for (i64 q = (p == 1 ? 0 : 1); q <= qhi; ++q) {
            if (p > 1 && std::gcd(p, q) != 1) continue;
            if (p > 1 && LensSpace::canonical_q(p, q) != q) continue;
            LensSpace l(p, q);
            i64 c = lens_complexity(l);
            if (c <= c_max) rows[size_t(c)].classes.push_back(l);
            if (p == 1) break;
        }
    }
    for (auto& row : rows) std::sort(row.classes.begin(), row.classes.end());
    return rows;
}

/// The lens row of the reference table of P^2-irreducible manifold counts,
/// complexities 0..9.
inline const std::vector<i64>& lens_reference_counts() {
    static const std::vector<i64> counts = {3, 2, 3, 6, 10, 20, 36, 72, 136, 272};
    return counts;
}

} // namespace census
