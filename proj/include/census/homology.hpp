#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace census {

using i64 = std::int64_t;

/// Integer matrix as rows; empty rows allowed.
using IntMatrix = std::vector<std::vector<i64>>;

namespace detail {

inline void check_size(i64 v) {
    // Entries here come from small combinatorial presentations; anything
    // this large means runaway growth in the reduction.
    if (v > (i64(1) << 55) || v < -(i64(1) << 55))
        throw std::overflow_error("smith_normal_form: entry overflow");
}

} // namespace detail

/// Diagonal of the Smith normal form of m (non-negative, divisibility chain,
/// padded with zeros to min(rows, cols)).
inline std::vector<i64> smith_normal_form(IntMatrix m) {
    size_t rows = m.size();
    size_t cols = 0;
    for (auto& r : m) cols = std::max(cols, r.size());
    for (auto& r : m) r.resize(cols, 0);

    std::vector<i64> diag;
    size_t top = 0;
    while (top < rows && top < cols) {
        // Locate the entry of least nonzero magnitude in the working block.
        size_t pi = top, pj = top;
        i64 best = 0;
        for (size_t i = top; i < rows; ++i)
            for (size_t j = top; j < cols; ++j) {
                i64 v = std::abs(m[i][j]);
                if (v != 0 && (best == 0 || v < best)) { best = v; pi = i; pj = j; }
            }
        if (best == 0) break;
        std::swap(m[top], m[pi]);
        for (size_t i = top; i < rows; ++i) std::swap(m[i][top], m[i][pj]);

        bool again = true;
        while (again) {
            again = false;
            for (size_t i = top + 1; i < rows; ++i) {
                if (m[i][top] == 0) continue;
                i64 q = m[i][top] / m[top][top];
                for (size_t j = top; j < cols; ++j) { m[i][j] -= q * m[top][j]; detail::check_size(m[i][j]); }
                if (m[i][top] != 0) { std::swap(m[top], m[i]); again = true; }
            }
            for (size_t j = top + 1; j < cols; ++j) {
                if (m[top][j] == 0) continue;
                i64 q = m[top][j] / m[top][top];
                for (size_t i = top; i < rows; ++i) { m[i][j] -= q * m[i][top]; detail::check_size(m[i][j]); }
                if (m[top][j] != 0) {
                    for (size_t i = top; i < rows; ++i) std::swap(m[i][top], m[i][j]);
                    again = true;
                }
            }
        }

        // Enforce divisibility: pivot must divide every remaining entry.
        i64 p = std::abs(m[top][top]);
        bool redo = false;
        for (size_t i = top + 1; i < rows && !redo; ++i)
            for (size_t j = top + 1; j < cols && !redo; ++j)
                if (m[i][j] % p != 0) {
                    for (size_t jj = top; jj < cols; ++jj) m[top][jj] += m[i][jj];
                    redo = true;
                }
        if (redo) continue;

        diag.push_back(p);
        ++top;
    }
    diag.resize(std::min(rows, cols), 0);
    return diag;
}

/// Basis of the integer kernel {x : m x = 0} of an integer matrix (columns =
/// unknowns), via column-tracked elimination.
inline IntMatrix integer_kernel(IntMatrix m) {
    size_t rows = m.size();
    size_t cols = 0;
    for (auto& r : m) cols = std::max(cols, r.size());
    for (auto& r : m) r.resize(cols, 0);
    // v tracks column operations: kernel vectors are columns of v over the
    // eliminated zero-columns of m.
    IntMatrix v(cols, std::vector<i64>(cols, 0));
    for (size_t i = 0; i < cols; ++i) v[i][i] = 1;

    size_t top = 0;
    std::vector<bool> col_done(cols, false);
    while (top < rows) {
        // Smallest nonzero entry in remaining columns of row block top..rows.
        size_t pi = 0, pj = 0;
        i64 best = 0;
        for (size_t i = top; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) {
                if (col_done[j]) continue;
                i64 a = std::abs(m[i][j]);
                if (a != 0 && (best == 0 || a < best)) { best = a; pi = i; pj = j; }
            }
        if (best == 0) break;
        std::swap(m[top], m[pi]);
        bool more = true;
        while (more) {
            more = false;
            for (size_t j = 0; j < cols; ++j) {
                if (j == pj || col_done[j] || m[top][j] == 0) continue;
                i64 q = m[top][j] / m[top][pj];
                for (size_t i = 0; i < rows; ++i) { m[i][j] -= q * m[i][pj]; detail::check_size(m[i][j]); }
                for (size_t i = 0; i < cols; ++i) { v[i][j] -= q * v[i][pj]; detail::check_size(v[i][j]); }
                if (m[top][j] != 0) {
                    // Remainder smaller than pivot: swap roles.
                    for (size_t i = 0; i < rows; ++i) std::swap(m[i][j], m[i][pj]);
                    for (size_t i = 0; i < cols; ++i) std::swap(v[i][j], v[i][pj]);
                    more = true;
                }
            }
        }
        col_done[pj] = true;
        ++top;
    }
    IntMatrix kernel;
    for (size_t j = 0; j < cols; ++j) {
        if (col_done[j]) continue;
        bool zero = true;
        for (size_t i = 0; i < rows; ++i)
            if (m[i][j] != 0) zero = false;
        if (!zero) continue; // unreached rows below top are already zero here
        std::vector<i64> k(cols);
        for (size_t i = 0; i < cols; ++i) k[i] = v[i][j];
        kernel.push_back(std::move(k));
    }
    return kernel;
}

/// Finitely generated abelian group as rank + invariant factors (each > 1,
/// divisibility chain).
struct AbelianGroup {
    int rank = 0;
    std::vector<i64> torsion;

    friend bool operator==(const AbelianGroup& x, const AbelianGroup& y) {
        return x.rank == y.rank && x.torsion == y.torsion;
    }
    friend bool operator<(const AbelianGroup& x, const AbelianGroup& y) {
        if (x.rank != y.rank) return x.rank < y.rank;
        return x.torsion < y.torsion;
    }

    std::string str() const {
        std::string s;
        for (int i = 0; i < rank; ++i) s += (s.empty() ? "Z" : " + Z");
        for (i64 t : torsion) s += (s.empty() ? "Z/" : " + Z/") + std::to_string(t);
        if (s.empty()) s = "0";
        return s;
    }
};

/// Cokernel of the relation matrix on `gens` generators: the abelian group
/// <g_1..g_n | rows of relations>.
inline AbelianGroup abelian_group(int gens, const IntMatrix& relations) {
    if (gens < 0) throw std::invalid_argument("abelian_group: negative generator count");
    IntMatrix m = relations;
    for (auto& r : m) r.resize(size_t(gens), 0);
    std::vector<i64> d = smith_normal_form(m);
    AbelianGroup g;
    int nontrivial = 0;
    for (i64 v : d) {
        if (v == 0) continue;
        ++nontrivial;
        if (v > 1) g.torsion.push_back(v);
    }
    std::sort(g.torsion.begin(), g.torsion.end());
    g.rank = gens - nontrivial;
    return g;
}

} // namespace census
