#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace census {

/// Permutations of {0,1,2,3} indexed 0..23, with composition, inverse and
/// sign tables built once. Used as vertex bijections of tetrahedron gluings.
class Perm4 {
public:
    constexpr Perm4() : idx_(0) {}
    explicit Perm4(int idx) : idx_(idx) {
        if (idx < 0 || idx >= 24) throw std::invalid_argument("Perm4: index out of range");
    }
    static Perm4 from_images(int i0, int i1, int i2, int i3) {
        std::array<int, 4> im{i0, i1, i2, i3};
        std::array<bool, 4> seen{};
        for (int v : im) {
            if (v < 0 || v > 3 || seen[size_t(v)]) throw std::invalid_argument("Perm4: not a permutation");
            seen[size_t(v)] = true;
        }
        for (int k = 0; k < 24; ++k)
            if (tables().images[size_t(k)] == im) return Perm4(k);
        throw std::logic_error("Perm4: table lookup failed");
    }

    int operator[](int v) const { return tables().images[size_t(idx_)][size_t(v)]; }
    int index() const { return idx_; }

    Perm4 inverse() const { return Perm4(tables().inv[size_t(idx_)]); }
    /// (x * y)[v] = x[y[v]]
    friend Perm4 operator*(Perm4 x, Perm4 y) { return Perm4(tables().mul[size_t(x.idx_)][size_t(y.idx_)]); }
    friend bool operator==(Perm4 x, Perm4 y) { return x.idx_ == y.idx_; }
    friend bool operator!=(Perm4 x, Perm4 y) { return x.idx_ != y.idx_; }

    /// +1 for even permutations, -1 for odd.
    int sign() const { return tables().sign[size_t(idx_)]; }

    bool is_identity() const { return (*this)[0] == 0 && (*this)[1] == 1 && (*this)[2] == 2 && (*this)[3] == 3; }

    std::string str() const {
        std::string s = "(";
        for (int v = 0; v < 4; ++v) s += std::to_string((*this)[v]);
        return s + ")";
    }

private:
    int idx_;

    struct Tables {
        std::array<std::array<int, 4>, 24> images{};
        std::array<std::array<int, 24>, 24> mul{};
        std::array<int, 24> inv{};
        std::array<int, 24> sign{};
        Tables() {
            std::array<int, 4> v{0, 1, 2, 3};
            int k = 0;
            // Lexicographic enumeration of S4.
            do_perms(v, 0, k);
            for (int x = 0; x < 24; ++x) {
                for (int y = 0; y < 24; ++y) {
                    std::array<int, 4> c{};
                    for (int i = 0; i < 4; ++i) c[size_t(i)] = images[size_t(x)][size_t(images[size_t(y)][size_t(i)])];
                    mul[size_t(x)][size_t(y)] = find(c);
                }
                std::array<int, 4> iv{};
                for (int i = 0; i < 4; ++i) iv[size_t(images[size_t(x)][size_t(i)])] = i;
                inv[size_t(x)] = find(iv);
                int inversions = 0;
                for (int i = 0; i < 4; ++i)
                    for (int j = i + 1; j < 4; ++j)
                        if (images[size_t(x)][size_t(i)] > images[size_t(x)][size_t(j)]) ++inversions;
                sign[size_t(x)] = (inversions % 2 == 0) ? 1 : -1;
            }
        }
        void do_perms(std::array<int, 4>& v, int pos, int& k) {
            if (pos == 4) { images[size_t(k++)] = v; return; }
            for (int i = pos; i < 4; ++i) {
                std::swap(v[size_t(pos)], v[size_t(i)]);
                do_perms(v, pos + 1, k);
                std::swap(v[size_t(pos)], v[size_t(i)]);
            }
        }
        int find(const std::array<int, 4>& im) const {
            for (int k = 0; k < 24; ++k)
                if (images[size_t(k)] == im) return k;
            return -1;
        }
    };
    static const Tables& tables() {
        static const Tables t;
        return t;
    }
};

} // namespace census
