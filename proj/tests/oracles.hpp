#pragma once

// Test-side oracles, independent of the library's computation paths wherever
// the checked quantity admits a second route.

#include <array>
#include <vector>

#include "census/gluing.hpp"
#include "census/homology.hpp"

namespace oracles {

using census::GluingTable;
using census::i64;

/// Boundary word of each triangle as signed triangulation-edge classes:
/// generators = edge classes, one length-3 relator per triangle, signs from
/// the edge-orientation classes. Presents pi_1 of the realized space for a
/// one-vertex table (edges are loops at the single vertex).
struct EdgePresentation {
    int generators = 0;
    std::vector<std::array<std::pair<int, int>, 3>> relators; // (edge class, sign)
};

inline EdgePresentation edge_presentation(const GluingTable& t) {
    census::EdgeClasses ec = census::edge_classes(t);
    EdgePresentation p;
    p.generators = ec.count;
    for (int s = 0; s < t.slots(); ++s) {
        if (!t.glued(s) || t.gluing(s).target < s) continue;
        int tt = GluingTable::slot_tet(s);
        auto fv = census::face_vertices(GluingTable::slot_face(s));
        // Boundary of the triangle (v0, v1, v2): edges v0->v1, v1->v2, v2->v0.
        std::array<std::pair<int, int>, 3> rel{};
        for (int k = 0; k < 3; ++k) {
            int a = fv[size_t(k)], b = fv[size_t((k + 1) % 3)];
            int pos = 6 * tt + census::tet_edge_index(a, b);
            int cls = ec.class_of[size_t(pos)];
            // Canonical direction of the position is min -> max; sign also
            // flips with the class-orientation bit.
            int sign = (a < b) ? 1 : -1;
            if (ec.orient_of[size_t(pos)]) sign = -sign;
            rel[size_t(k)] = {cls, sign};
        }
        p.relators.push_back(rel);
    }
    return p;
}

/// First integral homology of the realized closed space: abelianized edge
/// presentation, reduced by Smith normal form.
inline census::AbelianGroup h1_oracle(const GluingTable& t) {
    EdgePresentation p = edge_presentation(t);
    census::IntMatrix rels;
    for (const auto& rel : p.relators) {
        std::vector<i64> row(size_t(p.generators), 0);
        for (auto [cls, sign] : rel) row[size_t(cls)] += sign;
        rels.push_back(std::move(row));
    }
    return census::abelian_group(p.generators, rels);
}

/// Number of homomorphisms from pi_1 to the alternating group A4, counted by
/// depth-first assignment of generator images with relator pruning.
/// Distinguishes, e.g., Z (12 homomorphisms) from the semidirect products
/// Z^2 x| Z with hyperbolic det -1 monodromy (36).
inline i64 count_a4_homs(const GluingTable& t) {
    EdgePresentation p = edge_presentation(t);
    // A4 as permutations of {0,1,2,3}, even sign.
    std::vector<census::Perm4> a4;
    for (int i = 0; i < 24; ++i)
        if (census::Perm4(i).sign() == 1) a4.push_back(census::Perm4(i));

    std::vector<int> image(size_t(p.generators), -1);
    i64 count = 0;
    std::function<void(int)> rec = [&](int g) {
        if (g == p.generators) {
            ++count;
            return;
        }
        for (size_t k = 0; k < a4.size(); ++k) {
            image[size_t(g)] = int(k);
            bool ok = true;
            for (const auto& rel : p.relators) {
                bool ready = true;
                for (auto [cls, sign] : rel) {
                    (void)sign;
                    if (image[size_t(cls)] < 0) ready = false;
                }
                if (!ready) continue;
                census::Perm4 w;
                for (auto [cls, sign] : rel) {
                    census::Perm4 x = a4[size_t(image[size_t(cls)])];
                    w = w * (sign > 0 ? x : x.inverse());
                }
                if (!w.is_identity()) { ok = false; break; }
            }
            if (ok) rec(g + 1);
        }
        image[size_t(g)] = -1;
    };
    rec(0);
    return count;
}

} // namespace oracles
