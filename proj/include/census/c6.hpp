#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "census/homology.hpp"
#include "census/marked.hpp"
#include "census/torus_bundle.hpp"
#include "census/twisted.hpp"

namespace census {

/// Abelianized presentation of a piece with torus boundary: generators,
/// relation rows, and per-boundary-torus images of the coordinate basis.
struct PiecePresentation {
    int gens = 0;
    IntMatrix relations;
    std::vector<std::array<std::vector<i64>, 2>> boundary; // images of (1,0) and (0,1)
};

/// Twisted I-bundle over the torus: H1 = Z<core> + Z<fiber>; the boundary
/// double-covers the core direction.
inline PiecePresentation twisted_ibundle_presentation() {
    PiecePresentation p;
    p.gens = 2;
    p.boundary.push_back({std::vector<i64>{2, 0}, std::vector<i64>{0, 1}});
    return p;
}

/// The circle bundle over the disc with cone points (a,1), (2,1) and one
/// boundary torus in (section, fiber) coordinates: generators are the three
/// hole classes and the fiber.
inline PiecePresentation seifert_disc_piece_presentation(i64 a) {
    PiecePresentation p;
    p.gens = 4; // x1, x2, x3, h
    p.relations = {{1, 1, 1, 0}, {a, 0, 0, 1}, {0, 2, 0, 1}};
    p.boundary.push_back({std::vector<i64>{0, 0, 1, 0}, std::vector<i64>{0, 0, 0, 1}});
    return p;
}

/// First homology of two pieces glued along one torus via psi
/// (Mayer-Vietoris: both images of each basis curve agree).
inline AbelianGroup glued_h1(const PiecePresentation& p1, size_t t1, const PiecePresentation& p2,
                             size_t t2, const Mat2& psi) {
    int gens = p1.gens + p2.gens;
    IntMatrix rels;
    for (const auto& r : p1.relations) {
        std::vector<i64> row(size_t(gens), 0);
        for (size_t i = 0; i < r.size(); ++i) row[i] = r[i];
        rels.push_back(std::move(row));
    }
    for (const auto& r : p2.relations) {
        std::vector<i64> row(size_t(gens), 0);
        for (size_t i = 0; i < r.size(); ++i) row[size_t(p1.gens) + i] = r[i];
        rels.push_back(std::move(row));
    }
    auto add_matching = [&](i64 c1, i64 c2, i64 im1, i64 im2) {
        // curve (c1, c2) on side 1 equals (im1, im2) on side 2
        std::vector<i64> row(size_t(gens), 0);
        for (int i = 0; i < p1.gens; ++i)
            row[size_t(i)] = c1 * p1.boundary[t1][0][size_t(i)] + c2 * p1.boundary[t1][1][size_t(i)];
        for (int i = 0; i < p2.gens; ++i)
            row[size_t(p1.gens + i)] =
                -(im1 * p2.boundary[t2][0][size_t(i)] + im2 * p2.boundary[t2][1][size_t(i)]);
        rels.push_back(std::move(row));
    };
    add_matching(1, 0, psi.a, psi.c);
    add_matching(0, 1, psi.b, psi.d);
    return abelian_group(gens, rels);
}

/// One census entry.
struct CensusRow {
    int complexity = 6;
    std::string description;
    Geometry geometry = Geometry::NotClassifiedHere;
    std::optional<Rational> chi;            // orbifold Euler characteristic of a produced fibration
    std::optional<Mat2> monodromy;          // torus-bundle construction matrix
    std::optional<Mat2> normal_form;        // conjugacy normal form when Sol
    i64 ledger = 0;
    std::string trace;
    AbelianGroup h1;
    std::vector<std::string> fibrations;    // base-orbifold forms observed across constructions
};

/// The four closed non-orientable flat 3-manifolds, keyed by first homology.
/// The grouping is derived from the census constructions themselves and
/// locked by tests; each manifold admits several of the produced fibrations.
struct FlatClass {
    std::string name;
    AbelianGroup h1;
};

inline const std::vector<FlatClass>& nonorientable_flat_classes() {
    static const std::vector<FlatClass> table = {
        {"flat: K x S1", {2, {2}}},
        {"flat: torus bundle [[0,1],[1,0]]", {2, {}}},
        {"flat: RP2(2,1)(2,1)-fibered", {1, {4}}},
        {"flat: disc+mirror(2,1)(2,1)-fibered", {1, {2, 2}}},
    };
    return table;
}

namespace detail {

inline std::vector<Mat2> marking_bijections(const ThetaGraph& from, const ThetaGraph& to) {
    std::vector<Mat2> out;
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end());
    do {
        auto m = realize_slope_bijection(
            {from.slopes[0], from.slopes[1], from.slopes[2]},
            {to.slopes[size_t(idx[0])], to.slopes[size_t(idx[1])], to.slopes[size_t(idx[2])]});
        if (m) out.push_back(*m);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

struct Accumulator {
    std::map<std::string, CensusRow> rows;

    void add(CensusRow row) {
        std::string key = geometry_name(row.geometry) + "|" + row.h1.str();
        if (row.normal_form) key += "|" + row.normal_form->str();
        auto it = rows.find(key);
        if (it == rows.end()) {
            std::sort(row.fibrations.begin(), row.fibrations.end());
            rows.emplace(key, std::move(row));
            return;
        }
        CensusRow& r = it->second;
        for (const auto& f : row.fibrations)
            if (std::find(r.fibrations.begin(), r.fibrations.end(), f) == r.fibrations.end())
                r.fibrations.push_back(f);
        std::sort(r.fibrations.begin(), r.fibrations.end());
        if (row.ledger < r.ledger) {
            r.ledger = row.ledger;
            r.trace = row.trace;
        }
    }
};

inline std::string flat_name(const AbelianGroup& h1) {
    for (const auto& fc : nonorientable_flat_classes())
        if (fc.h1 == h1) return fc.name;
    return "flat: unrecognized (H1 = " + h1.str() + ")";
}

} // namespace detail

/// The closed non-orientable manifolds assembled from the three
/// complexity-6 configurations: two twisted I-bundles, the Seifert piece
/// (D2xS1)_{2,2,theta_-1} with a twisted I-bundle, and self-assembled B0.
/// Deduplicated by geometry and first homology (plus Sol normal form);
/// exactly five classes are expected, each with ledger 6.
inline std::vector<CensusRow> nonorientable_c6_census() {
    detail::Accumulator acc;
    ThetaGraph base = ThetaGraph::base();

    // (i) Two twisted I-bundles, all marking bijections.
    {
        PiecePresentation tw = twisted_ibundle_presentation();
        for (const Mat2& psi : detail::marking_bijections(base, base)) {
            SeifertData d = classify_two_twisted(psi);
            Rational chi = chi_orb(d);
            if (!chi.is_zero()) throw Error("c6 census: two-twisted case with nonzero chi_orb");
            CensusRow row;
            row.geometry = classify_geometry(d, Rational(0));
            row.chi = chi;
            row.ledger = make_twisted_ibundle().ledger * 2;
            row.h1 = glued_h1(tw, 0, tw, 0, psi);
            row.fibrations.push_back(d.base_form());
            row.trace = "assemble(TxI~, TxI~; psi=" + psi.str() + ")";
            row.description = detail::flat_name(row.h1);
            acc.add(std::move(row));
        }
    }

    // (ii) (D2xS1)_{2,2,theta_-1} with a twisted I-bundle, all bijections.
    {
        MarkedManifold n2 = make_b4();
        n2 = brick_fill_effect(BlockKind::B2, n2, 0, Slope::integer(2));
        n2 = brick_fill_effect(BlockKind::B2, n2, 0, Slope::integer(2));
        if (n2.ledger != 3) throw Error("c6 census: (D2xS1)_{2,2} ledger must be 3");
        PiecePresentation np = seifert_disc_piece_presentation(2);
        PiecePresentation tw = twisted_ibundle_presentation();
        for (const Mat2& psi : detail::marking_bijections(theta_i(-1), base)) {
            CensusRow row;
            SeifertData primary = classify_seifert_twisted(2, psi, TwistedRoute::DiscFiber);
            SeifertData secondary = classify_seifert_twisted(2, psi, TwistedRoute::MoebiusFiber);
            Rational chi = chi_orb(primary);
            if (!chi.is_zero() || !chi_orb(secondary).is_zero())
                throw Error("c6 census: seifert-twisted case with nonzero chi_orb");
            row.geometry = classify_geometry(primary, Rational(0));
            row.chi = chi;
            row.ledger = n2.ledger + 3;
            row.h1 = glued_h1(np, 0, tw, 0, psi);
            row.fibrations.push_back(primary.base_form());
            row.fibrations.push_back(secondary.base_form());
            row.trace = "assemble(" + n2.trace + ", TxI~; psi=" + psi.str() + ")";
            row.description = detail::flat_name(row.h1);
            acc.add(std::move(row));
        }
    }

    // (iii) Self-assembled B0: gluing matrices carrying the marking to itself
    // or to an adjacent triangle, restricted to orientation-reversing ones.
    {
        std::vector<ThetaGraph> targets{base};
        for (const Slope& s : base.slopes) targets.push_back(flip(base, s));
        for (const ThetaGraph& target : targets)
            for (const Mat2& psi : detail::marking_bijections(base, target)) {
                if (psi.det() != -1) continue;
                MarkedManifold bundle = self_assemble(make_b0(), 0, 1, psi);
                TorusBundleClass cls = classify_torus_bundle(psi);
                CensusRow row;
                row.geometry = cls.geometry;
                row.ledger = bundle.ledger;
                row.h1 = torus_bundle_h1(psi);
                row.monodromy = psi;
                row.trace = bundle.trace;
                if (cls.geometry == Geometry::Sol) {
                    Mat2 nf = bundle_normal_form(psi);
                    row.normal_form = nf;
                    row.monodromy = nf;
                    row.description = "Sol torus bundle, monodromy " + nf.str();
                } else if (cls.geometry == Geometry::E3) {
                    row.fibrations.push_back("torus-bundle" + cls.normal_form.str());
                    row.description = detail::flat_name(row.h1);
                } else {
                    throw Error("c6 census: self-assembled B0 neither flat nor Sol");
                }
                acc.add(std::move(row));
            }
    }

    std::vector<CensusRow> out;
    for (auto& [key, row] : acc.rows) {
        (void)key;
        out.push_back(row);
    }
    std::sort(out.begin(), out.end(), [](const CensusRow& a, const CensusRow& b) {
        if (a.geometry != b.geometry) return int(a.geometry) < int(b.geometry);
        return a.description < b.description;
    });
    return out;
}

/// Complexity-7 example constructions: two H2xR Seifert manifolds over
/// RP2(3,1)(2,1) and disc+mirror(3,1)(2,1), and the Sol torus bundle with
/// monodromy [[2,1],[1,0]].
inline std::vector<CensusRow> c7_examples() {
    std::vector<CensusRow> out;

    // (D2xS1)_{3,2,theta_-1}: fill slope 3 via a flip then B2, fill slope 2
    // directly; ledger 3 + 1 + 0 + 0 = 4.
    MarkedManifold n3 = make_b4();
    n3 = brick_fill_effect(BlockKind::B3, n3, 0, Slope::integer(0)); // theta_0 -> theta_1
    n3 = brick_fill_effect(BlockKind::B2, n3, 0, Slope::integer(3));
    n3 = brick_fill_effect(BlockKind::B2, n3, 0, Slope::integer(2));
    if (n3.ledger != 4) throw Error("c7: (D2xS1)_{3,2} ledger must be 4");
    if (!n3.seifert || n3.seifert->cones != std::vector<std::pair<i64, i64>>{{2, 1}, {3, 1}})
        throw Error("c7: (D2xS1)_{3,2} cones must be (3,1),(2,1)");

    PiecePresentation np = seifert_disc_piece_presentation(3);
    PiecePresentation tw = twisted_ibundle_presentation();
    for (const Mat2& psi : detail::marking_bijections(theta_i(-1), ThetaGraph::base())) {
        SeifertData d = classify_seifert_twisted(3, psi, TwistedRoute::DiscFiber);
        CensusRow row;
        row.complexity = 7;
        row.geometry = classify_geometry(d, Rational(0));
        row.chi = chi_orb(d);
        row.ledger = n3.ledger + 3;
        row.h1 = glued_h1(np, 0, tw, 0, psi);
        row.fibrations.push_back(d.base_form());
        row.trace = "assemble(" + n3.trace + ", TxI~; psi=" + psi.str() + ")";
        row.description = "H2xR Seifert over " + d.base_form();
        bool seen = false;
        for (const auto& r : out)
            if (r.description == row.description) seen = true;
        if (!seen) out.push_back(std::move(row));
    }

    // Sol with monodromy [[2,1],[1,0]]: self-assembled B3.
    {
        Mat2 a{2, 1, 1, 0};
        MarkedManifold b3 = make_b3(ThetaGraph::base(), Slope(0, 1)); // markings theta_0, theta_1
        MarkedManifold bundle = self_assemble(b3, 0, 1, a);
        TorusBundleClass cls = classify_torus_bundle(a);
        if (cls.geometry != Geometry::Sol) throw Error("c7: [[2,1],[1,0]] bundle must be Sol");
        CensusRow row;
        row.complexity = 7;
        row.geometry = Geometry::Sol;
        row.monodromy = a;
        row.normal_form = cls.normal_form;
        row.ledger = bundle.ledger;
        row.h1 = torus_bundle_h1(a);
        row.trace = bundle.trace;
        row.description = "Sol torus bundle, monodromy " + a.str();
        out.push_back(std::move(row));
    }

    std::sort(out.begin(), out.end(),
              [](const CensusRow& a, const CensusRow& b) { return a.description < b.description; });
    return out;
}

} // namespace census
