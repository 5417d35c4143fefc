#pragma once

#include <optional>
#include <string>
#include <vector>

#include "census/farey.hpp"
#include "census/mat2.hpp"
#include "census/seifert.hpp"

namespace census {

enum class PieceKind { Block, TwistedIBundle, SeifertPiece, TorusBundle, Composite };
enum class BlockKind { B0, B1, B2, B3, B4 };

inline std::string block_name(BlockKind b) {
    switch (b) {
        case BlockKind::B0: return "B0";
        case BlockKind::B1: return "B1";
        case BlockKind::B2: return "B2";
        case BlockKind::B3: return "B3";
        case BlockKind::B4: return "B4";
    }
    return "B?";
}

/// A boundary torus with its theta-graph marking, slopes written in the
/// torus's own coordinates.
struct MarkedTorus {
    ThetaGraph marking = ThetaGraph::base();
};

/// Compact 3-manifold with theta-marked torus boundary and a complexity
/// ledger (an upper bound; `sharp` only ever set from recorded claims, never
/// inferred).
struct MarkedManifold {
    PieceKind kind = PieceKind::Composite;
    BlockKind block = BlockKind::B0;  // meaningful when kind == Block
    std::vector<MarkedTorus> boundary;
    i64 ledger = 0;
    bool sharp = false;
    std::string trace;

    // Product pieces (T x I): both markings in common torus coordinates;
    // self-assembling yields the mapping torus of the gluing matrix.
    bool product_piece = false;

    // Solid-torus blocks: meridian slope in boundary coordinates.
    std::optional<Slope> meridian;

    // Seifert-fibered pieces: base data, with boundary tori in
    // (section, fiber) coordinates so slope p/q means p*section + q*fiber.
    std::optional<SeifertData> seifert;

    // Torus bundles: the monodromy matrix.
    std::optional<Mat2> monodromy;
};

inline ThetaGraph theta_i(i64 i) {
    return ThetaGraph(Slope::integer(i), Slope::integer(i + 1), Slope::infinity());
}

/// T x I with both ends marked by isotopic theta-graphs.
inline MarkedManifold make_b0(ThetaGraph theta = ThetaGraph::base()) {
    MarkedManifold m;
    m.kind = PieceKind::Block;
    m.block = BlockKind::B0;
    m.boundary = {{theta}, {theta}};
    m.ledger = 0;
    m.product_piece = true;
    m.trace = "B0";
    return m;
}

/// Marked solid torus with meridian in the marking.
inline MarkedManifold make_b1(ThetaGraph theta, Slope meridian) {
    if (!theta.contains(meridian)) throw Error("B1: meridian must lie in the marking");
    MarkedManifold m;
    m.kind = PieceKind::Block;
    m.block = BlockKind::B1;
    m.boundary = {{theta}};
    m.meridian = meridian;
    m.trace = "B1";
    return m;
}

/// Marked solid torus with meridian one flip away from the marking.
inline MarkedManifold make_b2(ThetaGraph theta, Slope meridian) {
    auto nf = one_flip_slopes(theta);
    if (meridian != nf[0] && meridian != nf[1] && meridian != nf[2])
        throw Error("B2: meridian must be one flip away from the marking");
    MarkedManifold m;
    m.kind = PieceKind::Block;
    m.block = BlockKind::B2;
    m.boundary = {{theta}};
    m.meridian = meridian;
    m.trace = "B2";
    return m;
}

/// T x I with ends marked by theta-graphs related by one flip.
inline MarkedManifold make_b3(ThetaGraph theta, Slope removed) {
    MarkedManifold m;
    m.kind = PieceKind::Block;
    m.block = BlockKind::B3;
    m.boundary = {{theta}, {flip(theta, removed)}};
    m.ledger = 1;
    m.product_piece = true;
    m.trace = "B3";
    return m;
}

/// The three-holed-disc circle bundle D2 x S1 with markings theta_0,
/// theta_0, theta_-1.
inline MarkedManifold make_b4() {
    MarkedManifold m;
    m.kind = PieceKind::Block;
    m.block = BlockKind::B4;
    m.boundary = {{theta_i(0)}, {theta_i(0)}, {theta_i(-1)}};
    m.ledger = 3;
    m.trace = "B4";
    SeifertData d;
    d.genus = 0;
    d.orientable_base = true;
    d.boundary_circles = 3;
    m.seifert = d;
    return m;
}

/// Twisted I-bundle over the torus, one boundary torus marked {inf,0,1}.
/// Slope 0 is a fiber of the bundle's product fibration over the Moebius
/// band, slope inf a fiber of its fibration over the annulus with one mirror
/// circle.
inline MarkedManifold make_twisted_ibundle() {
    MarkedManifold m;
    m.kind = PieceKind::TwistedIBundle;
    m.boundary = {{ThetaGraph::base()}};
    m.ledger = 3;
    m.trace = "TxI~";
    return m;
}

inline MarkedManifold make_torus_bundle(const Mat2& monodromy, i64 ledger, std::string trace) {
    MarkedManifold m;
    m.kind = PieceKind::TorusBundle;
    m.ledger = ledger;
    m.trace = std::move(trace);
    m.monodromy = monodromy;
    return m;
}

/// Dehn filling on one boundary torus of a Seifert-fibered piece: slope
/// p*section + q*fiber adds an exceptional fiber (|p|, q) when |p| >= 2 and
/// none when |p| = 1; filling the fiber slope itself is rejected.
inline void seifert_fill(MarkedManifold& m, const Slope& slope) {
    if (!m.seifert) return;
    SeifertData& d = *m.seifert;
    if (d.boundary_circles < 1) throw Error("seifert_fill: no boundary left");
    i64 p = slope.p, q = slope.q;
    if (p == 0) throw Error("seifert_fill: filling along the fiber is not a Seifert filling");
    if (p < 0) { p = -p; q = -q; }
    d.boundary_circles -= 1;
    if (p >= 2) d.add_cone(p, q);
}

/// Effect of assembling one of the complexity-0/1 bricks onto a marked
/// boundary torus. B1 fills a slope lying in the marking (+0), B2 a slope one
/// flip away (+0), and B3 replaces the marking by an adjacent triangle (+1).
inline MarkedManifold brick_fill_effect(BlockKind b, const MarkedManifold& m, size_t torus,
                                        const Slope& slope) {
    if (torus >= m.boundary.size()) throw Error("brick_fill_effect: no such boundary torus");
    const ThetaGraph& theta = m.boundary[torus].marking;
    MarkedManifold out = m;
    switch (b) {
        case BlockKind::B1: {
            if (!theta.contains(slope)) throw Error("B1 kills a slope of the marking");
            out.boundary.erase(out.boundary.begin() + long(torus));
            seifert_fill(out, slope);
            out.trace = "assemble(" + m.trace + "@" + std::to_string(torus) + ", B1 kill " + slope.str() + ")";
            break;
        }
        case BlockKind::B2: {
            auto nf = one_flip_slopes(theta);
            if (slope != nf[0] && slope != nf[1] && slope != nf[2])
                throw Error("B2 kills a slope one flip from the marking");
            out.boundary.erase(out.boundary.begin() + long(torus));
            seifert_fill(out, slope);
            out.trace = "assemble(" + m.trace + "@" + std::to_string(torus) + ", B2 kill " + slope.str() + ")";
            break;
        }
        case BlockKind::B3: {
            out.boundary[torus].marking = flip(theta, slope);
            out.ledger += 1;
            out.trace = "assemble(" + m.trace + "@" + std::to_string(torus) + ", B3 flip " + slope.str() + ")";
            break;
        }
        default:
            throw Error("brick_fill_effect applies to B1, B2, B3");
    }
    return out;
}

/// Assembling: glue boundary torus t1 of m1 to t2 of m2 along psi, which
/// must carry the first marking onto the second. Complexity ledgers add;
/// sharpness is never inferred. Assembling a solid-torus block is a Dehn
/// filling and keeps the Seifert bookkeeping of the other side.
inline MarkedManifold assemble(const MarkedManifold& m1, size_t t1, const MarkedManifold& m2,
                               size_t t2, const Mat2& psi) {
    if (t1 >= m1.boundary.size() || t2 >= m2.boundary.size())
        throw Error("assemble: no such boundary torus");
    if (apply_gl2(psi, m1.boundary[t1].marking) != m2.boundary[t2].marking)
        throw Error("assemble: psi does not match the markings");

    // Solid-torus side: delegate to the filling semantics.
    if (m2.kind == PieceKind::Block && (m2.block == BlockKind::B1 || m2.block == BlockKind::B2)) {
        Slope filled = apply_gl2(psi.inverse(), *m2.meridian);
        MarkedManifold out = brick_fill_effect(m2.block, m1, t1, filled);
        out.ledger = m1.ledger + m2.ledger + (m2.block == BlockKind::B1 ? 0 : 0);
        return out;
    }

    MarkedManifold out;
    out.kind = PieceKind::Composite;
    out.ledger = m1.ledger + m2.ledger;
    for (size_t i = 0; i < m1.boundary.size(); ++i)
        if (i != t1) out.boundary.push_back(m1.boundary[i]);
    for (size_t i = 0; i < m2.boundary.size(); ++i)
        if (i != t2) out.boundary.push_back(m2.boundary[i]);
    out.trace = "assemble(" + m1.trace + "@" + std::to_string(t1) + ", " + m2.trace + "@" +
                std::to_string(t2) + "; psi=" + psi.str() + ")";
    return out;
}

/// Self-assembling: glue boundary tori t1, t2 of the same manifold along
/// psi, legal when psi carries the first marking to the second or to a
/// triangle one flip away. Adds 6 to the ledger. For product pieces the
/// result is the torus bundle with monodromy psi.
inline MarkedManifold self_assemble(const MarkedManifold& m, size_t t1, size_t t2, const Mat2& psi) {
    if (t1 >= m.boundary.size() || t2 >= m.boundary.size() || t1 == t2)
        throw Error("self_assemble: need two distinct boundary tori");
    ThetaGraph image = apply_gl2(psi, m.boundary[t1].marking);
    if (flip_distance(image, m.boundary[t2].marking) > 1)
        throw Error("self_assemble: psi(theta) farther than one flip from the target marking");

    MarkedManifold out;
    out.ledger = m.ledger + 6;
    out.trace = "self-assemble(" + m.trace + "; psi=" + psi.str() + ")";
    if (m.product_piece) {
        out.kind = PieceKind::TorusBundle;
        out.monodromy = psi;
    } else {
        out.kind = PieceKind::Composite;
    }
    for (size_t i = 0; i < m.boundary.size(); ++i)
        if (i != t1 && i != t2) out.boundary.push_back(m.boundary[i]);
    return out;
}

} // namespace census
