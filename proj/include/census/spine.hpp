#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "census/gluing.hpp"

namespace census {

/// Standard spine: cellularization with type-(3) vertices, edges carrying
/// three face-germs, and disc faces with directed boundary words. Spines dual
/// to one-vertex triangulations keep a provenance link to the gluing table.
struct StandardSpine {
    /// One step of a face boundary word: run along `edge` (forward = from
    /// tail vertex to head vertex), arriving at `to_vertex`.
    struct Step {
        int edge = -1;
        int slot = -1; // germ slot 0..2 within the edge
        bool forward = true;
        int to_vertex = -1;
    };
    struct Edge {
        int tail = -1, head = -1;                      // spine vertices; -1 for open ends (hand-built)
        std::array<std::pair<int, int>, 3> germs{};    // (face, word position) per slot
        int germ_count = 0;
    };
    struct Face {
        std::vector<Step> word; // cyclic
    };
    /// Arc of a vertex link: the face germ running between two edge-ends.
    /// Edge-end encoding: 2*edge + 0 (tail) or 1 (head).
    struct Passage {
        int face = -1;
        int end_a = -1, end_b = -1;
    };

    int vertices = 0;
    std::vector<Edge> edges;
    std::vector<Face> faces;
    std::vector<std::vector<Passage>> vertex_passages; // size = vertices

    // Provenance for spines dual to a one-vertex triangulation.
    std::optional<GluingTable> source;
    std::vector<int> edge_to_slot;      // spine edge -> canonical (smaller) face slot of its triangle
    std::vector<int> face_to_edge_class; // spine face -> triangulation edge class

    int euler_characteristic() const {
        return vertices - int(edges.size()) + int(faces.size());
    }
};

/// Spine dual to a closed one-vertex triangulation: vertices <-> tetrahedra,
/// edges <-> triangles, faces <-> triangulation edges; face boundary words
/// traced around the triangulation edges.
inline StandardSpine dual_spine(const GluingTable& t) {
    if (!t.closed()) throw Error("dual_spine requires a closed table");
    if (vertex_count(t) != 1) throw Error("not one-vertex");
    EdgeClasses ec = edge_classes(t);
    if (!ec.all_valid) throw Error("dual_spine: an edge is identified with itself reversed");
    if (ec.count != t.size() + 1)
        throw Error("dual_spine: edge count does not match a closed manifold");

    int n = t.size();
    StandardSpine sp;
    sp.vertices = n;
    sp.source = t;

    // Spine edges: triangle classes, indexed by smaller face slot.
    std::vector<int> triangle_of_slot(size_t(4 * n), -1);
    for (int s = 0; s < t.slots(); ++s) {
        if (triangle_of_slot[size_t(s)] >= 0) continue;
        int s2 = t.gluing(s).target;
        int id = int(sp.edges.size());
        StandardSpine::Edge e;
        e.tail = GluingTable::slot_tet(s);
        e.head = GluingTable::slot_tet(s2);
        sp.edges.push_back(e);
        sp.edge_to_slot.push_back(s);
        triangle_of_slot[size_t(s)] = id;
        triangle_of_slot[size_t(s2)] = id;
    }

    // Germ slot of a crossing: index of the vertex pair within the canonical
    // side of the triangle.
    auto germ_slot = [&](int slot, int va, int vb) {
        int canon = sp.edge_to_slot[size_t(triangle_of_slot[size_t(slot)])];
        if (slot != canon) {
            // Map the pair to the canonical side: the gluing stored at the
            // canonical slot sends canonical labels to partner labels.
            Perm4 phi_inv = t.gluing(canon).perm.inverse();
            va = phi_inv[va];
            vb = phi_inv[vb];
        }
        int f = GluingTable::slot_face(canon);
        auto fv = face_vertices(f);
        if (va > vb) std::swap(va, vb);
        int k = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j, ++k)
                if (fv[size_t(i)] == va && fv[size_t(j)] == vb) return k;
        throw std::logic_error("germ_slot: pair not on face");
    };

    // Spine faces: one per triangulation edge class, traced around the edge.
    sp.faces.resize(size_t(ec.count));
    sp.face_to_edge_class.resize(size_t(ec.count));
    std::vector<bool> traced(size_t(ec.count), false);
    for (int tt = 0; tt < n; ++tt)
        for (int e = 0; e < 6; ++e) {
            int cls = ec.class_of[size_t(6 * tt + e)];
            if (traced[size_t(cls)]) continue;
            traced[size_t(cls)] = true;
            sp.face_to_edge_class[size_t(cls)] = cls;
            auto& face = sp.faces[size_t(cls)];

            int a = kTetEdges[size_t(e)][0], b = kTetEdges[size_t(e)][1];
            int c = -1, d = -1;
            for (int v = 0; v < 4; ++v)
                if (v != a && v != b) (c < 0 ? c : d) = v;
            // State (cur, a, b, c, d): next exit through face opposite d.
            int cur = tt;
            std::array<int, 4> st{a, b, c, d};
            const std::array<int, 4> start{a, b, c, d};
            const int start_tet = tt;
            do {
                int exit_slot = GluingTable::slot(cur, st[3]);
                const auto& g = t.gluing(exit_slot);
                int nxt = GluingTable::slot_tet(g.target);
                StandardSpine::Step step;
                step.edge = triangle_of_slot[size_t(exit_slot)];
                step.slot = germ_slot(exit_slot, st[0], st[1]);
                step.forward = (exit_slot == sp.edge_to_slot[size_t(step.edge)]);
                step.to_vertex = nxt;
                int pos = int(face.word.size());
                auto& edge = sp.edges[size_t(step.edge)];
                edge.germs[size_t(step.slot)] = {cls, pos};
                edge.germ_count += 1;
                face.word.push_back(step);

                st = {g.perm[st[0]], g.perm[st[1]], g.perm[st[3]], g.perm[st[2]]};
                cur = nxt;
                if (face.word.size() > size_t(24 * n) + 1)
                    throw std::logic_error("dual_spine: runaway edge-link traversal");
            } while (!(cur == start_tet && st == start));
        }

    for (const auto& e : sp.edges)
        if (e.germ_count != 3) throw std::logic_error("dual_spine: edge without exactly 3 germs");

    // Vertex links: one passage per tetrahedron edge position, connecting the
    // ends of the spine edges dual to its two flanking triangles.
    sp.vertex_passages.resize(size_t(n));
    for (int tt = 0; tt < n; ++tt)
        for (int e = 0; e < 6; ++e) {
            int a = kTetEdges[size_t(e)][0], b = kTetEdges[size_t(e)][1];
            int c = -1, d = -1;
            for (int v = 0; v < 4; ++v)
                if (v != a && v != b) (c < 0 ? c : d) = v;
            auto end_id = [&](int face) {
                int slot = GluingTable::slot(tt, face);
                int edge = triangle_of_slot[size_t(slot)];
                int side = (slot == sp.edge_to_slot[size_t(edge)]) ? 0 : 1;
                return 2 * edge + side;
            };
            StandardSpine::Passage p;
            p.face = ec.class_of[size_t(6 * tt + e)];
            p.end_a = end_id(c);
            p.end_b = end_id(d);
            sp.vertex_passages[size_t(tt)].push_back(p);
        }

    return sp;
}

/// True iff the spine is standard as the cellularization of a closed-manifold
/// spine: it has at least one vertex, every edge is a segment carrying three
/// germs, every face is a disc with a nonempty closed boundary word, and
/// every vertex link is the 1-skeleton of the tetrahedron.
inline bool is_standard(const StandardSpine& sp) {
    if (sp.vertices < 1) return false;
    for (const auto& e : sp.edges) {
        if (e.tail < 0 || e.head < 0) return false; // not a segment
        if (e.germ_count != 3) return false;
    }
    for (const auto& f : sp.faces) {
        if (f.word.empty()) return false; // closed surface component, not a disc
        // Word must alternate consistently: each step ends where the next begins.
        for (size_t i = 0; i < f.word.size(); ++i) {
            const auto& cur = f.word[i];
            const auto& nxt = f.word[(i + 1) % f.word.size()];
            const auto& edge = sp.edges[size_t(nxt.edge)];
            int from = nxt.forward ? edge.tail : edge.head;
            if (cur.to_vertex != from) return false;
        }
    }
    if (int(sp.vertex_passages.size()) != sp.vertices) return false;
    for (int v = 0; v < sp.vertices; ++v) {
        const auto& ps = sp.vertex_passages[size_t(v)];
        if (ps.size() != 6) return false;
        std::set<int> ends;
        for (const auto& p : ps) {
            ends.insert(p.end_a);
            ends.insert(p.end_b);
        }
        if (ends.size() != 4) return false;
        // Each pair of the four ends joined by exactly one passage.
        std::set<std::pair<int, int>> pairs;
        for (const auto& p : ps) {
            auto pr = std::minmax(p.end_a, p.end_b);
            if (!pairs.insert({pr.first, pr.second}).second) return false;
        }
        if (pairs.size() != 6) return false;
    }
    return true;
}

/// Non-minimality verdict.
struct PruneVerdict {
    bool minimal_candidate = true;
    int criterion = 0; // 1: embedded face incident to <= 3 vertices; 2: unit-length boundary
    int face = -1;

    std::string str() const {
        if (minimal_candidate) return "minimal-candidate";
        return "pruned(criterion " + std::to_string(criterion) + ")";
    }
};

/// True iff the face's boundary word visits no vertex twice and no edge twice.
inline bool face_embedded(const StandardSpine& sp, int face) {
    const auto& w = sp.faces[size_t(face)].word;
    std::set<int> verts, edges;
    for (const auto& s : w) {
        if (!verts.insert(s.to_vertex).second) return false;
        if (!edges.insert(s.edge).second) return false;
    }
    return true;
}

/// Sound-but-incomplete non-minimality pruning. First criterion: an embedded
/// face incident to 3 or fewer vertices. Second criterion, in its directly
/// detectable combinatorial form: a face whose boundary crosses the singular
/// set transversely in one point (unit-length boundary word). On closed
/// standard spines a unit-length word is embedded and incident to one vertex,
/// so the first criterion subsumes the second; both are still checked.
inline PruneVerdict prune_nonminimal(const StandardSpine& sp) {
    for (int f = 0; f < int(sp.faces.size()); ++f) {
        const auto& w = sp.faces[size_t(f)].word;
        if (w.empty()) continue;
        std::set<int> verts;
        for (const auto& s : w) verts.insert(s.to_vertex);
        if (verts.size() <= 3 && face_embedded(sp, f)) return {false, 1, f};
    }
    for (int f = 0; f < int(sp.faces.size()); ++f)
        if (sp.faces[size_t(f)].word.size() == 1) return {false, 2, f};
    return {};
}

} // namespace census
