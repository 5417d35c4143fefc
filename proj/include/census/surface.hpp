#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "census/spine.hpp"

namespace census {

/// Z2 2-cycle in a spine: a subset of faces with even germ-incidence at every
/// edge (0 or 2 of the 3 germ slots, counted with multiplicity).
struct SurfaceInSpine {
    std::vector<bool> face_set;       // per spine face
    std::vector<int> edge_incidence;  // per spine edge: number of germs from face_set

    bool empty() const {
        for (bool b : face_set)
            if (b) return false;
        return true;
    }
};

inline SurfaceInSpine make_surface(const StandardSpine& sp, std::vector<bool> face_set) {
    SurfaceInSpine s;
    s.face_set = std::move(face_set);
    if (s.face_set.size() != sp.faces.size())
        throw Error("make_surface: face set size mismatch");
    s.edge_incidence.assign(sp.edges.size(), 0);
    for (size_t e = 0; e < sp.edges.size(); ++e)
        for (int slot = 0; slot < 3; ++slot) {
            int f = sp.edges[e].germs[size_t(slot)].first;
            if (s.face_set[size_t(f)]) s.edge_incidence[e] += 1;
        }
    for (int inc : s.edge_incidence)
        if (inc != 0 && inc != 2) throw Error("surface has odd incidence at an edge");
    return s;
}

/// The unique surface representing the class Poincare dual to w1: a face
/// F(e) belongs to it iff the loop along the triangulation edge e reverses
/// orientation. The assignment is cross-checked by solving the Z2 linear
/// system (cycle conditions at all edges, pairing conditions against all
/// edge loops): inconsistency or non-uniqueness is reported, never repaired.
inline SurfaceInSpine stiefel_whitney_surface(const StandardSpine& sp) {
    if (!sp.source) throw Error("stiefel_whitney_surface requires a spine with triangulation provenance");
    const GluingTable& t = *sp.source;
    EdgeClasses ec = edge_classes(t);
    std::vector<int> w1 = w1_edge_loops(t, ec);

    size_t nf = sp.faces.size();
    // Gaussian elimination over GF(2). Rows: cycle condition per spine edge,
    // pairing condition per triangulation edge. Columns: faces | rhs.
    std::vector<std::vector<int>> rows;
    for (const auto& e : sp.edges) {
        std::vector<int> r(nf + 1, 0);
        for (int slot = 0; slot < 3; ++slot) r[size_t(e.germs[size_t(slot)].first)] ^= 1;
        rows.push_back(std::move(r));
    }
    for (size_t f = 0; f < nf; ++f) {
        std::vector<int> r(nf + 1, 0);
        r[f] = 1;
        r[nf] = w1[size_t(sp.face_to_edge_class[f])];
        rows.push_back(std::move(r));
    }

    size_t rank = 0;
    std::vector<int> pivot_col;
    for (size_t col = 0; col < nf && rank < rows.size(); ++col) {
        size_t p = rank;
        while (p < rows.size() && rows[p][col] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != rank && rows[i][col])
                for (size_t j = col; j <= nf; ++j) rows[i][j] ^= rows[rank][j];
        pivot_col.push_back(int(col));
        ++rank;
    }
    for (size_t i = rank; i < rows.size(); ++i)
        if (rows[i][nf] != 0)
            throw Error("stiefel_whitney_surface: linear system inconsistent (internal bug)");
    if (rank < nf)
        throw Error("stiefel_whitney_surface: solution not unique (pairing degenerate)");

    std::vector<bool> face_set(nf, false);
    for (size_t k = 0; k < rank; ++k)
        face_set[size_t(pivot_col[k])] = rows[k][nf] != 0;

    // The solved assignment must coincide with the direct w1 pairing values.
    for (size_t f = 0; f < nf; ++f)
        if (face_set[f] != (w1[size_t(sp.face_to_edge_class[f])] != 0))
            throw Error("stiefel_whitney_surface: solver disagrees with pairing values");
    return make_surface(sp, face_set);
}

/// Topology of the traced abstract closed surface.
struct SurfaceTopology {
    int components = 0;
    std::vector<int> chi;          // per component
    std::vector<bool> orientable;  // per component
    std::vector<int> genus;        // orientable genus, or crosscap number when non-orientable
    std::vector<int> component_of_face; // per spine face; -1 if not in the surface

    int total_chi() const { int s = 0; for (int c : chi) s += c; return s; }
    bool all_orientable() const {
        for (bool b : orientable)
            if (!b) return false;
        return true;
    }
    bool has_sphere() const {
        for (size_t i = 0; i < chi.size(); ++i)
            if (chi[i] == 2 && orientable[i]) return true;
        return false;
    }
};

/// Builds the closed surface carried by the face set: germs are joined in
/// pairs along each edge, corners are traced around vertices, and
/// orientability is decided by coherent-orientation propagation across the
/// germ pairings.
inline SurfaceTopology surface_topology(const StandardSpine& sp, const SurfaceInSpine& sigma) {
    SurfaceTopology out;
    out.component_of_face.assign(sp.faces.size(), -1);
    size_t nf = sp.faces.size();

    // Letters: (face, word position) of faces in sigma; paired per edge.
    struct Germ {
        int face, pos;
        bool forward;
    };
    std::vector<std::array<Germ, 2>> pairs;
    for (size_t e = 0; e < sp.edges.size(); ++e) {
        if (sigma.edge_incidence[e] == 0) continue;
        if (sigma.edge_incidence[e] != 2) throw Error("surface_topology: odd incidence");
        std::array<Germ, 2> pr{};
        int k = 0;
        for (int slot = 0; slot < 3; ++slot) {
            auto [f, pos] = sp.edges[e].germs[size_t(slot)];
            if (!sigma.face_set[size_t(f)]) continue;
            pr[size_t(k++)] = {f, pos, sp.faces[size_t(f)].word[size_t(pos)].forward};
        }
        if (k != 2) throw Error("surface_topology: germ pairing failed");
        pairs.push_back(pr);
    }

    // Face components via shared edges.
    std::vector<int> fparent(nf);
    std::iota(fparent.begin(), fparent.end(), 0);
    std::function<int(int)> ffind = [&](int x) {
        return fparent[size_t(x)] == x ? x : fparent[size_t(x)] = ffind(fparent[size_t(x)]);
    };
    for (const auto& pr : pairs) {
        int a = ffind(pr[0].face), b = ffind(pr[1].face);
        if (a != b) fparent[size_t(a)] = b;
    }

    // Orientability: flip flags per face. Coherent iff paired germs run the
    // shared edge in opposite directions after flips.
    std::vector<int> flip_flag(nf, -1);
    std::vector<std::vector<std::pair<int, int>>> adj(nf); // (other face, parity)
    for (const auto& pr : pairs) {
        int parity = (pr[0].forward == pr[1].forward) ? 1 : 0;
        adj[size_t(pr[0].face)].push_back({pr[1].face, parity});
        adj[size_t(pr[1].face)].push_back({pr[0].face, parity});
    }
    std::map<int, bool> comp_orientable;
    for (size_t f0 = 0; f0 < nf; ++f0) {
        if (!sigma.face_set[f0] || flip_flag[f0] >= 0) continue;
        flip_flag[f0] = 0;
        bool ok = true;
        std::vector<int> stack{int(f0)};
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (auto [g, parity] : adj[size_t(f)]) {
                int want = flip_flag[size_t(f)] ^ parity;
                if (flip_flag[size_t(g)] < 0) {
                    flip_flag[size_t(g)] = want;
                    stack.push_back(g);
                } else if (flip_flag[size_t(g)] != want) {
                    ok = false;
                }
            }
        }
        comp_orientable[ffind(int(f0))] = ok;
    }

    // Corner tracing: corner (f, pos) follows step pos. Along each paired
    // edge, corners at the same end of the underlying spine edge are glued.
    // Corner ids: offset[face] + pos.
    std::vector<int> offset(nf, -1);
    int total_corners = 0;
    for (size_t f = 0; f < nf; ++f) {
        if (!sigma.face_set[f]) continue;
        offset[f] = total_corners;
        total_corners += int(sp.faces[f].word.size());
    }
    std::vector<int> cparent(size_t(total_corners), 0);
    std::iota(cparent.begin(), cparent.end(), 0);
    std::function<int(int)> cfind = [&](int x) {
        return cparent[size_t(x)] == x ? x : cparent[size_t(x)] = cfind(cparent[size_t(x)]);
    };
    auto cunion = [&](int a, int b) {
        a = cfind(a); b = cfind(b);
        if (a != b) cparent[size_t(a)] = b;
    };
    auto head_corner = [&](const Germ& g) { return offset[size_t(g.face)] + g.pos; };
    auto tail_corner = [&](const Germ& g) {
        int len = int(sp.faces[size_t(g.face)].word.size());
        return offset[size_t(g.face)] + (g.pos + len - 1) % len;
    };
    for (const auto& pr : pairs) {
        // Corner at the head end of the spine edge: head corner of a forward
        // germ, tail corner of a backward one; symmetrically at the tail end.
        auto at_head = [&](const Germ& g) { return g.forward ? head_corner(g) : tail_corner(g); };
        auto at_tail = [&](const Germ& g) { return g.forward ? tail_corner(g) : head_corner(g); };
        cunion(at_head(pr[0]), at_head(pr[1]));
        cunion(at_tail(pr[0]), at_tail(pr[1]));
    }
    // Count corner classes and check one class per spine vertex met.
    std::map<int, int> class_vertex; // corner root -> spine vertex
    std::map<int, std::set<int>> vertex_classes;
    for (size_t f = 0; f < nf; ++f) {
        if (!sigma.face_set[f]) continue;
        for (size_t pos = 0; pos < sp.faces[f].word.size(); ++pos) {
            int id = offset[f] + int(pos);
            int root = cfind(id);
            int v = sp.faces[f].word[pos].to_vertex;
            auto it = class_vertex.find(root);
            if (it == class_vertex.end()) {
                class_vertex[root] = v;
            } else if (it->second != v) {
                throw Error("surface_topology: corner class spans two vertices (invalid surface)");
            }
            vertex_classes[v].insert(root);
        }
    }
    for (const auto& [v, roots] : vertex_classes)
        if (roots.size() != 1)
            throw Error("surface_topology: vertex link is not a single circle");

    // Per-component counts.
    std::map<int, int> comp_id;
    for (size_t f = 0; f < nf; ++f) {
        if (!sigma.face_set[f]) continue;
        int root = ffind(int(f));
        if (!comp_id.count(root)) {
            int id = int(comp_id.size());
            comp_id[root] = id;
        }
        out.component_of_face[f] = comp_id[root];
    }
    out.components = int(comp_id.size());
    out.chi.assign(size_t(out.components), 0);
    out.orientable.assign(size_t(out.components), true);
    out.genus.assign(size_t(out.components), 0);
    for (size_t f = 0; f < nf; ++f)
        if (sigma.face_set[f]) out.chi[size_t(out.component_of_face[f])] += 1; // faces
    for (const auto& pr : pairs)
        out.chi[size_t(out.component_of_face[size_t(pr[0].face)])] -= 1; // edges

    // Vertices: attribute each corner class to its component via any corner.
    for (const auto& [root, v] : class_vertex) {
        (void)v;
        // Find the face owning this root corner id.
        int cid = root;
        int face = -1;
        for (size_t f = 0; f < nf; ++f) {
            if (!sigma.face_set[f]) continue;
            int len = int(sp.faces[f].word.size());
            if (cid >= offset[f] && cid < offset[f] + len) { face = int(f); break; }
        }
        out.chi[size_t(out.component_of_face[size_t(face)])] += 1;
    }

    for (const auto& [root, orient] : comp_orientable)
        out.orientable[size_t(comp_id[root])] = orient;
    for (int c = 0; c < out.components; ++c)
        out.genus[size_t(c)] = out.orientable[size_t(c)] ? (2 - out.chi[size_t(c)]) / 2
                                                         : (2 - out.chi[size_t(c)]);
    return out;
}

/// Vertex statistics of the surface: v3 counts pairs of trivalent vertices of
/// the singular graph on the surface, v4 the 4-valent ones, f the discs of
/// the complement; the cellular Euler identity v3 + v4 = f - chi is verified.
struct SigmaStats {
    i64 v3 = 0;
    i64 v4 = 0;
    i64 f = 0;
    std::vector<int> genus; // per component
    int chi = 0;
};

inline SigmaStats sigma_stats(const StandardSpine& sp, const SurfaceInSpine& sigma) {
    if (sigma.empty()) throw Error("sigma_stats requires a non-empty surface");
    SurfaceTopology topo = surface_topology(sp, sigma);

    i64 tri = 0, quad = 0;
    for (int v = 0; v < sp.vertices; ++v) {
        // Link circle of sigma at this vertex: passages of sigma faces.
        std::map<int, int> degree;
        int count = 0;
        for (const auto& p : sp.vertex_passages[size_t(v)]) {
            if (!sigma.face_set[size_t(p.face)]) continue;
            degree[p.end_a] += 1;
            degree[p.end_b] += 1;
            ++count;
        }
        if (count == 0) continue;
        for (const auto& [end, d] : degree)
            if (d != 2) throw Error("sigma_stats: vertex link of surface is not a circle");
        if (count == 3) ++tri;
        else if (count == 4) ++quad;
        else throw Error("sigma_stats: vertex link circle of impossible length");
    }
    if (tri % 2 != 0) throw Error("sigma_stats: odd number of trivalent vertices (counting bug)");

    SigmaStats st;
    st.v3 = tri / 2;
    st.v4 = quad;
    for (bool b : sigma.face_set)
        if (b) ++st.f;
    st.genus = std::vector<int>(topo.genus.begin(), topo.genus.end());
    st.chi = topo.total_chi();
    if (st.v3 + st.v4 != st.f - st.chi)
        throw Error("sigma_stats: Euler identity violated (counting bug)");
    return st;
}

} // namespace census
