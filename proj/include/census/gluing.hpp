#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "census/perm4.hpp"

namespace census {

using i64 = std::int64_t;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Tetrahedron edge indexing: pairs {a,b}, a < b, in lexicographic order.
inline constexpr std::array<std::array<int, 2>, 6> kTetEdges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline int tet_edge_index(int a, int b) {
    if (a > b) std::swap(a, b);
    for (int e = 0; e < 6; ++e)
        if (kTetEdges[size_t(e)][0] == a && kTetEdges[size_t(e)][1] == b) return e;
    throw std::logic_error("tet_edge_index: bad vertex pair");
}

/// Face-pairing table of n tetrahedra. Face f of a tetrahedron is the face
/// opposite vertex f; a gluing carries the extended vertex bijection, a
/// permutation of {0,1,2,3} sending f to the target face.
class GluingTable {
public:
    struct Gluing {
        int target = -1; // face slot index, or -1 when unglued
        Perm4 perm;      // extended vertex bijection (perm[f] = target face)
    };

    explicit GluingTable(int n) : n_(n), pairings_(size_t(4 * n)) {
        if (n < 1) throw Error("empty triangulation");
    }

    int size() const { return n_; }
    int slots() const { return 4 * n_; }
    static int slot(int tet, int face) { return 4 * tet + face; }
    static int slot_tet(int s) { return s / 4; }
    static int slot_face(int s) { return s % 4; }

    const Gluing& gluing(int s) const { return pairings_[size_t(s)]; }
    bool glued(int s) const { return pairings_[size_t(s)].target >= 0; }
    bool closed() const {
        for (const auto& g : pairings_)
            if (g.target < 0) return false;
        return true;
    }

    /// Install the pairing s <-> perm(s), overwriting nothing: both slots
    /// must be unglued.
    void glue(int s, int t, Perm4 perm) {
        check_slot(s);
        check_slot(t);
        if (s == t) throw Error("self-glued face");
        if (perm[slot_face(s)] != slot_face(t))
            throw Error("vertex bijection does not carry face to target face");
        if (glued(s) || glued(t)) throw Error("face already glued");
        pairings_[size_t(s)] = {t, perm};
        pairings_[size_t(t)] = {s, perm.inverse()};
    }

    void unglue_pair(int s) {
        check_slot(s);
        if (!glued(s)) return;
        int t = pairings_[size_t(s)].target;
        pairings_[size_t(s)] = {};
        pairings_[size_t(t)] = {};
    }

    /// Structural invariants: pairing is an involution, no face glued to
    /// itself, bijections compose to the identity across a pairing.
    void validate() const {
        for (int s = 0; s < slots(); ++s) {
            const auto& g = pairings_[size_t(s)];
            if (g.target < 0) continue;
            if (g.target >= slots()) throw Error("gluing target out of range");
            if (g.target == s) throw Error("self-glued face");
            const auto& back = pairings_[size_t(g.target)];
            if (back.target != s) throw Error("pairing is not an involution");
            if (!(back.perm * g.perm).is_identity())
                throw Error("pairing bijections do not compose to the identity");
            if (g.perm[slot_face(s)] != slot_face(g.target))
                throw Error("vertex bijection does not carry face to target face");
        }
    }

    friend bool operator==(const GluingTable& x, const GluingTable& y) {
        if (x.n_ != y.n_) return false;
        for (int s = 0; s < x.slots(); ++s) {
            if (x.pairings_[size_t(s)].target != y.pairings_[size_t(s)].target) return false;
            if (x.pairings_[size_t(s)].target >= 0 &&
                x.pairings_[size_t(s)].perm != y.pairings_[size_t(s)].perm)
                return false;
        }
        return true;
    }

private:
    void check_slot(int s) const {
        if (s < 0 || s >= slots()) throw Error("face index out of range");
    }

    int n_;
    std::vector<Gluing> pairings_;
};

/// Vertices of face f in increasing order.
inline std::array<int, 3> face_vertices(int f) {
    std::array<int, 3> v{};
    int k = 0;
    for (int i = 0; i < 4; ++i)
        if (i != f) v[size_t(k++)] = i;
    return v;
}

// ---------------------------------------------------------------------------
// Text format: one line per glued face pair, `T f : T' f' : abc`, where abc
// is the image of the three vertices of face f listed in increasing order.
// Comment lines start with '#'.
// ---------------------------------------------------------------------------

inline GluingTable parse_gluing_table(const std::string& text) {
    struct Line {
        int t, f, t2, f2;
        std::array<int, 3> images;
    };
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int max_tet = -1;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string s;
        for (char c : raw) {
            if (c == '#') break;
            s += c;
        }
        std::istringstream ls(s);
        Line ln{};
        std::string colon1, colon2, abc;
        if (!(ls >> ln.t)) {
            // blank or comment-only line
            std::istringstream probe(s);
            std::string token;
            if (probe >> token) throw Error("malformed line " + std::to_string(lineno));
            continue;
        }
        if (!(ls >> ln.f >> colon1 >> ln.t2 >> ln.f2 >> colon2 >> abc) || colon1 != ":" || colon2 != ":")
            throw Error("malformed line " + std::to_string(lineno));
        std::string extra;
        if (ls >> extra) throw Error("malformed line " + std::to_string(lineno));
        if (abc.size() != 3) throw Error("malformed line " + std::to_string(lineno));
        for (int i = 0; i < 3; ++i) {
            if (abc[size_t(i)] < '0' || abc[size_t(i)] > '3')
                throw Error("malformed line " + std::to_string(lineno));
            ln.images[size_t(i)] = abc[size_t(i)] - '0';
        }
        if (ln.f < 0 || ln.f > 3 || ln.f2 < 0 || ln.f2 > 3 || ln.t < 0 || ln.t2 < 0)
            throw Error("index out of range at line " + std::to_string(lineno));
        max_tet = std::max(max_tet, std::max(ln.t, ln.t2));
        lines.push_back(ln);
    }
    if (max_tet < 0) throw Error("empty triangulation");

    GluingTable table(max_tet + 1);
    for (const auto& ln : lines) {
        auto fv = face_vertices(ln.f);
        std::array<int, 4> im{};
        im[size_t(ln.f)] = ln.f2;
        for (int i = 0; i < 3; ++i) im[size_t(fv[size_t(i)])] = ln.images[size_t(i)];
        Perm4 perm = [&] {
            try {
                return Perm4::from_images(im[0], im[1], im[2], im[3]);
            } catch (const std::invalid_argument&) {
                throw Error("vertex images are not a bijection");
            }
        }();
        for (int v : ln.images)
            if (v == ln.f2) throw Error("image vertex lies outside target face");
        int s = GluingTable::slot(ln.t, ln.f);
        int t = GluingTable::slot(ln.t2, ln.f2);
        if (s == t) throw Error("self-glued face");
        if (table.glued(s) || table.glued(t)) throw Error("face glued twice");
        table.glue(s, t, perm);
    }
    table.validate();
    return table;
}

inline std::string serialize_gluing_table(const GluingTable& t) {
    std::string out;
    for (int s = 0; s < t.slots(); ++s) {
        if (!t.glued(s) || t.gluing(s).target < s) continue;
        const auto& g = t.gluing(s);
        int f = GluingTable::slot_face(s);
        auto fv = face_vertices(f);
        out += std::to_string(GluingTable::slot_tet(s)) + " " + std::to_string(f) + " : " +
               std::to_string(GluingTable::slot_tet(g.target)) + " " +
               std::to_string(GluingTable::slot_face(g.target)) + " : ";
        for (int v : fv) out += char('0' + g.perm[v]);
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Corner (vertex-link) and edge-class computations.
// ---------------------------------------------------------------------------

/// Number of vertices of the realized triangulation: corner classes under
/// the gluings.
inline int vertex_count(const GluingTable& t) {
    if (!t.closed()) throw Error("vertex_count requires a closed table");
    int n = t.size();
    std::vector<int> parent(size_t(4 * n));
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = int(i);
    auto find = [&](int x) {
        while (parent[size_t(x)] != x) {
            parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
            x = parent[size_t(x)];
        }
        return x;
    };
    int classes = 4 * n;
    for (int s = 0; s < t.slots(); ++s) {
        if (!t.glued(s) || t.gluing(s).target < s) continue;
        const auto& g = t.gluing(s);
        int tt = GluingTable::slot_tet(s), f = GluingTable::slot_face(s);
        int t2 = GluingTable::slot_tet(g.target);
        for (int v : face_vertices(f)) {
            int a = find(4 * tt + v), b = find(4 * t2 + g.perm[v]);
            if (a != b) { parent[size_t(a)] = b; --classes; }
        }
    }
    return classes;
}

/// Edge classes of the triangulation with orientation tracking.
struct EdgeClasses {
    int count = 0;                   // number of edge classes
    std::vector<int> class_of;       // per position (tet*6 + edge): class id (0-based, dense)
    std::vector<int> orient_of;      // per position: 0/1, orientation relative to class root
    std::vector<int> degree;         // per class: number of positions
    std::vector<bool> valid;         // per class: false iff some identification reverses the edge
    std::vector<int> representative; // per class: least position index
    bool all_valid = true;
};

inline EdgeClasses edge_classes(const GluingTable& t) {
    int n = t.size();
    int m = 6 * n;
    std::vector<int> parent(size_t(m), 0), rank_(size_t(m), 0), par(size_t(m), 0);
    std::vector<bool> bad(size_t(m), false);
    for (int i = 0; i < m; ++i) parent[size_t(i)] = i;
    // find with parity accumulation
    std::function<int(int)> find = [&](int x) {
        if (parent[size_t(x)] == x) return x;
        int root = find(parent[size_t(x)]);
        par[size_t(x)] ^= par[size_t(parent[size_t(x)])];
        parent[size_t(x)] = root;
        return root;
    };
    auto unite = [&](int x, int y, int parity) {
        int rx = find(x), ry = find(y);
        int px = par[size_t(x)], py = par[size_t(y)];
        if (rx == ry) {
            if ((px ^ py) != parity) bad[size_t(rx)] = true;
            return;
        }
        if (rank_[size_t(rx)] < rank_[size_t(ry)]) { std::swap(rx, ry); std::swap(px, py); }
        parent[size_t(ry)] = rx;
        par[size_t(ry)] = px ^ py ^ parity;
        if (bad[size_t(ry)]) bad[size_t(rx)] = true;
        if (rank_[size_t(rx)] == rank_[size_t(ry)]) ++rank_[size_t(rx)];
    };

    for (int s = 0; s < t.slots(); ++s) {
        if (!t.glued(s) || t.gluing(s).target < s) continue;
        const auto& g = t.gluing(s);
        int tt = GluingTable::slot_tet(s), f = GluingTable::slot_face(s);
        int t2 = GluingTable::slot_tet(g.target);
        auto fv = face_vertices(f);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                int a = fv[size_t(i)], b = fv[size_t(j)]; // a < b
                int ia = g.perm[a], ib = g.perm[b];
                int parity = (ia > ib) ? 1 : 0; // canonical direction is min->max
                unite(6 * tt + tet_edge_index(a, b), 6 * t2 + tet_edge_index(ia, ib), parity);
            }
    }

    EdgeClasses ec;
    ec.class_of.assign(size_t(m), -1);
    ec.orient_of.assign(size_t(m), 0);
    std::vector<int> root_to_class(size_t(m), -1);
    for (int i = 0; i < m; ++i) {
        int r = find(i);
        if (root_to_class[size_t(r)] < 0) {
            root_to_class[size_t(r)] = ec.count++;
            ec.degree.push_back(0);
            ec.valid.push_back(!bad[size_t(r)]);
            ec.representative.push_back(i);
        }
        int c = root_to_class[size_t(r)];
        ec.class_of[size_t(i)] = c;
        ec.orient_of[size_t(i)] = par[size_t(i)];
        ec.degree[size_t(c)] += 1;
        if (!ec.valid[size_t(c)]) ec.all_valid = false;
    }
    for (bool v : ec.valid)
        if (!v) ec.all_valid = false;
    return ec;
}

/// True iff the closed table realizes a closed 3-manifold with exactly one
/// vertex: single corner class, no edge identified to itself in reverse,
/// edge count n + 1 (equivalently the vertex link is a sphere), and a
/// connected vertex link.
inline bool is_one_vertex_manifold(const GluingTable& t) {
    if (!t.closed()) return false;
    if (vertex_count(t) != 1) return false;
    EdgeClasses ec = edge_classes(t);
    if (!ec.all_valid) return false;
    if (ec.count != t.size() + 1) return false;
    // Connectivity of the vertex link = connectivity of the corner graph.
    int n = t.size();
    std::vector<int> seen(size_t(4 * n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        int tt = c / 4, v = c % 4;
        for (int f = 0; f < 4; ++f) {
            if (f == v) continue;
            const auto& g = t.gluing(GluingTable::slot(tt, f));
            int c2 = 4 * GluingTable::slot_tet(g.target) + g.perm[v];
            if (!seen[size_t(c2)]) { seen[size_t(c2)] = 1; ++visited; stack.push_back(c2); }
        }
    }
    return visited == 4 * n;
}

// ---------------------------------------------------------------------------
// Stiefel-Whitney cocycle.
// ---------------------------------------------------------------------------

/// Parity of a face pairing: 1 iff the gluing reverses orientation, i.e. the
/// extended vertex bijection is even. Convention locked by the doubled
/// tetrahedron being orientable.
inline int gluing_parity(const Perm4& perm) { return perm.sign() == 1 ? 1 : 0; }

struct W1Cocycle {
    std::vector<int> parity_of_slot; // per face slot (both slots of a pairing agree)
    bool orientable = false;
    std::vector<int> tet_sign; // orientation assignment realizing all-zero parities, when orientable
};

/// Reference-orientation cocycle on the dual graph plus the orientability
/// verdict: orientable iff the parity cocycle is a coboundary, i.e. the dual
/// graph is consistently 2-colorable by parities.
inline W1Cocycle w1_cocycle(const GluingTable& t) {
    if (!t.closed()) throw Error("w1_cocycle requires a closed table");
    int n = t.size();
    W1Cocycle out;
    out.parity_of_slot.assign(size_t(4 * n), 0);
    for (int s = 0; s < t.slots(); ++s)
        out.parity_of_slot[size_t(s)] = gluing_parity(t.gluing(s).perm);

    out.tet_sign.assign(size_t(n), -2);
    out.orientable = true;
    for (int start = 0; start < n; ++start) {
        if (out.tet_sign[size_t(start)] != -2) continue;
        out.tet_sign[size_t(start)] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int tt = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const auto& g = t.gluing(GluingTable::slot(tt, f));
                int t2 = GluingTable::slot_tet(g.target);
                int want = out.tet_sign[size_t(tt)] ^ gluing_parity(g.perm);
                if (out.tet_sign[size_t(t2)] == -2) {
                    out.tet_sign[size_t(t2)] = want;
                    stack.push_back(t2);
                } else if (out.tet_sign[size_t(t2)] != want) {
                    out.orientable = false;
                }
            }
        }
    }
    return out;
}

/// Orientation-reversal parity of each triangulation-edge loop, for one-vertex
/// tables: the corner graph carries a parity potential (BFS over corner
/// adjacencies weighted by gluing parity); the loop along an edge from vertex
/// a to vertex b inside one tetrahedron closes up through the vertex ball, so
/// its w1 value is potential(corner a) + potential(corner b) for any
/// representative. Non-tree corner adjacencies must be consistent; that global
/// consistency is asserted (it encodes that all around-the-edge dual loops are
/// orientation-preserving, automatic for manifold tables).
inline std::vector<int> w1_edge_loops(const GluingTable& t, const EdgeClasses& ec) {
    if (vertex_count(t) != 1) throw Error("not one-vertex");
    int n = t.size();
    std::vector<int> pot(size_t(4 * n), -1);
    pot[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        int tt = c / 4, v = c % 4;
        for (int f = 0; f < 4; ++f) {
            if (f == v) continue;
            const auto& g = t.gluing(GluingTable::slot(tt, f));
            int c2 = 4 * GluingTable::slot_tet(g.target) + g.perm[v];
            int want = pot[size_t(c)] ^ gluing_parity(g.perm);
            if (pot[size_t(c2)] < 0) {
                pot[size_t(c2)] = want;
                stack.push_back(c2);
            } else if (pot[size_t(c2)] != want) {
                throw Error("w1 transport inconsistent: vertex link is not a sphere");
            }
        }
    }

    std::vector<int> w1(size_t(ec.count), -1);
    for (int tt = 0; tt < n; ++tt)
        for (int e = 0; e < 6; ++e) {
            int a = kTetEdges[size_t(e)][0], b = kTetEdges[size_t(e)][1];
            int value = pot[size_t(4 * tt + a)] ^ pot[size_t(4 * tt + b)];
            int cls = ec.class_of[size_t(6 * tt + e)];
            if (w1[size_t(cls)] < 0) w1[size_t(cls)] = value;
            else if (w1[size_t(cls)] != value)
                throw Error("w1 edge-loop value depends on representative: inconsistent table");
        }
    return w1;
}

} // namespace census
