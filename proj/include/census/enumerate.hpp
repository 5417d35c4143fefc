#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "census/signature.hpp"
#include "census/spine.hpp"

namespace census {

struct EnumerateFlags {
    /// Symmetry reduction only (tetrahedra discovered in order, fresh gluings
    /// normalized); never changes the deduplicated output.
    bool canonicity = true;
    /// Membership filter: drop tables having a triangulation edge of degree
    /// at most 2.
    bool reject_low_degree_edges = false;
    /// Membership filter: drop tables whose dual spine has an embedded face
    /// incident to 3 or fewer vertices (detected as edges saturate).
    bool prune_embedded_small_faces = false;
};

struct EnumerationResult {
    std::vector<std::string> signatures;  // sorted
    std::vector<GluingTable> tables;      // aligned with signatures
};

namespace detail {

/// Backtracking search over face pairings with incremental corner and edge
/// class tracking. All mutations are journaled for exact rollback.
class Enumerator {
public:
    Enumerator(int n, EnumerateFlags flags) : n_(n), flags_(flags) {
        target_.assign(size_t(4 * n), -1);
        perm_.assign(size_t(4 * n), Perm4());
        cparent_.resize(size_t(4 * n));
        for (int i = 0; i < 4 * n; ++i) cparent_[size_t(i)] = i;
        corner_classes_ = 4 * n;
        eparent_.resize(size_t(6 * n));
        epar_.assign(size_t(6 * n), 0);
        edeg_.assign(size_t(6 * n), 1);
        eflank_.assign(size_t(6 * n), 2);
        einvalid_ = false;
        for (int i = 0; i < 6 * n; ++i) eparent_[size_t(i)] = i;
        edge_classes_ = 6 * n;
        unglued_ = 4 * n;
        max_used_tet_ = 0; // tet 0 always "used" as the search root
        for (int f = 0; f < 4; ++f) {
            auto fv = face_vertices(f);
            std::array<int, 4> im{};
            im[size_t(f)] = 0;
            for (int i = 0; i < 3; ++i) im[size_t(fv[size_t(i)])] = i + 1;
            fresh_perm_[size_t(f)] = Perm4::from_images(im[0], im[1], im[2], im[3]);
        }
    }

    /// Runs the search; emit is called with each completed admissible table.
    /// When worker_count > 1, only top-level branches with
    /// index % worker_count == worker_id are explored.
    template <typename Emit>
    void run(Emit&& emit, int worker_id = 0, int worker_count = 1) {
        worker_id_ = worker_id;
        worker_count_ = worker_count;
        top_branch_ = 0;
        search(emit, /*depth=*/0);
    }

private:
    struct Change {
        int8_t kind; // 0 cparent, 1 eparent, 2 epar, 3 edeg, 4 eflank, 5 corner_classes, 6 edge_classes, 7 invalid
        int16_t index;
        int32_t old_value;
    };

    int cfind(int x) const {
        while (cparent_[size_t(x)] != x) x = cparent_[size_t(x)];
        return x;
    }
    int efind(int x, int& parity) const {
        parity = 0;
        while (eparent_[size_t(x)] != x) {
            parity ^= epar_[size_t(x)];
            x = eparent_[size_t(x)];
        }
        return x;
    }

    void set_cparent(int i, int v) { journal_.push_back({0, int16_t(i), cparent_[size_t(i)]}); cparent_[size_t(i)] = v; }
    void set_eparent(int i, int v) { journal_.push_back({1, int16_t(i), eparent_[size_t(i)]}); eparent_[size_t(i)] = v; }
    void set_epar(int i, int v) { journal_.push_back({2, int16_t(i), epar_[size_t(i)]}); epar_[size_t(i)] = v; }
    void set_edeg(int i, int v) { journal_.push_back({3, int16_t(i), edeg_[size_t(i)]}); edeg_[size_t(i)] = v; }
    void set_eflank(int i, int v) { journal_.push_back({4, int16_t(i), eflank_[size_t(i)]}); eflank_[size_t(i)] = v; }
    void set_corner_classes(int v) { journal_.push_back({5, 0, corner_classes_}); corner_classes_ = v; }
    void set_edge_classes(int v) { journal_.push_back({6, 0, edge_classes_}); edge_classes_ = v; }
    void set_invalid() { journal_.push_back({7, 0, einvalid_ ? 1 : 0}); einvalid_ = true; }

    void rollback(size_t mark) {
        while (journal_.size() > mark) {
            const Change& c = journal_.back();
            switch (c.kind) {
                case 0: cparent_[size_t(c.index)] = c.old_value; break;
                case 1: eparent_[size_t(c.index)] = c.old_value; break;
                case 2: epar_[size_t(c.index)] = c.old_value; break;
                case 3: edeg_[size_t(c.index)] = c.old_value; break;
                case 4: eflank_[size_t(c.index)] = c.old_value; break;
                case 5: corner_classes_ = c.old_value; break;
                case 6: edge_classes_ = c.old_value; break;
                case 7: einvalid_ = c.old_value != 0; break;
            }
            journal_.pop_back();
        }
    }

    void corner_union(int a, int b) {
        int ra = cfind(a), rb = cfind(b);
        if (ra == rb) return;
        set_cparent(rb, ra);
        set_corner_classes(corner_classes_ - 1);
    }

    /// Returns false on an orientation-reversing self-identification.
    bool edge_union(int a, int b, int parity) {
        int pa, pb;
        int ra = efind(a, pa), rb = efind(b, pb);
        if (ra == rb) {
            if ((pa ^ pb) != parity) { set_invalid(); return false; }
            return true;
        }
        set_eparent(rb, ra);
        set_epar(rb, pa ^ pb ^ parity);
        set_edeg(ra, edeg_[size_t(ra)] + edeg_[size_t(rb)]);
        set_eflank(ra, eflank_[size_t(ra)] + eflank_[size_t(rb)]);
        set_edge_classes(edge_classes_ - 1);
        return true;
    }

    /// Installs a gluing and runs incremental checks; returns false if the
    /// branch is rejected. Caller rolls back via the journal mark.
    bool apply_gluing(int s, int t, Perm4 perm) {
        int tt = GluingTable::slot_tet(s), f = GluingTable::slot_face(s);
        int t2 = GluingTable::slot_tet(t);
        target_[size_t(s)] = t;
        perm_[size_t(s)] = perm;
        target_[size_t(t)] = s;
        perm_[size_t(t)] = perm.inverse();
        unglued_ -= 2;

        auto fv = face_vertices(f);
        for (int v : fv) corner_union(4 * tt + v, 4 * t2 + perm[v]);

        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                int a = fv[size_t(i)], b = fv[size_t(j)];
                int ia = perm[a], ib = perm[b];
                if (!edge_union(6 * tt + tet_edge_index(a, b), 6 * t2 + tet_edge_index(ia, ib),
                                ia > ib ? 1 : 0))
                    return false;
            }

        // Each side's face covers three tetrahedron edges; those lose one
        // unglued flank each.
        int roots[6];
        int nroots = 0;
        for (int side = 0; side < 2; ++side) {
            int slot = side == 0 ? s : t;
            int stt = GluingTable::slot_tet(slot);
            auto sfv = face_vertices(GluingTable::slot_face(slot));
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    int par;
                    int r = efind(6 * stt + tet_edge_index(sfv[size_t(i)], sfv[size_t(j)]), par);
                    set_eflank(r, eflank_[size_t(r)] - 1);
                    bool seen = false;
                    for (int k = 0; k < nroots; ++k)
                        if (roots[k] == r) seen = true;
                    if (!seen) roots[nroots++] = r;
                }
        }

        // Saturated edge classes now have their final degree.
        for (int k = 0; k < nroots; ++k) {
            int r = roots[k];
            int par;
            if (efind(r, par) != r) continue; // merged into another root meanwhile
            if (eflank_[size_t(r)] != 0) continue;
            if (flags_.reject_low_degree_edges && edeg_[size_t(r)] <= 2) return false;
            if (flags_.prune_embedded_small_faces && saturated_face_prunable(r)) return false;
        }

        int rem = unglued_ / 2;
        if (corner_classes_ - 1 > 3 * rem) return false;
        if (edge_classes_ - (n_ + 1) > 3 * rem) return false;
        if (edge_classes_ < n_ + 1) return false; // classes only ever merge
        return true;
    }

    /// Criterion check on a saturated edge class: trace the dual face word
    /// and reject when it is embedded (no tetrahedron and no triangle visited
    /// twice) and visits at most 3 tetrahedra.
    bool saturated_face_prunable(int root) {
        int start = -1;
        for (int i = 0; i < 6 * n_ && start < 0; ++i) {
            int par;
            if (efind(i, par) == root) start = i;
        }
        int tt = start / 6, e = start % 6;
        int a = kTetEdges[size_t(e)][0], b = kTetEdges[size_t(e)][1];
        int c = -1, d = -1;
        for (int v = 0; v < 4; ++v)
            if (v != a && v != b) (c < 0 ? c : d) = v;
        int cur = tt;
        std::array<int, 4> st{a, b, c, d};
        const std::array<int, 4> st0 = st;
        int steps = 0;
        do {
            int slot = GluingTable::slot(cur, st[3]);
            int tri = std::min(slot, target_[size_t(slot)]);
            Perm4 p = perm_[size_t(slot)];
            int nxt = GluingTable::slot_tet(target_[size_t(slot)]);
            word_tets_[size_t(steps)] = nxt;
            word_tris_[size_t(steps)] = tri;
            ++steps;
            if (steps > 24 * n_) return false; // malformed class; completion checks decide
            st = {p[st[0]], p[st[1]], p[st[3]], p[st[2]]};
            cur = nxt;
        } while (!(cur == tt && st == st0));
        if (steps > 3) return false; // an embedded word visiting <= 3 vertices has length <= 3
        for (int i = 0; i < steps; ++i)
            for (int j = 0; j < i; ++j) {
                if (word_tets_[size_t(j)] == word_tets_[size_t(i)]) return false;
                if (word_tris_[size_t(j)] == word_tris_[size_t(i)]) return false;
            }
        return true;
    }

    template <typename Emit>
    void search(Emit&& emit, int depth) {
        if (einvalid_) return;
        int s = -1;
        for (int i = 0; i < 4 * n_; ++i)
            if (target_[size_t(i)] < 0) { s = i; break; }
        if (s < 0) {
            if (corner_classes_ == 1 && edge_classes_ == n_ + 1) {
                GluingTable table(n_);
                for (int i = 0; i < 4 * n_; ++i)
                    if (target_[size_t(i)] > i) table.glue(i, target_[size_t(i)], perm_[size_t(i)]);
                emit(table);
            }
            return;
        }

        int f = GluingTable::slot_face(s);
        auto try_gluing = [&](int t, Perm4 p) {
            if (depth == 0) {
                int branch = top_branch_++;
                if (branch % worker_count_ != worker_id_) return;
            }
            size_t mark = journal_.size();
            int old_max = max_used_tet_;
            if (GluingTable::slot_tet(t) > max_used_tet_) max_used_tet_ = GluingTable::slot_tet(t);
            if (apply_gluing(s, t, p)) search(emit, depth + 1);
            rollback(mark);
            target_[size_t(s)] = -1;
            target_[size_t(t)] = -1;
            unglued_ += 2;
            max_used_tet_ = old_max;
        };

        // Targets on already-used tetrahedra: every bijection.
        int used_limit = std::min(n_ - 1, max_used_tet_);
        for (int t2 = GluingTable::slot_tet(s); t2 <= used_limit; ++t2)
            for (int f2 = 0; f2 < 4; ++f2) {
                int t = GluingTable::slot(t2, f2);
                if (t <= s || target_[size_t(t)] >= 0) continue;
                for (int pi = 0; pi < 24; ++pi) {
                    Perm4 p(pi);
                    if (p[f] != f2) continue;
                    try_gluing(t, p);
                }
            }
        // Fresh tetrahedron.
        if (max_used_tet_ + 1 < n_) {
            if (flags_.canonicity) {
                try_gluing(GluingTable::slot(max_used_tet_ + 1, 0), fresh_perm_[size_t(f)]);
            } else {
                for (int t2 = max_used_tet_ + 1; t2 < n_; ++t2)
                    for (int f2 = 0; f2 < 4; ++f2)
                        for (int pi = 0; pi < 24; ++pi) {
                            Perm4 p(pi);
                            if (p[f] != f2) continue;
                            try_gluing(GluingTable::slot(t2, f2), p);
                        }
            }
        }
    }

    int n_;
    EnumerateFlags flags_;
    std::vector<int> target_;
    std::vector<Perm4> perm_;
    std::vector<int> cparent_;
    std::vector<int> eparent_, epar_, edeg_, eflank_;
    bool einvalid_ = false;
    int corner_classes_ = 0, edge_classes_ = 0, unglued_ = 0, max_used_tet_ = 0;
    std::vector<Change> journal_;
    std::array<Perm4, 4> fresh_perm_{};
    std::array<int, 512> word_tets_{}, word_tris_{};
    int worker_id_ = 0, worker_count_ = 1, top_branch_ = 0;
};

} // namespace detail

/// All closed one-vertex gluing tables realizing closed 3-manifolds with
/// exactly n tetrahedra, up to isomorphism, deduplicated by canonical
/// signature and emitted in sorted signature order regardless of worker
/// count.
inline EnumerationResult enumerate_one_vertex(int n, EnumerateFlags flags = {}, int workers = 1) {
    if (n < 1) throw Error("empty triangulation");
    if (workers < 1) throw Error("worker count must be >= 1");

    std::vector<std::map<std::string, GluingTable>> found{size_t(workers)};
    auto work = [&](int id) {
        detail::Enumerator en(n, flags);
        en.run(
            [&](const GluingTable& t) {
                std::string sig = canonical_signature(t);
                found[size_t(id)].emplace(sig, t);
            },
            id, workers);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int i = 0; i < workers; ++i) threads.emplace_back(work, i);
        for (auto& th : threads) th.join();
    }

    std::map<std::string, GluingTable> merged;
    for (auto& m : found)
        for (auto& [sig, table] : m) merged.emplace(sig, table);

    EnumerationResult out;
    for (auto& [sig, table] : merged) {
        out.signatures.push_back(sig);
        out.tables.push_back(table);
    }
    return out;
}

} // namespace census
