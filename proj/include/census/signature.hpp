#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "census/gluing.hpp"

namespace census {

namespace detail {

/// Serialized canonical form of the dual-graph component containing
/// start_tet, relabeled by BFS from (start_tet, start_perm): each tetrahedron
/// discovered through a gluing is labeled so that gluing becomes the
/// identity bijection. Emits, per face in new order: 0 for unglued, else
/// (new target + 1, permutation index).
inline std::vector<int> component_candidate(const GluingTable& t, int start_tet, Perm4 start_perm,
                                            std::vector<int>& newidx) {
    std::vector<Perm4> rho(size_t(t.size()));
    std::vector<int> order{start_tet};
    newidx.assign(size_t(t.size()), -1);
    newidx[size_t(start_tet)] = 0;
    rho[size_t(start_tet)] = start_perm;
    std::vector<int> out;
    for (size_t k = 0; k < order.size(); ++k) {
        int old_t = order[k];
        Perm4 rinv = rho[size_t(old_t)].inverse();
        for (int nf = 0; nf < 4; ++nf) {
            int of = rinv[nf];
            const auto& g = t.gluing(GluingTable::slot(old_t, of));
            if (g.target < 0) {
                out.push_back(0);
                continue;
            }
            int old_t2 = GluingTable::slot_tet(g.target);
            if (newidx[size_t(old_t2)] < 0) {
                newidx[size_t(old_t2)] = int(order.size());
                order.push_back(old_t2);
                rho[size_t(old_t2)] = rho[size_t(old_t)] * g.perm.inverse();
            }
            Perm4 psi = rho[size_t(old_t2)] * g.perm * rinv;
            out.push_back(newidx[size_t(old_t2)] + 1);
            out.push_back(psi.index());
        }
    }
    out.insert(out.begin(), int(order.size())); // component size prefix
    return out;
}

inline char base36(int v) {
    return char(v < 10 ? '0' + v : 'a' + (v - 10));
}

} // namespace detail

/// Printable string invariant under tetrahedron relabeling and
/// per-tetrahedron vertex relabeling: the lexicographic minimum of the
/// BFS-relabeled serialization over all (tetrahedron, labeling) starts,
/// computed per dual-graph component and joined in sorted order. Equal
/// signatures characterize combinatorially isomorphic tables. Matches
/// `sig:[0-9a-z]+`.
inline std::string canonical_signature(const GluingTable& t) {
    if (t.size() > 34) throw Error("canonical_signature supports at most 34 tetrahedra");
    std::vector<bool> done(size_t(t.size()), false);
    std::vector<std::vector<int>> components;
    std::vector<int> newidx;
    for (int seed = 0; seed < t.size(); ++seed) {
        if (done[size_t(seed)]) continue;
        std::vector<int> best;
        std::vector<int> member_mark;
        for (int start = 0; start < t.size(); ++start) {
            if (done[size_t(start)]) continue;
            // Only starts within the same component can tie; others are
            // filtered by marking membership below on the first pass.
            for (int p = 0; p < 24; ++p) {
                std::vector<int> cand = detail::component_candidate(t, start, Perm4(p), newidx);
                if (start == seed && p == 0) {
                    member_mark = newidx;
                } else if (newidx[size_t(seed)] < 0) {
                    break; // start lies in a different component; skip it
                }
                if (best.empty() || cand < best) best = cand;
            }
        }
        for (int i = 0; i < t.size(); ++i)
            if (member_mark[size_t(i)] >= 0) done[size_t(i)] = true;
        components.push_back(std::move(best));
    }
    std::sort(components.begin(), components.end());

    std::string s = "sig:";
    s += detail::base36(t.size());
    for (const auto& comp : components)
        for (int v : comp) s += detail::base36(v);
    return s;
}

/// The table relabeled by a tetrahedron permutation and per-tetrahedron
/// vertex permutations: tet i becomes tet_perm[i], with vertices relabeled by
/// vperm[i].
inline GluingTable relabel_table(const GluingTable& t, const std::vector<int>& tet_perm,
                                 const std::vector<Perm4>& vperm) {
    GluingTable out(t.size());
    for (int s = 0; s < t.slots(); ++s) {
        const auto& g = t.gluing(s);
        if (g.target < 0 || g.target < s) continue;
        int t1 = GluingTable::slot_tet(s), f1 = GluingTable::slot_face(s);
        int t2 = GluingTable::slot_tet(g.target);
        int nt1 = tet_perm[size_t(t1)], nt2 = tet_perm[size_t(t2)];
        int nf1 = vperm[size_t(t1)][f1];
        Perm4 np = vperm[size_t(t2)] * g.perm * vperm[size_t(t1)].inverse();
        out.glue(GluingTable::slot(nt1, nf1), GluingTable::slot(nt2, np[nf1]), np);
    }
    out.validate();
    return out;
}

} // namespace census
