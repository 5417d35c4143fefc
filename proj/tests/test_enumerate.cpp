#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "census/enumerate.hpp"
#include "census/spine.hpp"

using namespace census;

namespace {

/// Brute-force census at n = 1: every closed gluing of one tetrahedron,
/// filtered to one-vertex manifold tables, classified up to isomorphism by
/// exhaustive relabeling. Independent of the search-based enumerator.
std::set<std::string> brute_force_n1() {
    std::set<std::string> sigs;
    // Pairings of the four faces: (01)(23), (02)(13), (03)(12).
    const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& pr : pairings)
        for (int p1 = 0; p1 < 24; ++p1)
            for (int p2 = 0; p2 < 24; ++p2) {
                Perm4 q1(p1), q2(p2);
                if (q1[pr[0]] != pr[1] || q2[pr[2]] != pr[3]) continue;
                GluingTable t(1);
                t.glue(GluingTable::slot(0, pr[0]), GluingTable::slot(0, pr[1]), q1);
                t.glue(GluingTable::slot(0, pr[2]), GluingTable::slot(0, pr[3]), q2);
                if (!is_one_vertex_manifold(t)) continue;
                sigs.insert(canonical_signature(t));
            }
    return sigs;
}

} // namespace

TEST_CASE("enumeration at n = 1 matches brute force") {
    auto brute = brute_force_n1();
    auto result = enumerate_one_vertex(1);
    std::set<std::string> sigs(result.signatures.begin(), result.signatures.end());
    CHECK(sigs == brute);
    CHECK_FALSE(sigs.empty());
}

TEST_CASE("every emitted table is a one-vertex manifold table with spine invariants") {
    for (int n = 1; n <= 2; ++n) {
        auto result = enumerate_one_vertex(n);
        for (const auto& t : result.tables) {
            CHECK(is_one_vertex_manifold(t));
            CHECK(vertex_count(t) == 1);
            StandardSpine sp = dual_spine(t);
            CHECK(sp.vertices == n);
            CHECK(int(sp.edges.size()) == 2 * n);
            CHECK(int(sp.faces.size()) == n + 1);
            CHECK(sp.euler_characteristic() == 1);
            CHECK(is_standard(sp));
        }
    }
}

TEST_CASE("enumeration output is independent of worker count and canonicity") {
    auto base = enumerate_one_vertex(2);
    auto threaded = enumerate_one_vertex(2, {}, 4);
    CHECK(base.signatures == threaded.signatures);

    EnumerateFlags no_canon;
    no_canon.canonicity = false;
    auto unc = enumerate_one_vertex(2, no_canon);
    CHECK(base.signatures == unc.signatures);
}

TEST_CASE("pruning flags only shrink the census") {
    auto plain = enumerate_one_vertex(2);
    EnumerateFlags f;
    f.reject_low_degree_edges = true;
    auto low = enumerate_one_vertex(2, f);
    CHECK(low.signatures.size() <= plain.signatures.size());
    for (const auto& s : low.signatures)
        CHECK(std::find(plain.signatures.begin(), plain.signatures.end(), s) != plain.signatures.end());

    EnumerateFlags g;
    g.prune_embedded_small_faces = true;
    auto pruned = enumerate_one_vertex(2, g);
    CHECK(pruned.signatures.size() <= plain.signatures.size());
    // The search-time criterion matches the post-hoc verdict on dual spines.
    std::set<std::string> survivors;
    for (const auto& t : plain.tables) {
        StandardSpine sp = dual_spine(t);
        if (prune_nonminimal(sp).minimal_candidate) survivors.insert(canonical_signature(t));
    }
    std::set<std::string> got(pruned.signatures.begin(), pruned.signatures.end());
    CHECK(got == survivors);
}

TEST_CASE("enumeration rejects bad arguments") {
    CHECK_THROWS_AS(enumerate_one_vertex(0), Error);
    CHECK_THROWS_AS(enumerate_one_vertex(1, {}, 0), Error);
}
