#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "census/gluing.hpp"
#include "census/signature.hpp"

using namespace census;

namespace {

/// Two tetrahedra with all four faces glued by the identity bijections.
GluingTable doubled_tetrahedron() {
    GluingTable t(2);
    for (int f = 0; f < 4; ++f) t.glue(GluingTable::slot(0, f), GluingTable::slot(1, f), Perm4());
    t.validate();
    return t;
}

std::string doubled_text() {
    return "# doubled tetrahedron\n"
           "0 0 : 1 0 : 123\n"
           "0 1 : 1 1 : 023\n"
           "0 2 : 1 2 : 013\n"
           "0 3 : 1 3 : 012\n";
}

/// Independent corner-class oracle: plain union-find written separately from
/// the library path.
int vertex_count_oracle(const GluingTable& t) {
    int n = t.size();
    std::vector<int> cls(size_t(4 * n));
    for (int i = 0; i < 4 * n; ++i) cls[size_t(i)] = i;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < t.slots(); ++s) {
            if (!t.glued(s)) continue;
            const auto& g = t.gluing(s);
            int tt = GluingTable::slot_tet(s), f = GluingTable::slot_face(s);
            int t2 = GluingTable::slot_tet(g.target);
            for (int v : face_vertices(f)) {
                int a = cls[size_t(4 * tt + v)], b = cls[size_t(4 * t2 + g.perm[v])];
                if (a != b) {
                    int lo = std::min(a, b);
                    for (auto& c : cls)
                        if (c == a || c == b) c = lo;
                    changed = true;
                }
            }
        }
    }
    std::set<int> roots(cls.begin(), cls.end());
    return int(roots.size());
}

} // namespace

TEST_CASE("parse round-trips the doubled tetrahedron") {
    GluingTable t = parse_gluing_table(doubled_text());
    CHECK(t.size() == 2);
    CHECK(t.closed());
    CHECK(t == doubled_tetrahedron());
    CHECK(parse_gluing_table(serialize_gluing_table(t)) == t);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_WITH(parse_gluing_table("0 0 : 0 0 : 123\n"), "self-glued face");
    CHECK_THROWS_AS(parse_gluing_table("0 0 : 1 0\n"), Error);
    CHECK_THROWS_AS(parse_gluing_table("0 0 : 1 0 : 113\n"), Error); // repeated image
    CHECK_THROWS_AS(parse_gluing_table("0 0 : 1 0 : 120\n"), Error); // image hits opposite vertex
    CHECK_THROWS_AS(parse_gluing_table("0 5 : 1 0 : 123\n"), Error); // face out of range
    CHECK_THROWS_AS(parse_gluing_table(""), Error);                  // empty triangulation
    CHECK_THROWS_AS(parse_gluing_table("0 0 : 1 0 : 123\n0 0 : 1 1 : 023\n"), Error); // reused face
}

TEST_CASE("vertex counts") {
    GluingTable t = doubled_tetrahedron();
    CHECK(vertex_count(t) == 4);
    CHECK(vertex_count_oracle(t) == 4);
    GluingTable open(1);
    CHECK_THROWS_AS(vertex_count(open), Error);
}

TEST_CASE("vertex count matches the oracle on random closed tables") {
    std::mt19937 rng(123);
    int built = 0;
    while (built < 60) {
        int n = std::uniform_int_distribution<int>(1, 3)(rng);
        GluingTable t(n);
        bool ok = true;
        for (int s = 0; s < t.slots() && ok; ++s) {
            if (t.glued(s)) continue;
            std::vector<std::pair<int, Perm4>> options;
            for (int u = s + 1; u < t.slots(); ++u) {
                if (t.glued(u)) continue;
                for (int p = 0; p < 24; ++p)
                    if (Perm4(p)[GluingTable::slot_face(s)] == GluingTable::slot_face(u))
                        options.push_back({u, Perm4(p)});
            }
            if (options.empty()) { ok = false; break; }
            auto [u, perm] = options[size_t(std::uniform_int_distribution<int>(0, int(options.size()) - 1)(rng))];
            t.glue(s, u, perm);
        }
        if (!ok) continue;
        t.validate();
        CHECK(vertex_count(t) == vertex_count_oracle(t));
        ++built;
    }
}

TEST_CASE("doubled tetrahedron is orientable") {
    W1Cocycle w = w1_cocycle(doubled_tetrahedron());
    CHECK(w.orientable);
}

TEST_CASE("edge classes of the doubled tetrahedron") {
    GluingTable t = doubled_tetrahedron();
    EdgeClasses ec = edge_classes(t);
    CHECK(ec.count == 6);
    CHECK(ec.all_valid);
    for (int d : ec.degree) CHECK(d == 2);
}

TEST_CASE("canonical signature is invariant under relabeling") {
    GluingTable t = doubled_tetrahedron();
    std::string sig = canonical_signature(t);
    CHECK(sig.rfind("sig:", 0) == 0);
    std::mt19937 rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> tp{0, 1};
        if (std::uniform_int_distribution<int>(0, 1)(rng)) std::swap(tp[0], tp[1]);
        std::vector<Perm4> vp{Perm4(std::uniform_int_distribution<int>(0, 23)(rng)),
                              Perm4(std::uniform_int_distribution<int>(0, 23)(rng))};
        CHECK(canonical_signature(relabel_table(t, tp, vp)) == sig);
    }
}

TEST_CASE("canonical signature is a fixed point of serialization") {
    GluingTable t = doubled_tetrahedron();
    GluingTable reparsed = parse_gluing_table(serialize_gluing_table(t));
    CHECK(canonical_signature(reparsed) == canonical_signature(t));
}

TEST_CASE("signatures separate non-isomorphic tables and absorb relabelings") {
    // Brute-force isomorphism oracle over all relabelings, for 2 tetrahedra.
    auto isomorphic_brute = [](const GluingTable& a, const GluingTable& b) {
        for (int swap_t = 0; swap_t < 2; ++swap_t)
            for (int p0 = 0; p0 < 24; ++p0)
                for (int p1 = 0; p1 < 24; ++p1) {
                    std::vector<int> tp = swap_t ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
                    if (relabel_table(a, tp, {Perm4(p0), Perm4(p1)}) == b) return true;
                }
        return false;
    };

    GluingTable d = doubled_tetrahedron();
    // A different closed 2-tet table: same pairing pattern, one gluing twisted.
    GluingTable e(2);
    e.glue(GluingTable::slot(0, 0), GluingTable::slot(1, 0), Perm4::from_images(0, 2, 3, 1));
    for (int f = 1; f < 4; ++f) e.glue(GluingTable::slot(0, f), GluingTable::slot(1, f), Perm4());
    e.validate();

    bool same_sig = canonical_signature(d) == canonical_signature(e);
    CHECK(same_sig == isomorphic_brute(d, e));

    std::mt19937 rng(42);
    std::vector<int> tp{1, 0};
    std::vector<Perm4> vp{Perm4(7), Perm4(19)};
    GluingTable d2 = relabel_table(d, tp, vp);
    CHECK(isomorphic_brute(d, d2));
    CHECK(canonical_signature(d) == canonical_signature(d2));
}
