#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "skew/families.hpp"
#include "skew/planarity.hpp"

using namespace skew;

namespace {

int expected_mu_q(int s, int k) { return ((s - 2) * k + 1) / 2 + 1; }

Graph complete(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, es);
}

}  // namespace

TEST_CASE("petersen(5,2): 10 vertices, 15 edges, 3-regular") {
    Graph p = petersen(5, 2);
    CHECK(p.vertex_count() == 10);
    CHECK(p.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
}

TEST_CASE("petersen(36,9): sizes and the nine inner 4-cycles") {
    Graph p = petersen(36, 9);
    CHECK(p.vertex_count() == 72);
    CHECK(p.edge_count() == 108);
    // inner edges v_i v_{i+9} split into gcd(36,9)=9 disjoint 4-cycles
    std::set<std::set<int>> cycles;
    for (int i = 0; i < 36; ++i) {
        std::set<int> orbit;
        for (int t = 0; t < 4; ++t) orbit.insert(36 + (i + 9 * t) % 36);
        cycles.insert(orbit);
    }
    CHECK(cycles.size() == 9);
    for (const auto& orbit : cycles) {
        REQUIRE(orbit.size() == 4);
        std::vector<int> o(orbit.begin(), orbit.end());
        for (int t = 0; t < 4; ++t) {
            int a = 36 + ((o[t] - 36) % 36);
            int b = 36 + ((o[t] - 36 + 9) % 36);
            if (orbit.count(b)) CHECK(p.has_edge(a, b));
        }
    }
}

TEST_CASE("petersen parameter validation") {
    CHECK_THROWS_AS(petersen(8, 4), std::invalid_argument);   // n = 2k
    CHECK_THROWS_AS(petersen(6, 0), std::invalid_argument);   // k < 1
    CHECK_THROWS_AS(petersen(6, 6), std::invalid_argument);   // k > n-1
}

TEST_CASE("petersen is 3-regular across the grid") {
    for (int n = 5; n <= 12; ++n) {
        for (int k = 1; k < n; ++k) {
            if (n == 2 * k) continue;
            Graph p = petersen(n, k);
            CHECK(p.edge_count() == 3 * n);
            for (int v = 0; v < p.vertex_count(); ++v) CHECK(p.degree(v) == 3);
        }
    }
}

TEST_CASE("petersen(n,k) is isomorphic to petersen(n,n-k)") {
    for (int n : {5, 7, 9, 10}) {
        for (int k = 1; k < n; ++k) {
            if (n == 2 * k || n == 2 * (n - k)) continue;
            CHECK(is_isomorphic(petersen(n, k), petersen(n, n - k)).isomorphic);
        }
    }
}

TEST_CASE("q_graph(5,8): 48 vertices and 80 edges") {
    Graph q = q_graph(5, 8);
    CHECK(q.vertex_count() == 48);
    CHECK(q.edge_count() == 80);
}

TEST_CASE("q_graph(3,1) is K4") {
    Graph q = q_graph(3, 1);
    CHECK(q.vertex_count() == 4);
    CHECK(q.edge_count() == 6);
    CHECK(is_isomorphic(q, complete(4)).isomorphic);
}

TEST_CASE("q_graph(4,4): 20 vertices and 32 edges") {
    Graph q = q_graph(4, 4);
    CHECK(q.vertex_count() == 20);
    CHECK(q.edge_count() == 32);
}

TEST_CASE("q_graph degree multiset is {3^(sk), s^k}") {
    for (int s = 3; s <= 6; ++s) {
        for (int k = 1; k <= 6; ++k) {
            Graph q = q_graph(s, k);
            for (int v = 0; v < s * k; ++v) CHECK(q.degree(v) == 3);
            for (int j = 0; j < k; ++j) CHECK(q.degree(s * k + j) == s);
        }
    }
}

TEST_CASE("q_graph parameter validation") {
    CHECK_THROWS_AS(q_graph(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(q_graph(3, 0), std::invalid_argument);
}

TEST_CASE("h_deletion_set(4,4) is exactly the printed even-k instance") {
    EdgeSubset s = h_deletion_set(4, 4);
    EdgeSubset expect({Edge(3, 4), Edge(5, 6), Edge(7, 8), Edge(9, 10), Edge(11, 12)});
    CHECK(s == expect);
    CHECK(is_planar(delete_edges(q_graph(4, 4), s)));
}

TEST_CASE("h_deletion_set(5,8) has 13 edges and a planar residual") {
    // the drawn thick edges: (2i-1)(2i) for i = 4..16
    EdgeSubset s = h_deletion_set(5, 8);
    REQUIRE(s.size() == 13);
    for (int i = 4; i <= 16; ++i) CHECK(s.contains(Edge(2 * i - 1, 2 * i)));
    CHECK(is_planar(delete_edges(q_graph(5, 8), s)));
}

TEST_CASE("h_deletion_set size matches ceil((s-2)k/2)+1 over the grid") {
    for (int s = 3; s <= 8; ++s)
        for (int k = 4; k <= 12; ++k)
            CHECK(h_deletion_set(s, k).size() == expected_mu_q(s, k));
}

TEST_CASE("h_deletion_set parameter validation") {
    CHECK_THROWS_AS(h_deletion_set(2, 6), std::invalid_argument);
    CHECK_THROWS_AS(h_deletion_set(4, 3), std::invalid_argument);
}

TEST_CASE("H_s(k) residual is planar with sk-k-t+2 faces over the grid") {
    for (int s = 3; s <= 8; ++s) {
        for (int k = 4; k <= 12; ++k) {
            EdgeSubset del = h_deletion_set(s, k);
            Graph h = delete_edges(q_graph(s, k), del);
            REQUIRE(is_planar(h));
            auto emb = embed(h);
            CHECK(emb.face_count() == s * k - k - del.size() + 2);
        }
    }
}

TEST_CASE("odd-k ranges never collide with the extra edge (sk-1)0") {
    // the largest index the odd-k formula produces is (s-1)k < sk; the
    // generator would throw if the ranges ever met
    for (int s = 3; s <= 8; ++s)
        for (int k = 5; k <= 13; k += 2) CHECK_NOTHROW(h_deletion_set(s, k));
}

TEST_CASE("deleting any proper subset of the deletion set stays nonplanar") {
    for (int s : {3, 4}) {
        for (int k : {4, 5}) {
            Graph q = q_graph(s, k);
            EdgeSubset del = h_deletion_set(s, k);
            // maximal proper subsets suffice: fewer deletions keep a supergraph
            for (int skip = 0; skip < del.size(); ++skip) {
                std::vector<Edge> sub;
                for (int i = 0; i < del.size(); ++i)
                    if (i != skip) sub.push_back(del.edges[i]);
                CHECK_FALSE(is_planar(delete_edges(q, EdgeSubset(sub))));
            }
        }
    }
}

TEST_CASE("q3_reduction: verdict true for k = 5, 7, 9, 11") {
    for (int k : {5, 7, 9, 11}) {
        auto r = q3_reduction(k);
        CHECK(r.isomorphic_to_q3);
    }
}

TEST_CASE("q3_reduction at k=9: reduced graph has 36 vertices and 54 edges") {
    auto r = q3_reduction(9);
    CHECK(r.reduced.vertex_count() == 36);
    CHECK(r.reduced.edge_count() == 54);
}

TEST_CASE("q3_reduction at k=7: degree-2 list matches the stated enumeration") {
    auto r = q3_reduction(7);
    std::set<std::string> expected{"u_0", "v_0", "u_7"};
    for (int j = 8; j <= 13; ++j) expected.insert("v_" + std::to_string(j));   // v_{k+1}..v_{2k-1}
    for (int j = 21; j <= 27; ++j) expected.insert("v_" + std::to_string(j));  // v_{3k}..v_{4k-1}
    std::set<std::string> got(r.degree2_labels.begin(), r.degree2_labels.end());
    CHECK(got == expected);
}

TEST_CASE("q3_reduction parameter validation") {
    CHECK_THROWS_AS(q3_reduction(4), std::invalid_argument);
    CHECK_THROWS_AS(q3_reduction(1), std::invalid_argument);
}
