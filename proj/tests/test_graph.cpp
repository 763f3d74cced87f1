#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "skew/families.hpp"
#include "skew/graph.hpp"
#include "support/oracles.hpp"

using namespace skew;

namespace {

Graph complete(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, es);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) es.emplace_back(perm[e.u], perm[e.v]);
    return Graph(g.vertex_count(), es);
}

}  // namespace

TEST_CASE("construction rejects loops, duplicates and bad endpoints") {
    CHECK_THROWS_AS(Graph::from_pairs(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_pairs(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_pairs(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("edge iteration order is canonical") {
    Graph g = Graph::from_pairs(4, {{3, 2}, {1, 0}, {2, 0}});
    std::vector<Edge> expect{{0, 1}, {0, 2}, {2, 3}};
    CHECK(g.edges() == expect);
}

TEST_CASE("delete_edges: K5 minus one edge, empty set, unknown edge") {
    Graph k5 = complete(5);
    Graph less = delete_edges(k5, EdgeSubset::of(k5, {{0, 1}}));
    CHECK(less.vertex_count() == 5);
    CHECK(less.edge_count() == 9);
    CHECK(delete_edges(k5, EdgeSubset{}) == k5);
    CHECK_THROWS_WITH_AS(delete_edges(less, EdgeSubset({Edge(0, 1)})),
                         "edge (0,1) not in graph", std::invalid_argument);
}

TEST_CASE("delete_edges then re-adding the set restores the edge set") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        Graph g = oracles::random_graph(8, 14, rng);
        if (g.edge_count() < 4) continue;
        EdgeSubset s({g.edges()[0], g.edges()[2], g.edges()[3]});
        CHECK(add_edges(delete_edges(g, s), s) == g);
    }
}

TEST_CASE("delete_vertices: K5 to K4, identity, unknown vertex") {
    CHECK(delete_vertices(complete(5), {4}) == complete(4));
    CHECK(delete_vertices(complete(5), {}) == complete(5));
    CHECK_THROWS_AS(delete_vertices(complete(5), {7}), std::invalid_argument);
}

TEST_CASE("delete_vertices on P(36,9): 56 vertices and 75 edges remain") {
    Graph p = petersen(36, 9);
    REQUIRE(p.vertex_count() == 72);
    REQUIRE(p.edge_count() == 108);
    std::vector<int> drop;
    for (int i = 1; i <= 8; ++i) {
        drop.push_back(i);       // u_i
        drop.push_back(36 + i);  // v_i
    }
    // brute-force incidence oracle: count distinct edges touching the set
    int incident = 0;
    {
        std::vector<bool> gone(p.vertex_count(), false);
        for (int v : drop) gone[v] = true;
        for (const Edge& e : p.edges())
            if (gone[e.u] || gone[e.v]) ++incident;
    }
    CHECK(incident == 33);
    Graph j = delete_vertices(p, drop);
    CHECK(j.vertex_count() == 56);
    CHECK(j.edge_count() == 108 - incident);  // = 75
    // labels survive deletion
    CHECK(j.vertex_by_label("u_0") == 0);
    CHECK(j.vertex_by_label("u_9") == 1);
}

TEST_CASE("suppress_degree2: path collapses, identity, failure modes") {
    Graph path = Graph::from_pairs(3, {{0, 1}, {1, 2}});
    Graph collapsed = suppress_degree2(path);
    CHECK(collapsed.vertex_count() == 2);
    CHECK(collapsed.edge_count() == 1);

    Graph k4 = complete(4);
    CHECK(suppress_degree2(k4) == k4);

    // a 2-path alongside a direct edge: suppression would double the edge
    Graph theta = Graph::from_pairs(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK_THROWS_AS(suppress_degree2(theta), std::runtime_error);

    // minimum degree of the output is never 2
    std::mt19937_64 rng(21);
    for (int t = 0; t < 30; ++t) {
        Graph g = oracles::random_graph(9, 12, rng);
        try {
            Graph s = suppress_degree2(g);
            for (int v = 0; v < s.vertex_count(); ++v) CHECK(s.degree(v) != 2);
        } catch (const std::runtime_error&) {
            // loud failure on loop/parallel creation is part of the contract
        }
    }
}

TEST_CASE("is_isomorphic: relabelled K4, degree mismatch, witness validity") {
    Graph k4 = complete(4);
    CHECK(is_isomorphic(k4, relabel(k4, {2, 0, 3, 1})).isomorphic);
    Graph c4 = Graph::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK_FALSE(is_isomorphic(k4, c4).isomorphic);

    Graph p = petersen(7, 2);
    std::vector<int> perm(p.vertex_count());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::mt19937_64 rng(3);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto r = is_isomorphic(p, relabel(p, perm));
    REQUIRE(r.isomorphic);
    for (const Edge& e : p.edges())
        CHECK(relabel(p, perm).has_edge(r.mapping[e.u], r.mapping[e.v]));
}

TEST_CASE("is_isomorphic is an equivalence on random graphs") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 100; ++t) {
        Graph g = oracles::random_graph(7, 1 + static_cast<int>(rng() % 15), rng);
        CHECK(is_isomorphic(g, g).isomorphic);  // reflexive
    }
    for (int t = 0; t < 40; ++t) {
        Graph a = oracles::random_graph(6, 1 + static_cast<int>(rng() % 12), rng);
        Graph b = oracles::random_graph(6, 1 + static_cast<int>(rng() % 12), rng);
        CHECK(is_isomorphic(a, b).isomorphic == is_isomorphic(b, a).isomorphic);  // symmetric
    }
    for (int t = 0; t < 40; ++t) {
        Graph g = oracles::random_graph(8, 1 + static_cast<int>(rng() % 20), rng);
        std::vector<int> perm(8);
        for (int i = 0; i < 8; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(is_isomorphic(g, relabel(g, perm)).isomorphic);  // relabeling invariance
    }
}

TEST_CASE("degree_sequence, components, connectivity") {
    std::vector<Edge> k33;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) k33.emplace_back(i, j);
    CHECK(degree_sequence(Graph(6, k33)) == std::vector<int>{3, 3, 3, 3, 3, 3});

    Graph two_tris = Graph::from_pairs(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto comps = connected_components(two_tris);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3, 4, 5});
    CHECK_FALSE(is_connected(two_tris));

    // BFS oracle for Q_4(5): walk the whole graph from vertex 0
    Graph q = q_graph(4, 5);
    std::vector<bool> seen(q.vertex_count(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : q.neighbors(v))
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    CHECK(reached == q.vertex_count());
    CHECK(is_connected(q));
}

TEST_CASE("edge-list round trip preserves graphs and labels") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 25; ++t) {
        Graph g = oracles::random_graph(9, 1 + static_cast<int>(rng() % 20), rng);
        std::stringstream ss;
        write_edge_list(g, ss);
        CHECK(read_edge_list(ss) == g);
    }
    Graph p = petersen(6, 2);
    std::stringstream ss;
    write_edge_list(p, ss);
    Graph back = read_edge_list(ss);
    CHECK(back == p);
    CHECK(back.label(7) == "v_1");
}

TEST_CASE("edge-list parser reports line and column") {
    std::stringstream bad1("graph x\n");
    try {
        read_edge_list(bad1);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 7);
    }
    std::stringstream bad2("graph 3\n0 1\n1 q\n");
    try {
        read_edge_list(bad2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(e.column == 3);
    }
    std::stringstream bad3("graph 2\n0 5\n");
    CHECK_THROWS_AS(read_edge_list(bad3), ParseError);
}

TEST_CASE("DOT export emits every vertex and edge once") {
    Graph g = q_graph(3, 1);
    std::stringstream ss;
    write_dot(g, ss);
    std::string dot = ss.str();
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("label=\"x_0\"") != std::string::npos);
}
