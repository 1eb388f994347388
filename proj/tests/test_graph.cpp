#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ddg/graph.hpp"
#include "ddg/graph6.hpp"

using namespace ddg;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph::from_edges(n, e);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph::from_edges(n, e);
}

// Petersen built from first principles: vertices are the 2-subsets of
// {0..4}, adjacent exactly when disjoint.
Graph petersen_kneser() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.push_back({a, b});
    std::vector<std::pair<int, int>> e;
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) e.push_back({(int)i, (int)j});
        }
    return Graph::from_edges(10, e);
}

Graph random_graph(int n, std::mt19937_64& rng, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.push_back({i, j});
    return Graph::from_edges(n, e);
}

}  // namespace

TEST_CASE("from_matrix validates and round-trips") {
    Graph p3 = Graph::from_matrix({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 0));
    CHECK_FALSE(p3.adjacent(0, 2));
    CHECK(p3.degree(1) == 2);
    CHECK(p3.edge_count() == 2);

    CHECK_THROWS_AS(Graph::from_matrix({{0, 1}, {0, 0}}), NotSymmetric);
    CHECK_THROWS_AS(Graph::from_matrix({{1, 1}, {1, 0}}), NonzeroDiagonal);
    CHECK_THROWS_AS(Graph::from_matrix({{0, 2}, {2, 0}}), NonBinaryEntry);
    CHECK_THROWS_AS(Graph::from_matrix({{0, 1, 0}, {1, 0, 1}}), NotSymmetric);
}

TEST_CASE("builder rejects loops and bad endpoints") {
    GraphBuilder b(3);
    CHECK_THROWS_AS(b.add_edge(1, 1), NonzeroDiagonal);
    CHECK_THROWS_AS(b.add_edge(0, 3), InvalidVertexSet);
    b.add_edge(0, 2);
    CHECK(b.has_edge(2, 0));
}

TEST_CASE("degrees, common neighbours, neighbours") {
    Graph p = petersen_kneser();
    CHECK(is_k_regular(p) == 3);
    CHECK(p.edge_count() == 15);
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v)
            CHECK(p.common_neighbours(u, v) == (p.adjacent(u, v) ? 0 : 1));
    for (int u = 0; u < 10; ++u) {
        auto nb = p.neighbours(u);
        CHECK(nb.size() == 3);
        for (int v : nb) CHECK(p.adjacent(u, v));
    }
}

TEST_CASE("handshake and symmetry on random graphs") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(1 + (int)(rng() % 70), rng);
        long long sum = 0;
        for (int u = 0; u < g.size(); ++u) sum += g.degree(u);
        CHECK(sum == 2 * g.edge_count());
        for (int u = 0; u < g.size(); ++u) {
            CHECK_FALSE(g.adjacent(u, u));
            for (int v = 0; v < g.size(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        }
    }
}

TEST_CASE("complement and induced subgraph") {
    Graph c5 = cycle(5);
    Graph cc = complement(c5);
    CHECK(is_k_regular(cc) == 2);
    // self-complementary: C5 complement is the pentagram, again a 5-cycle
    CHECK(diameter(cc) == 2);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) CHECK(cc.adjacent(u, v) == !c5.adjacent(u, v));

    Graph k5 = complete(5);
    Graph ind = induced_subgraph(k5, {0, 2, 4});
    CHECK(ind.size() == 3);
    CHECK(ind.edge_count() == 3);
    CHECK_THROWS_AS(induced_subgraph(k5, {}), EmptySet);
    CHECK_THROWS_AS(induced_subgraph(k5, {2, 1}), InvalidVertexSet);
    CHECK_THROWS_AS(induced_subgraph(k5, {1, 1, 2}), InvalidVertexSet);
    CHECK_THROWS_AS(induced_subgraph(k5, {3, 5}), InvalidVertexSet);
}

TEST_CASE("components and diameter") {
    Graph c6 = cycle(6);
    CHECK(is_connected(c6));
    CHECK(diameter(c6) == 3);
    CHECK(connected_components(c6).size() == 1);

    // two disjoint triangles
    Graph two = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(is_connected(two));
    CHECK_FALSE(diameter(two).has_value());
    auto comps = connected_components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 1, 2});
    CHECK(comps[1] == VertexSet{3, 4, 5});

    Graph k1 = Graph::empty(1);
    CHECK(diameter(k1) == 0);
    CHECK(is_connected(k1));
    Graph p = petersen_kneser();
    CHECK(diameter(p) == 2);
}

TEST_CASE("lexicographic product: hand cases") {
    Graph k2 = complete(2);
    // K2[K2] joins two adjacent copies of K2 completely: K4
    CHECK(lexicographic_product(k2, k2) == complete(4));
    // K2[empty2] joins two cocliques completely: C4 in the order 0-2-1-3
    Graph c4 = lexicographic_product(k2, Graph::empty(2));
    CHECK(c4 == Graph::from_matrix({{0, 0, 1, 1}, {0, 0, 1, 1}, {1, 1, 0, 0}, {1, 1, 0, 0}}));
}

TEST_CASE("lexicographic product: vertex order and degree law") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(2 + (int)(rng() % 6), rng);
        Graph h = random_graph(1 + (int)(rng() % 6), rng);
        Graph gh = lexicographic_product(g, h);
        const int nh = h.size();
        CHECK(gh.size() == g.size() * nh);
        for (int u = 0; u < g.size(); ++u)
            for (int v = 0; v < nh; ++v)
                CHECK(gh.degree(u * nh + v) == nh * g.degree(u) + h.degree(v));
        // spot-check the adjacency rule on all pairs
        for (int a = 0; a < gh.size(); ++a)
            for (int b = a + 1; b < gh.size(); ++b) {
                const int u1 = a / nh, v1 = a % nh, u2 = b / nh, v2 = b % nh;
                const bool want = g.adjacent(u1, u2) || (u1 == u2 && h.adjacent(v1, v2));
                CHECK(gh.adjacent(a, b) == want);
            }
    }
    CHECK_THROWS_AS(lexicographic_product(complete(65), Graph::empty(64)), SizeOverflow);
}

TEST_CASE("graph6: known strings") {
    // K4: header 'C' (4+63=67), body bits 111111 -> 63+63=126 '~'
    CHECK(graph6_encode(complete(4)) == "C~");
    Graph k4 = graph6_decode("C~");
    CHECK(k4 == complete(4));
    // P3 as 0-1-2: column-major upper triangle bits (01),(02),(12) = 1,0,1
    // -> 101000 = 40, byte 103 'g'
    CHECK(graph6_encode(Graph::from_matrix({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}})) == "Bg");
    // single vertex: header only
    CHECK(graph6_encode(Graph::empty(1)) == "@");
    CHECK(graph6_decode("@").size() == 1);
    // 5-cycle 0-1-2-3-4-0: bits (01)(02)(12)(03)(13)(23)(04)(14)(24)(34)
    // = 1 0 1 0 0 1 1 0 0 1 -> 101001 100100 -> 41,36 -> 'h','c'
    CHECK(graph6_encode(cycle(5)) == "Dhc");
}

TEST_CASE("graph6: decode errors") {
    CHECK_THROWS_AS(graph6_decode(""), MalformedHeader);
    CHECK_THROWS_AS(graph6_decode("C~~"), TruncatedBits);   // trailing byte
    CHECK_THROWS_AS(graph6_decode("C"), TruncatedBits);     // missing body
    CHECK_THROWS_AS(graph6_decode("?"), SizeOverflow);      // zero vertices
    CHECK_THROWS_AS(graph6_decode("~?"), MalformedHeader);  // cut-off count
    CHECK_THROWS_AS(graph6_decode("~~????"), SizeOverflow); // >258047 form
    CHECK_THROWS_AS(graph6_decode("B\x7f"), MalformedHeader);
    // n=2, body byte 110000: nonzero padding below the single used bit
    CHECK_THROWS_AS(graph6_decode("Ao"), TruncatedBits);
    CHECK_NOTHROW(graph6_decode("A_"));  // 100000: valid single edge
}

TEST_CASE("graph6: round-trip on random graphs incl. header boundary") {
    std::mt19937_64 rng(2026);
    std::vector<int> sizes = {1, 2, 61, 62, 63, 64, 100};
    for (int trial = 0; trial < 1000; ++trial) sizes.push_back(1 + (int)(rng() % 60));
    for (int n : sizes) {
        Graph g = random_graph(n, rng);
        Graph back = graph6_decode(graph6_encode(g));
        CHECK(back == g);
    }
}

TEST_CASE("adjacency json dump") {
    std::string s = adjacency_json(Graph::from_matrix({{0, 1}, {1, 0}}));
    CHECK(s == R"({"n":2,"rows":[[0,1],[1,0]]})");
}
