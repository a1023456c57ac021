#include <functional>
#include <optional>
#include <random>

#include "doctest.h"
#include "sturmian/concat.hpp"

using namespace sturmian;

namespace {

Graph one_vertex(char colour, int loop, int d)
{
    Graph g;
    g.degree = d;
    g.vertices = {Vertex{0, colour, loop}};
    return g;
}

Graph path2(char c0, int l0, int fwd, int rev, char c1, int l1, int d = 3)
{
    Graph g;
    g.degree = d;
    g.vertices = {Vertex{0, c0, l0}, Vertex{1, c1, l1}};
    g.edges = {Edge{0, 1, fwd, rev}};
    return g;
}

/* Random valid path 0..len-1.  When `start` is given, vertex 0 gets that
   colour and out-index m on its edge. */
Graph random_path(std::mt19937& rng, int d, int len, std::optional<std::pair<char, int>> start = std::nullopt)
{
    Graph g;
    g.degree = d;
    std::vector<int> budget(len, d);
    for (int v = 0; v < len; ++v)
        g.vertices.push_back(Vertex{v, rng() % 2 ? 'a' : 'b', 0});
    for (int v = 0; v + 1 < len; ++v) {
        int fwd = 1 + static_cast<int>(rng() % static_cast<unsigned>(budget[v]));
        if (v == 0 && start)
            fwd = start->second;
        // leave at least 1 on the next vertex for its own onward edge
        int room_v = budget[v + 1] - (v + 2 < len ? 1 : 0);
        int rev = 1 + static_cast<int>(rng() % static_cast<unsigned>(room_v));
        budget[v] -= fwd;
        budget[v + 1] -= rev;
        g.edges.push_back(Edge{v, v + 1, fwd, rev});
    }
    if (start)
        g.vertices[0].color = start->first;
    for (int v = 0; v < len; ++v)
        g.vertices[v].loop = budget[v];
    return g;
}

bool degree_ok(const Graph& g)
{
    std::vector<int> sum(g.vertices.size(), 0);
    for (std::size_t k = 0; k < g.vertices.size(); ++k)
        sum[k] = g.vertices[k].loop;
    for (const Edge& e : g.edges) {
        sum[g.index_of(e.u)] += e.fwd;
        sum[g.index_of(e.v)] += e.rev;
    }
    for (int s : sum)
        if (s != g.degree)
            return false;
    return true;
}

Errc code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InvalidArgument;
}

} // namespace

TEST_SUITE("concat") {

TEST_CASE("(i)-concatenation of two m = 2, loop 1 ends at i = 1")
{
    Graph g1 = path2('b', 2, 1, 2, 'a', 1);
    Graph g2 = path2('a', 1, 2, 1, 'b', 2);
    ConcatMap map;
    Graph r = concat_i(g1, 1, g2, 0, 1, &map);
    REQUIRE(r.vertices.size() == 3);
    REQUIRE(map.left[1] == map.right[0]);
    const int mid = map.left[1];
    CHECK(r.vertices[mid].loop == 1);
    CHECK(r.vertices[mid].color == 'a');
    EndInfo e = end_info(r, mid);
    CHECK(e.edges == 2);
    int sides = 0;
    for (const Edge& ed : r.edges) {
        if (ed.u == mid)
            sides += ed.fwd;
        if (ed.v == mid)
            sides += ed.rev;
    }
    CHECK(sides == 2);   // 1 and m - 1 = 1
    CHECK(r.edges[0].rev == 1);
    CHECK(r.edges[1].fwd == 1);
    CHECK(r.edges[0].fwd == 1);   // far-side indices unchanged
    CHECK(r.edges[1].rev == 1);
    CHECK(degree_ok(r));
}

TEST_CASE("G^A_0 joined with G^B_0 at their b ends")
{
    Graph ga = path2('a', 2, 1, 2, 'b', 1);
    Graph gb = path2('a', 1, 2, 2, 'b', 1);
    Graph r = concat_i(ga, 1, gb, 1, 1);
    Graph expect;
    expect.degree = 3;
    expect.vertices = {Vertex{0, 'a', 2}, Vertex{1, 'b', 1}, Vertex{2, 'a', 1}};
    expect.edges = {Edge{0, 1, 1, 1}, Edge{1, 2, 1, 2}};
    CHECK(graphs_isomorphic(r, expect).isomorphic);
    CHECK(degree_ok(r));
}

TEST_CASE("(i,j)-concatenation of the two base graphs")
{
    Graph fa = one_vertex('a', 3, 3), fb = one_vertex('b', 3, 3);
    Graph r = concat_ij(fa, 0, fb, 0, 1, 2);
    Graph ga0 = path2('a', 2, 1, 2, 'b', 1);
    CHECK(graphs_isomorphic(r, ga0).isomorphic);
    CHECK(r == ga0);
}

TEST_CASE("(i,j) with i equal to the loop drops it")
{
    Graph fa = one_vertex('a', 3, 3), fb = one_vertex('b', 3, 3);
    Graph r = concat_ij(fa, 0, fb, 0, 3, 1);
    CHECK(r.vertices[0].loop == 0);
    CHECK(serialize_eig(r).find("v 0 a\n") != std::string::npos);
    CHECK(degree_ok(r));
}

TEST_CASE("errors")
{
    Graph m2 = path2('a', 1, 1, 2, 'a', 1);
    Graph m3 = path2('a', 0, 3, 2, 'a', 1);
    CHECK(code_of([&] { concat_i(m2, 1, m3, 0, 1); }) == Errc::EndMismatch);

    Graph c1 = path2('b', 1, 2, 2, 'a', 1);
    Graph c2 = path2('b', 1, 2, 2, 'b', 1);
    CHECK(code_of([&] { concat_i(c1, 1, c2, 1, 1); }) == Errc::EndMismatch);
    CHECK(code_of([&] { concat_i(c1, 0, c2, 0, 2); }) == Errc::IndexOutOfRange);
    CHECK(code_of([&] { concat_i(c1, 0, c2, 0, 0); }) == Errc::IndexOutOfRange);

    Graph fa = one_vertex('a', 3, 3), fb = one_vertex('b', 3, 3);
    CHECK(code_of([&] { concat_ij(fa, 0, fb, 0, 4, 1); }) == Errc::IndexOutOfRange);
    CHECK(code_of([&] { concat_ij(fa, 0, fb, 0, 1, 0); }) == Errc::IndexOutOfRange);
    CHECK(code_of([&] { concat_ij(fa, 0, one_vertex('b', 4, 4), 0, 1, 1); }) == Errc::EndMismatch);
}

TEST_CASE("equal zero loops are accepted")
{
    Graph g1 = path2('a', 0, 3, 3, 'b', 0);
    Graph r = concat_i(g1, 1, g1, 1, 1);
    CHECK(r.vertices.size() == 3);
    CHECK(degree_ok(r));
}

TEST_CASE("degree preservation and size arithmetic on random paths")
{
    std::mt19937 rng(17);
    int tested_i = 0, tested_ij = 0;
    for (int t = 0; t < 300; ++t) {
        int d = 3 + static_cast<int>(rng() % 4);
        Graph g1 = random_path(rng, d, 1 + static_cast<int>(rng() % 5));
        REQUIRE(degree_ok(g1));
        VertexId V = static_cast<VertexId>(g1.vertices.size()) - 1;
        EndInfo e1 = end_info(g1, V);

        if (e1.m >= 2) {
            Graph g2 = random_path(rng, d, 2 + static_cast<int>(rng() % 4), std::make_pair(g1.vertex(V).color, e1.m));
            REQUIRE(degree_ok(g2));
            for (int i = 1; i < e1.m; ++i) {
                Graph r = concat_i(g1, V, g2, 0, i);
                CHECK(r.vertices.size() == g1.vertices.size() + g2.vertices.size() - 1);
                CHECK(r.edges.size() == g1.edges.size() + g2.edges.size());
                CHECK(degree_ok(r));
                CHECK(validate_graph(r).ok());
                ++tested_i;
            }
        }

        Graph g2 = random_path(rng, d, 1 + static_cast<int>(rng() % 4));
        EndInfo e2 = end_info(g2, 0);
        for (int i = 1; i <= e1.loop; ++i)
            for (int j = 1; j <= e2.loop; ++j) {
                Graph r = concat_ij(g1, V, g2, 0, i, j);
                CHECK(r.vertices.size() == g1.vertices.size() + g2.vertices.size());
                CHECK(r.edges.size() == g1.edges.size() + g2.edges.size() + 1);
                CHECK(degree_ok(r));
                ++tested_ij;
            }
    }
    CHECK(tested_i > 50);
    CHECK(tested_ij > 50);
}

} // TEST_SUITE
