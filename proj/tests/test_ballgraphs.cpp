#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "sturmian/ballgraphs.hpp"

using namespace sturmian;
using testing_support::load;

namespace {

Graph two_vertex(char c0, int l0, int fwd, int rev, char c1, int l1)
{
    Graph g;
    g.degree = 3;
    g.vertices = {Vertex{0, c0, l0}, Vertex{1, c1, l1}};
    g.edges = {Edge{0, 1, fwd, rev}};
    return g;
}

int non_loop_edges(const BallGraph& bg)
{
    int k = 0;
    for (auto [a, b] : bg.edges)
        k += a != b;
    return k;
}

bool connected(const BallGraph& bg)
{
    std::set<int> seen{0};
    std::vector<int> todo{0};
    while (!todo.empty()) {
        int x = todo.back();
        todo.pop_back();
        for (int y : bg.neighbours(x))
            if (seen.insert(y).second)
                todo.push_back(y);
    }
    return static_cast<int>(seen.size()) == bg.size;
}

} // namespace

TEST_SUITE("ballgraphs") {

TEST_CASE("G_0, G_1, G_2 of the worked example")
{
    Graph g = load("figure1.eig");
    Analysis an(g, 4);

    BallGraph g0 = build_Gn(an, 0);
    CHECK(g0.size == 2);
    CHECK(non_loop_edges(g0) == 1);

    BallGraph g1 = build_Gn(an, 1);
    const auto& c1 = an.chain(1);
    CHECK(g1.size == 3);
    CHECK(non_loop_edges(g1) == 2);
    CHECK(g1.adjacent(c1.S, c1.A));
    CHECK(g1.adjacent(c1.S, c1.B));
    CHECK_FALSE(g1.adjacent(c1.A, c1.B));

    BallGraph g2 = build_Gn(an, 2);
    const auto& c2 = an.chain(2);
    CHECK(g2.size == 4);
    CHECK(non_loop_edges(g2) == 3);
    CHECK(connected(g2));
    CHECK(g2.adjacent(c2.S, c2.A));
    CHECK(g2.adjacent(c2.S, c2.B));
    // the fourth class is the extension of A_1
    std::set<int> rest{0, 1, 2, 3};
    rest.erase(c2.S);
    rest.erase(c2.A);
    rest.erase(c2.B);
    REQUIRE(rest.size() == 1);
    CHECK(restrict_ball(an.level(2).classes[*rest.begin()], 1) == an.level(1).classes[c1.A]);
    CHECK_FALSE(detect_cycle(g2));
}

TEST_CASE("indices at level 0")
{
    Graph g = load("figure1.eig");
    Analysis an(g, 4);
    const auto& c = an.chain(0);
    CHECK(index_of(an, 0, c.S, c.B, Side::A) == 1);
    CHECK(index_of(an, 0, c.S, c.S, Side::A) == 2);
    CHECK(index_of(an, 0, c.S, c.B, Side::B) == 2);
    CHECK(index_of(an, 0, c.S, c.S, Side::B) == 1);
    CHECK_THROWS_AS(index_of(an, 0, c.S, c.B, Side::Plain), Error);
}

TEST_CASE("rows of non-special classes sum to d")
{
    Graph g = load("figure1.eig");
    Analysis an(g, 8);
    for (int n = 0; n <= 8; ++n) {
        const auto& t = an.level(n);
        for (int X = 0; X < t.b(); ++X) {
            if (X == an.chain(n).S)
                continue;
            int sum = 0;
            for (int Y = 0; Y < t.b(); ++Y)
                sum += index_of(an, n, X, Y);
            CHECK(sum == 3);
        }
    }
}

TEST_CASE("G^A_0, G^B_0, G^B_1 and level -1")
{
    Graph g = load("figure1.eig");
    Analysis an(g, 4);

    IndexedBallGraph a0 = build_indexed(an, 0, 'A');
    CHECK(graphs_isomorphic(a0.g, two_vertex('a', 2, 1, 2, 'b', 1)).isomorphic);
    IndexedBallGraph b0 = build_indexed(an, 0, 'B');
    CHECK(graphs_isomorphic(b0.g, two_vertex('a', 1, 2, 2, 'b', 1)).isomorphic);
    CHECK_FALSE(graphs_isomorphic(a0.g, b0.g).isomorphic);
    CHECK(a0.S == an.chain(0).S);
    CHECK(a0.C == an.chain(0).C);

    IndexedBallGraph b1 = build_indexed(an, 1, 'B');
    REQUIRE(b1.g.vertices.size() == 2);
    CHECK(b1.has(an.chain(1).S));
    CHECK(b1.has(an.chain(1).B));
    auto any = [](int, int) { return true; };
    CHECK(graphs_isomorphic(b1.g, b0.g, any).isomorphic);
    const Edge& e = b1.g.edges.at(0);
    CHECK(e.fwd == 2);
    CHECK(e.rev == 2);
    for (const Vertex& v : b1.g.vertices)
        CHECK(v.loop == 1);

    IndexedBallGraph m1 = build_indexed(an, -1, 'A');
    REQUIRE(m1.g.vertices.size() == 1);
    CHECK(m1.g.vertices[0].loop == 3);
    CHECK(m1.g.edges.empty());
}

TEST_CASE("G^A_1 is G^A_0 joined with G^B_0")
{
    Graph g = load("figure1.eig");
    Analysis an(g, 4);
    Graph expect;
    expect.degree = 3;
    expect.vertices = {Vertex{0, 'a', 2}, Vertex{1, 'b', 1}, Vertex{2, 'a', 1}};
    expect.edges = {Edge{0, 1, 1, 1}, Edge{1, 2, 1, 2}};
    IndexedBallGraph a1 = build_indexed(an, 1, 'A');
    CHECK(graphs_isomorphic(a1.g, expect, [](int, int) { return true; }).isomorphic);
}

TEST_CASE("indexed graphs validate and cover every class")
{
    for (const char* f : {"figure1.eig", "fibonacci_d6.eig"}) {
        Graph g = load(f);
        Analysis an(g, 8);
        for (int n = 0; n <= 8; ++n) {
            INFO(f << " n=" << n);
            IndexedBallGraph ga = build_indexed(an, n, 'A'), gb = build_indexed(an, n, 'B');
            CHECK(validate_graph(ga.g).ok());
            CHECK(validate_graph(gb.g).ok());
            CHECK(ga.C >= 0);
            CHECK(gb.C >= 0);
            for (int X = 0; X < an.level(n).b(); ++X)
                CHECK((ga.has(X) || gb.has(X)));
        }
    }
}

TEST_CASE("cycle detection")
{
    BallGraph path;
    path.size = 3;
    path.edges = {{0, 0}, {0, 1}, {1, 2}, {2, 2}};
    CHECK_FALSE(detect_cycle(path));

    BallGraph loop;
    loop.size = 1;
    loop.edges = {{0, 0}};
    CHECK_FALSE(detect_cycle(loop));

    BallGraph tri;
    tri.size = 4;
    tri.edges = {{0, 1}, {1, 2}, {0, 2}, {2, 3}};
    auto c = detect_cycle(tri);
    REQUIRE(c);
    CHECK(std::set<int>(c->begin(), c->end()) == std::set<int>{0, 1, 2});

    Graph g = load("cyclic1.eig");
    Analysis an(g, 4);
    auto found = detect_cycle(build_Gn(an, 1));
    REQUIRE(found);
    CHECK(found->size() == 3);
    CHECK_FALSE(detect_cycle(build_Gn(an, 0)));
}

TEST_CASE("lemma checks on the corpus")
{
    for (const char* f : {"figure1.eig", "fibonacci_d6.eig"}) {
        Graph g = load(f);
        Analysis an(g, 10);
        for (int n = 0; n <= 10; ++n) {
            LemmaReport r = check_lemmas(an, n, true);
            INFO(f << " n=" << n << " " << (r.ok() ? "" : r.failures.front()));
            CHECK(r.ok());
            CHECK(r.checks > 0);
        }
    }
    for (const char* f : {"cyclic1.eig", "cyclic2.eig"}) {
        Graph g = load(f);
        Analysis an(g, 6);
        for (int n = 0; n <= 6; ++n) {
            LemmaReport r = check_lemmas(an, n, false);
            INFO(f << " n=" << n << " " << (r.ok() ? "" : r.failures.front()));
            CHECK(r.ok());
        }
    }
}

TEST_CASE("DOT view of G_n")
{
    Graph g = load("figure1.eig");
    Analysis an(g, 4);
    Graph view = ball_graph_as_eig(an, build_Gn(an, 2));
    CHECK(view.vertices.size() == 4);
    CHECK(view.edges.size() == 3);
    CHECK(to_dot(view, "G2").find("graph G2 {") == 0);
}

} // TEST_SUITE
