#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "sturmian/eig.hpp"

using namespace sturmian;
using testing_support::load;
using testing_support::random_valid_graph;
using testing_support::relabelled;

namespace {

Graph two_vertex(int fwd, int rev, int loop_a, int loop_b, int degree = 3)
{
    Graph g;
    g.degree = degree;
    g.vertices = {Vertex{0, 'a', loop_a}, Vertex{1, 'b', loop_b}};
    g.edges = {Edge{0, 1, fwd, rev}};
    return g;
}

/* Checks a witness map edge by edge, independent of the search. */
bool witness_ok(const Graph& g1, const Graph& g2, const std::vector<int>& map)
{
    if (map.size() != g1.vertices.size())
        return false;
    for (std::size_t i = 0; i < map.size(); ++i) {
        const Vertex& a = g1.vertices[i];
        const Vertex& b = g2.vertices[static_cast<std::size_t>(map[i])];
        if (a.color != b.color || a.loop != b.loop)
            return false;
    }
    std::multiset<std::tuple<VertexId, VertexId, int, int>> target;
    for (const Edge& e : g2.edges) {
        target.insert({e.u, e.v, e.fwd, e.rev});
    }
    for (const Edge& e : g1.edges) {
        VertexId u = g2.vertices[static_cast<std::size_t>(map[static_cast<std::size_t>(g1.index_of(e.u))])].id;
        VertexId v = g2.vertices[static_cast<std::size_t>(map[static_cast<std::size_t>(g1.index_of(e.v))])].id;
        auto it = target.find({u, v, e.fwd, e.rev});
        if (it == target.end())
            it = target.find({v, u, e.rev, e.fwd});
        if (it == target.end())
            return false;
        target.erase(it);
    }
    return target.empty();
}

} // namespace

TEST_SUITE("eig") {

TEST_CASE("validate: one vertex with loop d")
{
    Graph g = parse_eig("degree 3\nv 0 a loop=3\n");
    CHECK(validate_graph(g).ok());
    CHECK(g.vertices.size() == 1);
    CHECK(g.vertices[0].loop == 3);
}

TEST_CASE("validate: shipped corpus")
{
    for (const char* f : {"figure1.eig", "fibonacci_d6.eig", "cyclic1.eig", "cyclic2.eig", "monochrome.eig"}) {
        INFO(f);
        CHECK(validate_graph(load(f)).ok());
    }
}

TEST_CASE("validate: a-1/1-b at degree 3 fails on both vertices")
{
    Graph g = two_vertex(1, 1, 0, 0);
    auto rep = validate_graph(g);
    REQUIRE(rep.violations.size() == 2);
    for (const auto& v : rep.violations) {
        CHECK(v.kind == "DegreeMismatch");
        CHECK(v.expected == 3);
        CHECK(v.actual == 1);
    }
}

TEST_CASE("validate: zero index and bad colour")
{
    Graph g = two_vertex(0, 3, 3, 0);
    g.vertices[1].color = 'c';
    auto rep = validate_graph(g);
    bool zero = false, colour = false;
    for (const auto& v : rep.violations) {
        zero |= v.kind == "ZeroIndexEdge";
        colour |= v.kind == "BadColor";
    }
    CHECK(zero);
    CHECK(colour);
}

TEST_CASE("validate: truncated end is exempt")
{
    Graph g = parse_eig("degree 3\ntruncated right\nv 0 a loop=1\nv 1 b\ne 0 1 2 1\n");
    CHECK(validate_graph(g).ok());
    g.trunc_right = false;
    CHECK_FALSE(validate_graph(g).ok());
}

TEST_CASE("degree sum over untruncated valid graphs")
{
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        Graph g = random_valid_graph(rng);
        REQUIRE(validate_graph(g).ok());
        long long total = 0;
        for (const Vertex& v : g.vertices)
            total += v.loop;
        for (const Edge& e : g.edges)
            total += e.fwd + e.rev;
        CHECK(total == static_cast<long long>(g.vertices.size()) * g.degree);
    }
}

TEST_CASE("isomorphism: identity and reversed vertex list")
{
    Graph g = two_vertex(1, 2, 2, 1);
    auto self = graphs_isomorphic(g, g);
    REQUIRE(self.isomorphic);
    CHECK(self.map == std::vector<int>{0, 1});

    Graph r;
    r.degree = 3;
    r.vertices = {Vertex{7, 'b', 1}, Vertex{4, 'a', 2}};
    r.edges = {Edge{7, 4, 2, 1}};
    auto iso = graphs_isomorphic(g, r);
    REQUIRE(iso.isomorphic);
    CHECK(witness_ok(g, r, iso.map));
}

TEST_CASE("isomorphism: G^A_0 and G^B_0 of the worked example differ")
{
    Graph ga = two_vertex(1, 2, 2, 1);
    Graph gb = two_vertex(2, 2, 1, 1);
    CHECK(validate_graph(ga).ok());
    CHECK(validate_graph(gb).ok());
    CHECK_FALSE(graphs_isomorphic(ga, gb).isomorphic);
}

TEST_CASE("isomorphism: colours and custom match")
{
    Graph g = two_vertex(1, 2, 2, 1);
    Graph h = g;
    h.vertices[0].color = 'b';
    CHECK_FALSE(graphs_isomorphic(g, h).isomorphic);
    CHECK(graphs_isomorphic(g, h, [](int, int) { return true; }).isomorphic);
}

TEST_CASE("isomorphism is an equivalence on random graphs")
{
    std::mt19937 rng(5);
    for (int t = 0; t < 150; ++t) {
        Graph g = random_valid_graph(rng);
        Graph h1 = relabelled(g, rng), h2 = relabelled(g, rng);
        auto a = graphs_isomorphic(g, h1);
        REQUIRE(a.isomorphic);
        CHECK(witness_ok(g, h1, a.map));
        CHECK(graphs_isomorphic(h1, g).isomorphic);
        CHECK(graphs_isomorphic(h1, h2).isomorphic);

        Graph other = random_valid_graph(rng);
        bool fwd = graphs_isomorphic(g, other).isomorphic;
        CHECK(fwd == graphs_isomorphic(other, g).isomorphic);
        if (fwd)
            CHECK(witness_ok(g, other, graphs_isomorphic(g, other).map));
    }
}

TEST_CASE("isomorphism detects a changed index")
{
    std::mt19937 rng(9);
    int tested = 0;
    for (int t = 0; t < 100; ++t) {
        Graph g = random_valid_graph(rng);
        if (g.edges.empty())
            continue;
        Graph h = relabelled(g, rng);
        h.edges[0].fwd += 1;
        CHECK_FALSE(graphs_isomorphic(g, h).isomorphic);
        ++tested;
    }
    CHECK(tested > 20);
}

TEST_CASE("parse and serialize")
{
    Graph g = parse_eig("# comment\ndegree 3\ntruncated right\nv 0 b loop=1\nv 1 a   # trailing\ne 0 1 2 2\nmark S 1\n");
    CHECK(g.degree == 3);
    CHECK(g.trunc_right);
    CHECK_FALSE(g.trunc_left);
    CHECK(g.marks.at("S") == 1);
    CHECK(parse_eig(serialize_eig(g)) == g);

    Graph fig = load("figure1.eig");
    CHECK(parse_eig(serialize_eig(fig)) == fig);

    std::mt19937 rng(3);
    for (int t = 0; t < 100; ++t) {
        Graph r = relabelled(random_valid_graph(rng), rng);
        CHECK(parse_eig(serialize_eig(r)) == r);
    }
}

TEST_CASE("parse errors")
{
    auto code = [](const std::string& text) {
        try {
            parse_eig(text);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::InvalidArgument;
    };
    CHECK(code("degree 3\nv 0 a\nv 1 b\ne 0 9 1 1\n") == Errc::UnknownVertexInEdge);
    CHECK(code("v 0 a\n") == Errc::SyntaxError);
    CHECK(code("degree 3\nv 0 a\nv 0 b\n") == Errc::DuplicateVertex);
    CHECK(code("degree 3\nv 1 a\ne 1 1 1 1\n") == Errc::SyntaxError);
    CHECK(code("degree 3\nv 0 a\nmark S 4\n") == Errc::UnknownVertex);
    CHECK(code("degree 3\nv 0 a loop=x\n") == Errc::SyntaxError);
    CHECK(code("") == Errc::SyntaxError);
}

TEST_CASE("linear order")
{
    Graph g = parse_eig("degree 3\nv 5 a\nv 2 b\nv 9 a\ne 2 9 1 1\ne 5 2 1 1\n");
    auto ord = linear_order(g);
    REQUIRE(ord);
    std::vector<VertexId> ids;
    for (int i : *ord)
        ids.push_back(g.vertices[static_cast<std::size_t>(i)].id);
    CHECK(ids == std::vector<VertexId>{5, 2, 9});

    Graph tri = parse_eig("degree 3\nv 0 a\nv 1 a\nv 2 a\ne 0 1 1 1\ne 1 2 1 1\ne 2 0 1 1\n");
    CHECK_FALSE(linear_order(tri));
}

TEST_CASE("to_dot")
{
    Graph one = parse_eig("degree 3\nv 0 a loop=3\n");
    std::string d = to_dot(one);
    CHECK(d.find("graph G {") == 0);
    CHECK(d.find("v0 -- v0 [label=\"3\"]") != std::string::npos);

    Graph gb = two_vertex(2, 2, 1, 1);
    std::string db = to_dot(gb, "GB0");
    CHECK(db.find("graph GB0 {") == 0);
    CHECK(db.find("v0 -- v1 [label=\"2/2\"]") != std::string::npos);
    CHECK(db.find("v0 -- v0 [label=\"1\"]") != std::string::npos);
    CHECK(db.find("v1 -- v1 [label=\"1\"]") != std::string::npos);

    Graph empty;
    CHECK(to_dot(empty) == "graph G {\n}\n");
}

} // TEST_SUITE
