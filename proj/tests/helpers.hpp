#ifndef STURMIAN_TEST_HELPERS_HPP
#define STURMIAN_TEST_HELPERS_HPP

#include <algorithm>
#include <random>
#include <string>

#include "sturmian/eig.hpp"

namespace testing_support {

inline std::string data_path(const std::string& name)
{
    return std::string(STREE_DATA_DIR) + "/" + name;
}

inline sturmian::Graph load(const std::string& name)
{
    return sturmian::read_eig_file(data_path(name));
}

/* Connected, untruncated, valid graph: random spanning tree plus a few
   extra edges, each vertex's leftover degree going to its loop. */
inline sturmian::Graph random_valid_graph(std::mt19937& rng, int max_vertices = 5)
{
    using namespace sturmian;
    std::uniform_int_distribution<int> dn(1, max_vertices), dd(2, 4), coin(0, 1);
    Graph g;
    g.degree = dd(rng);
    const int n = dn(rng);
    std::vector<int> budget(n, g.degree);
    for (int v = 0; v < n; ++v)
        g.vertices.push_back(Vertex{v, coin(rng) ? 'a' : 'b', 0});
    auto add = [&](int u, int v) {
        std::uniform_int_distribution<int> fu(1, budget[u]), fv(1, budget[v]);
        int a = fu(rng), b = fv(rng);
        budget[u] -= a;
        budget[v] -= b;
        g.edges.push_back(Edge{u, v, a, b});
    };
    for (int v = 1; v < n; ++v) {
        std::vector<int> cand;
        for (int u = 0; u < v; ++u)
            if (budget[u] > 0)
                cand.push_back(u);
        if (cand.empty())
            break;
        int u = cand[std::uniform_int_distribution<int>(0, static_cast<int>(cand.size()) - 1)(rng)];
        add(u, v);
    }
    g.vertices.resize(g.edges.size() + 1);   // drop vertices that could not be attached
    for (int tries = 0; tries < 2; ++tries) {
        int u = std::uniform_int_distribution<int>(0, static_cast<int>(g.vertices.size()) - 1)(rng);
        int v = std::uniform_int_distribution<int>(0, static_cast<int>(g.vertices.size()) - 1)(rng);
        if (u == v || budget[u] == 0 || budget[v] == 0)
            continue;
        bool dup = false;
        for (const Edge& e : g.edges)
            dup |= (e.u == u && e.v == v) || (e.u == v && e.v == u);
        if (!dup)
            add(u, v);
    }
    for (auto& v : g.vertices)
        v.loop = budget[static_cast<std::size_t>(v.id)];
    return g;
}

/* Same graph with vertices and edges listed in a shuffled order and ids
   relabelled by a random permutation. */
inline sturmian::Graph relabelled(const sturmian::Graph& g, std::mt19937& rng)
{
    using namespace sturmian;
    std::vector<VertexId> perm(g.vertices.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        perm[i] = static_cast<VertexId>(i) + 100;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = g;
    h.marks.clear();
    for (std::size_t i = 0; i < h.vertices.size(); ++i)
        h.vertices[i].id = perm[static_cast<std::size_t>(g.index_of(g.vertices[i].id))];
    for (Edge& e : h.edges) {
        e.u = perm[static_cast<std::size_t>(g.index_of(e.u))];
        e.v = perm[static_cast<std::size_t>(g.index_of(e.v))];
        if (rng() % 2) {
            std::swap(e.u, e.v);
            std::swap(e.fwd, e.rev);
        }
    }
    std::shuffle(h.vertices.begin(), h.vertices.end(), rng);
    std::shuffle(h.edges.begin(), h.edges.end(), rng);
    return h;
}

} // namespace testing_support

#endif
