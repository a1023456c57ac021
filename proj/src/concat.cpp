#include "sturmian/concat.hpp"

namespace sturmian {

EndInfo end_info(const Graph& g, VertexId v)
{
    EndInfo e;
    e.loop = g.vertex(v).loop;
    for (const Edge& ed : g.edges) {
        if (ed.u == v) {
            e.m = ed.fwd;
            ++e.edges;
        } else if (ed.v == v) {
            e.m = ed.rev;
            ++e.edges;
        }
    }
    return e;
}

namespace {

void check_degrees(const Graph& g1, const Graph& g2)
{
    if (g1.degree != g2.degree)
        throw Error(Errc::EndMismatch, "degrees " + std::to_string(g1.degree) + " and " + std::to_string(g2.degree));
}

void check_end(const EndInfo& e, VertexId v)
{
    if (e.edges > 1)
        throw Error(Errc::InvalidArgument, "vertex " + std::to_string(v) + " is not an end", v);
}

/* Copies g1 then g2 into a fresh graph; `skip` is a g2 index merged into
   `onto` (a g1 index), or -1. */
Graph disjoint(const Graph& g1, const Graph& g2, int skip, int onto, ConcatMap& m)
{
    Graph r;
    r.degree = g1.degree;
    m.left.assign(g1.vertices.size(), -1);
    m.right.assign(g2.vertices.size(), -1);
    for (std::size_t k = 0; k < g1.vertices.size(); ++k) {
        Vertex v = g1.vertices[k];
        v.id = static_cast<VertexId>(r.vertices.size());
        m.left[k] = static_cast<int>(r.vertices.size());
        r.vertices.push_back(v);
    }
    for (std::size_t k = 0; k < g2.vertices.size(); ++k) {
        if (static_cast<int>(k) == skip) {
            m.right[k] = m.left[onto];
            continue;
        }
        Vertex v = g2.vertices[k];
        v.id = static_cast<VertexId>(r.vertices.size());
        m.right[k] = static_cast<int>(r.vertices.size());
        r.vertices.push_back(v);
    }
    for (const Edge& e : g1.edges)
        r.edges.push_back(Edge{m.left[g1.index_of(e.u)], m.left[g1.index_of(e.v)], e.fwd, e.rev});
    for (const Edge& e : g2.edges)
        r.edges.push_back(Edge{m.right[g2.index_of(e.u)], m.right[g2.index_of(e.v)], e.fwd, e.rev});
    return r;
}

} // namespace

Graph concat_i(const Graph& g1, VertexId V, const Graph& g2, VertexId Vp, int i, ConcatMap* map)
{
    check_degrees(g1, g2);
    EndInfo e1 = end_info(g1, V), e2 = end_info(g2, Vp);
    check_end(e1, V);
    check_end(e2, Vp);
    if (e1.m != e2.m)
        throw Error(Errc::EndMismatch, "edge indices m1=" + std::to_string(e1.m) + " m2=" + std::to_string(e2.m));
    if (e1.loop != e2.loop)
        throw Error(Errc::EndMismatch, "loops l1=" + std::to_string(e1.loop) + " l2=" + std::to_string(e2.loop));
    if (g1.vertex(V).color != g2.vertex(Vp).color)
        throw Error(Errc::EndMismatch, "end colours differ");
    const int m = e1.m;
    if (i < 1 || i >= m)
        throw Error(Errc::IndexOutOfRange, "i=" + std::to_string(i) + " outside [1, " + std::to_string(m) + ")");
    ConcatMap local;
    ConcatMap& cm = map ? *map : local;
    int iv = g1.index_of(V), ivp = g2.index_of(Vp);
    Graph r = disjoint(g1, g2, ivp, iv, cm);
    VertexId joint = cm.left[iv];
    for (std::size_t k = 0; k < r.edges.size(); ++k) {
        Edge& e = r.edges[k];
        int side_index = k < g1.edges.size() ? i : m - i;
        if (e.u == joint)
            e.fwd = side_index;
        else if (e.v == joint)
            e.rev = side_index;
    }
    return r;
}

Graph concat_ij(const Graph& g1, VertexId V, const Graph& g2, VertexId Vp, int i, int j, ConcatMap* map)
{
    check_degrees(g1, g2);
    EndInfo e1 = end_info(g1, V), e2 = end_info(g2, Vp);
    check_end(e1, V);
    check_end(e2, Vp);
    if (i < 1 || i > e1.loop)
        throw Error(Errc::IndexOutOfRange, "i=" + std::to_string(i) + " outside [1, " + std::to_string(e1.loop) + "]");
    if (j < 1 || j > e2.loop)
        throw Error(Errc::IndexOutOfRange, "j=" + std::to_string(j) + " outside [1, " + std::to_string(e2.loop) + "]");
    ConcatMap local;
    ConcatMap& cm = map ? *map : local;
    int iv = g1.index_of(V), ivp = g2.index_of(Vp);
    Graph r = disjoint(g1, g2, -1, -1, cm);
    r.vertices[cm.left[iv]].loop -= i;
    r.vertices[cm.right[ivp]].loop -= j;
    r.edges.push_back(Edge{cm.left[iv], cm.right[ivp], i, j});
    return r;
}

} // namespace sturmian
