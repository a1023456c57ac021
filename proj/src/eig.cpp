#include "sturmian/eig.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace sturmian {

int Graph::index_of(VertexId id) const
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id)
            return static_cast<int>(i);
    return -1;
}

const Vertex& Graph::vertex(VertexId id) const
{
    int i = index_of(id);
    if (i < 0)
        throw Error(Errc::UnknownVertex, "vertex " + std::to_string(id), id);
    return vertices[i];
}

Vertex& Graph::vertex(VertexId id)
{
    int i = index_of(id);
    if (i < 0)
        throw Error(Errc::UnknownVertex, "vertex " + std::to_string(id), id);
    return vertices[i];
}

bool operator==(const Vertex& a, const Vertex& b)
{
    return a.id == b.id && a.color == b.color && a.loop == b.loop;
}

bool operator==(const Edge& a, const Edge& b)
{
    return a.u == b.u && a.v == b.v && a.fwd == b.fwd && a.rev == b.rev;
}

bool operator==(const Graph& a, const Graph& b)
{
    return a.degree == b.degree && a.vertices == b.vertices && a.edges == b.edges &&
           a.trunc_left == b.trunc_left && a.trunc_right == b.trunc_right && a.marks == b.marks;
}

Adjacency::Adjacency(const Graph& g) : out(g.vertices.size())
{
    std::unordered_map<VertexId, int> idx;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        idx[g.vertices[i].id] = static_cast<int>(i);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& ed = g.edges[e];
        auto iu = idx.find(ed.u), iv = idx.find(ed.v);
        if (iu == idx.end() || iv == idx.end())
            throw Error(Errc::UnknownVertexInEdge, "edge " + std::to_string(e));
        int u = iu->second, v = iv->second;
        int pu = static_cast<int>(out[u].size());
        int pv = static_cast<int>(out[v].size());
        out[u].push_back(Arc{v, ed.fwd, ed.rev, static_cast<int>(e), pv});
        out[v].push_back(Arc{u, ed.rev, ed.fwd, static_cast<int>(e), pu});
    }
}

std::optional<std::vector<int>> linear_order(const Graph& g)
{
    const int n = static_cast<int>(g.vertices.size());
    if (n == 0)
        return std::vector<int>{};
    if (static_cast<int>(g.edges.size()) != n - 1)
        return std::nullopt;
    Adjacency adj(g);
    std::vector<int> ends;
    for (int i = 0; i < n; ++i) {
        int deg = static_cast<int>(adj.out[i].size());
        if (deg > 2)
            return std::nullopt;
        if (deg <= 1)
            ends.push_back(i);
    }
    if (n == 1)
        return std::vector<int>{0};
    if (ends.size() != 2)
        return std::nullopt;
    std::vector<int> order{ends[0]};
    int prev = -1, cur = ends[0];
    while (true) {
        int next = -1;
        for (const Arc& a : adj.out[cur])
            if (a.to != prev) {
                next = a.to;
                break;
            }
        if (next < 0)
            break;
        prev = cur;
        cur = next;
        order.push_back(cur);
        if (static_cast<int>(order.size()) > n)
            return std::nullopt;
    }
    if (static_cast<int>(order.size()) != n)
        return std::nullopt;
    return order;
}

std::vector<int> truncated_vertices(const Graph& g)
{
    std::vector<int> out;
    if (!g.truncated())
        return out;
    auto ord = linear_order(g);
    if (!ord || ord->empty())
        return out;
    if (g.trunc_left)
        out.push_back(ord->front());
    if (g.trunc_right && (out.empty() || out.back() != ord->back()))
        out.push_back(ord->back());
    return out;
}

Graph linearized(const Graph& g, bool reverse, std::vector<int>* old_to_new)
{
    auto ord = linear_order(g);
    if (!ord)
        throw Error(Errc::InvalidArgument, "graph is not a path");
    std::vector<int> order = *ord;
    if (reverse)
        std::reverse(order.begin(), order.end());
    std::vector<int> pos(g.vertices.size());
    for (std::size_t k = 0; k < order.size(); ++k)
        pos[order[k]] = static_cast<int>(k);
    Graph r;
    r.degree = g.degree;
    r.trunc_left = reverse ? g.trunc_right : g.trunc_left;
    r.trunc_right = reverse ? g.trunc_left : g.trunc_right;
    for (std::size_t k = 0; k < order.size(); ++k) {
        Vertex v = g.vertices[order[k]];
        v.id = static_cast<VertexId>(k);
        r.vertices.push_back(v);
    }
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        // find the edge between order[k] and order[k+1]
        for (const Edge& e : g.edges) {
            int iu = g.index_of(e.u), iv = g.index_of(e.v);
            if (iu == order[k] && iv == order[k + 1]) {
                r.edges.push_back(Edge{(VertexId)k, (VertexId)k + 1, e.fwd, e.rev});
                break;
            }
            if (iv == order[k] && iu == order[k + 1]) {
                r.edges.push_back(Edge{(VertexId)k, (VertexId)k + 1, e.rev, e.fwd});
                break;
            }
        }
    }
    for (const auto& [name, id] : g.marks) {
        int i = g.index_of(id);
        if (i >= 0)
            r.marks[name] = pos[i];
    }
    if (old_to_new)
        *old_to_new = pos;
    return r;
}

std::string ValidationReport::to_string() const
{
    std::ostringstream os;
    for (const Violation& v : violations) {
        os << v.kind;
        if (v.vertex >= 0 || v.kind != "ZeroIndexEdge")
            os << " vertex " << v.vertex;
        if (v.edge >= 0)
            os << " edge " << v.edge;
        if (v.kind == "DegreeMismatch")
            os << " expected " << v.expected << " actual " << v.actual;
        os << '\n';
    }
    return os.str();
}

ValidationReport validate_graph(const Graph& g)
{
    ValidationReport rep;
    std::vector<int> sum(g.vertices.size(), 0);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const Vertex& v = g.vertices[i];
        if (v.color != 'a' && v.color != 'b')
            rep.violations.push_back({"BadColor", v.id, -1, 0, 0});
        sum[i] += v.loop;
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const Edge& ed = g.edges[e];
        int iu = g.index_of(ed.u), iv = g.index_of(ed.v);
        if (ed.fwd < 1 || ed.rev < 1)
            rep.violations.push_back({"ZeroIndexEdge", -1, static_cast<int>(e), 1, std::min(ed.fwd, ed.rev)});
        if (iu >= 0)
            sum[iu] += ed.fwd;
        if (iv >= 0)
            sum[iv] += ed.rev;
    }
    std::set<int> skip;
    if (g.truncated()) {
        if (!linear_order(g))
            rep.violations.push_back({"NotLinear", -1, -1, 0, 0});
        for (int t : truncated_vertices(g))
            skip.insert(t);
    }
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (skip.count(static_cast<int>(i)))
            continue;
        if (sum[i] != g.degree)
            rep.violations.push_back({"DegreeMismatch", g.vertices[i].id, -1, g.degree, sum[i]});
    }
    return rep;
}

namespace {

struct EdgeKey {
    // canonical multiset of (index out of the smaller vertex, index back)
    std::multiset<std::pair<int, int>> labels;
};

/* Per vertex: colour-free local signature used to prune candidates. */
std::vector<std::pair<int, std::vector<std::pair<int, int>>>> signatures(const Graph& g, const Adjacency& adj)
{
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        sig[i].first = g.vertices[i].loop;
        for (const Arc& a : adj.out[i])
            sig[i].second.push_back({a.index, a.back});
        std::sort(sig[i].second.begin(), sig[i].second.end());
    }
    return sig;
}

/* Labels of arcs from a to b, sorted. */
std::vector<std::pair<int, int>> arcs_between(const Adjacency& adj, int a, int b)
{
    std::vector<std::pair<int, int>> r;
    for (const Arc& x : adj.out[a])
        if (x.to == b)
            r.push_back({x.index, x.back});
    std::sort(r.begin(), r.end());
    return r;
}

} // namespace

IsoResult graphs_isomorphic(const Graph& g1, const Graph& g2, const VertexMatch& match)
{
    IsoResult res;
    const int n = static_cast<int>(g1.vertices.size());
    if (n != static_cast<int>(g2.vertices.size()) || g1.edges.size() != g2.edges.size())
        return res;
    Adjacency a1(g1), a2(g2);
    auto s1 = signatures(g1, a1), s2 = signatures(g2, a2);
    auto compatible = [&](int x, int y) {
        if (s1[x] != s2[y])
            return false;
        if (match)
            return match(x, y);
        return g1.vertices[x].color == g2.vertices[y].color;
    };

    // order g1's vertices so that each one after the first (per component)
    // has an already placed neighbour
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<int> queue{s};
        seen[s] = 1;
        for (std::size_t q = 0; q < queue.size(); ++q) {
            int x = queue[q];
            order.push_back(x);
            for (const Arc& a : a1.out[x])
                if (!seen[a.to]) {
                    seen[a.to] = 1;
                    queue.push_back(a.to);
                }
        }
    }

    std::vector<int> map(n, -1), used(n, 0);
    std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
        if (k == order.size())
            return true;
        int x = order[k];
        for (int y = 0; y < n; ++y) {
            if (used[y] || !compatible(x, y))
                continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                int px = order[j];
                if (arcs_between(a1, x, px) != arcs_between(a2, y, map[px]))
                    ok = false;
            }
            if (!ok)
                continue;
            map[x] = y;
            used[y] = 1;
            if (place(k + 1))
                return true;
            used[y] = 0;
            map[x] = -1;
        }
        return false;
    };
    if (place(0)) {
        res.isomorphic = true;
        res.map = map;
    }
    return res;
}

namespace {

std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream is(line);
    std::vector<std::string> t;
    std::string w;
    while (is >> w)
        t.push_back(w);
    return t;
}

long long parse_int(const std::string& s, int line)
{
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size())
            throw Error(Errc::SyntaxError, "line " + std::to_string(line) + ": bad integer '" + s + "'", line);
        return v;
    } catch (const Error&) {
        throw;
    } catch (...) {
        throw Error(Errc::SyntaxError, "line " + std::to_string(line) + ": bad integer '" + s + "'", line);
    }
}

} // namespace

Graph parse_eig(const std::string& text)
{
    Graph g;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool have_degree = false;
    std::set<VertexId> ids;
    auto fail = [&](const std::string& why) {
        throw Error(Errc::SyntaxError, "line " + std::to_string(lineno) + ": " + why, lineno);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        auto t = tokens(line);
        if (t.empty())
            continue;
        if (!have_degree && t[0] != "degree")
            fail("'degree' must come first");
        if (t[0] == "degree") {
            if (have_degree || t.size() != 2)
                fail("malformed degree statement");
            long long d = parse_int(t[1], lineno);
            if (d < 1)
                fail("degree must be positive");
            g.degree = static_cast<int>(d);
            have_degree = true;
        } else if (t[0] == "truncated") {
            if (t.size() < 2 || t.size() > 3)
                fail("malformed truncated statement");
            for (std::size_t k = 1; k < t.size(); ++k) {
                if (t[k] == "left")
                    g.trunc_left = true;
                else if (t[k] == "right")
                    g.trunc_right = true;
                else
                    fail("unknown end '" + t[k] + "'");
            }
        } else if (t[0] == "v") {
            if (t.size() < 3 || t.size() > 4)
                fail("malformed vertex statement");
            Vertex v;
            v.id = parse_int(t[1], lineno);
            if (t[2].size() != 1)
                fail("colour must be a single letter");
            v.color = t[2][0];
            if (t.size() == 4) {
                if (t[3].rfind("loop=", 0) != 0)
                    fail("expected loop=<n>");
                long long l = parse_int(t[3].substr(5), lineno);
                if (l < 0)
                    fail("negative loop index");
                v.loop = static_cast<int>(l);
            }
            if (!ids.insert(v.id).second)
                throw Error(Errc::DuplicateVertex, "line " + std::to_string(lineno) + ": vertex " + t[1], lineno);
            g.vertices.push_back(v);
        } else if (t[0] == "e") {
            if (t.size() != 5)
                fail("malformed edge statement");
            Edge e;
            e.u = parse_int(t[1], lineno);
            e.v = parse_int(t[2], lineno);
            e.fwd = static_cast<int>(parse_int(t[3], lineno));
            e.rev = static_cast<int>(parse_int(t[4], lineno));
            if (e.u == e.v)
                fail("self edge; use loop=<n> on the vertex");
            if (e.fwd < 0 || e.rev < 0)
                fail("negative edge index");
            if (!ids.count(e.u) || !ids.count(e.v))
                throw Error(Errc::UnknownVertexInEdge, "line " + std::to_string(lineno), lineno);
            g.edges.push_back(e);
        } else if (t[0] == "mark") {
            if (t.size() != 3)
                fail("malformed mark statement");
            VertexId id = parse_int(t[2], lineno);
            if (!ids.count(id))
                throw Error(Errc::UnknownVertex, "line " + std::to_string(lineno), lineno);
            g.marks[t[1]] = id;
        } else {
            fail("unknown statement '" + t[0] + "'");
        }
    }
    if (!have_degree)
        throw Error(Errc::SyntaxError, "missing degree statement", lineno);
    return g;
}

std::string serialize_eig(const Graph& g)
{
    std::ostringstream os;
    os << "degree " << g.degree << '\n';
    if (g.trunc_left && g.trunc_right)
        os << "truncated left right\n";
    else if (g.trunc_left)
        os << "truncated left\n";
    else if (g.trunc_right)
        os << "truncated right\n";
    for (const Vertex& v : g.vertices) {
        os << "v " << v.id << ' ' << v.color;
        if (v.loop > 0)
            os << " loop=" << v.loop;
        os << '\n';
    }
    for (const Edge& e : g.edges)
        os << "e " << e.u << ' ' << e.v << ' ' << e.fwd << ' ' << e.rev << '\n';
    for (const auto& [name, id] : g.marks)
        os << "mark " << name << ' ' << id << '\n';
    return os.str();
}

std::string to_dot(const Graph& g, const std::string& name)
{
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (const Vertex& v : g.vertices) {
        os << "  v" << v.id << " [label=\"" << v.id << "\", style=filled, ";
        if (v.color == 'b')
            os << "fillcolor=black, fontcolor=white";
        else if (v.color == 'a')
            os << "fillcolor=white";
        else
            os << "fillcolor=gray";
        os << "];\n";
    }
    for (const Vertex& v : g.vertices)
        if (v.loop > 0)
            os << "  v" << v.id << " -- v" << v.id << " [label=\"" << v.loop << "\"];\n";
    for (const Edge& e : g.edges)
        os << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.fwd << '/' << e.rev << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw Error(Errc::InvalidArgument, "cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Graph read_eig_file(const std::string& path)
{
    return parse_eig(read_file(path));
}

void write_file_atomic(const std::string& path, const std::string& content)
{
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw Error(Errc::InvalidArgument, "cannot write " + tmp);
        f << content;
        if (!f)
            throw Error(Errc::InvalidArgument, "write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw Error(Errc::InvalidArgument, "cannot rename onto " + path);
    }
}

} // namespace sturmian
