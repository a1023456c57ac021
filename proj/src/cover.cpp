#include "sturmian/cover.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <functional>
#include <mutex>
#include <unordered_map>

namespace sturmian {

namespace {

struct NodeKey {
    char color;
    bool cut;
    int depth;
    std::vector<std::pair<FormId, int>> kids;
    bool operator==(const NodeKey& o) const
    {
        return color == o.color && cut == o.cut && depth == o.depth && kids == o.kids;
    }
};

struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const
    {
        std::uint64_t h = 1469598103934665603ULL;
        auto mix = [&](std::uint64_t x) {
            h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        };
        mix(static_cast<unsigned char>(k.color));
        mix(k.cut);
        mix(static_cast<std::uint64_t>(k.depth));
        for (auto [id, m] : k.kids) {
            mix(static_cast<std::uint64_t>(id));
            mix(static_cast<std::uint64_t>(m));
        }
        return static_cast<std::size_t>(h);
    }
};

struct FormStore {
    std::mutex mu;
    std::deque<FormNode> nodes;   // deque: references stay valid on growth
    std::unordered_map<NodeKey, FormId, NodeKeyHash> index;
    std::map<std::pair<FormId, int>, FormId> restrict_memo;
    std::unordered_map<FormId, std::uint64_t> hash_memo;
    std::unordered_map<FormId, long long> length_memo;

    FormStore()
    {
        FormNode empty;
        empty.depth = -1;
        nodes.push_back(empty);
    }
};

FormStore& store()
{
    static FormStore s;
    return s;
}

std::uint64_t splitmix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

const FormNode& form_node(FormId id)
{
    FormStore& s = store();
    std::lock_guard<std::mutex> lock(s.mu);
    return s.nodes.at(static_cast<std::size_t>(id));
}

FormId intern_form(char color, bool cut, int depth, std::vector<std::pair<FormId, int>> kids)
{
    std::sort(kids.begin(), kids.end());
    std::vector<std::pair<FormId, int>> merged;
    for (auto [id, m] : kids) {
        if (m <= 0)
            continue;
        if (!merged.empty() && merged.back().first == id)
            merged.back().second += m;
        else
            merged.push_back({id, m});
    }
    FormStore& s = store();
    std::lock_guard<std::mutex> lock(s.mu);
    NodeKey key{color, cut, depth, merged};
    auto it = s.index.find(key);
    if (it != s.index.end())
        return it->second;
    FormNode n;
    n.color = color;
    n.cut = cut;
    n.depth = depth;
    n.partial = cut;
    for (auto [id, m] : merged)
        n.partial = n.partial || s.nodes[static_cast<std::size_t>(id)].partial;
    n.kids = std::move(merged);
    FormId id = static_cast<FormId>(s.nodes.size());
    s.nodes.push_back(std::move(n));
    s.index.emplace(std::move(key), id);
    return id;
}

FormId restrict_form(FormId id, int m)
{
    const FormNode& n = form_node(id);
    if (m > n.depth)
        throw Error(Errc::RadiusTooLarge, "restrict to " + std::to_string(m) + " from " + std::to_string(n.depth));
    if (m == n.depth)
        return id;
    if (m < 0)
        return kEmptyForm;
    {
        FormStore& s = store();
        std::lock_guard<std::mutex> lock(s.mu);
        auto it = s.restrict_memo.find({id, m});
        if (it != s.restrict_memo.end())
            return it->second;
    }
    std::vector<std::pair<FormId, int>> kids;
    if (m > 0)
        for (auto [k, mult] : n.kids)
            kids.push_back({restrict_form(k, m - 1), mult});
    FormId r = intern_form(n.color, n.cut && m > 0, m, std::move(kids));
    FormStore& s = store();
    std::lock_guard<std::mutex> lock(s.mu);
    s.restrict_memo[{id, m}] = r;
    return r;
}

std::uint64_t form_hash(FormId id)
{
    {
        FormStore& s = store();
        std::lock_guard<std::mutex> lock(s.mu);
        auto it = s.hash_memo.find(id);
        if (it != s.hash_memo.end())
            return it->second;
    }
    const FormNode& n = form_node(id);
    std::vector<std::uint64_t> parts;
    for (auto [k, m] : n.kids) {
        std::uint64_t hk = form_hash(k);
        for (int i = 0; i < m; ++i)
            parts.push_back(hk);
    }
    std::sort(parts.begin(), parts.end());
    std::uint64_t h = splitmix(static_cast<unsigned char>(n.color) * 31ULL + (n.cut ? 7 : 0) +
                               static_cast<std::uint64_t>(n.depth + 1) * 1000003ULL);
    for (std::uint64_t p : parts)
        h = splitmix(h ^ p);
    FormStore& s = store();
    std::lock_guard<std::mutex> lock(s.mu);
    s.hash_memo[id] = h;
    return h;
}

namespace {

std::string node_text(FormId id, bool root, long long limit);

long long node_length(FormId id)
{
    {
        FormStore& s = store();
        std::lock_guard<std::mutex> lock(s.mu);
        auto it = s.length_memo.find(id);
        if (it != s.length_memo.end())
            return it->second;
    }
    const FormNode& n = form_node(id);
    long long len;
    if (n.kids.empty()) {
        len = n.cut ? 2 : 1;
    } else {
        len = 6;   // "(a; {" + "}"
        long long count = 0;
        for (auto [k, m] : n.kids) {
            len += node_length(k) * m;
            count += m;
        }
        len += 2 * (count - 1);
    }
    len = std::min(len, 1LL << 60);
    FormStore& s = store();
    std::lock_guard<std::mutex> lock(s.mu);
    s.length_memo[id] = len;
    return len;
}

std::string digest(FormId id)
{
    const FormNode& n = form_node(id);
    char buf[64];
    std::snprintf(buf, sizeof buf, "<%c r%d %016llx>", n.color, n.depth,
                  static_cast<unsigned long long>(form_hash(id)));
    return buf;
}

std::string node_text(FormId id, bool root, long long limit)
{
    const FormNode& n = form_node(id);
    std::string c(1, n.color);
    if (n.cut)
        c += '?';
    if (n.kids.empty())
        return root ? "(" + c + "; [])" : c;
    if (limit >= 0 && node_length(id) > limit)
        return digest(id);
    std::vector<std::string> parts;
    for (auto [k, m] : n.kids) {
        std::string t = node_text(k, false, -1);
        for (int i = 0; i < m; ++i)
            parts.push_back(t);
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "(" + c + "; {";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += ", ";
        out += parts[i];
    }
    out += "})";
    return out;
}

} // namespace

std::string render_form(FormId id, bool root, long long limit)
{
    if (id == kEmptyForm)
        return "()";
    return node_text(id, root, limit);
}

bool operator==(const ColoredBall& a, const ColoredBall& b)
{
    return a.form == b.form;
}

bool operator<(const ColoredBall& a, const ColoredBall& b)
{
    return a.form < b.form;
}

ColoredBall empty_ball()
{
    return ColoredBall{};
}

ColoredBall ball_from_form(FormId id)
{
    if (id == kEmptyForm)
        return empty_ball();
    const FormNode& n = form_node(id);
    return ColoredBall{n.depth, n.color, id, !n.partial};
}

ColoredBall restrict_ball(const ColoredBall& b, int m)
{
    if (m > b.radius)
        throw Error(Errc::RadiusTooLarge, "restrict to " + std::to_string(m) + " from " + std::to_string(b.radius));
    return ball_from_form(restrict_form(b.form, m));
}

Unfolder::Unfolder(const Graph& g) : g_(&g), adj_(g), trunc_(g.vertices.size(), 0)
{
    for (int t : truncated_vertices(g))
        trunc_[t] = 1;
}

FormId Unfolder::node(int v, int incoming, int r)
{
    auto key = std::make_tuple(v, incoming, r);
    auto it = memo_.find(key);
    if (it != memo_.end())
        return it->second;
    const Vertex& vx = g_->vertices[v];
    FormId id;
    if (r > 0 && trunc_[v]) {
        id = intern_form(vx.color, true, r, {});
    } else {
        std::vector<std::pair<FormId, int>> kids;
        if (r > 0) {
            const auto& arcs = adj_.out[v];
            for (int k = 0; k < static_cast<int>(arcs.size()); ++k) {
                int count = arcs[k].index - (incoming == k ? 1 : 0);
                if (count > 0)
                    kids.push_back({node(arcs[k].to, arcs[k].reverse, r - 1), count});
            }
            int loops = vx.loop - (incoming == kLoop ? 1 : 0);
            if (loops > 0)
                kids.push_back({node(v, kLoop, r - 1), loops});
        }
        id = intern_form(vx.color, false, r, std::move(kids));
    }
    memo_.emplace(key, id);
    return id;
}

ColoredBall Unfolder::ball(int vidx, int n)
{
    if (vidx < 0 || vidx >= static_cast<int>(g_->vertices.size()))
        throw Error(Errc::UnknownVertex, "vertex index " + std::to_string(vidx));
    if (n < 0)
        return empty_ball();
    return ball_from_form(node(vidx, kRoot, n));
}

ColoredBall unfold_ball(const Graph& g, VertexId v, int n)
{
    int idx = g.index_of(v);
    if (idx < 0)
        throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v), v);
    Unfolder u(g);
    return u.ball(idx, n);
}

std::string ExplicitTree::canonical_string() const
{
    if (nodes.empty())
        return "()";
    std::vector<std::string> text(nodes.size());
    for (int i = static_cast<int>(nodes.size()) - 1; i >= 0; --i) {
        const Node& n = nodes[i];
        std::string c(1, n.color);
        if (n.kids.empty()) {
            text[i] = i == 0 ? "(" + c + "; [])" : c;
            continue;
        }
        std::vector<std::string> parts;
        for (int k : n.kids)
            parts.push_back(text[k]);
        std::sort(parts.begin(), parts.end());
        std::string out = "(" + c + "; {";
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (j)
                out += ", ";
            out += parts[j];
        }
        text[i] = out + "})";
    }
    return text[0];
}

ExplicitTree brute_force_cover(const Graph& g, VertexId v, int radius, std::mt19937* shuffle)
{
    int root = g.index_of(v);
    if (root < 0)
        throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v), v);
    std::vector<char> trunc(g.vertices.size(), 0);
    for (int t : truncated_vertices(g))
        trunc[t] = 1;

    // How each tree node was reached: edge position and the endpoint it
    // left from, or a loop.
    struct Via {
        int edge;       // -1 root, -2 loop
        int from_side;  // 0: parent is edge.u, 1: parent is edge.v
    };
    ExplicitTree t;
    t.radius = radius;
    std::vector<Via> via;
    t.nodes.push_back({g.vertices[root].color, root, 0, {}});
    via.push_back({-1, 0});
    for (std::size_t q = 0; q < t.nodes.size(); ++q) {
        int depth = t.nodes[q].depth;
        if (depth == radius)
            continue;
        int x = t.nodes[q].proj;
        if (trunc[x])
            throw Error(Errc::TruncationHit, "vertex " + std::to_string(g.vertices[x].id), g.vertices[x].id);
        VertexId xid = g.vertices[x].id;
        std::vector<std::pair<int, Via>> kids;   // (vertex index, how)
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
            const Edge& ed = g.edges[e];
            for (int side = 0; side < 2; ++side) {
                VertexId here = side == 0 ? ed.u : ed.v;
                VertexId there = side == 0 ? ed.v : ed.u;
                if (here != xid)
                    continue;
                int count = side == 0 ? ed.fwd : ed.rev;
                // the parent sits across this edge when we arrived through it
                // from the other endpoint
                if (via[q].edge == e && via[q].from_side != side)
                    --count;
                for (int c = 0; c < count; ++c)
                    kids.push_back({g.index_of(there), Via{e, side}});
            }
        }
        int loops = g.vertices[x].loop - (via[q].edge == -2 ? 1 : 0);
        for (int c = 0; c < loops; ++c)
            kids.push_back({x, Via{-2, 0}});
        if (shuffle)
            std::shuffle(kids.begin(), kids.end(), *shuffle);
        for (auto& [w, how] : kids) {
            int id = static_cast<int>(t.nodes.size());
            t.nodes.push_back({g.vertices[w].color, w, depth + 1, {}});
            via.push_back(how);
            t.nodes[q].kids.push_back(id);
        }
    }
    return t;
}

} // namespace sturmian
