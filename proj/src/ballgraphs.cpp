#include "sturmian/ballgraphs.hpp"

#include <functional>

namespace sturmian {

std::vector<int> BallGraph::neighbours(int x) const
{
    std::vector<int> out;
    for (auto [a, b] : edges) {
        if (a == x && b != x)
            out.push_back(b);
        else if (b == x && a != x)
            out.push_back(a);
    }
    return out;
}

BallGraph build_Gn(const Analysis& an, int n)
{
    const BallClassTable& t = an.level(n);
    const Graph& g = an.graph();
    BallGraph bg;
    bg.n = n;
    bg.size = t.b();
    const Adjacency& adj = an.unfolder().adjacency();
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        int cv = t.class_of[v];
        if (cv < 0)
            continue;
        if (g.vertices[v].loop > 0)
            bg.edges.insert({cv, cv});
        for (const Arc& a : adj.out[v]) {
            int cw = t.class_of[a.to];
            if (cw >= 0)
                bg.edges.insert({std::min(cv, cw), std::max(cv, cw)});
        }
    }
    return bg;
}

namespace {

/* Neighbour counts of X agreed on by all usable representatives,
   optionally only those whose (n+1)-class is `ext`. */
std::vector<int> row(const Analysis& an, int n, int X, int ext)
{
    const BallClassTable& t = an.level(n);
    std::optional<std::vector<int>> found;
    for (int v : t.reps.at(X)) {
        if (ext >= 0 && an.level(n + 1).class_of[v] != ext)
            continue;
        auto c = an.neighbour_counts(n, v);
        if (!c)
            continue;
        if (found && *found != *c)
            throw Error(Errc::IllDefined,
                        "level " + std::to_string(n) + ": representatives of class " + std::to_string(X) + " disagree", X);
        found = c;
    }
    if (!found)
        throw Error(Errc::IllDefined,
                    "level " + std::to_string(n) + ": class " + std::to_string(X) + " has no representative with a complete neighbourhood",
                    X);
    return *found;
}

std::vector<int> side_row(const Analysis& an, int n, int X, Side side)
{
    const ChainEntry& ce = an.chain(n);
    if (X != ce.S)
        return row(an, n, X, -1);
    if (side == Side::Plain)
        throw Error(Errc::InvalidArgument, "plain index of the special class");
    const ChainEntry& up = an.chain(n + 1);
    return row(an, n, X, side == Side::A ? up.A : up.B);
}

} // namespace

int index_of(const Analysis& an, int n, int X, int Y, Side side)
{
    return side_row(an, n, X, side).at(Y);
}

IndexedBallGraph build_indexed(const Analysis& an, int n, char side)
{
    IndexedBallGraph ig;
    ig.n = n;
    ig.side = side;
    ig.g.degree = an.degree();
    if (n == -1) {
        char c = side == 'A' ? 'a' : 'b';
        if (an.swapped())
            c = c == 'a' ? 'b' : 'a';
        ig.g.vertices.push_back(Vertex{0, c, an.degree()});
        ig.S = ig.C = 0;
        ig.g.marks["S"] = 0;
        ig.g.marks["C"] = 0;
        return ig;
    }
    const Side sd = side == 'A' ? Side::A : Side::B;
    const ChainEntry& ce = an.chain(n);
    const BallClassTable& t = an.level(n);
    std::vector<std::vector<int>> rows(t.b());
    std::vector<char> have(t.b(), 0);
    auto get = [&](int X) -> const std::vector<int>& {
        if (!have[X]) {
            rows[X] = side_row(an, n, X, sd);
            have[X] = 1;
        }
        return rows[X];
    };
    std::vector<int> order{ce.S};
    std::vector<char> seen(t.b(), 0);
    seen[ce.S] = 1;
    for (std::size_t q = 0; q < order.size(); ++q) {
        const auto& r = get(order[q]);
        for (int Y = 0; Y < t.b(); ++Y)
            if (r[Y] > 0 && !seen[Y]) {
                seen[Y] = 1;
                order.push_back(Y);
            }
    }
    for (int X : order)
        ig.g.vertices.push_back(Vertex{X, t.classes[X].root_color, get(X)[X]});
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            int X = order[a], Y = order[b];
            int f = get(X)[Y], r = get(Y)[X];
            if (f > 0 || r > 0)
                ig.g.edges.push_back(Edge{X, Y, f, r});
        }
    ig.S = ce.S;
    ig.g.marks["S"] = ce.S;
    if (ce.C >= 0 && seen[ce.C]) {
        ig.C = ce.C;
        ig.g.marks["C"] = ce.C;
    }
    return ig;
}

std::optional<std::vector<int>> detect_cycle(const BallGraph& bg)
{
    std::vector<std::vector<int>> adj(bg.size);
    for (auto [a, b] : bg.edges)
        if (a != b) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    std::vector<int> parent(bg.size, -1), state(bg.size, 0);
    std::optional<std::vector<int>> found;
    std::function<void(int, int)> dfs = [&](int x, int from) {
        state[x] = 1;
        for (int y : adj[x]) {
            if (found)
                return;
            if (y == from)
                continue;
            if (state[y] == 1) {
                std::vector<int> cyc{y};
                for (int z = x; z != y; z = parent[z])
                    cyc.push_back(z);
                found = cyc;
                return;
            }
            if (state[y] == 0) {
                parent[y] = x;
                dfs(y, x);
            }
        }
        state[x] = 2;
    };
    for (int s = 0; s < bg.size && !found; ++s)
        if (state[s] == 0)
            dfs(s, -1);
    return found;
}

Graph ball_graph_as_eig(const Analysis& an, const BallGraph& bg)
{
    Graph g;
    g.degree = an.degree();
    const BallClassTable& t = an.level(bg.n);
    for (int x = 0; x < bg.size; ++x)
        g.vertices.push_back(Vertex{x, t.classes[x].root_color, bg.adjacent(x, x) ? 1 : 0});
    for (auto [a, b] : bg.edges)
        if (a != b)
            g.edges.push_back(Edge{a, b, 1, 1});
    return g;
}

LemmaReport check_lemmas(const Analysis& an, int n, bool acyclic)
{
    LemmaReport rep;
    rep.n = n;
    auto fail = [&](const std::string& s) { rep.failures.push_back("n=" + std::to_string(n) + ": " + s); };
    auto expect = [&](bool cond, const std::string& s) {
        ++rep.checks;
        if (!cond)
            fail(s);
    };
    try {
        const ChainEntry& ce = an.chain(n);
        const ChainEntry& up = an.chain(n + 1);
        const BallClassTable& t = an.level(n);
        const int d = an.degree();
        auto ext = [&](int U) { return *t.extensions[U].begin(); };

        for (int U = 0; U < t.b(); ++U) {
            if (U == ce.S || U == ce.C)
                continue;
            const int Ub = ext(U);
            const auto rU = row(an, n, U, -1);
            const auto rUb = row(an, n + 1, Ub, -1);
            for (int V = 0; V < t.b(); ++V) {
                if (V == ce.S)
                    continue;
                expect(rU[V] == rUb[ext(V)], "i(U,V) = i(U',V') fails for U=" + std::to_string(U) + " V=" + std::to_string(V));
            }
            expect(rU[ce.S] == rUb[up.A] + rUb[up.B],
                   "i(U,S_n) = i(U',A_{n+1}) + i(U',B_{n+1}) fails for U=" + std::to_string(U));
        }

        BallGraph gn = build_Gn(an, n);
        expect(gn.adjacent(ce.S, ce.C), "S_n and C_n are not adjacent in G_n");
        expect(gn.neighbours(ce.S).size() <= 3, "more than three classes adjacent to S_n");

        if (acyclic) {
            for (int D = 0; D < t.b(); ++D) {
                if (D == ce.A || D == ce.B || D == ce.S || D == ce.C)
                    continue;
                expect(row(an, n, D, -1)[ce.S] == 0, "i(D,S_n) != 0 for D=" + std::to_string(D));
            }
        }

        IndexedBallGraph ga = build_indexed(an, n, 'A');
        IndexedBallGraph gb = build_indexed(an, n, 'B');
        for (int X = 0; X < t.b(); ++X)
            expect(ga.has(X) || gb.has(X), "class " + std::to_string(X) + " in neither G^A_n nor G^B_n");
        for (const IndexedBallGraph* ig : {&ga, &gb}) {
            std::vector<int> sum(ig->g.vertices.size());
            for (std::size_t v = 0; v < sum.size(); ++v)
                sum[v] = ig->g.vertices[v].loop;
            for (const Edge& e : ig->g.edges) {
                sum[ig->g.index_of(e.u)] += e.fwd;
                sum[ig->g.index_of(e.v)] += e.rev;
            }
            for (std::size_t v = 0; v < sum.size(); ++v)
                expect(sum[v] == d, std::string("row sum of G^") + ig->side + "_n at class " +
                                        std::to_string(ig->g.vertices[v].id) + " is " + std::to_string(sum[v]));
        }
    } catch (const Error& e) {
        fail(e.what());
    }
    return rep;
}

} // namespace sturmian
