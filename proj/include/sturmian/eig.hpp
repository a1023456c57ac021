#ifndef STURMIAN_EIG_HPP
#define STURMIAN_EIG_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sturmian/error.hpp"

namespace sturmian {

using VertexId = long long;

struct Vertex {
    VertexId id = 0;
    char color = 'a';
    int loop = 0;
};

/* Undirected edge u--v with fwd = i(u->v), rev = i(v->u). */
struct Edge {
    VertexId u = 0, v = 0;
    int fwd = 1, rev = 1;
};

struct Graph {
    int degree = 0;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    bool trunc_left = false;
    bool trunc_right = false;
    std::map<std::string, VertexId> marks;

    int index_of(VertexId id) const;   // -1 when absent
    const Vertex& vertex(VertexId id) const;
    Vertex& vertex(VertexId id);
    bool truncated() const { return trunc_left || trunc_right; }
};

bool operator==(const Vertex&, const Vertex&);
bool operator==(const Edge&, const Edge&);
bool operator==(const Graph&, const Graph&);

/* Oriented view: for each vertex index, the non-loop arcs leaving it. */
struct Arc {
    int to;        // vertex index
    int index;     // i(this -> to)
    int back;      // i(to -> this)
    int edge;      // position in Graph::edges
    int reverse;   // position of the opposite arc in out[to]
};

struct Adjacency {
    std::vector<std::vector<Arc>> out;
    explicit Adjacency(const Graph& g);
};

/* Vertex indices from the left end to the right end when g is a path
   (possibly a single vertex).  The left end is whichever endpoint is
   declared first. */
std::optional<std::vector<int>> linear_order(const Graph& g);

/* Vertex indices whose neighbourhood is unknown because they sit at a
   truncated end. */
std::vector<int> truncated_vertices(const Graph& g);

/* Copy of a path graph with ids 0..n-1 from left to right (or right to
   left).  Marks follow their vertices.  `old_to_new` receives, for each
   old vertex index, the new id. */
Graph linearized(const Graph& g, bool reverse = false, std::vector<int>* old_to_new = nullptr);

struct Violation {
    std::string kind;   // DegreeMismatch, ZeroIndexEdge, BadColor, NotLinear
    VertexId vertex = -1;
    int edge = -1;
    int expected = 0;
    int actual = 0;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

ValidationReport validate_graph(const Graph& g);

struct IsoResult {
    bool isomorphic = false;
    std::vector<int> map;   // vertex index in g1 -> vertex index in g2
};

/* Optional vertex compatibility relation (indices into g1, g2).  When
   absent, colour letters must agree. */
using VertexMatch = std::function<bool(int, int)>;

IsoResult graphs_isomorphic(const Graph& g1, const Graph& g2, const VertexMatch& match = {});

Graph parse_eig(const std::string& text);
std::string serialize_eig(const Graph& g);
std::string to_dot(const Graph& g, const std::string& name = "G");

Graph read_eig_file(const std::string& path);
/* Writes via a temporary file and rename. */
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

} // namespace sturmian

#endif
