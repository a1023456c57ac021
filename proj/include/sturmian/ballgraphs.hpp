#ifndef STURMIAN_BALLGRAPHS_HPP
#define STURMIAN_BALLGRAPHS_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sturmian/balls.hpp"

namespace sturmian {

/* Class adjacency graph: vertices are level-n class indices, edges are
   pairs (x <= y); x == y is a loop. */
struct BallGraph {
    int n = 0;
    int size = 0;
    std::set<std::pair<int, int>> edges;

    bool adjacent(int x, int y) const { return edges.count({std::min(x, y), std::max(x, y)}) > 0; }
    std::vector<int> neighbours(int x) const;   // excluding x itself
};

BallGraph build_Gn(const Analysis& an, int n);

enum class Side { Plain, A, B };

/* i(X, Y), or i_A / i_B when X = S_n. */
int index_of(const Analysis& an, int n, int X, int Y, Side side = Side::Plain);

/* G^A_n or G^B_n as an edge-indexed graph whose vertex ids are level-n
   class indices.  Marks "S" and "C" name S_n and C_n when present. */
struct IndexedBallGraph {
    int n = 0;
    char side = 'A';
    Graph g;
    int S = -1;
    int C = -1;
    bool has(int cls) const { return g.index_of(cls) >= 0; }
};

IndexedBallGraph build_indexed(const Analysis& an, int n, char side);

/* A simple cycle (length >= 3) of the class graph, loops ignored. */
std::optional<std::vector<int>> detect_cycle(const BallGraph& bg);

/* Plain graph view of a ball graph for DOT export. */
Graph ball_graph_as_eig(const Analysis& an, const BallGraph& bg);

struct LemmaReport {
    int n = 0;
    std::vector<std::string> failures;
    int checks = 0;
    bool ok() const { return failures.empty(); }
};

/* Index identities, S_n--C_n adjacency, the neighbour bound at S_n,
   vanishing i(D, S_n) (acyclic inputs), coverage of all classes by
   G^A_n and G^B_n, and row sums equal to d. */
LemmaReport check_lemmas(const Analysis& an, int n, bool acyclic);

} // namespace sturmian

#endif
