#ifndef STURMIAN_CONCAT_HPP
#define STURMIAN_CONCAT_HPP

#include <vector>

#include "sturmian/eig.hpp"

namespace sturmian {

/* Where each input vertex (by index) landed in the result (by index).
   Result vertex ids equal result indices. */
struct ConcatMap {
    std::vector<int> left;
    std::vector<int> right;
};

/* Identify end V of g1 with end V' of g2.  The edge at V in g1 gets
   V-side index i, the edge at V' in g2 gets m - i. */
Graph concat_i(const Graph& g1, VertexId V, const Graph& g2, VertexId Vp, int i, ConcatMap* map = nullptr);

/* Join V and V' by a new edge with i(V->V') = i and i(V'->V) = j, taking
   i and j off their loops. */
Graph concat_ij(const Graph& g1, VertexId V, const Graph& g2, VertexId Vp, int i, int j, ConcatMap* map = nullptr);

/* Loop index and the single non-loop out-index at an end vertex
   (m = 0 for an isolated vertex). */
struct EndInfo {
    int loop = 0;
    int m = 0;
    int edges = 0;
};
EndInfo end_info(const Graph& g, VertexId v);

} // namespace sturmian

#endif
