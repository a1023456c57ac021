#ifndef STURMIAN_CATALOG_HPP
#define STURMIAN_CATALOG_HPP

#include "sturmian/synthesis.hpp"

namespace sturmian {

/* Reference inputs shipped with the tools. */

/* d = 3, K = 0: the coloring drawn in the worked example of the ball graphs;
   entries k >= 3 alternate (1, 1) and (1). */
AdmissibleSequence figure1_sequence(int k_max);

/* d = 6, alpha = ABAB..., i_0 = (2, 4, 6), then (3), (1), (2) repeating. */
AdmissibleSequence fibonacci_sequence(int k_max);

/* Right-truncated periodic rays of degree 3 with `length` vertices.
   kind 1: b -3/1- a -2/1- a -2/1- b ..., period (a, a, b).
   kind 2: a -3/1- a(loop 1) -1/1- b -2/1- a -2/1- a -2/1- a(loop 1) ..., period (a+loop, b, a, a). */
Graph cyclic_ray(int kind, int length);

} // namespace sturmian

#endif
