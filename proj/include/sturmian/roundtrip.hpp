#ifndef STURMIAN_ROUNDTRIP_HPP
#define STURMIAN_ROUNDTRIP_HPP

#include <optional>
#include <string>
#include <vector>

#include "sturmian/induction.hpp"

namespace sturmian {

/* Placement of one path inside another: vertex j of `small` sits on vertex
   offset + j of the host (host read backwards when reversed). */
struct PathWindow {
    int offset = 0;
    bool reversed = false;
};

/* Colours and edge indices agree on every vertex of the window, loops on
   vertices interior to both paths. */
std::optional<PathWindow> find_path_window(const Graph& small, const Graph& host);

struct RoundTripReport {
    bool ok = false;
    std::string direction;               // "sequence" (analysis of a synthesis) or "graph"
    int k_compared = -1;                 // entries k = 0..k_compared were compared
    int synth_depth = -1;                // depth of the synthesized prefix
    int n_max = -1;
    InductionTrace trace;
    std::vector<char> beta_in, beta_out;
    int beta_tail_from = -1;             // beta agrees from this k on, -1 if not at the end
    std::vector<std::string> diffs;
    std::optional<PathWindow> window;    // graph direction
    int regenerated_vertices = 0;

    std::string to_json() const;
};

/* Synthesizes s deep enough for the analysis to recover entries 0..k_max and
   compares.  Throws HorizonTooShort when s has too few entries. */
RoundTripReport roundtrip_sequence(const AdmissibleSequence& s, int k_max);

/* Extracts (K, alpha, i, beta(t)) from a path-shaped g, regenerates the prefix
   and looks for it inside g. */
RoundTripReport roundtrip_graph(const Graph& g, int n_max);

} // namespace sturmian

#endif
