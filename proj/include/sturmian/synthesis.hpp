#ifndef STURMIAN_SYNTHESIS_HPP
#define STURMIAN_SYNTHESIS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sturmian/eig.hpp"

namespace sturmian {

struct AdmissibleSequence {
    int d = 0;
    int K = -1;                          // derived from alpha when negative
    std::string alpha;                   // letters A/B, one per k
    std::vector<std::vector<int>> i;     // i_k of arity 1, 2 or 3
    std::string beta;                    // empty: beta = alpha
    std::string tail = "line";           // "line" or "ray"

    int first_A() const;                 // K = min{k : alpha_k = A}, or -1
    std::string beta_or_alpha() const { return beta.empty() ? alpha : beta; }
};

AdmissibleSequence sequence_from_json(const std::string& text);
std::string sequence_to_json(const AdmissibleSequence& s);

/* (fA, fB, fC) for k >= K; entry k - K. */
using EndTriple = std::array<int, 3>;

struct AlphaIReport {
    bool ok = true;
    int k = -1;                  // first failing k
    std::string inequality;      // the violated condition
    std::string detail;
    int K = -1;
    std::vector<EndTriple> triples;

    std::string to_string() const;
};

AlphaIReport validate_alpha_i(const AdmissibleSequence& s);
bool validate_beta(const std::string& alpha, const std::string& beta);

/* One of F^A_k, F^B_k with its end designations (vertex ids = indices). */
struct Frame {
    Graph g;
    VertexId common = -1;
    VertexId noncommon = -1;
    VertexId joint = -1;        // k < K only: image of the single vertex of F^A
    bool changed = false;
    std::vector<int> from_A;    // when changed: index map from F^A_{k-1}
    std::vector<int> from_B;    //               and from F^B_{k-1}
};

struct FrameState {
    int k = -1;
    Frame A, B;
    std::optional<EndTriple> frak;   // defined for k >= K
    VertexId b_end = 0;              // image in F^B of the F^B_{-1} vertex (k < K)
};

FrameState initial_state(int d);
/* K is the sequence's K; ik is i_k with the arity-2 case at K given as
   (i, j) (the (0, i, j) encoding is internal). */
FrameState synth_step(const FrameState& st, const std::vector<int>& ik, char alpha_k, int K);

struct Prefix {
    Graph graph;                                 // F^{beta_kmax}_kmax, linearized
    std::vector<FrameState> states;              // k = 0..kmax
    std::vector<int> nk;                         // |V F^{alpha_k}_k| - 2
    /* into_final[k][v] = vertex id in `graph` of vertex v of F^{beta_k}_k */
    std::vector<std::vector<int>> into_final;
    /* embed[k][v] = index in F^{beta_k}_k of vertex v of F^{beta_{k-1}}_{k-1}
       (embed[0] empty) */
    std::vector<std::vector<int>> embed;
};

Prefix build_prefix(const AdmissibleSequence& s, int k_max);

} // namespace sturmian

#endif
