#ifndef STURMIAN_INDUCTION_HPP
#define STURMIAN_INDUCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "sturmian/ballgraphs.hpp"
#include "sturmian/synthesis.hpp"

namespace sturmian {

/* How G^X_n arises from level n-1 on one side X. */
struct SideStep {
    char side = 'A';
    std::string rule;        // "1": unchanged, "2": (i)-concatenation, "3i"/"3ii": (i,j)-concatenation
    bool changed = false;
    std::vector<int> indices;   // (i) or (i, j), with i on the G^A operand
};

struct StepReport {
    int n = 0;
    SideStep A, B;
};

/* Rebuilds G^A_n and G^B_n from level n-1 by concatenation and checks the
   isomorphism through restriction.  Throws DecompositionMismatch. */
StepReport verify_step_decomposition(const Analysis& an, int n);

/* Isomorphism of G^X_n and G^Y_m (n >= m) matching a vertex D of the first
   with the class restrict(D, m) of the second. */
bool ball_graphs_isomorphic(const Analysis& an, const IndexedBallGraph& hi, const IndexedBallGraph& lo);

struct Boundedness {
    bool bounded = false;
    bool cyclic = false;
    int cycle_level = -1;
    std::vector<int> cycle;
    char stable_side = 0;        // side constant over the trailing run
    int run_from = -1, run_to = -1;
    int other_changes = 0;       // changes of the other side within the run
    int horizon = -1;
    std::string evidence;
};

struct InductionTrace {
    int K = -1;
    std::vector<int> nk;
    std::string alpha;
    std::vector<std::vector<int>> i;
    std::vector<std::string> cases;   // "1", "2a", "2b", "3"
    std::vector<StepReport> steps;    // one per level 0..last
    int last_level = -1;              // highest level whose step was verified
    Boundedness bounded;
    std::vector<std::string> warnings;

    AdmissibleSequence as_sequence(int d) const;
};

InductionTrace extract_trace(const Analysis& an);
InductionTrace extract_trace(const Graph& g, int n_max);

/* beta_0(t) .. beta_{m-1}(t), m = min(k_max, last known k); beta_{k-1} is
   read off the class of t at level n_k. */
std::vector<char> beta_of_vertex(const Analysis& an, const InductionTrace& tr, int v_index, int k_max);

struct BetaCheck {
    bool admissible = true;    // beta_k in {alpha_k, beta_{k-1}}
    bool membership = true;    // [B_{n_k}(t)] in G^{beta_k}_{n_k}
    std::string detail;
};
BetaCheck check_beta(const Analysis& an, const InductionTrace& tr, int v_index, const std::vector<char>& beta);

/* Smallest k0 with beta_k(t) = beta_k(t') for all known k >= k0, or -1. */
int beta_agreement_from(const std::vector<char>& b1, const std::vector<char>& b2);

Boundedness classify_boundedness(const Analysis& an);

std::string trace_to_json(const InductionTrace& tr);

} // namespace sturmian

#endif
