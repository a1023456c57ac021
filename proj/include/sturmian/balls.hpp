#ifndef STURMIAN_BALLS_HPP
#define STURMIAN_BALLS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sturmian/cover.hpp"

namespace sturmian {

/* Ball classes of one radius over the vertices of a quotient prefix. */
struct BallClassTable {
    int n = 0;
    std::vector<ColoredBall> classes;          // in order of first occurrence
    std::vector<std::vector<int>> reps;        // vertex indices per class
    std::vector<int> class_of;                 // per vertex index, -1 if incomplete
    std::vector<int> window;                   // vertex indices examined
    std::vector<int> skipped;                  // window vertices with incomplete balls
    std::vector<std::set<int>> extensions;     // level n+1 classes restricting to each class
    bool saturated = false;

    int b() const { return static_cast<int>(classes.size()); }
    int find(const ColoredBall& ball) const;   // -1 when absent
};

BallClassTable classify_balls(const Graph& g, const std::vector<VertexId>& window, int n);

struct ChainEntry {
    int n = 0;
    int S = -1, A = -1, B = -1, C = -1;   // class indices at level n
};

struct Profile {
    std::vector<int> b;           // b_0, b_1, ...
    bool sturmian = false;        // b_n = n + 2 for every reported n
    std::string cut_reason;       // why the profile stops before n_max
};

/* All levels -1..n_max+2 of a quotient prefix, with extensions and the
   special chain.  Level n is closed when level n+1 has usable vertices
   and each level-n class has an extension there. */
class Analysis {
public:
    Analysis(const Graph& g, int n_max);
    Analysis(Graph&&, int) = delete;   // keeps a pointer to g

    const Graph& graph() const { return *g_; }
    int n_max() const { return n_max_; }
    int degree() const { return g_->degree; }
    const BallClassTable& level(int n) const { return levels_.at(static_cast<std::size_t>(n + 1)); }
    bool closed(int n) const;
    /* Largest n <= n_max + 1 with levels -1..n closed (-2 if none). */
    int horizon() const { return horizon_; }
    /* Largest n <= n_max for which the chain S, A, B is known. */
    int top() const { return std::min(horizon_, n_max_); }

    Profile profile() const;

    /* Throws NotSturmian / AmbiguousAssignment on the first bad level. */
    const std::vector<ChainEntry>& chain() const;
    const ChainEntry& chain(int n) const;
    std::optional<Error> chain_error() const { return chain_error_; }
    /* Whether the roles of a and b were exchanged because S_0 = [b]. */
    bool swapped() const { return swapped_; }

    /* Number of neighbours (in the tree) of a lift of vertex v whose n-ball
       has each level-n class; nullopt if some neighbour's n-ball is
       incomplete. */
    std::optional<std::vector<int>> neighbour_counts(int n, int v) const;

    Unfolder& unfolder() const { return unf_; }

private:
    void build_chain();

    const Graph* g_;
    int n_max_;
    mutable Unfolder unf_;
    std::vector<BallClassTable> levels_;
    int horizon_ = -2;
    std::vector<ChainEntry> chain_;
    std::optional<Error> chain_error_;
    bool swapped_ = false;
};

Profile complexity_profile(const Graph& g, int n_max);
std::vector<ChainEntry> special_chain(const Graph& g, int n_max);
std::set<int> type_set(const Graph& g, VertexId v, int n_max);
std::set<int> type_set(const Analysis& an, int v_index, int n_max);

/* {"n","b","classes","S","A","B","C","saturated"} per level. */
std::string level_report_json(const Analysis& an, int n);

} // namespace sturmian

#endif
