#ifndef STURMIAN_COVER_HPP
#define STURMIAN_COVER_HPP

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "sturmian/eig.hpp"

namespace sturmian {

/* Canonical colored rooted trees are interned: two forms are equal iff
   their ids are equal. */
using FormId = int;

constexpr FormId kEmptyForm = 0;   // the ball of radius -1

struct FormNode {
    char color = 0;
    bool cut = false;       // neighbourhood unknown (beyond a truncated end)
    bool partial = false;   // some node in the subtree is cut
    int depth = -1;
    std::vector<std::pair<FormId, int>> kids;   // sorted by id, with multiplicity
};

const FormNode& form_node(FormId id);
FormId intern_form(char color, bool cut, int depth, std::vector<std::pair<FormId, int>> kids);
FormId restrict_form(FormId id, int m);
std::uint64_t form_hash(FormId id);
/* Rendering; forms whose text would exceed `limit` characters are shown
   as a digest of their structural hash instead.  limit < 0 disables. */
std::string render_form(FormId id, bool root = true, long long limit = 4096);

struct ColoredBall {
    int radius = -1;
    char root_color = 0;
    FormId form = kEmptyForm;
    bool complete = true;

    std::string to_string(long long limit = 4096) const { return render_form(form, true, limit); }
};

bool operator==(const ColoredBall&, const ColoredBall&);
bool operator<(const ColoredBall&, const ColoredBall&);

ColoredBall empty_ball();
ColoredBall ball_from_form(FormId id);
ColoredBall restrict_ball(const ColoredBall& b, int m);

/* Memoized unfolding of one graph.  Not thread safe by itself; the
   underlying form store is. */
class Unfolder {
public:
    explicit Unfolder(const Graph& g);
    explicit Unfolder(Graph&&) = delete;
    const Graph& graph() const { return *g_; }
    const Adjacency& adjacency() const { return adj_; }
    bool is_truncated(int vidx) const { return trunc_[vidx]; }

    ColoredBall ball(int vidx, int n);

private:
    static constexpr int kRoot = -1;
    static constexpr int kLoop = -2;
    FormId node(int v, int incoming, int r);

    const Graph* g_;
    Adjacency adj_;
    std::vector<char> trunc_;
    std::map<std::tuple<int, int, int>, FormId> memo_;
};

ColoredBall unfold_ball(const Graph& g, VertexId v, int n);

/* Literal breadth-first lift of a ball of the universal cover. */
struct ExplicitTree {
    struct Node {
        char color;
        int proj;              // vertex index in the source graph
        int depth;
        std::vector<int> kids;
    };
    std::vector<Node> nodes;   // nodes[0] is the root
    int radius = 0;

    std::string canonical_string() const;
};

ExplicitTree brute_force_cover(const Graph& g, VertexId v, int radius, std::mt19937* shuffle = nullptr);

} // namespace sturmian

#endif
