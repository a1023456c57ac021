#include "sturmian/balls.hpp"

#include <json.hpp>

namespace sturmian {

int BallClassTable::find(const ColoredBall& ball) const
{
    for (std::size_t c = 0; c < classes.size(); ++c)
        if (classes[c] == ball)
            return static_cast<int>(c);
    return -1;
}

namespace {

BallClassTable classify(Unfolder& unf, const std::vector<int>& window, int n)
{
    BallClassTable t;
    t.n = n;
    t.window = window;
    t.class_of.assign(unf.graph().vertices.size(), -1);
    for (int v : window) {
        ColoredBall b = unf.ball(v, n);
        if (!b.complete) {
            t.skipped.push_back(v);
            continue;
        }
        int c = t.find(b);
        if (c < 0) {
            c = t.b();
            t.classes.push_back(b);
            t.reps.emplace_back();
        }
        t.reps[c].push_back(v);
        t.class_of[v] = c;
    }
    t.extensions.assign(t.classes.size(), {});
    return t;
}

std::vector<int> all_vertices(const Graph& g)
{
    std::vector<int> w(g.vertices.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = static_cast<int>(i);
    return w;
}

} // namespace

BallClassTable classify_balls(const Graph& g, const std::vector<VertexId>& window, int n)
{
    if (window.empty())
        throw Error(Errc::EmptyWindow, "no vertices to classify");
    Unfolder unf(g);
    std::vector<int> idx;
    for (VertexId id : window) {
        int i = g.index_of(id);
        if (i < 0)
            throw Error(Errc::UnknownVertex, "vertex " + std::to_string(id), id);
        idx.push_back(i);
    }
    BallClassTable t = classify(unf, idx, n);
    if (t.classes.empty())
        throw Error(Errc::EmptyWindow, "no complete " + std::to_string(n) + "-ball in the window");
    BallClassTable full = classify(unf, all_vertices(g), n);
    t.saturated = full.b() == t.b();
    return t;
}

Analysis::Analysis(const Graph& g, int n_max) : g_(&g), n_max_(n_max), unf_(g)
{
    if (n_max < 0)
        throw Error(Errc::InvalidArgument, "n_max must be non-negative");
    const std::vector<int> all = all_vertices(g);
    for (int n = -1; n <= n_max + 2; ++n)
        levels_.push_back(classify(unf_, all, n));
    for (int n = -1; n <= n_max + 1; ++n) {
        BallClassTable& lo = levels_[n + 1];
        const BallClassTable& hi = levels_[n + 2];
        for (const ColoredBall& y : hi.classes) {
            int x = lo.find(restrict_ball(y, n));
            if (x >= 0)
                lo.extensions[x].insert(hi.find(y));
        }
    }
    for (int n = -1; n <= n_max + 1; ++n)
        levels_[n + 1].saturated = closed(n);
    // On a truncated prefix a class realized only near the cut is invisible;
    // a level whose successor adds no class is treated as beyond the horizon.
    horizon_ = -2;
    for (int n = -1; n <= n_max + 1 && closed(n); ++n) {
        if (g.truncated() && level(n + 1).b() <= level(n).b())
            break;
        horizon_ = n;
    }
    build_chain();
}

bool Analysis::closed(int n) const
{
    if (n + 2 >= static_cast<int>(levels_.size()))
        return false;
    const BallClassTable& lo = level(n);
    if (lo.classes.empty() || level(n + 1).classes.empty())
        return false;
    for (const auto& e : lo.extensions)
        if (e.empty())
            return false;
    return true;
}

Profile Analysis::profile() const
{
    Profile p;
    const int last = std::min(horizon_, n_max_);
    for (int n = 0; n <= last; ++n)
        p.b.push_back(level(n).b());
    if (last < n_max_) {
        if (closed(last + 1) || last + 1 > n_max_ + 1)
            p.cut_reason = "level " + std::to_string(last + 2) + " adds no class within the truncated prefix";
        else
            p.cut_reason = "level " + std::to_string(last + 1) +
                           " is not closed within the prefix (a class has no complete extension)";
    }
    p.sturmian = !p.b.empty();
    for (std::size_t n = 0; n < p.b.size(); ++n)
        if (p.b[n] != static_cast<int>(n) + 2)
            p.sturmian = false;
    return p;
}

std::optional<std::vector<int>> Analysis::neighbour_counts(int n, int v) const
{
    const BallClassTable& t = level(n);
    std::vector<int> counts(t.classes.size(), 0);
    for (const Arc& a : unf_.adjacency().out[v]) {
        int c = t.class_of[a.to];
        if (c < 0)
            return std::nullopt;
        counts[c] += a.index;
    }
    if (g_->vertices[v].loop > 0) {
        int c = t.class_of[v];
        if (c < 0)
            return std::nullopt;
        counts[c] += g_->vertices[v].loop;
    }
    return counts;
}

void Analysis::build_chain()
{
    auto fail = [&](Errc code, int n, const std::string& why) {
        chain_error_ = Error(code, "level " + std::to_string(n) + ": " + why, n);
    };
    for (int n = 0; n <= horizon_; ++n) {
        const BallClassTable& t = level(n);
        if (t.b() != n + 2) {
            fail(Errc::NotSturmian, n, "b_n = " + std::to_string(t.b()) + ", expected " + std::to_string(n + 2));
            break;
        }
        int S = -1, doubles = 0;
        for (int c = 0; c < t.b(); ++c) {
            std::size_t e = t.extensions[c].size();
            if (e >= 2) {
                ++doubles;
                S = c;
            }
            if (e > 2)
                doubles += 10;
        }
        if (doubles != 1) {
            fail(Errc::NotSturmian, n, "no unique special class");
            break;
        }
        ChainEntry ce;
        ce.n = n;
        ce.S = S;
        if (n == 0) {
            ce.A = S;
            ce.B = 1 - S;
            swapped_ = t.classes[S].root_color == 'b';
        } else {
            const ChainEntry& prev = chain_.back();
            const BallClassTable& lo = level(n - 1);
            auto it = lo.extensions[prev.S].begin();
            int e1 = *it++, e2 = *it;
            auto a_count = [&](int e) {
                auto c = neighbour_counts(n - 1, t.reps[e].front());
                return c ? (*c)[prev.A] : -1;
            };
            int c1 = a_count(e1), c2 = a_count(e2);
            if (c1 == c2) {
                fail(Errc::AmbiguousAssignment, n,
                     "both extensions of S_" + std::to_string(n - 1) + " hold " + std::to_string(c1) + " balls of class A");
                break;
            }
            ce.A = c1 > c2 ? e1 : e2;
            ce.B = c1 > c2 ? e2 : e1;
        }
        chain_.push_back(ce);
    }
    // C_n needs S_{n+1}
    for (std::size_t k = 0; k + 1 < chain_.size(); ++k) {
        int n = static_cast<int>(k);
        chain_[k].C = level(n).find(restrict_ball(level(n + 1).classes[chain_[k + 1].S], n));
    }
}

const std::vector<ChainEntry>& Analysis::chain() const
{
    return chain_;
}

const ChainEntry& Analysis::chain(int n) const
{
    if (n >= 0 && n < static_cast<int>(chain_.size()))
        return chain_[n];
    if (chain_error_)
        throw *chain_error_;
    throw Error(Errc::HorizonTooShort, "special chain known up to level " + std::to_string(chain_.size()) + " only", n);
}

Profile complexity_profile(const Graph& g, int n_max)
{
    return Analysis(g, n_max).profile();
}

std::vector<ChainEntry> special_chain(const Graph& g, int n_max)
{
    Analysis an(g, n_max);
    if (an.chain_error())
        throw *an.chain_error();
    std::vector<ChainEntry> out;
    for (const ChainEntry& c : an.chain())
        if (c.n <= n_max)
            out.push_back(c);
    return out;
}

std::set<int> type_set(const Analysis& an, int v, int n_max)
{
    std::set<int> out;
    const int last = std::min(n_max, static_cast<int>(an.chain().size()) - 1);
    for (int m = 0; m <= last; ++m) {
        int c = an.level(m).class_of[v];
        if (c < 0)
            throw Error(Errc::TruncationHit, "ball of radius " + std::to_string(m) + " is incomplete", m);
        if (c == an.chain(m).S)
            out.insert(m);
    }
    return out;
}

std::set<int> type_set(const Graph& g, VertexId v, int n_max)
{
    int i = g.index_of(v);
    if (i < 0)
        throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v), v);
    Analysis an(g, n_max);
    return type_set(an, i, n_max);
}

std::string level_report_json(const Analysis& an, int n)
{
    using nlohmann::json;
    const BallClassTable& t = an.level(n);
    json j;
    j["n"] = n;
    j["b"] = t.b();
    j["classes"] = json::array();
    for (const ColoredBall& c : t.classes)
        j["classes"].push_back(c.to_string());
    auto idx = [](int x) { return x < 0 ? json(nullptr) : json(x); };
    if (n >= 0 && n < static_cast<int>(an.chain().size())) {
        const ChainEntry& c = an.chain()[n];
        j["S"] = idx(c.S);
        j["A"] = idx(c.A);
        j["B"] = idx(c.B);
        j["C"] = idx(c.C);
    } else {
        j["S"] = j["A"] = j["B"] = j["C"] = nullptr;
    }
    j["saturated"] = t.saturated;
    return j.dump();
}

} // namespace sturmian
