#include "sturmian/induction.hpp"

#include <json.hpp>

#include "sturmian/concat.hpp"

namespace sturmian {

namespace {

int edge_index(const Graph& g, VertexId from, VertexId to)
{
    for (const Edge& e : g.edges) {
        if (e.u == from && e.v == to)
            return e.fwd;
        if (e.v == from && e.u == to)
            return e.rev;
    }
    return 0;
}

[[noreturn]] void mismatch(int n, const std::string& why)
{
    throw Error(Errc::DecompositionMismatch, "level " + std::to_string(n) + ": " + why, n);
}

/* Vertex compatibility: same colour, and the class of the higher level
   restricts to the class of the lower one. */
VertexMatch restriction_match(const Analysis& an, const Graph& hi, int n_hi, const std::vector<int>& lo_class, int n_lo)
{
    return [&an, &hi, n_hi, lo_class, n_lo](int x, int y) {
        (void)n_hi;
        if (n_lo < 0)
            return true;
        const ColoredBall& D = an.level(n_hi).classes[hi.vertices[x].id];
        return restrict_ball(D, n_lo) == an.level(n_lo).classes[lo_class[y]];
    };
}

bool iso_with(const Analysis& an, const Graph& hi, int n_hi, const Graph& lo, const std::vector<int>& lo_class, int n_lo)
{
    auto pred = restriction_match(an, hi, n_hi, lo_class, n_lo);
    auto both = [&](int x, int y) { return hi.vertices[x].color == lo.vertices[y].color && pred(x, y); };
    return graphs_isomorphic(hi, lo, both).isomorphic;
}

std::vector<int> ids_of(const Graph& g)
{
    std::vector<int> c;
    for (const Vertex& v : g.vertices)
        c.push_back(static_cast<int>(v.id));
    return c;
}

} // namespace

bool ball_graphs_isomorphic(const Analysis& an, const IndexedBallGraph& hi, const IndexedBallGraph& lo)
{
    return iso_with(an, hi.g, hi.n, lo.g, ids_of(lo.g), lo.n);
}

StepReport verify_step_decomposition(const Analysis& an, int n)
{
    if (n < 0)
        throw Error(Errc::InvalidArgument, "step level must be non-negative");
    const ChainEntry& ce = an.chain(n);
    an.chain(n + 1);   // C_n and the indices at level n need level n+1
    bool prev_sc = true;
    VertexId prevC = 0;
    if (n > 0) {
        const ChainEntry& pe = an.chain(n - 1);
        prev_sc = pe.S == pe.C;
        prevC = pe.C;
    }
    const IndexedBallGraph pA = build_indexed(an, n - 1, 'A');
    const IndexedBallGraph pB = build_indexed(an, n - 1, 'B');
    const IndexedBallGraph gA = build_indexed(an, n, 'A');
    const IndexedBallGraph gB = build_indexed(an, n, 'B');

    StepReport rep;
    rep.n = n;
    for (char side : {'A', 'B'}) {
        SideStep st;
        st.side = side;
        const IndexedBallGraph& actual = side == 'A' ? gA : gB;
        const IndexedBallGraph& before = side == 'A' ? pA : pB;
        // the class playing "A_n" for this side in the case analysis
        const int X = side == 'B' ? ce.A : ce.B;
        if (X == ce.S)
            st.rule = "3i";
        else if (X == ce.C)
            st.rule = prev_sc ? "3ii" : "2";
        else
            st.rule = "1";

        if (st.rule == "1") {
            if (!ball_graphs_isomorphic(an, actual, before))
                mismatch(n, std::string("G^") + side + "_n is not isomorphic to G^" + side + "_{n-1}");
        } else {
            st.changed = true;
            if (!pA.has(static_cast<int>(prevC)) || !pB.has(static_cast<int>(prevC)))
                mismatch(n, "C_{n-1} is missing from G^A_{n-1} or G^B_{n-1}");
            ConcatMap cm;
            Graph predicted;
            try {
                if (st.rule == "2") {
                    st.indices = {edge_index(actual.g, ce.S, ce.A)};
                    predicted = concat_i(pA.g, prevC, pB.g, prevC, st.indices[0], &cm);
                } else {
                    st.indices = {edge_index(actual.g, ce.A, ce.B), edge_index(actual.g, ce.B, ce.A)};
                    predicted = concat_ij(pA.g, prevC, pB.g, prevC, st.indices[0], st.indices[1], &cm);
                }
            } catch (const Error& e) {
                mismatch(n, std::string("side ") + side + " rule " + st.rule + ": " + e.what());
            }
            std::vector<int> cls(predicted.vertices.size(), 0);
            for (std::size_t k = 0; k < cm.left.size(); ++k)
                cls[cm.left[k]] = static_cast<int>(pA.g.vertices[k].id);
            for (std::size_t k = 0; k < cm.right.size(); ++k)
                cls[cm.right[k]] = static_cast<int>(pB.g.vertices[k].id);
            if (!iso_with(an, actual.g, n, predicted, cls, n - 1))
                mismatch(n, std::string("G^") + side + "_n differs from the predicted concatenation (rule " + st.rule + ")");
        }
        (side == 'A' ? rep.A : rep.B) = st;
    }
    return rep;
}

AdmissibleSequence InductionTrace::as_sequence(int d) const
{
    AdmissibleSequence s;
    s.d = d;
    s.K = K;
    s.alpha = alpha;
    s.i = i;
    return s;
}

namespace {

int last_step_level(const Analysis& an)
{
    // G^X_n needs A_{n+1}; the step at n also needs C_n = restrict(S_{n+1})
    return std::min(static_cast<int>(an.chain().size()) - 2, an.n_max());
}

} // namespace

Boundedness classify_boundedness(const Analysis& an)
{
    Boundedness b;
    const int last = last_step_level(an);
    b.horizon = last;
    for (int n = 0; n <= std::min(an.top(), an.n_max()); ++n) {
        auto cyc = detect_cycle(build_Gn(an, n));
        if (cyc) {
            b.cyclic = true;
            b.bounded = true;
            b.cycle_level = n;
            b.cycle = *cyc;
            b.evidence = "cycle in G_" + std::to_string(n);
            break;
        }
    }
    if (last < 1) {
        if (!b.cyclic)
            b.evidence = "horizon too short";
        return b;
    }
    std::vector<char> same_A(last + 1, 1), same_B(last + 1, 1);
    IndexedBallGraph prevA = build_indexed(an, 0, 'A'), prevB = build_indexed(an, 0, 'B');
    for (int n = 1; n <= last; ++n) {
        IndexedBallGraph a = build_indexed(an, n, 'A'), bb = build_indexed(an, n, 'B');
        same_A[n] = ball_graphs_isomorphic(an, a, prevA);
        same_B[n] = ball_graphs_isomorphic(an, bb, prevB);
        prevA = std::move(a);
        prevB = std::move(bb);
    }
    const int need = std::max(3, an.n_max() / 4);
    for (char side : {'A', 'B'}) {
        const auto& same = side == 'A' ? same_A : same_B;
        const auto& other = side == 'A' ? same_B : same_A;
        int from = last;
        while (from >= 1 && same[from])
            --from;
        // G^side constant on levels from..last
        int changes = 0;
        for (int n = from + 1; n <= last; ++n)
            if (!other[n])
                ++changes;
        if (last - from > b.run_to - b.run_from || b.stable_side == 0) {
            b.stable_side = side;
            b.run_from = from;
            b.run_to = last;
            b.other_changes = changes;
        }
    }
    const bool stable = b.run_to - b.run_from >= need && b.other_changes >= 2;
    if (!b.cyclic) {
        b.bounded = stable;
        b.evidence = std::string("G^") + b.stable_side + "_n unchanged from level " + std::to_string(b.run_from) + " to " +
                     std::to_string(b.run_to) + ", other side changed " + std::to_string(b.other_changes) +
                     "x (bounded needs a run of " + std::to_string(need) + " and 2 changes)";
    }
    return b;
}

InductionTrace extract_trace(const Analysis& an)
{
    if (an.chain_error())
        throw *an.chain_error();
    InductionTrace tr;
    tr.bounded = classify_boundedness(an);
    const int last = last_step_level(an);
    tr.last_level = last;
    if (last < 0)
        throw Error(Errc::HorizonTooShort, "no level with a known special chain step");
    if (tr.bounded.cyclic) {
        tr.warnings.push_back("cyclic coloring: concatenation decomposition skipped");
        return tr;
    }
    for (int n = 0; n <= last; ++n)
        tr.steps.push_back(verify_step_decomposition(an, n));

    for (int n = 0; n <= last; ++n) {
        const ChainEntry& c = an.chain(n);
        if (!(c.A == c.S && c.S == c.C)) {
            tr.K = n;
            break;
        }
    }
    if (tr.K < 0)
        throw Error(Errc::HorizonTooShort, "S_n = A_n = C_n on every level up to " + std::to_string(last));

    for (int n = 0; n <= last; ++n) {
        const ChainEntry& c = an.chain(n);
        const StepReport& st = tr.steps[n];
        const bool level = c.A == c.S || c.A == c.C || c.B == c.S || c.B == c.C;
        if (!level) {
            if (st.A.changed || st.B.changed)
                mismatch(n, "graphs change at a level that is not some n_k");
            continue;
        }
        const int k = static_cast<int>(tr.nk.size());
        tr.nk.push_back(n);
        if (n < tr.K) {
            if (st.A.changed || !st.B.changed || st.B.indices.size() != 2)
                mismatch(n, "expected an (i,j)-concatenation on side B only");
            tr.alpha += 'B';
            tr.i.push_back(st.B.indices);
            tr.cases.push_back("1");
        } else if (n == tr.K) {
            tr.alpha += 'A';
            if (c.A == c.S) {
                if (!st.A.changed || !st.B.changed || st.A.indices.size() != 2 || st.B.indices.size() != 2)
                    mismatch(n, "expected (i,j)-concatenations on both sides");
                if (st.A.indices[1] != st.B.indices[1])
                    mismatch(n, "the two concatenations at K use different j");
                tr.i.push_back({st.A.indices[0], st.B.indices[0], st.A.indices[1]});
                tr.cases.push_back("2a");
                if (!(st.A.indices[0] < st.B.indices[0]))
                    tr.warnings.push_back("i < i' fails at K");
            } else if (c.B == c.S) {
                if (!st.A.changed || st.B.changed || st.A.indices.size() != 2)
                    mismatch(n, "expected an (i,j)-concatenation on side A only");
                tr.i.push_back(st.A.indices);
                tr.cases.push_back("2b");
            } else {
                mismatch(n, "neither A_K nor B_K is special");
            }
        } else {
            if (st.A.changed == st.B.changed)
                mismatch(n, "expected exactly one side to change");
            const char a = st.A.changed ? 'A' : 'B';
            tr.alpha += a;
            tr.i.push_back(a == 'A' ? st.A.indices : st.B.indices);
            tr.cases.push_back("3");
            const auto sa = build_indexed(an, n, 'A').g.vertices.size();
            const auto sb = build_indexed(an, n, 'B').g.vertices.size();
            if ((a == 'A') != (sa >= sb))
                mismatch(n, "alpha_k disagrees with the sizes of G^A and G^B");
        }
        (void)k;
    }

    // n_{k+1} - n_k = m - 1 for (i), m for (i,j), m = |V G^{alpha-bar_k}_{n_k}|
    for (std::size_t k = 0; k + 1 < tr.nk.size(); ++k) {
        const char other = tr.alpha[k] == 'A' ? 'B' : 'A';
        const int m = static_cast<int>(build_indexed(an, tr.nk[k], other).g.vertices.size());
        const int expect = tr.nk[k] + m - (tr.i[k + 1].size() == 1 ? 1 : 0);
        if (tr.nk[k + 1] != expect)
            tr.warnings.push_back("n_" + std::to_string(k + 1) + " = " + std::to_string(tr.nk[k + 1]) + ", gap rule predicts " +
                                  std::to_string(expect));
    }
    AlphaIReport adm = validate_alpha_i(tr.as_sequence(an.degree()));
    if (!adm.ok)
        tr.warnings.push_back("extracted indices are not admissible: " + adm.to_string());
    return tr;
}

InductionTrace extract_trace(const Graph& g, int n_max)
{
    Analysis an(g, n_max);
    return extract_trace(an);
}

std::vector<char> beta_of_vertex(const Analysis& an, const InductionTrace& tr, int v, int k_max)
{
    std::vector<char> beta;
    const int kk = std::min(k_max, static_cast<int>(tr.nk.size()) - 1);
    for (int k = 1; k <= kk; ++k) {
        const int n = tr.nk[k];
        const int c = an.level(n).class_of[v];
        if (c < 0)
            throw Error(Errc::HorizonTooShort, "ball of radius " + std::to_string(n) + " is incomplete", n);
        const char other = tr.alpha[k] == 'A' ? 'B' : 'A';
        beta.push_back(build_indexed(an, n, other).has(c) ? other : tr.alpha[k]);
    }
    return beta;
}

BetaCheck check_beta(const Analysis& an, const InductionTrace& tr, int v, const std::vector<char>& beta)
{
    BetaCheck r;
    for (std::size_t k = 0; k < beta.size(); ++k) {
        if (k > 0 && beta[k] != tr.alpha[k] && beta[k] != beta[k - 1]) {
            r.admissible = false;
            r.detail += "beta_" + std::to_string(k) + " not in {alpha_k, beta_{k-1}}; ";
        }
        const int n = tr.nk[k];
        const int c = an.level(n).class_of[v];
        if (c < 0 || !build_indexed(an, n, beta[k]).has(c)) {
            r.membership = false;
            r.detail += "ball at n_" + std::to_string(k) + " outside G^beta_k; ";
        }
    }
    return r;
}

int beta_agreement_from(const std::vector<char>& b1, const std::vector<char>& b2)
{
    const std::size_t n = std::min(b1.size(), b2.size());
    if (n == 0)
        return -1;
    int k0 = static_cast<int>(n);
    while (k0 > 0 && b1[k0 - 1] == b2[k0 - 1])
        --k0;
    return k0 == static_cast<int>(n) ? -1 : k0;
}

std::string trace_to_json(const InductionTrace& tr)
{
    using nlohmann::json;
    json j;
    j["schema"] = "stree.trace/1";
    j["K"] = tr.K;
    j["nk"] = tr.nk;
    j["alpha"] = tr.alpha;
    j["i"] = tr.i;
    j["cases"] = tr.cases;
    j["bounded"] = tr.bounded.bounded;
    j["cyclic"] = tr.bounded.cyclic;
    j["cycle_level"] = tr.bounded.cycle_level;
    j["evidence"] = tr.bounded.evidence;
    j["horizon"] = tr.last_level;
    j["warnings"] = tr.warnings;
    return j.dump();
}

} // namespace sturmian
