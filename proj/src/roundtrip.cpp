#include "sturmian/roundtrip.hpp"

#include <json.hpp>

namespace sturmian {

std::optional<PathWindow> find_path_window(const Graph& small, const Graph& host)
{
    const Graph s = linearized(small);
    const int m = static_cast<int>(s.vertices.size());
    for (bool rev : {false, true}) {
        const Graph h = linearized(host, rev);
        const int H = static_cast<int>(h.vertices.size());
        for (int o = 0; o + m <= H; ++o) {
            bool ok = true;
            for (int j = 0; j < m && ok; ++j) {
                const Vertex& a = s.vertices[j];
                const Vertex& b = h.vertices[o + j];
                ok = a.color == b.color;
                const bool interior = j > 0 && j + 1 < m && o + j > 0 && o + j + 1 < H;
                if (ok && interior)
                    ok = a.loop == b.loop;
                if (ok && j + 1 < m)
                    ok = s.edges[j].fwd == h.edges[o + j].fwd && s.edges[j].rev == h.edges[o + j].rev;
            }
            if (ok)
                return PathWindow{o, rev};
        }
    }
    return std::nullopt;
}

namespace {

std::string vec_str(const std::vector<int>& v)
{
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

} // namespace

RoundTripReport roundtrip_sequence(const AdmissibleSequence& s, int k_max)
{
    if (k_max < 0)
        throw Error(Errc::InvalidArgument, "k_max must be non-negative");
    const AlphaIReport adm = validate_alpha_i(s);
    if (!adm.ok)
        throw Error(Errc::Inadmissible, adm.to_string(), adm.k);
    const int avail = static_cast<int>(s.alpha.size()) - 1;
    if (avail < k_max)
        throw Error(Errc::InvalidArgument, "sequence has entries up to k = " + std::to_string(avail) + " only");

    RoundTripReport r;
    r.direction = "sequence";
    r.k_compared = k_max;
    for (int depth = k_max; depth <= avail; ++depth) {
        Prefix p = build_prefix(s, depth);
        // n_{k_max} read from the synthesis; one level past it decides A/B there
        const int n_max = p.nk[k_max] + 1;
        Analysis an(p.graph, n_max);
        if (an.chain_error() && an.chain_error()->code() != Errc::HorizonTooShort)
            throw *an.chain_error();
        InductionTrace tr = extract_trace(an);
        if (static_cast<int>(tr.alpha.size()) <= k_max)
            continue;
        r.synth_depth = depth;
        r.n_max = n_max;
        const int K = s.K >= 0 ? s.K : s.first_A();
        if (tr.K != K)
            r.diffs.push_back("K: expected " + std::to_string(K) + ", recovered " + std::to_string(tr.K));
        for (int k = 0; k <= k_max; ++k) {
            if (tr.alpha[k] != s.alpha[k])
                r.diffs.push_back("k=" + std::to_string(k) + ": alpha " + s.alpha[k] + " recovered as " + tr.alpha[k]);
            if (tr.i[k] != s.i[k])
                r.diffs.push_back("k=" + std::to_string(k) + ": i " + vec_str(s.i[k]) + " recovered as " + vec_str(tr.i[k]));
        }
        const int t = p.into_final[0][0];
        const std::string beta = s.beta_or_alpha();
        r.beta_in.assign(beta.begin(), beta.begin() + k_max);
        r.beta_out = beta_of_vertex(an, tr, t, k_max);
        r.beta_in.resize(r.beta_out.size());
        r.beta_tail_from = beta_agreement_from(r.beta_in, r.beta_out);
        if (r.beta_tail_from < 0 && !r.beta_out.empty())
            r.diffs.push_back("beta: recovered sequence differs at the last known k");
        r.trace = std::move(tr);
        r.ok = r.diffs.empty();
        return r;
    }
    throw Error(Errc::HorizonTooShort,
                "entries up to k = " + std::to_string(avail) + " do not let the analysis reach k = " + std::to_string(k_max),
                k_max);
}

RoundTripReport roundtrip_graph(const Graph& g, int n_max)
{
    if (!linear_order(g))
        throw Error(Errc::InvalidArgument, "graph round trip needs a path-shaped quotient");
    RoundTripReport r;
    r.direction = "graph";
    r.n_max = n_max;
    Analysis an(g, n_max);
    InductionTrace tr = extract_trace(an);
    if (tr.bounded.cyclic)
        throw Error(Errc::InvalidArgument, "cyclic coloring (" + tr.bounded.evidence + "): (alpha, i) exist for acyclic colorings only");
    const int m = static_cast<int>(tr.alpha.size()) - 1;   // beta_0..beta_{m-1} are readable
    if (m < 1)
        throw Error(Errc::HorizonTooShort, "fewer than two recovered stages", m);
    std::vector<char> beta;
    for (std::size_t t = 0; t < g.vertices.size() && beta.empty(); ++t) {
        try {
            auto b = beta_of_vertex(an, tr, static_cast<int>(t), m);
            if (static_cast<int>(b.size()) == m)
                beta = b;
        } catch (const Error&) {
        }
    }
    if (beta.empty())
        throw Error(Errc::HorizonTooShort, "no vertex with complete balls up to n_" + std::to_string(m), m);

    AdmissibleSequence s = tr.as_sequence(g.degree);
    s.alpha.resize(m);
    s.i.resize(m);
    s.beta.assign(beta.begin(), beta.end());
    s.tail = g.trunc_left && g.trunc_right ? "line" : "ray";
    r.k_compared = m - 1;
    r.synth_depth = m - 1;
    r.beta_out = beta;
    Prefix p = build_prefix(s, m - 1);
    r.regenerated_vertices = static_cast<int>(p.graph.vertices.size());
    r.window = find_path_window(p.graph, g);
    if (!r.window)
        r.diffs.push_back("regenerated prefix (" + std::to_string(r.regenerated_vertices) +
                          " vertices) does not occur in the input");
    r.trace = std::move(tr);
    r.ok = r.diffs.empty();
    return r;
}

std::string RoundTripReport::to_json() const
{
    using nlohmann::json;
    json j;
    j["schema"] = "stree.roundtrip/1";
    j["ok"] = ok;
    j["direction"] = direction;
    j["k_compared"] = k_compared;
    j["synth_depth"] = synth_depth;
    j["n_max"] = n_max;
    j["K"] = trace.K;
    j["alpha"] = trace.alpha;
    j["i"] = trace.i;
    j["nk"] = trace.nk;
    j["beta_in"] = std::string(beta_in.begin(), beta_in.end());
    j["beta_out"] = std::string(beta_out.begin(), beta_out.end());
    j["beta_tail_from"] = beta_tail_from;
    j["diffs"] = diffs;
    if (window) {
        j["window"] = {{"offset", window->offset}, {"reversed", window->reversed}};
        j["regenerated_vertices"] = regenerated_vertices;
    }
    return j.dump();
}

} // namespace sturmian
