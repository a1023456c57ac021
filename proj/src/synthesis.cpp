#include "sturmian/synthesis.hpp"

#include <sstream>

#include <json.hpp>

#include "sturmian/concat.hpp"

namespace sturmian {

using nlohmann::json;

int AdmissibleSequence::first_A() const
{
    auto p = alpha.find('A');
    return p == std::string::npos ? -1 : static_cast<int>(p);
}

AdmissibleSequence sequence_from_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::SyntaxError, std::string("sequence JSON: ") + e.what());
    }
    AdmissibleSequence s;
    try {
        if (j.contains("schema") && j.at("schema").get<std::string>().rfind("stree.sequence/", 0) != 0)
            throw Error(Errc::SyntaxError, "sequence JSON: unknown schema " + j.at("schema").dump());
        s.d = j.at("d").get<int>();
        s.alpha = j.at("alpha").get<std::string>();
        for (const auto& x : j.at("i")) {
            if (x.is_number_integer())
                s.i.push_back({x.get<int>()});
            else
                s.i.push_back(x.get<std::vector<int>>());
        }
        if (j.contains("K"))
            s.K = j.at("K").get<int>();
        if (j.contains("beta"))
            s.beta = j.at("beta").get<std::string>();
        if (j.contains("tail"))
            s.tail = j.at("tail").get<std::string>();
    } catch (const json::exception& e) {
        throw Error(Errc::SyntaxError, std::string("sequence JSON: ") + e.what());
    }
    for (char c : s.alpha + s.beta)
        if (c != 'A' && c != 'B')
            throw Error(Errc::SyntaxError, std::string("letter '") + c + "' in alpha/beta");
    if (s.tail != "line" && s.tail != "ray")
        throw Error(Errc::SyntaxError, "tail must be \"line\" or \"ray\"");
    if (s.d < 1)
        throw Error(Errc::SyntaxError, "d must be positive");
    return s;
}

std::string sequence_to_json(const AdmissibleSequence& s)
{
    json j;
    j["schema"] = "stree.sequence/1";
    j["d"] = s.d;
    j["K"] = s.K >= 0 ? s.K : s.first_A();
    j["alpha"] = s.alpha;
    j["i"] = s.i;
    if (!s.beta.empty())
        j["beta"] = s.beta;
    if (s.tail != "line")
        j["tail"] = s.tail;
    return j.dump();
}

std::string AlphaIReport::to_string() const
{
    if (ok)
        return "admissible";
    std::ostringstream os;
    os << "k=" << k << ": violates " << inequality;
    if (!detail.empty())
        os << " (" << detail << ")";
    return os.str();
}

AlphaIReport validate_alpha_i(const AdmissibleSequence& s)
{
    AlphaIReport r;
    const int d = s.d;
    const int K = s.first_A();
    r.K = K;
    auto fail = [&](int k, const std::string& ineq, const std::string& detail = "") {
        r.ok = false;
        r.k = k;
        r.inequality = ineq;
        r.detail = detail;
        return r;
    };
    if (K < 0)
        return fail(-1, "K = min{k : α_k = A} exists", "alpha has no A");
    if (s.K >= 0 && s.K != K)
        return fail(K, "K = min{k : α_k = A}", "declared K=" + std::to_string(s.K));
    if (s.i.size() < s.alpha.size())
        return fail(static_cast<int>(s.i.size()), "one 𝐢_k per α_k");
    auto first = [&](int k) { return k < 0 ? 0 : s.i[k][0]; };
    auto show = [](const std::vector<int>& v) {
        std::string t = "(";
        for (std::size_t x = 0; x < v.size(); ++x)
            t += (x ? ", " : "") + std::to_string(v[x]);
        return t + ")";
    };
    const int n = static_cast<int>(s.alpha.size());
    for (int k = 0; k < n; ++k) {
        const auto& ik = s.i[k];
        for (int x : ik)
            if (x < 1 || x > d)
                return fail(k, "𝐢_k ∈ 𝒟^r with 𝒟 = {1, ..., d}", show(ik));
        if (k < K) {
            if (ik.size() != 2)
                return fail(k, "𝐢_k = (i_k, j_k) for k < K", show(ik));
            if (!(ik[0] < d))
                return fail(k, "1 ≤ i_k < d", show(ik));
            if (!(ik[1] <= d - first(k - 1)))
                return fail(k, "1 ≤ j_k ≤ d − i_{k−1}", show(ik));
        } else if (k == K) {
            if (ik.size() == 3) {
                if (!(ik[0] < ik[1]))
                    return fail(k, "1 ≤ i_K < i′_K ≤ d", show(ik));
                if (!(ik[2] <= d - first(k - 1)))
                    return fail(k, "1 ≤ j_K ≤ d − i_{K−1}", show(ik));
                r.triples.push_back({ik[0], ik[1], s.i[0].back()});
            } else if (ik.size() == 2) {
                if (K == 0)
                    return fail(k, "𝐢_K ∈ 𝒟^3 if K = 0", show(ik));
                if (!(ik[1] <= d - first(k - 1)))
                    return fail(k, "1 ≤ j_K ≤ d − i_{K−1}", show(ik));
                // (i, j) read as (0, i, j)
                r.triples.push_back({ik[0], first(k - 1), s.i[0].back()});
            } else {
                return fail(k, "𝐢_K ∈ 𝒟^2 ∪ 𝒟^3", show(ik));
            }
        } else {
            const EndTriple prev = r.triples.back();
            const int C = prev[2];
            if (ik.size() == 1) {
                if (!(ik[0] < C))
                    return fail(k, "1 ≤ i_k < 𝔦^C_{k−1}", show(ik) + ", 𝔦^C_{k−1}=" + std::to_string(C));
            } else if (ik.size() == 2) {
                if (!(ik[0] <= d - C))
                    return fail(k, "1 ≤ i_k ≤ d − 𝔦^C_{k−1}", show(ik) + ", 𝔦^C_{k−1}=" + std::to_string(C));
                if (!(ik[1] <= d - C))
                    return fail(k, "1 ≤ j_k ≤ d − 𝔦^C_{k−1}", show(ik) + ", 𝔦^C_{k−1}=" + std::to_string(C));
            } else {
                return fail(k, "𝐢_k ∈ 𝒟 ∪ 𝒟^2 for k > K", show(ik));
            }
            const int a = s.alpha[k] == 'A' ? 0 : 1;
            EndTriple t;
            t[2] = prev[1 - a];
            t[a] = prev[a];
            t[1 - a] = prev[2];
            r.triples.push_back(t);
        }
    }
    return r;
}

bool validate_beta(const std::string& alpha, const std::string& beta)
{
    if (alpha.size() != beta.size())
        return false;
    for (std::size_t k = 0; k < beta.size(); ++k) {
        char b = beta[k];
        if (b != 'A' && b != 'B')
            return false;
        if (k > 0 && b != alpha[k] && b != beta[k - 1])
            return false;
    }
    return true;
}

FrameState initial_state(int d)
{
    FrameState st;
    st.k = -1;
    st.A.g.degree = st.B.g.degree = d;
    st.A.g.vertices.push_back(Vertex{0, 'a', d});
    st.B.g.vertices.push_back(Vertex{0, 'b', d});
    st.A.common = st.A.noncommon = 0;
    st.B.common = st.B.noncommon = 0;
    st.A.joint = st.B.joint = 0;
    st.b_end = 0;
    return st;
}

namespace {

void keep(Frame& f)
{
    f.changed = false;
    f.from_A.clear();
    f.from_B.clear();
}

} // namespace

FrameState synth_step(const FrameState& st, const std::vector<int>& ik, char alpha_k, int K)
{
    FrameState nx = st;
    const int k = st.k + 1;
    nx.k = k;
    keep(nx.A);
    keep(nx.B);
    ConcatMap m;
    if (k < K) {
        nx.B.g = concat_ij(st.A.g, 0, st.B.g, st.B.joint, ik.at(0), ik.at(1), &m);
        nx.B.changed = true;
        nx.B.from_A = m.left;
        nx.B.from_B = m.right;
        nx.B.joint = m.left[0];
        nx.b_end = m.right[st.b_end];
        nx.B.common = nx.b_end;
        nx.B.noncommon = nx.B.joint;
        return nx;
    }
    if (k == K) {
        const bool three = ik.size() == 3;
        const int iA = ik.at(0);
        const int j = ik.back();
        nx.A.g = concat_ij(st.A.g, 0, st.B.g, st.B.joint, iA, j, &m);
        nx.A.changed = true;
        nx.A.from_A = m.left;
        nx.A.from_B = m.right;
        nx.A.common = m.right[st.b_end];
        nx.A.noncommon = m.left[0];
        if (three) {
            nx.B.g = concat_ij(st.A.g, 0, st.B.g, st.B.joint, ik.at(1), j, &m);
            nx.B.changed = true;
            nx.B.from_A = m.left;
            nx.B.from_B = m.right;
            nx.B.common = m.right[st.b_end];
            nx.B.noncommon = m.left[0];
        } else {
            nx.B.common = st.b_end;
            nx.B.noncommon = st.B.joint;
        }
        return nx;
    }
    const bool toA = alpha_k == 'A';
    Frame& grown = toA ? nx.A : nx.B;
    Frame& other = toA ? nx.B : nx.A;
    const Frame& old_other = toA ? st.B : st.A;
    const Frame& old_grown = toA ? st.A : st.B;
    if (ik.size() == 1)
        grown.g = concat_i(st.A.g, st.A.common, st.B.g, st.B.common, ik[0], &m);
    else
        grown.g = concat_ij(st.A.g, st.A.common, st.B.g, st.B.common, ik.at(0), ik.at(1), &m);
    grown.changed = true;
    grown.from_A = m.left;
    grown.from_B = m.right;
    const std::vector<int>& map_other = toA ? m.right : m.left;
    const std::vector<int>& map_self = toA ? m.left : m.right;
    grown.common = map_other[old_other.noncommon];
    grown.noncommon = map_self[old_grown.noncommon];
    other.common = old_other.noncommon;
    other.noncommon = old_other.common;
    return nx;
}

Prefix build_prefix(const AdmissibleSequence& s, int k_max)
{
    if (k_max < 0)
        throw Error(Errc::InvalidArgument, "k_max must be non-negative");
    if (static_cast<int>(s.alpha.size()) < k_max + 1 || static_cast<int>(s.i.size()) < k_max + 1)
        throw Error(Errc::InvalidArgument, "sequence shorter than k_max + 1");
    AlphaIReport rep = validate_alpha_i(s);
    if (!rep.ok)
        throw Error(Errc::Inadmissible, rep.to_string(), rep.k);
    const std::string beta = s.beta_or_alpha();
    if (static_cast<int>(beta.size()) < k_max + 1)
        throw Error(Errc::InvalidArgument, "beta shorter than k_max + 1");
    if (!validate_beta(s.alpha.substr(0, beta.size()), beta))
        throw Error(Errc::Inadmissible, "β_k = α_k or β_{k−1} fails");
    const int K = rep.K;

    Prefix p;
    FrameState st = initial_state(s.d);
    for (int k = 0; k <= k_max; ++k) {
        st = synth_step(st, s.i[k], s.alpha[k], K);
        p.states.push_back(st);
        const Frame& fa = s.alpha[k] == 'A' ? st.A : st.B;
        p.nk.push_back(static_cast<int>(fa.g.vertices.size()) - 2);
    }

    p.embed.resize(k_max + 1);
    for (int k = 1; k <= k_max; ++k) {
        const Frame& cur = beta[k] == 'A' ? p.states[k].A : p.states[k].B;
        const char prev = beta[k - 1];
        if (cur.changed) {
            p.embed[k] = prev == 'A' ? cur.from_A : cur.from_B;
        } else {
            // unchanged side: beta admissibility forces prev == beta[k]
            p.embed[k].resize(cur.g.vertices.size());
            for (std::size_t v = 0; v < cur.g.vertices.size(); ++v)
                p.embed[k][v] = static_cast<int>(v);
        }
    }

    const Frame& last = beta[k_max] == 'A' ? p.states[k_max].A : p.states[k_max].B;
    Graph g = last.g;
    g.marks["common"] = last.common;
    g.marks["noncommon"] = last.noncommon;
    std::vector<int> pos;
    auto ord = linear_order(g);
    bool rev = ord && !ord->empty() && g.vertices[ord->front()].id != last.noncommon;
    p.graph = linearized(g, rev, &pos);
    if (p.graph.vertices.size() > 1) {
        if (s.tail == "ray")
            p.graph.trunc_right = true;
        else
            p.graph.trunc_left = p.graph.trunc_right = true;
    }

    p.into_final.resize(k_max + 1);
    p.into_final[k_max] = pos;
    for (int k = k_max - 1; k >= 0; --k) {
        const auto& e = p.embed[k + 1];
        p.into_final[k].resize(e.size());
        for (std::size_t v = 0; v < e.size(); ++v)
            p.into_final[k][v] = p.into_final[k + 1][e[v]];
    }
    return p;
}

} // namespace sturmian
