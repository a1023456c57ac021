// stree: command-line front end.
// Exit codes: 0 ok, 1 input/parse error, 2 not Sturmian / inadmissible /
// mismatch, 3 horizon or precision too short.
#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "sturmian/roundtrip.hpp"
#include "sturmian/words.hpp"

using namespace sturmian;
using nlohmann::json;

namespace {

int exit_code(Errc c)
{
    switch (c) {
    case Errc::NotSturmian:
    case Errc::AmbiguousAssignment:
    case Errc::IllDefined:
    case Errc::EndMismatch:
    case Errc::IndexOutOfRange:
    case Errc::DecompositionMismatch:
    case Errc::Inadmissible:
        return 2;
    case Errc::TruncationHit:
    case Errc::EmptyWindow:
    case Errc::RadiusTooLarge:
    case Errc::HorizonTooShort:
    case Errc::PrecisionInsufficient:
    case Errc::PrefixTooShort:
        return 3;
    default:
        return 1;
    }
}

bool is_json_path(const std::string& p)
{
    return std::filesystem::path(p).extension() == ".json";
}

void emit(const std::string& path, const std::string& text)
{
    if (path == "-")
        std::cout << text;
    else
        write_file_atomic(path, text);
}

std::string join(const std::vector<int>& v, const char* sep = " ")
{
    std::ostringstream os;
    for (std::size_t k = 0; k < v.size(); ++k)
        os << (k ? sep : "") << v[k];
    return os.str();
}

std::string show_i(const std::vector<std::vector<int>>& i)
{
    std::string s;
    for (const auto& x : i)
        s += "(" + join(x, ",") + ")";
    return s;
}

Graph load_valid_graph(const std::string& path)
{
    Graph g = read_eig_file(path);
    ValidationReport rep = validate_graph(g);
    if (!rep.ok())
        throw Error(Errc::SyntaxError, path + " does not validate:\n" + rep.to_string());
    return g;
}

/* ---------------- analyze ---------------- */

struct AnalyzeOpts {
    std::string input;
    int n_max = 10;
    std::string json_path;
    std::string out_dir;
};

int cmd_analyze(const AnalyzeOpts& o)
{
    const Graph g = load_valid_graph(o.input);
    Analysis an(g, o.n_max);
    const Profile p = an.profile();

    json rep;
    rep["schema"] = "stree.analyze/1";
    rep["input"] = std::filesystem::path(o.input).filename().string();
    rep["n_max"] = o.n_max;
    rep["horizon"] = an.horizon();
    rep["profile"] = {{"b", p.b}, {"sturmian", p.sturmian}, {"cut_reason", p.cut_reason}};
    rep["chain"] = json::array();
    for (const ChainEntry& c : an.chain())
        if (c.n <= o.n_max)
            rep["chain"].push_back({{"n", c.n}, {"S", c.S}, {"A", c.A}, {"B", c.B}, {"C", c.C}});

    std::cout << "b: " << join(p.b) << "\n";
    if (!p.cut_reason.empty())
        std::cout << "profile stops: " << p.cut_reason << "\n";
    for (const ChainEntry& c : an.chain())
        if (c.n <= o.n_max)
            std::cout << "n=" << c.n << " S=" << c.S << " A=" << c.A << " B=" << c.B << " C=" << c.C << "\n";

    std::optional<Error> failure;
    if (!p.sturmian) {
        for (std::size_t n = 0; n < p.b.size(); ++n)
            if (p.b[n] != static_cast<int>(n) + 2) {
                failure = Error(Errc::NotSturmian, "b_" + std::to_string(n) + " = " + std::to_string(p.b[n]) +
                                                       ", expected " + std::to_string(n + 2),
                                static_cast<long long>(n));
                break;
            }
        if (!failure)
            failure = Error(Errc::HorizonTooShort, "no complete level: " + p.cut_reason);
    } else if (an.chain_error()) {
        failure = *an.chain_error();
    }

    std::optional<InductionTrace> trace;
    if (!failure) {
        try {
            trace = extract_trace(an);
        } catch (const Error& e) {
            failure = e;
        }
    }
    json lemma_failures = json::array();
    if (trace) {
        rep["trace"] = json::parse(trace_to_json(*trace));
        std::cout << "K: " << trace->K << "\nn_k: " << join(trace->nk) << "\nalpha: " << trace->alpha
                  << "\ni: " << show_i(trace->i) << "\n";
        std::cout << (trace->bounded.bounded ? "bounded" : "unbounded so far") << ": " << trace->bounded.evidence << "\n";
        for (const std::string& w : trace->warnings)
            std::cout << "warning: " << w << "\n";
        const bool acyclic = !trace->bounded.cyclic;
        for (int n = 0; n + 1 < static_cast<int>(an.chain().size()) && n <= o.n_max; ++n)
            for (const std::string& f : check_lemmas(an, n, acyclic).failures)
                lemma_failures.push_back(f);
        std::cout << "lemma checks: " << (lemma_failures.empty() ? "all hold" : "failures") << "\n";
        for (const auto& f : lemma_failures)
            std::cout << "  " << f.get<std::string>() << "\n";
    } else {
        rep["trace"] = nullptr;
    }
    rep["lemma_failures"] = lemma_failures;
    if (!failure && p.b.size() < static_cast<std::size_t>(o.n_max) + 1)
        failure = Error(Errc::HorizonTooShort, "complete levels stop at n = " + std::to_string(p.b.size() - 1) + " < n_max = " +
                                                   std::to_string(o.n_max) + " (" + p.cut_reason + ")");
    rep["error"] = failure ? json(failure->what()) : json(nullptr);

    if (!o.json_path.empty())
        emit(o.json_path, rep.dump() + "\n");
    if (!o.out_dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(o.out_dir);
        const fs::path dir = o.out_dir;
        write_file_atomic((dir / "report.json").string(), rep.dump(2) + "\n");
        if (trace)
            write_file_atomic((dir / "trace.json").string(), trace_to_json(*trace) + "\n");
        const int last = std::min(o.n_max, static_cast<int>(an.chain().size()) - 2);
        for (int n = 0; n <= std::min(an.top(), o.n_max); ++n) {
            const std::string sfx = "_" + std::to_string(n);
            write_file_atomic((dir / ("G" + sfx + ".dot")).string(),
                              to_dot(ball_graph_as_eig(an, build_Gn(an, n)), "G" + sfx));
            if (n > last)
                continue;
            for (char side : {'A', 'B'}) {
                try {
                    const IndexedBallGraph ig = build_indexed(an, n, side);
                    const std::string name = std::string("G") + side + sfx;
                    write_file_atomic((dir / (name + ".dot")).string(), to_dot(ig.g, name));
                } catch (const Error&) {
                }
            }
        }
    }
    if (failure) {
        std::cerr << "stree: " << failure->what() << "\n";
        return exit_code(failure->code());
    }
    return 0;
}

/* ---------------- synthesize ---------------- */

struct SynthOpts {
    std::string input;
    int k_max = -1;
    std::string out = "-";
    std::string maps;
};

AdmissibleSequence load_sequence(const std::string& path)
{
    AdmissibleSequence s = sequence_from_json(read_file(path));
    const AlphaIReport r = validate_alpha_i(s);
    if (!r.ok)
        throw Error(Errc::Inadmissible, r.to_string(), r.k);
    if (!s.beta.empty() && !validate_beta(s.alpha.substr(0, s.beta.size()), s.beta))
        throw Error(Errc::Inadmissible, "beta_k must equal alpha_k or beta_{k-1}");
    return s;
}

int cmd_synthesize(const SynthOpts& o)
{
    const AdmissibleSequence s = load_sequence(o.input);
    const int k_max = o.k_max >= 0 ? o.k_max : static_cast<int>(s.alpha.size()) - 1;
    const Prefix p = build_prefix(s, k_max);
    emit(o.out, serialize_eig(p.graph));
    if (!o.maps.empty()) {
        json m;
        m["schema"] = "stree.synthesis-maps/1";
        m["k_max"] = k_max;
        m["nk"] = p.nk;
        m["into_final"] = p.into_final;
        m["embed"] = p.embed;
        emit(o.maps, m.dump() + "\n");
    }
    return 0;
}

/* ---------------- roundtrip ---------------- */

struct RoundOpts {
    std::string input;
    int k_max = 6;
    int n_max = 12;
    std::string json_path;
};

int cmd_roundtrip(const RoundOpts& o)
{
    RoundTripReport r;
    if (is_json_path(o.input))
        r = roundtrip_sequence(load_sequence(o.input), o.k_max);
    else
        r = roundtrip_graph(load_valid_graph(o.input), o.n_max);
    if (!o.json_path.empty())
        emit(o.json_path, r.to_json() + "\n");
    std::cout << "direction: " << r.direction << "\nK: " << r.trace.K << "\nalpha: " << r.trace.alpha.substr(0, r.k_compared + 1)
              << "\ni: ";
    std::vector<std::vector<int>> shown(r.trace.i.begin(), r.trace.i.begin() + std::min<std::size_t>(r.trace.i.size(), r.k_compared + 1));
    std::cout << show_i(shown) << "\n";
    std::cout << "beta: " << std::string(r.beta_out.begin(), r.beta_out.end());
    if (r.direction == "sequence")
        std::cout << " (input " << std::string(r.beta_in.begin(), r.beta_in.end()) << ", equal from k=" << r.beta_tail_from << ")";
    std::cout << "\n";
    if (r.window)
        std::cout << "regenerated prefix: " << r.regenerated_vertices << " vertices at offset " << r.window->offset
                  << (r.window->reversed ? " (reversed)" : "") << "\n";
    if (r.ok) {
        std::cout << "round trip ok (k = 0.." << r.k_compared << ")\n";
        return 0;
    }
    std::cout << "round trip FAILED\n";
    for (const std::string& d : r.diffs)
        std::cout << "  " << d << "\n";
    return 2;
}

/* ---------------- word ---------------- */

struct WordOpts {
    std::string cf;
    std::string theta;
    std::string rho = "0";
    int len = 0;
    std::string mode = "floor";
    int rauzy = -1;
};

std::string word_of(const WordOpts& o, int length)
{
    if (!o.cf.empty() && !o.theta.empty())
        throw Error(Errc::InvalidArgument, "give either --cf or --theta");
    if (!o.cf.empty()) {
        std::string text = o.cf;
        bool periodic = false;
        const auto dots = text.find("...");
        if (dots != std::string::npos) {
            periodic = true;
            text.erase(dots);
        }
        std::vector<int> a;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) {
                try {
                    a.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    throw Error(Errc::SyntaxError, "bad partial quotient '" + tok + "'");
                }
            }
        if (a.empty())
            throw Error(Errc::SyntaxError, "no partial quotients in --cf");
        if (periodic)
            return cf_word(a, length);
        const std::string w = cf_induction(a, static_cast<int>(a.size())).prefix;
        if (static_cast<int>(w.size()) < length)
            throw Error(Errc::PrefixTooShort, "the quotients give a common prefix of " + std::to_string(w.size()) +
                                                  " letters; append ',...' to repeat the last one");
        return w.substr(0, length);
    }
    if (!o.theta.empty())
        return mechanical_word(parse_surd(o.theta), parse_surd(o.rho), length,
                               o.mode == "ceil" ? Rounding::Ceil : Rounding::Floor);
    throw Error(Errc::InvalidArgument, "give --cf or --theta");
}

int cmd_word(const WordOpts& o)
{
    if (o.mode != "floor" && o.mode != "ceil")
        throw Error(Errc::InvalidArgument, "--mode is floor or ceil");
    if (o.rauzy >= 0) {
        const int length = std::max(o.len, 10 * o.rauzy + 100);
        const RauzyGraph r = word_rauzy_graph(word_of(o, length), o.rauzy);
        std::cout << r.to_dot();
        return 0;
    }
    if (o.len <= 0)
        return 0;
    std::cout << word_of(o, o.len) << "\n";
    return 0;
}

/* ---------------- export-dot / validate ---------------- */

struct DotOpts {
    std::string input;
    std::string out = "-";
    int level = -1;
    std::string side = "G";
};

int cmd_export_dot(const DotOpts& o)
{
    const Graph g = load_valid_graph(o.input);
    if (o.level < 0) {
        emit(o.out, to_dot(g));
        return 0;
    }
    Analysis an(g, o.level);
    if (an.top() < o.level)
        throw Error(Errc::HorizonTooShort, "level " + std::to_string(o.level) + " is beyond the horizon " + std::to_string(an.top()));
    const std::string name = (o.side == "G" ? std::string("G") : "G" + o.side) + "_" + std::to_string(o.level);
    if (o.side == "G") {
        emit(o.out, to_dot(ball_graph_as_eig(an, build_Gn(an, o.level)), name));
    } else if (o.side == "A" || o.side == "B") {
        if (an.chain_error() && static_cast<int>(an.chain().size()) <= o.level + 1)
            throw *an.chain_error();
        emit(o.out, to_dot(build_indexed(an, o.level, o.side[0]).g, name));
    } else {
        throw Error(Errc::InvalidArgument, "--side is G, A or B");
    }
    return 0;
}

int cmd_validate(const std::string& input)
{
    if (is_json_path(input)) {
        const AdmissibleSequence s = sequence_from_json(read_file(input));
        const AlphaIReport r = validate_alpha_i(s);
        std::cout << r.to_string() << "\n";
        if (!r.ok)
            return 2;
        if (!s.beta.empty() && !validate_beta(s.alpha.substr(0, s.beta.size()), s.beta)) {
            std::cout << "beta is not admissible\n";
            return 2;
        }
        return 0;
    }
    const Graph g = read_eig_file(input);
    const ValidationReport r = validate_graph(g);
    if (r.ok()) {
        std::cout << "valid: " << g.vertices.size() << " vertices, degree " << g.degree << "\n";
        return 0;
    }
    std::cout << r.to_string();
    return 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Sturmian colorings of regular trees and Sturmian words"};
    app.require_subcommand(1);

    AnalyzeOpts ao;
    auto* analyze = app.add_subcommand("analyze", "ball classes, special chain, ball graphs and induction trace");
    analyze->add_option("--input", ao.input, ".eig file")->required();
    analyze->add_option("--nmax", ao.n_max, "largest radius")->check(CLI::NonNegativeNumber);
    analyze->add_option("--json", ao.json_path, "report file ('-' for stdout)");
    analyze->add_option("--out-dir", ao.out_dir, "directory for DOT files and JSON reports");

    SynthOpts so;
    auto* synth = app.add_subcommand("synthesize", "prefix graph of an admissible sequence");
    synth->add_option("--input", so.input, "sequence JSON")->required();
    synth->add_option("--kmax", so.k_max, "depth")->check(CLI::NonNegativeNumber);
    synth->add_option("--out", so.out, ".eig output ('-' for stdout)");
    synth->add_option("--maps", so.maps, "embedding maps JSON");

    RoundOpts ro;
    auto* round = app.add_subcommand("roundtrip", "synthesis then analysis (sequence input) or the reverse (graph input)");
    round->add_option("--input", ro.input, "sequence JSON or .eig file")->required();
    round->add_option("--kmax", ro.k_max, "entries compared for a sequence")->check(CLI::NonNegativeNumber);
    round->add_option("--nmax", ro.n_max, "analysis radius for a graph")->check(CLI::NonNegativeNumber);
    round->add_option("--json", ro.json_path, "report file ('-' for stdout)");

    WordOpts wo;
    auto* word = app.add_subcommand("word", "mechanical and continued-fraction words, Rauzy graphs");
    word->add_option("--cf", wo.cf, "partial quotients a_1,a_2,...; a trailing ',...' repeats the last");
    word->add_option("--theta", wo.theta, "slope, e.g. (3-sqrt5)/2 or 13/34");
    word->add_option("--rho", wo.rho, "intercept");
    word->add_option("--len", wo.len, "word length")->check(CLI::NonNegativeNumber);
    word->add_option("--mode", wo.mode, "floor or ceil");
    word->add_option("--rauzy", wo.rauzy, "print the Rauzy graph of order n as DOT")->check(CLI::NonNegativeNumber);

    DotOpts dopt;
    auto* dot = app.add_subcommand("export-dot", "DOT of a graph or of one of its ball graphs");
    dot->add_option("--input", dopt.input, ".eig file")->required();
    dot->add_option("--out", dopt.out, "output ('-' for stdout)");
    dot->add_option("--level", dopt.level, "ball graph radius")->check(CLI::NonNegativeNumber);
    dot->add_option("--side", dopt.side, "G, A or B");

    std::string vin;
    auto* val = app.add_subcommand("validate", "check an .eig file or a sequence JSON");
    val->add_option("--input", vin, "file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*analyze)
            return cmd_analyze(ao);
        if (*synth)
            return cmd_synthesize(so);
        if (*round)
            return cmd_roundtrip(ro);
        if (*word)
            return cmd_word(wo);
        if (*dot)
            return cmd_export_dot(dopt);
        if (*val)
            return cmd_validate(vin);
    } catch (const Error& e) {
        std::cerr << "stree: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "stree: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
