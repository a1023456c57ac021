#include "sturmian/words.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <string_view>

namespace sturmian {

using i128 = __int128;

namespace {

long long isqrt(long long x)
{
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x)
        --r;
    while ((r + 1) * (r + 1) <= x)
        ++r;
    return r;
}

long long narrow(i128 v)
{
    if (v > static_cast<i128>(INT64_MAX) || v < static_cast<i128>(INT64_MIN))
        throw Error(Errc::PrecisionInsufficient, "surd arithmetic overflows 64 bits");
    return static_cast<long long>(v);
}

i128 gcd128(i128 a, i128 b)
{
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Surd make(i128 P, i128 Q, long long D, i128 R)
{
    if (R == 0)
        throw Error(Errc::InvalidArgument, "division by zero");
    if (R < 0) {
        P = -P;
        Q = -Q;
        R = -R;
    }
    if (D == 0)
        Q = 0;
    if (Q != 0) {
        long long s = isqrt(D);
        if (s * s == D) {
            P += Q * s;
            Q = 0;
        }
    }
    if (Q == 0)
        D = 0;
    i128 g = gcd128(gcd128(P, Q), R);
    if (g > 1) {
        P /= g;
        Q /= g;
        R /= g;
    }
    Surd s;
    s.P = narrow(P);
    s.Q = narrow(Q);
    s.D = D;
    s.R = narrow(R);
    return s;
}

long long common_D(const Surd& a, const Surd& b)
{
    if (a.is_rational())
        return b.D;
    if (b.is_rational() || a.D == b.D)
        return a.D;
    throw Error(Errc::InvalidArgument, "surds with different radicands: " + a.to_string() + ", " + b.to_string());
}

/* true iff a <= Q sqrt(D) */
bool le_root(i128 a, i128 Q, long long D)
{
    if (Q >= 0)
        return a <= 0 || a * a <= Q * Q * D;
    return a <= 0 && a * a >= Q * Q * D;
}

Surd mul(const Surd& a, const Surd& b)
{
    long long D = common_D(a, b);
    i128 P = static_cast<i128>(a.P) * b.P + static_cast<i128>(a.Q) * b.Q * D;
    i128 Q = static_cast<i128>(a.P) * b.Q + static_cast<i128>(a.Q) * b.P;
    return make(P, Q, D, static_cast<i128>(a.R) * b.R);
}

Surd reciprocal(const Surd& a)
{
    // R / (P + Q sqrt D) = R (P - Q sqrt D) / (P^2 - Q^2 D)
    i128 den = static_cast<i128>(a.P) * a.P - static_cast<i128>(a.Q) * a.Q * a.D;
    if (den == 0)
        throw Error(Errc::InvalidArgument, "division by zero");
    return make(static_cast<i128>(a.R) * a.P, -static_cast<i128>(a.R) * a.Q, a.D, den);
}

class SurdParser {
public:
    explicit SurdParser(const std::string& s) : s_(s) {}

    Surd parse()
    {
        Surd v = expr();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const
    {
        throw Error(Errc::SyntaxError, "in '" + s_ + "' at " + std::to_string(pos_) + ": " + why,
                    static_cast<long long>(pos_));
    }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Surd expr()
    {
        Surd v = term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v + (-1) * term();
            else
                return v;
        }
    }
    Surd term()
    {
        Surd v = unary();
        for (;;) {
            if (eat('*'))
                v = mul(v, unary());
            else if (eat('/'))
                v = mul(v, reciprocal(unary()));
            else
                return v;
        }
    }
    Surd unary()
    {
        if (eat('-'))
            return (-1) * unary();
        if (eat('+'))
            return unary();
        return primary();
    }
    Surd number()
    {
        skip();
        std::size_t start = pos_;
        i128 num = 0, den = 1;
        bool frac = false;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || (s_[pos_] == '.' && !frac))) {
            if (s_[pos_] == '.') {
                frac = true;
            } else {
                num = num * 10 + (s_[pos_] - '0');
                if (frac)
                    den *= 10;
                if (num > static_cast<i128>(1) << 62 || den > static_cast<i128>(1) << 62)
                    fail("number too long");
            }
            ++pos_;
        }
        if (pos_ == start)
            fail("number expected");
        return make(num, 0, 0, den);
    }
    Surd primary()
    {
        skip();
        if (eat('(')) {
            Surd v = expr();
            if (!eat(')'))
                fail("')' expected");
            return v;
        }
        if (s_.compare(pos_, 4, "sqrt") == 0) {
            pos_ += 4;
            Surd arg;
            if (eat('(')) {
                arg = expr();
                if (!eat(')'))
                    fail("')' expected");
            } else {
                arg = number();
            }
            if (arg.Q != 0 || arg.R != 1 || arg.P < 0)
                fail("sqrt takes a non-negative integer");
            return make(0, 1, arg.P, 1);
        }
        return number();
    }
};

} // namespace

Surd Surd::rational(long long p, long long q)
{
    return make(p, 0, 0, q);
}

double Surd::approx() const
{
    return (static_cast<double>(P) + static_cast<double>(Q) * std::sqrt(static_cast<double>(D))) / static_cast<double>(R);
}

std::string Surd::to_string() const
{
    std::ostringstream os;
    if (Q == 0) {
        os << P;
        if (R != 1)
            os << '/' << R;
        return os.str();
    }
    os << '(' << P << (Q < 0 ? '-' : '+') << (Q < 0 ? -Q : Q) << "*sqrt" << D << ")/" << R;
    return os.str();
}

Surd parse_surd(const std::string& text)
{
    return SurdParser(text).parse();
}

Surd operator+(const Surd& a, const Surd& b)
{
    long long D = common_D(a, b);
    return make(static_cast<i128>(a.P) * b.R + static_cast<i128>(b.P) * a.R,
                static_cast<i128>(a.Q) * b.R + static_cast<i128>(b.Q) * a.R, D, static_cast<i128>(a.R) * b.R);
}

Surd operator*(long long k, const Surd& a)
{
    return make(static_cast<i128>(k) * a.P, static_cast<i128>(k) * a.Q, a.D, a.R);
}

long long floor_of(const Surd& x)
{
    // largest m with m R - P <= Q sqrt D
    long long m = static_cast<long long>(std::floor(x.approx()));
    auto ok = [&](long long c) { return le_root(static_cast<i128>(c) * x.R - x.P, x.Q, x.D); };
    while (!ok(m))
        --m;
    while (ok(m + 1))
        ++m;
    return m;
}

long long ceil_of(const Surd& x)
{
    return -floor_of((-1) * x);
}

std::vector<int> continued_fraction(const Surd& x, int terms)
{
    std::vector<int> out;
    Surd y = x;
    for (int k = 0; k < terms; ++k) {
        long long a = floor_of(y);
        out.push_back(static_cast<int>(a));
        Surd f = y + Surd::rational(-a, 1);
        if (f.P == 0 && f.Q == 0)
            break;
        y = reciprocal(f);
    }
    return out;
}

std::string mechanical_word(const Surd& theta, const Surd& rho, int length, Rounding mode)
{
    if (length < 0)
        throw Error(Errc::InvalidArgument, "negative length");
    const Surd zero, one = Surd::rational(1, 1);
    auto less = [](const Surd& a, const Surd& b) {
        // a < b, exact
        Surd d = b + (-1) * a;
        return floor_of(d) >= 0 && !(d.P == 0 && d.Q == 0);
    };
    if (!less(zero, theta) || !less(theta, one))
        throw Error(Errc::InvalidArgument, "theta must lie in (0, 1)");
    if (less(rho, zero) || !less(rho, one))
        throw Error(Errc::InvalidArgument, "rho must lie in [0, 1)");
    auto rational_den = [](const Surd& s) { return s.is_rational() ? s.R : 0; };
    const long long need = static_cast<long long>(length) * length;
    if (rational_den(theta) && theta.R <= need)
        throw Error(Errc::PrecisionInsufficient, "rational slope " + theta.to_string() + " needs a denominator above " +
                                                     std::to_string(need) + " for length " + std::to_string(length));
    auto round = [&](const Surd& s) { return mode == Rounding::Floor ? floor_of(s) : ceil_of(s); };
    std::string w;
    w.reserve(length);
    long long prev = round(rho);
    for (int n = 0; n < length; ++n) {
        long long cur = round(static_cast<long long>(n + 1) * theta + rho);
        w.push_back(static_cast<char>('0' + (cur - prev)));
        prev = cur;
    }
    return w;
}

std::pair<std::string, std::string> apply_R(const std::string& u, const std::string& v)
{
    return {u, u + v};
}

std::pair<std::string, std::string> apply_L(const std::string& u, const std::string& v)
{
    return {v + u, v};
}

namespace {

std::string common_prefix(const std::string& a, const std::string& b)
{
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k])
        ++k;
    return a.substr(0, k);
}

/* Applies quotient number `idx` (0-based) of the expansion. */
void step(std::string& u, std::string& v, int idx, int a)
{
    int reps = idx == 0 ? a - 1 : a;
    for (int r = 0; r < reps; ++r) {
        auto p = idx % 2 == 0 ? apply_R(u, v) : apply_L(u, v);
        u = std::move(p.first);
        v = std::move(p.second);
    }
}

void check_quotients(const std::vector<int>& a)
{
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] < 1)
            throw Error(Errc::InvalidArgument, "partial quotient a_" + std::to_string(k + 1) + " must be positive",
                        static_cast<long long>(k + 1));
}

} // namespace

CFResult cf_induction(const std::vector<int>& a, int steps)
{
    check_quotients(a);
    std::string u = "0", v = "1";
    int n = std::min<int>(steps, static_cast<int>(a.size()));
    for (int k = 0; k < n; ++k)
        step(u, v, k, a[k]);
    CFResult r;
    r.prefix = common_prefix(u, v);
    r.u = std::move(u);
    r.v = std::move(v);
    return r;
}

std::string cf_word(const std::vector<int>& a, int length)
{
    if (length <= 0)
        return {};
    if (a.empty())
        throw Error(Errc::InvalidArgument, "no partial quotients");
    check_quotients(a);
    std::string u = "0", v = "1";
    for (int k = 0;; ++k) {
        step(u, v, k, a[std::min<std::size_t>(k, a.size() - 1)]);
        std::string p = common_prefix(u, v);
        if (static_cast<int>(p.size()) >= length)
            return p.substr(0, length);
        if (k > 10000)
            throw Error(Errc::PrefixTooShort, "limit word does not reach the requested length");
    }
}

int word_complexity(const std::string& w, int n)
{
    if (n < 0 || n > static_cast<int>(w.size()))
        throw Error(Errc::InvalidArgument, "factor length out of range", n);
    std::set<std::string_view> seen;
    std::string_view sv(w);
    for (std::size_t i = 0; i + n <= w.size(); ++i)
        seen.insert(sv.substr(i, n));
    return static_cast<int>(seen.size());
}

namespace {
void require_margin(const std::string& w, int n)
{
    const long long need = 10LL * n + 100;
    if (static_cast<long long>(w.size()) < need)
        throw Error(Errc::PrefixTooShort,
                    "prefix of length " + std::to_string(w.size()) + " is below " + std::to_string(need) + " for n = " + std::to_string(n),
                    n);
}
} // namespace

int word_complexity_checked(const std::string& w, int n)
{
    require_margin(w, n);
    return word_complexity(w, n);
}

RauzyGraph word_rauzy_graph(const std::string& w, int n)
{
    require_margin(w, n);
    RauzyGraph g;
    g.n = n;
    std::set<std::string> verts, facs;
    for (std::size_t i = 0; i + n <= w.size(); ++i)
        verts.insert(w.substr(i, n));
    for (std::size_t i = 0; i + n + 1 <= w.size(); ++i)
        facs.insert(w.substr(i, n + 1));
    g.vertices.assign(verts.begin(), verts.end());
    auto id = [&](const std::string& s) {
        return static_cast<int>(std::lower_bound(g.vertices.begin(), g.vertices.end(), s) - g.vertices.begin());
    };
    for (const std::string& f : facs) {
        g.edges.emplace_back(id(f.substr(0, n)), id(f.substr(1)));
        g.labels.push_back(f);
    }

    const int V = static_cast<int>(g.vertices.size());
    std::vector<int> out(V, 0), in(V, 0);
    std::vector<std::vector<int>> fwd(V), bwd(V);
    for (auto [a, b] : g.edges) {
        ++out[a];
        ++in[b];
        fwd[a].push_back(b);
        bwd[b].push_back(a);
    }
    auto reach_all = [&](const std::vector<std::vector<int>>& adj) {
        std::vector<char> seen(V, 0);
        std::vector<int> st{0};
        seen[0] = 1;
        int cnt = 1;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++cnt;
                    st.push_back(y);
                }
        }
        return cnt == V;
    };
    int rs = 0, ls = 0;
    bool regular = true;
    for (int x = 0; x < V; ++x) {
        if (out[x] == 2) {
            ++rs;
            g.right_special = x;
        } else if (out[x] != 1) {
            regular = false;
        }
        if (in[x] == 2) {
            ++ls;
            g.left_special = x;
        } else if (in[x] != 1) {
            regular = false;
        }
    }
    g.two_cycles = V > 0 && regular && rs == 1 && ls == 1 && static_cast<int>(g.edges.size()) == V + 1 &&
                   reach_all(fwd) && reach_all(bwd);
    if (g.two_cycles)
        g.sturmian_case = g.right_special == g.left_special ? 1 : 2;
    return g;
}

std::string RauzyGraph::case_name() const
{
    return sturmian_case == 1 ? "(i)" : sturmian_case == 2 ? "(ii)" : "none";
}

std::string RauzyGraph::to_dot() const
{
    std::ostringstream os;
    os << "// case " << case_name() << "\n";
    os << "digraph R" << n << " {\n";
    for (std::size_t v = 0; v < vertices.size(); ++v)
        os << "  w" << v << " [label=\"" << (vertices[v].empty() ? std::string("ε") : vertices[v]) << "\"];\n";
    for (std::size_t e = 0; e < edges.size(); ++e)
        os << "  w" << edges[e].first << " -> w" << edges[e].second << " [label=\"" << labels[e] << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace sturmian
