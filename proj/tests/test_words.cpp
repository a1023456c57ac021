#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "sturmian/words.hpp"

using namespace sturmian;

namespace {

/* floor((n+1) p/q + r/q) - floor(n p/q + r/q) in plain integers. */
std::string rational_word(long long p, long long q, long long r, int len)
{
    std::string w;
    for (long long n = 0; n < len; ++n)
        w += static_cast<char>('0' + ((n + 1) * p + r) / q - (n * p + r) / q);
    return w;
}

std::set<std::string> factors(const std::string& w, int n)
{
    std::set<std::string> f;
    for (std::size_t i = 0; i + n <= w.size(); ++i)
        f.insert(w.substr(i, n));
    return f;
}

std::string complement(std::string w)
{
    for (char& c : w)
        c = c == '0' ? '1' : '0';
    return w;
}

std::vector<int> ones(int n, int head = 1)
{
    std::vector<int> a(n, 1);
    a[0] = head;
    return a;
}

} // namespace

TEST_SUITE("words") {

TEST_CASE("surd parsing and exact floors")
{
    Surd g = parse_surd("(3-sqrt5)/2");
    CHECK(g.approx() == doctest::Approx((3 - std::sqrt(5.0)) / 2));
    CHECK(floor_of(g) == 0);
    CHECK(ceil_of(g) == 1);
    CHECK(floor_of(parse_surd("sqrt(2)*7")) == 9);
    CHECK(floor_of(parse_surd("-sqrt2")) == -2);
    CHECK(ceil_of(parse_surd("-sqrt2")) == -1);
    CHECK(floor_of(parse_surd("7/2")) == 3);
    CHECK(floor_of(parse_surd("-7/2")) == -4);
    CHECK(ceil_of(parse_surd("4")) == 4);
    CHECK(parse_surd("0.25").is_rational());
    CHECK(floor_of(4 * parse_surd("0.25")) == 1);
    CHECK_THROWS_AS(parse_surd("sqrt"), Error);
    CHECK_THROWS_AS(parse_surd("1/0"), Error);
    CHECK_THROWS_AS(parse_surd("sqrt2+sqrt3"), Error);

    std::mt19937 rng(4);
    for (int t = 0; t < 500; ++t) {
        long long P = static_cast<long long>(rng() % 200) - 100, Q = static_cast<long long>(rng() % 30) - 15;
        long long D = 2 + static_cast<long long>(rng() % 20), R = 1 + static_cast<long long>(rng() % 40);
        Surd x{P, Q, D, R};
        double v = x.approx();
        if (std::fabs(v - std::round(v)) < 1e-9)
            continue;
        CHECK(floor_of(x) == static_cast<long long>(std::floor(v)));
        CHECK(ceil_of(x) == static_cast<long long>(std::ceil(v)));
    }
}

TEST_CASE("continued fractions of quadratic surds")
{
    std::vector<int> cf = continued_fraction(parse_surd("(3-sqrt5)/2"), 8);
    CHECK(cf == std::vector<int>{0, 2, 1, 1, 1, 1, 1, 1});
    CHECK(continued_fraction(parse_surd("sqrt2-1"), 6) == std::vector<int>{0, 2, 2, 2, 2, 2});
    CHECK(continued_fraction(parse_surd("sqrt3"), 5) == std::vector<int>{1, 1, 2, 1, 2});
    CHECK(continued_fraction(parse_surd("7/3"), 10) == std::vector<int>{2, 3});
}

TEST_CASE("mechanical word of the golden slope")
{
    Surd t = parse_surd("(3-sqrt5)/2");
    CHECK(mechanical_word(t, t, 10) == "0100101001");
    CHECK(mechanical_word(t, t, 0).empty());
}

TEST_CASE("mechanical words of rationals against integer arithmetic")
{
    CHECK(mechanical_word(Surd::rational(50, 101), Surd::rational(0, 1), 4) == rational_word(50, 101, 0, 4));
    std::mt19937 rng(12);
    for (int t = 0; t < 200; ++t) {
        int len = 1 + static_cast<int>(rng() % 20);
        long long q = len * len + 1 + static_cast<long long>(rng() % 500);
        long long p = 1 + static_cast<long long>(rng() % static_cast<unsigned long long>(q - 1));
        long long r = static_cast<long long>(rng() % static_cast<unsigned long long>(q));
        if (std::gcd(p, q) != 1)
            continue;
        CHECK(mechanical_word(Surd::rational(p, q), Surd::rational(r, q), len) == rational_word(p, q, r, len));
    }
}

TEST_CASE("mechanical word preconditions")
{
    auto code = [](const std::function<void()>& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::SyntaxError;
    };
    CHECK(code([] { mechanical_word(Surd::rational(1, 3), Surd::rational(0, 1), 10); }) == Errc::PrecisionInsufficient);
    CHECK(code([] { mechanical_word(Surd::rational(3, 2), Surd::rational(0, 1), 1); }) == Errc::InvalidArgument);
    CHECK(code([] { mechanical_word(parse_surd("sqrt2-1"), Surd::rational(1, 1), 1); }) == Errc::InvalidArgument);
}

TEST_CASE("floor and ceil agree on irrational slopes")
{
    for (const char* s : {"(3-sqrt5)/2", "sqrt2-1", "(sqrt7-2)/3", "sqrt3-1"}) {
        Surd t = parse_surd(s);
        CHECK(mechanical_word(t, t, 200, Rounding::Floor) == mechanical_word(t, t, 200, Rounding::Ceil));
        Surd zero = Surd::rational(0, 1);
        // rho = 0 hits the lattice point at n = 0 only
        std::string f = mechanical_word(t, zero, 200, Rounding::Floor);
        std::string c = mechanical_word(t, zero, 200, Rounding::Ceil);
        CHECK(f.substr(1) == c.substr(1));
    }
}

TEST_CASE("R and L")
{
    CHECK(apply_R("0", "1") == std::make_pair(std::string("0"), std::string("01")));
    CHECK(apply_L("0", "1") == std::make_pair(std::string("10"), std::string("1")));
}

TEST_CASE("cf induction and the mechanical word")
{
    Surd t = parse_surd("(3-sqrt5)/2");
    CHECK(cf_word(ones(12, 2), 30) == mechanical_word(t, t, 30));
    // the all-ones list belongs to the complementary slope
    CHECK(cf_word(ones(12), 30) == complement(mechanical_word(t, t, 30)));
    Surd g = parse_surd("(sqrt5-1)/2");
    CHECK(cf_word(ones(12), 30) == mechanical_word(g, g, 30));
    Surd s2 = parse_surd("sqrt2-1");
    CHECK(cf_word({2, 2}, 30) == mechanical_word(s2, s2, 30));
    Surd s7 = parse_surd("(sqrt7-2)/3");
    auto cf7 = continued_fraction(s7, 20);
    CHECK(cf_word(std::vector<int>(cf7.begin() + 1, cf7.end()), 30) == mechanical_word(s7, s7, 30));
}

TEST_CASE("cf induction bookkeeping")
{
    const std::vector<int> a{3, 1, 2, 2, 1, 4};
    std::string u = "0", v = "1";
    for (int steps = 1; steps <= 6; ++steps) {
        CFResult r = cf_induction(a, steps);
        const std::string& s = r.u.size() <= r.v.size() ? r.u : r.v;
        const std::string& l = r.u.size() <= r.v.size() ? r.v : r.u;
        CHECK(l.compare(0, s.size(), s) == 0);   // shorter is a prefix of the longer
        CHECK(r.prefix == s);
    }
    // R keeps u and sets v := u v; L keeps v and sets u := v u
    for (int k = 0; k < 5; ++k) {
        auto [u2, v2] = k % 2 ? apply_L(u, v) : apply_R(u, v);
        CHECK(u2.size() + v2.size() == u.size() + v.size() + (k % 2 ? v.size() : u.size()));
        CHECK((k % 2 ? v2 == v : u2 == u));
        u = u2;
        v = v2;
    }
    CFResult zero = cf_induction({1}, 1);
    CHECK(zero.u == "0");
    CHECK(zero.v == "1");
    CHECK_THROWS_AS(cf_induction({1, 0}, 2), Error);
}

TEST_CASE("word complexity")
{
    Surd t = parse_surd("(3-sqrt5)/2");
    std::string fib = mechanical_word(t, t, 1000);
    for (int n = 1; n <= 15; ++n) {
        CHECK(word_complexity_checked(fib, n) == n + 1);
        CHECK(word_complexity(fib, n) == static_cast<int>(factors(fib, n).size()));
    }
    CHECK(word_complexity(std::string(50, '0'), 7) == 1);
    std::string per;
    for (int k = 0; k < 20; ++k)
        per += "01";
    CHECK(word_complexity(per, 3) == 2);
    try {
        word_complexity_checked(fib.substr(0, 150), 6);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::PrefixTooShort);
    }
}

TEST_CASE("Rauzy graphs of the Fibonacci word")
{
    Surd t = parse_surd("(3-sqrt5)/2");
    std::string fib = mechanical_word(t, t, 1000);

    RauzyGraph r1 = word_rauzy_graph(fib, 1);
    CHECK(std::set<std::string>(r1.vertices.begin(), r1.vertices.end()) == std::set<std::string>{"0", "1"});
    CHECK(std::set<std::string>(r1.labels.begin(), r1.labels.end()) == factors(fib, 2));
    CHECK(r1.two_cycles);

    bool case_i = false;
    for (int n = 1; n <= 12; ++n) {
        RauzyGraph g = word_rauzy_graph(fib, n);
        INFO("n=" << n);
        CHECK(g.vertices.size() == static_cast<std::size_t>(n + 1));
        CHECK(g.edges.size() == static_cast<std::size_t>(n + 2));
        CHECK(std::set<std::string>(g.labels.begin(), g.labels.end()) == factors(fib, n + 1));
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            const std::string& lab = g.labels[e];
            CHECK(g.vertices[g.edges[e].first] == lab.substr(0, n));
            CHECK(g.vertices[g.edges[e].second] == lab.substr(1));
        }
        CHECK(g.two_cycles);
        CHECK((g.sturmian_case == 1 || g.sturmian_case == 2));
        case_i |= g.sturmian_case == 1;
    }
    CHECK(case_i);
    CHECK(word_rauzy_graph(fib, 1).case_name() == "(i)");
    CHECK(word_rauzy_graph(fib, 2).case_name() == "(ii)");
    CHECK(word_rauzy_graph(fib, 3).to_dot().find("// case (i)\ndigraph") == 0);
}

TEST_CASE("Rauzy graph of a periodic word is not two cycles")
{
    std::string per;
    for (int k = 0; k < 100; ++k)
        per += "001";
    RauzyGraph g = word_rauzy_graph(per, 2);
    CHECK_FALSE(g.two_cycles);
    CHECK(g.case_name() == "none");
    CHECK_THROWS_AS(word_rauzy_graph(per.substr(0, 50), 2), Error);
}

} // TEST_SUITE
