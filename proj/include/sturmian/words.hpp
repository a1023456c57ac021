#ifndef STURMIAN_WORDS_HPP
#define STURMIAN_WORDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "sturmian/error.hpp"

namespace sturmian {

/* (P + Q sqrt(D)) / R with R > 0; rationals have Q = 0. */
struct Surd {
    long long P = 0, Q = 0, D = 0, R = 1;

    static Surd rational(long long p, long long q);
    bool is_rational() const { return Q == 0 || D == 0; }
    double approx() const;
    std::string to_string() const;
};

Surd parse_surd(const std::string& text);
Surd operator+(const Surd& a, const Surd& b);   // same D, or one rational
Surd operator*(long long k, const Surd& a);
long long floor_of(const Surd& x);
long long ceil_of(const Surd& x);

enum class Rounding { Floor, Ceil };

/* s_n = round((n+1) theta + rho) - round(n theta + rho), n = 0..length-1. */
std::string mechanical_word(const Surd& theta, const Surd& rho, int length, Rounding mode = Rounding::Floor);

struct CFResult {
    std::string u, v;
    std::string prefix;   // longest common prefix of u and v
};

/* Starting from (0, 1): R^{a_1 - 1}, then L^{a_2}, R^{a_3}, ... for the
   first `steps` quotients. */
CFResult cf_induction(const std::vector<int>& a, int steps);
std::pair<std::string, std::string> apply_R(const std::string& u, const std::string& v);
std::pair<std::string, std::string> apply_L(const std::string& u, const std::string& v);

/* Prefix of the limit word of length `length`; the last quotient repeats
   when the list runs out. */
std::string cf_word(const std::vector<int>& a, int length);

/* [a_0; a_1, a_2, ...], at most `terms` quotients, stopping at a rational end. */
std::vector<int> continued_fraction(const Surd& x, int terms);

int word_complexity(const std::string& w, int n);
/* Throws PrefixTooShort when |w| < 10 n + 100. */
int word_complexity_checked(const std::string& w, int n);

struct RauzyGraph {
    int n = 0;
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;   // the (n+1)-factor of each edge
    bool two_cycles = false;   // union of two cycles meeting in a vertex or a path
    int sturmian_case = 0;     // 1: the cycles share one vertex, 2: they share a path, 0: neither
    int right_special = -1, left_special = -1;
    std::string case_name() const;   // "(i)", "(ii)" or "none"
    std::string to_dot() const;
};

RauzyGraph word_rauzy_graph(const std::string& w, int n);

} // namespace sturmian

#endif
