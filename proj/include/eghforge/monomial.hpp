#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eghforge/bigint.hpp"

namespace eghforge {

// Exponent-vector monomial in a fixed ambient variable count n.
// Variables are 1-based in text (x1, x2, ...); x1 is the lex-greatest variable.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    int vars() const { return static_cast<int>(exps.size()); }
    int degree() const;
    bool is_unit() const;
    int exp(int var) const { return exps[static_cast<size_t>(var) - 1]; }

    bool operator==(const Monomial&) const = default;
};

enum class Ordering { less, equal, greater };

// Degree first, then first differing exponent decides (smaller exponent at the
// first difference means lex-smaller). Total order within a fixed ambient count.
Ordering compare_lex(const Monomial& u, const Monomial& v);
inline bool lex_less(const Monomial& u, const Monomial& v) {
    return compare_lex(u, v) == Ordering::less;
}
inline bool lex_greater(const Monomial& u, const Monomial& v) {
    return compare_lex(u, v) == Ordering::greater;
}

Monomial unit_monomial(int n);
Monomial variable(int n, int j);              // x_j in n variables
Monomial pure_power(int n, int j, int e);     // x_j^e in n variables

bool divides(const Monomial& a, const Monomial& b);
Monomial mul(const Monomial& a, const Monomial& b);
Monomial mul_var(const Monomial& a, int j);
Monomial quotient(const Monomial& a, const Monomial& b);  // exact a/b; requires divides(b, a)
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);

std::vector<int> support(const Monomial& m);   // 1-based variable indices
uint64_t support_mask(const Monomial& m);      // bit j-1 set iff x_j divides m (n <= 64)
bool disjoint_support(const Monomial& a, const Monomial& b);

// All degree-d monomials in n variables, strictly descending lex, each once.
// caps[i] >= 1 bounds variable i+1 to exponent < caps[i]; variables beyond
// caps.size() are unbounded. Stops early after `limit` results when given.
std::vector<Monomial> enumerate_monomials(int n, int d, std::span<const int> caps = {},
                                          std::optional<size_t> limit = std::nullopt);

bool respects_caps(const Monomial& m, std::span<const int> caps);

// Text syntax: `1`, `x3`, `x1^2*x3`. Round-trips exactly with to_string.
std::string to_string(const Monomial& m);
Monomial parse_monomial(const std::string& text, int n);

}  // namespace eghforge
