#pragma once

#include <string>
#include <vector>

#include "eghforge/bigint.hpp"

namespace eghforge {

// Dense univariate polynomial over unbounded integers, ascending powers,
// no trailing zero coefficients. Degrees stay small at desk scale.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly one() { return IntPoly{{Int(1)}}; }
    static IntPoly term(int power, Int coeff);

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    Int at(int i) const;
    Int eval_one() const;

    bool operator==(const IntPoly&) const = default;
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);

// Quotient by (1 - t) when it divides exactly (iff eval_one() == 0).
// Returns false and leaves `out` untouched otherwise.
bool divide_by_one_minus_t(const IntPoly& p, IntPoly& out);

std::string to_string(const IntPoly& p);

}  // namespace eghforge
