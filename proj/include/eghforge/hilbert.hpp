#pragma once

#include <vector>

#include "eghforge/ideal.hpp"
#include "eghforge/intpoly.hpp"

namespace eghforge {

// Hilbert series of S/I as numerator / (1-t)^n, numerator exact over Z.
struct HilbertSeries {
    int n = 0;
    IntPoly numerator;

    bool operator==(const HilbertSeries&) const = default;
};

// H(S/I, d) = C(n+d-1, d) - |I_d|.
Int hilbert_function(const MonomialIdeal& I, int d);

// H(S/I, d) for d = 0..dmax, computed once through the series numerator.
std::vector<Int> hilbert_function_range(const MonomialIdeal& I, int dmax);

HilbertSeries hilbert_series(const MonomialIdeal& I);

// Taylor coefficients of the series up to degree dmax.
std::vector<Int> expand(const HilbertSeries& s, int dmax);

// Fully reduced form Q(t)/(1-t)^dim with Q(1) != 0. For monomial quotients
// dim is the Krull dimension (= n - height(I) for proper nonzero I).
struct QPolynomial {
    IntPoly q;
    int dim = 0;

    bool operator==(const QPolynomial&) const = default;
};

QPolynomial reduce_series(const HilbertSeries& s);
QPolynomial q_polynomial(const MonomialIdeal& I);  // throws for the unit ideal

// The decomposition identity behind every split in the witness recursion:
// H(S/I, d) = H(S/(I+<m>), d) + H(S/(I:m), d - deg m).
// Always true for monomial data; false signals an internal bug.
bool ses_identity_check(const MonomialIdeal& I, const Monomial& m, int d);

// `(c0 + c1*t + ...) / (1-t)^n`
std::string to_string(const HilbertSeries& s);

}  // namespace eghforge
