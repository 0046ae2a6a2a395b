#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace eghforge {

// All counts of monomials and series coefficients are unbounded integers;
// exponents and degrees stay machine ints.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// C(n, k); zero when k < 0 or k > n, so callers can sum blindly.
Int binomial(long long n, long long k);

// Number of degree-d monomials in `vars` variables: C(vars+d-1, d).
// vars = 0 counts the empty product only (1 at d = 0).
Int monomial_count(int vars, int d);

}  // namespace eghforge
