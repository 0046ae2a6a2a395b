#include "eghforge/hilbert.hpp"

#include <stdexcept>

namespace eghforge {

namespace {

// Numerator by inclusion-exclusion over generator subsets:
// N = sum over T of (-1)^|T| t^{deg lcm(T)}. Full lattice, gens <= 18.
void numerator_ie(const std::vector<Monomial>& gens, size_t from, const Monomial& current,
                  int sign, std::vector<Int>& acc) {
    for (size_t j = from; j < gens.size(); ++j) {
        Monomial L = lcm(current, gens[j]);
        size_t deg = static_cast<size_t>(L.degree());
        if (acc.size() <= deg)
            acc.resize(deg + 1, Int(0));
        acc[deg] += sign;
        numerator_ie(gens, j + 1, L, -sign, acc);
    }
}

IntPoly numerator_of(const MonomialIdeal& I) {
    if (I.is_zero())
        return IntPoly::one();
    if (I.is_unit())
        return IntPoly::zero();
    if (I.gens.size() <= 18) {
        std::vector<Int> acc{Int(1)};
        numerator_ie(I.gens, 0, unit_monomial(I.n), -1, acc);
        return IntPoly{std::move(acc)};
    }
    // pivot split: N_I = (1-t) * N_{image of I without x_j} + t * N_{I:x_j}
    int j = 0;
    {
        std::vector<int> freq(static_cast<size_t>(I.n), 0);
        for (const Monomial& g : I.gens)
            for (int i = 0; i < I.n; ++i)
                if (g.exps[static_cast<size_t>(i)] > 0)
                    ++freq[static_cast<size_t>(i)];
        for (int i = 1; i < I.n; ++i)
            if (freq[static_cast<size_t>(i)] > freq[static_cast<size_t>(j)])
                j = i;
        ++j;
    }
    IntPoly quot = numerator_of(quotient_mod_variable(I, j));
    IntPoly col = numerator_of(colon(I, variable(I.n, j)));
    IntPoly one_minus_t{{Int(1), Int(-1)}};
    return add(mul(one_minus_t, quot), mul(IntPoly::term(1, 1), col));
}

}  // namespace

Int hilbert_function(const MonomialIdeal& I, int d) {
    if (d < 0)
        return 0;
    return monomial_count(I.n, d) - graded_piece_dim(I, d);
}

HilbertSeries hilbert_series(const MonomialIdeal& I) {
    return HilbertSeries{I.n, numerator_of(I)};
}

std::vector<Int> expand(const HilbertSeries& s, int dmax) {
    std::vector<Int> h(static_cast<size_t>(dmax) + 1, Int(0));
    for (int d = 0; d <= dmax; ++d)
        for (int k = 0; k <= std::min(d, s.numerator.degree()); ++k)
            h[static_cast<size_t>(d)] += s.numerator.at(k) * monomial_count(s.n, d - k);
    return h;
}

std::vector<Int> hilbert_function_range(const MonomialIdeal& I, int dmax) {
    if (dmax < 0)
        return {};
    return expand(hilbert_series(I), dmax);
}

QPolynomial reduce_series(const HilbertSeries& s) {
    IntPoly q = s.numerator;
    int dim = s.n;
    IntPoly next;
    while (divide_by_one_minus_t(q, next)) {
        if (q.is_zero())
            break;  // unit ideal: 0/(1-t)^n stays 0 with dim n
        q = next;
        --dim;
    }
    return QPolynomial{std::move(q), dim};
}

QPolynomial q_polynomial(const MonomialIdeal& I) {
    if (I.is_unit())
        throw std::domain_error("q_polynomial is undefined for the unit ideal");
    return reduce_series(hilbert_series(I));
}

bool ses_identity_check(const MonomialIdeal& I, const Monomial& m, int d) {
    if (m.is_unit())
        throw std::invalid_argument("ses_identity_check requires a non-unit monomial");
    if (d < 0)
        return true;
    Int lhs = hilbert_function(I, d);
    Int rhs = hilbert_function(add(I, m), d);
    int shift = d - m.degree();
    if (shift >= 0)
        rhs += hilbert_function(colon(I, m), shift);
    return lhs == rhs;
}

std::string to_string(const HilbertSeries& s) {
    return "(" + to_string(s.numerator) + ") / (1-t)^" + std::to_string(s.n);
}

}  // namespace eghforge
