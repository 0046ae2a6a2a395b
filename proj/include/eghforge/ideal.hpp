#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "eghforge/monomial.hpp"

namespace eghforge {

// Monomial ideal given by its minimal generating set, kept sorted in
// descending lex. Empty gens = zero ideal; the unit monomial alone = S.
struct MonomialIdeal {
    int n = 0;
    std::vector<Monomial> gens;

    bool is_zero() const { return gens.empty(); }
    bool is_unit() const { return gens.size() == 1 && gens.front().is_unit(); }
    bool is_proper() const { return !is_unit(); }

    bool operator==(const MonomialIdeal&) const = default;
};

MonomialIdeal zero_ideal(int n);
MonomialIdeal unit_ideal(int n);

// Ideal generated by `raw`, reduced to a divisibility-minimal set. Idempotent.
MonomialIdeal minimalize(int n, std::vector<Monomial> raw);

// Membership: some generator divides m.
bool contains(const MonomialIdeal& I, const Monomial& m);

// (I : m), generated by g / gcd(g, m) over generators g.
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m);

MonomialIdeal add(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal add(const MonomialIdeal& I, const Monomial& m);

// Image of I in the polynomial ring on the variables other than x_j:
// generators divisible by x_j drop, the rest re-index order-preservingly.
MonomialIdeal quotient_mod_variable(const MonomialIdeal& I, int j);

// Minimum size of a variable set meeting every generator's support: the
// height of I (= least height of a minimal prime). Exact branch-and-bound.
// Throws for the zero and unit ideals.
int height(const MonomialIdeal& I);

// (min, max) degree over the minimal generating set; throws for zero/unit.
std::pair<int, int> generator_degree_range(const MonomialIdeal& I);

// Bounded search for monomials m_1..m_t in I with pairwise disjoint supports
// (a monomial regular sequence). Slots are single generators or products of
// two generators, padded to the target degree by variables of their own
// support. With `degrees` given, deg(m_i) must equal degrees[i] (sorted
// non-decreasing); otherwise t = height(I) and degrees are free.
// Absent means the bounded search failed, not that no sequence exists.
std::optional<std::vector<Monomial>> monomial_regular_sequence(
    const MonomialIdeal& I, std::span<const int> degrees = {});

// |I_d|: number of degree-d monomials in I. Dispatches between direct
// enumeration, inclusion-exclusion over generator lcm's (<= 18 generators),
// and pivot splitting on a most-frequent variable.
Int graded_piece_dim(const MonomialIdeal& I, int d);

// The two base methods, exposed so tests can assert they agree.
Int graded_piece_dim_enumeration(const MonomialIdeal& I, int d);
Int graded_piece_dim_inclusion_exclusion(const MonomialIdeal& I, int d);

}  // namespace eghforge
