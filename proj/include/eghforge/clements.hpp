#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eghforge/ideal.hpp"

namespace eghforge {

// Degree sequence A = (a_1 <= ... <= a_t) capping the first t of n variables:
// exponent of x_i stays < a_i for i <= t. Defines the truncated ring whose
// monomial basis the lex segments live in. t = 0 leaves the ring untouched
// (used by the witness recursion when the sequence is exhausted).
struct CapVector {
    int n = 0;
    std::vector<int> caps;

    int t() const { return static_cast<int>(caps.size()); }

    bool operator==(const CapVector&) const = default;
};

// Throws unless caps are >= 1, non-decreasing, and t <= n.
void validate(const CapVector& ring);

CapVector make_cap_vector(int n, std::vector<int> caps);

// Number of degree-d monomials respecting the caps.
Int cl_count(const CapVector& ring, int d);

// Descending-lex prefix of the cap-respecting degree-d monomials.
struct LexSegment {
    CapVector ring;
    int d = 0;
    std::vector<Monomial> members;
};

LexSegment lex_segment(const CapVector& ring, int d, const Int& size);

// { x_j * u : u in members } intersected with the cap-respecting monomials of
// degree d+1 (multiples that hit a cap fall into the power ideal and drop).
std::vector<Monomial> segment_span_growth(const LexSegment& seg);
std::vector<Monomial> span_growth(const CapVector& ring, std::span<const Monomial> members);

// Failure evidence from lpp_from_hilbert: the degree where the target Hilbert
// values cannot be realized, and for gluing failures the two sets whose
// inclusion broke.
struct LppInfeasible {
    int degree = 0;
    std::string reason;
    std::vector<Monomial> required;  // span growth of segment at `degree`
    std::vector<Monomial> segment;   // segment at degree + 1
};

struct LppResult {
    std::optional<MonomialIdeal> ideal;       // in all n variables, powers included
    std::vector<LexSegment> segments;          // per degree 0..D
    std::optional<LppInfeasible> infeasible;

    bool ok() const { return ideal.has_value(); }
};

// Lex-plus-powers ideal whose quotient has Hilbert function target[d] for
// d <= D = target.size()-1: per degree the complement of the target inside
// the truncated ring is realized as a lex segment, the segments must glue
// (span growth contained in the next segment), and the generators are the
// pure powers plus the segment members not reached from below.
LppResult lpp_from_hilbert(std::span<const Int> target, const CapVector& ring);

// I contains every x_i^{a_i} and each graded piece of I meets the
// cap-respecting monomials in a lex prefix.
bool is_lpp(const MonomialIdeal& I, const CapVector& ring);

// Degree-d monomials of the ideal described by `segments`: the segment at d
// plus everything divisible by a pure power. Valid for d < segments.size().
std::vector<Monomial> lpp_piece(const CapVector& ring, const std::vector<LexSegment>& segments,
                                int d);

}  // namespace eghforge
