#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eghforge/ideal.hpp"

namespace eghforge {

// Homogeneous degree-1 form with exact rational coefficients, not all zero.
struct LinearForm {
    std::vector<Rat> coeffs;

    int vars() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const;

    bool operator==(const LinearForm&) const = default;
};

// f = l_1 * ... * l_r kept in factored form; degree = number of factors.
struct ProductOfLinearForms {
    std::vector<LinearForm> factors;

    int vars() const { return factors.empty() ? 0 : factors.front().vars(); }
    int degree() const { return static_cast<int>(factors.size()); }

    bool operator==(const ProductOfLinearForms&) const = default;
};

LinearForm variable_form(int n, int j);
ProductOfLinearForms product_from_monomial(const Monomial& m);

// Monomials with nonzero coefficient in the expanded product (cancellation
// respected), descending lex.
std::vector<Monomial> expand_support(const ProductOfLinearForms& f);

// Membership of f in the monomial ideal I = containment of the support.
bool contained_in(const ProductOfLinearForms& f, const MonomialIdeal& I);

// Products of linear forms cut out unions of hyperplanes, so f_1..f_t is a
// regular sequence iff every choice of one factor per product has full rank t.
// On failure `witness` holds one deficient selection (factor index per f_i).
struct RegSeqCheck {
    bool regular = false;
    std::vector<int> witness;  // empty when regular
};

// Enumerates all selections with exact fraction-free rank checks; inputs with
// more than 10^7 selections are rejected. t > n fails with a trivial witness.
RegSeqCheck verify_regular_sequence(std::span<const ProductOfLinearForms> fs);

// Seeded search for a regular sequence of the prescribed degrees inside I:
// first monomial certificates, then random products of linear forms with
// coefficients in {-2..2} supported on unions of generator supports.
// Deterministic given the seed; absent = bounded search failed.
std::optional<std::vector<ProductOfLinearForms>> search_regular_sequence(
    const MonomialIdeal& I, std::span<const int> degrees, uint64_t seed = 0, int attempts = 500);

// Exact rank of a rational matrix (rows of equal length) by Bareiss
// elimination after clearing denominators row-wise.
int rational_rank(const std::vector<std::vector<Rat>>& rows);

// Text forms: `x1+2*x2-x3`, `-1/2*x1+x3`; a product joins factors with `;`.
std::string to_string(const LinearForm& f);
std::string to_string(const ProductOfLinearForms& f);
LinearForm parse_linear_form(const std::string& text, int n);
ProductOfLinearForms parse_product(const std::string& text, int n);

}  // namespace eghforge
