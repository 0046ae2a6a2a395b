#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "eghforge/clements.hpp"
#include "eghforge/hilbert.hpp"
#include "eghforge/linforms.hpp"

namespace eghforge {

enum class Trust { monomial_certificate, linear_certificate, assume };

// Caps outside the generator-degree bounds, or mismatched length.
struct rejection_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A certificate was demanded but the bounded search found none.
struct search_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The target Hilbert data cannot be realized in the truncated ring.
struct infeasible_error : std::runtime_error {
    LppInfeasible info;
    explicit infeasible_error(LppInfeasible i, const std::string& context = "")
        : std::runtime_error((context.empty() ? std::string{} : context + ": ") +
                             "infeasible at degree " + std::to_string(i.degree) + ": " + i.reason),
          info(std::move(i)) {}
};

// A hypothesis of the recursive constructor fails for the given input.
struct hypothesis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegreeSequenceResult {
    CapVector ring;
    std::optional<std::vector<ProductOfLinearForms>> certificate;
};

// t = height(I). Validates a caller-supplied A against the generator-degree
// bounds; otherwise searches (per trust) for the lex-smallest valid A with a
// certificate, or under `assume` returns the constant minimal-degree tuple.
DegreeSequenceResult choose_degree_sequence(const MonomialIdeal& I,
                                            std::optional<std::vector<int>> A, Trust trust,
                                            uint64_t seed = 0, int attempts = 500);

struct PerDegreeReport {
    int d = 0;
    Int target;   // H(S/I, d)
    Int segment;  // lex segment size at d
};

struct WitnessResult {
    MonomialIdeal witness;
    CapVector ring;
    int horizon = 0;
    bool certified = false;  // exact reduced-series equality with the input
    std::vector<PerDegreeReport> per_degree;
};

// Direct construction: target Hilbert values for d <= D feed lpp_from_hilbert,
// then the result is certified by exact reduced-series comparison; on a
// mismatch the horizon doubles (at most 3 retries). Default D is
// maxgendeg(I) + sum(caps) + 2. Throws infeasible_error when no ideal with
// the prescribed powers can match the Hilbert function.
WitnessResult egh_witness(const MonomialIdeal& I, const CapVector& ring,
                          std::optional<int> horizon = std::nullopt);

// Checks reported by verify_witness, one flag per requirement.
struct WitnessReport {
    bool series_equal = false;
    bool powers_contained = false;
    bool lex_plus_powers = false;

    bool all() const { return series_equal && powers_contained && lex_plus_powers; }
};

WitnessReport verify_witness(const MonomialIdeal& I, const MonomialIdeal& W,
                             const CapVector& ring);

// One degree's pass through the recursive constructor.
struct DegreeTrace {
    int d = 0;
    Monomial f1;               // lex-greatest degree-a_1 monomial of I
    std::vector<int> factors;  // its variables with multiplicity, greedily ordered
    std::vector<MonomialIdeal> levels;          // J_0..J_{r-1} in S
    std::vector<MonomialIdeal> level_images;    // their images in n-1 variables
    std::vector<std::vector<Monomial>> level_piece_lo;  // L_i piece at degree d-i
    std::vector<std::vector<Monomial>> level_piece_hi;  // L_i piece at degree d-i+1
    Int piece_d;     // |assembled ideal piece| at degree d
    Int piece_d1;    // and at degree d+1
    Int segment_d;   // cap-respecting part of the assembled degree-d piece
};

struct RecursionTrace {
    std::vector<DegreeTrace> degrees;
};

struct RecursiveResult {
    std::vector<Int> segment_sizes;  // per degree 0..D
    RecursionTrace trace;
};

// Independent oracle that replays the recursive decomposition degree by degree:
// split off the factors of f_1, recurse into one fewer variable, reassemble,
// and assert the exact-sequence identity, the level-containment claim, the
// membership claim and the counting identity at every step. Monomial inputs
// only. Throws hypothesis_error when I has no degree-a_1 monomial.
RecursiveResult egh_witness_recursive(const MonomialIdeal& I, const CapVector& ring, int horizon);

// Artinian witness for a finite Hilbert vector h (h_0 = 1, entries >= 0) in a
// fully capped ring (t = n): the quotient is zero-dimensional by construction.
MonomialIdeal artinian_reduction_witness(std::span<const Int> h, const CapVector& ring);

}  // namespace eghforge
