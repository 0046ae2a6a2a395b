#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eghforge/egh.hpp"

namespace eghforge {

// Simplicial complex as an ordered vertex label list plus facet bitmasks
// (at most 64 vertices). Facets are pairwise incomparable and cover every
// vertex. The complex {emptyset} (no vertices, one empty facet) is allowed.
struct SimplicialComplex {
    std::vector<std::string> vertices;
    std::vector<uint64_t> facets;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int dim() const;  // -1 for {emptyset}
    bool has_face(uint64_t mask) const;
    int vertex_index(const std::string& label) const;  // -1 when absent
};

// Builds the complex generated by the given facet candidate masks: dominated
// and duplicate candidates drop. Every vertex must end up in some facet.
SimplicialComplex make_complex(std::vector<std::string> vertices, std::vector<uint64_t> facets);

struct VertexPartition {
    std::vector<std::vector<std::string>> blocks;  // disjoint, covering the vertex set
    std::vector<int> bounds;                       // >= 0; a 0 bound forces an empty block
};

// Squarefree ideal of minimal non-faces, one variable per vertex in order.
MonomialIdeal stanley_reisner(const SimplicialComplex& complex);

// Inverse correspondence. Generators must be squarefree; a variable generator
// removes its vertex from the complex and is reported in `omitted`.
struct ComplexOfResult {
    SimplicialComplex complex;
    std::vector<std::string> omitted;
};
ComplexOfResult complex_of(const MonomialIdeal& I, std::vector<std::string> labels = {});

std::vector<Int> f_vector(const SimplicialComplex& complex);  // (f_{-1}, f_0, ..., f_{dim})
std::vector<Int> h_vector(const SimplicialComplex& complex);  // (h_0, ..., h_{dim+1})

bool is_flag(const SimplicialComplex& complex);
bool is_balanced(const SimplicialComplex& complex, const VertexPartition& partition);

// Standard polarization. block_sizes[i] (when given) fixes the number of
// polarized variables for x_i and must be at least the maximal exponent;
// display_indices renames block i's labels to x{k}, y{k},1, ... for k =
// display_indices[i]. Defaults: max exponent (at least 1) and 1..n.
struct Polarization {
    MonomialIdeal ideal;                            // squarefree, in sum(block sizes) vars
    std::vector<std::vector<int>> block_vars;       // 1-based new indices per original var
    std::vector<std::vector<std::string>> block_labels;

    std::vector<std::string> labels() const;        // flattened, in variable order
};
Polarization polarize(const MonomialIdeal& I, std::span<const int> block_sizes = {},
                      std::span<const int> display_indices = {});

// Link of a face (given as a mask over the complex's vertices).
SimplicialComplex link(const SimplicialComplex& complex, uint64_t face);

// Ranks of reduced simplicial homology over GF(p), dimensions -1..dim.
std::vector<int> reduced_homology_ranks(const SimplicialComplex& complex, int p);

// Reisner: every face link has vanishing reduced homology below its top
// dimension over GF(p).
bool is_cohen_macaulay(const SimplicialComplex& complex, int p);

struct TransferOptions {
    std::optional<std::vector<int>> caps;
    Trust trust = Trust::assume;
    std::optional<int> characteristic;  // run Reisner checks over GF(p) when given
    uint64_t seed = 0;
    int attempts = 500;
};

struct TransferResult {
    MonomialIdeal sr;          // Stanley-Reisner ideal of the input
    int t = 0;                 // its height
    bool flag = false;
    std::optional<std::vector<int>> suggested_caps;  // all 2s for flag inputs
    std::vector<int> caps;     // caps actually used
    std::optional<std::vector<ProductOfLinearForms>> certificate;
    std::vector<Int> h;        // input h-vector
    MonomialIdeal artinian;    // lex-plus-powers witness in t variables
    Polarization polarized;
    SimplicialComplex gamma;
    VertexPartition partition;
    std::vector<Int> h_gamma;
    std::vector<std::string> omitted;
    bool h_equal = false;      // h-polynomials agree (trailing zeros ignored)
    bool balanced = false;
    std::optional<int> characteristic;  // field used for the CM checks
    std::optional<bool> input_cm;       // warning-level: field-dependent
    std::optional<bool> gamma_cm;
};

// The balanced-transfer pipeline: Stanley-Reisner ideal, degree-sequence
// resolution, artinian witness for the h-vector, polarization, and the
// balanced complex with its emitted partition.
TransferResult balanced_transfer(const SimplicialComplex& complex, const TransferOptions& options);

}  // namespace eghforge
