#include "eghforge/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace eghforge {

namespace {

bool is_prime(int p) {
    if (p < 2)
        return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

std::vector<uint64_t> maximalize(std::vector<uint64_t> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<uint64_t> out;
    for (uint64_t m : masks) {
        bool dominated = false;
        for (uint64_t other : masks) {
            if (other != m && (m & ~other) == 0) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            out.push_back(m);
    }
    return out;
}

std::vector<uint64_t> all_faces(const SimplicialComplex& c) {
    std::unordered_set<uint64_t> seen;
    for (uint64_t f : c.facets) {
        if (std::popcount(f) > 25)
            throw std::runtime_error("facet too large to enumerate faces");
        uint64_t sub = f;
        while (true) {
            seen.insert(sub);
            if (sub == 0)
                break;
            sub = (sub - 1) & f;
        }
    }
    std::vector<uint64_t> faces(seen.begin(), seen.end());
    std::sort(faces.begin(), faces.end());
    return faces;
}

}  // namespace

int SimplicialComplex::dim() const {
    int best = -1;
    for (uint64_t f : facets)
        best = std::max(best, std::popcount(f) - 1);
    return best;
}

bool SimplicialComplex::has_face(uint64_t mask) const {
    for (uint64_t f : facets)
        if ((mask & ~f) == 0)
            return true;
    return false;
}

int SimplicialComplex::vertex_index(const std::string& label) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == label)
            return static_cast<int>(i);
    return -1;
}

SimplicialComplex make_complex(std::vector<std::string> vertices, std::vector<uint64_t> facets) {
    if (vertices.size() > 64)
        throw std::invalid_argument("at most 64 vertices supported");
    {
        std::unordered_set<std::string> seen;
        for (const std::string& v : vertices)
            if (!seen.insert(v).second)
                throw std::invalid_argument("duplicate vertex label '" + v + "'");
    }
    uint64_t full = vertices.empty() ? 0 : (vertices.size() == 64
                                                ? ~uint64_t{0}
                                                : (uint64_t{1} << vertices.size()) - 1);
    for (uint64_t f : facets)
        if (f & ~full)
            throw std::invalid_argument("facet references a vertex out of range");
    if (facets.empty())
        facets.push_back(0);
    facets = maximalize(std::move(facets));
    uint64_t covered = 0;
    for (uint64_t f : facets)
        covered |= f;
    if (covered != full)
        throw std::invalid_argument("every vertex must appear in some facet");
    return SimplicialComplex{std::move(vertices), std::move(facets)};
}

MonomialIdeal stanley_reisner(const SimplicialComplex& c) {
    int n = c.vertex_count();
    if (n > 26)
        throw std::runtime_error("non-face enumeration supports at most 26 vertices");
    int top = std::min(c.dim() + 2, n);
    std::vector<Monomial> gens;
    std::vector<int> combo;
    // minimal non-faces have every proper subset a face, so size <= dim+2
    auto emit = [&](uint64_t mask) {
        for (int v = 0; v < n; ++v) {
            if (!(mask & (uint64_t{1} << v)))
                continue;
            if (c.has_face(mask & ~(uint64_t{1} << v)) == false)
                return;
        }
        std::vector<int> e(static_cast<size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            if (mask & (uint64_t{1} << v))
                e[static_cast<size_t>(v)] = 1;
        gens.emplace_back(std::move(e));
    };
    for (int s = 2; s <= top; ++s) {
        // iterate all size-s vertex subsets
        std::vector<int> idx(static_cast<size_t>(s));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            uint64_t mask = 0;
            for (int v : idx)
                mask |= uint64_t{1} << v;
            if (!c.has_face(mask))
                emit(mask);
            int i = s - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == n - s + i)
                --i;
            if (i < 0)
                break;
            ++idx[static_cast<size_t>(i)];
            for (int k = i + 1; k < s; ++k)
                idx[static_cast<size_t>(k)] = idx[static_cast<size_t>(k) - 1] + 1;
        }
    }
    return minimalize(n, std::move(gens));
}

ComplexOfResult complex_of(const MonomialIdeal& I, std::vector<std::string> labels) {
    if (I.is_unit())
        throw std::invalid_argument("the unit ideal corresponds to no complex");
    if (labels.empty()) {
        for (int i = 1; i <= I.n; ++i)
            labels.push_back("x" + std::to_string(i));
    }
    if (static_cast<int>(labels.size()) != I.n)
        throw std::invalid_argument("label count must match the ambient variable count");

    ComplexOfResult result;
    std::vector<int> keep;  // 0-based original variable indices kept as vertices
    std::vector<uint64_t> supports;
    {
        std::vector<bool> omitted(static_cast<size_t>(I.n), false);
        for (const Monomial& g : I.gens) {
            for (int e : g.exps)
                if (e > 1)
                    throw std::invalid_argument("non-squarefree generator " + to_string(g));
            if (g.degree() == 1)
                omitted[static_cast<size_t>(support(g).front() - 1)] = true;
        }
        for (int i = 0; i < I.n; ++i) {
            if (omitted[static_cast<size_t>(i)])
                result.omitted.push_back(labels[static_cast<size_t>(i)]);
            else
                keep.push_back(i);
        }
        std::vector<int> new_index(static_cast<size_t>(I.n), -1);
        for (size_t k = 0; k < keep.size(); ++k)
            new_index[static_cast<size_t>(keep[k])] = static_cast<int>(k);
        for (const Monomial& g : I.gens) {
            if (g.degree() <= 1)
                continue;
            uint64_t mask = 0;
            for (int v : support(g))
                mask |= uint64_t{1} << new_index[static_cast<size_t>(v - 1)];
            supports.push_back(mask);
        }
    }
    if (keep.size() > 64)
        throw std::invalid_argument("at most 64 vertices supported");

    // peel facets: start from the full set, carve out each non-face support
    uint64_t full = keep.empty() ? 0 : (keep.size() == 64 ? ~uint64_t{0}
                                                          : (uint64_t{1} << keep.size()) - 1);
    std::vector<uint64_t> candidates{full};
    for (uint64_t s : supports) {
        std::vector<uint64_t> next;
        for (uint64_t c : candidates) {
            if (s & ~c) {
                next.push_back(c);
                continue;
            }
            uint64_t rem = s;
            while (rem) {
                uint64_t bit = rem & (~rem + 1);
                next.push_back(c & ~bit);
                rem ^= bit;
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        candidates = std::move(next);
    }
    candidates = maximalize(std::move(candidates));

    std::vector<std::string> vertex_labels;
    for (int i : keep)
        vertex_labels.push_back(labels[static_cast<size_t>(i)]);
    result.complex = make_complex(std::move(vertex_labels), std::move(candidates));
    return result;
}

std::vector<Int> f_vector(const SimplicialComplex& c) {
    std::vector<Int> f(static_cast<size_t>(c.dim()) + 2, Int(0));
    for (uint64_t face : all_faces(c))
        ++f[static_cast<size_t>(std::popcount(face))];
    return f;
}

std::vector<Int> h_vector(const SimplicialComplex& c) {
    std::vector<Int> f = f_vector(c);
    int d = c.dim() + 1;
    // sum_i h_i t^{d-i} = sum_i f_{i-1} (t-1)^{d-i}
    IntPoly t_minus_1{{Int(-1), Int(1)}};
    IntPoly acc;
    IntPoly power = IntPoly::one();  // (t-1)^{d-i} built from i = d downward
    for (int i = d; i >= 0; --i) {
        acc = add(acc, mul(IntPoly{{f[static_cast<size_t>(i)]}}, power));
        power = mul(power, t_minus_1);
    }
    std::vector<Int> h(static_cast<size_t>(d) + 1, Int(0));
    for (int k = 0; k <= d; ++k)
        h[static_cast<size_t>(k)] = acc.at(d - k);
    return h;
}

bool is_flag(const SimplicialComplex& c) {
    MonomialIdeal sr = stanley_reisner(c);
    for (const Monomial& g : sr.gens)
        if (g.degree() != 2)
            return false;
    return true;
}

bool is_balanced(const SimplicialComplex& c, const VertexPartition& p) {
    if (p.blocks.size() != p.bounds.size())
        throw std::invalid_argument("partition needs one bound per block");
    std::vector<uint64_t> block_masks;
    uint64_t covered = 0;
    for (size_t k = 0; k < p.blocks.size(); ++k) {
        if (p.bounds[k] < 0)
            throw std::invalid_argument("negative bound");
        if (p.bounds[k] == 0 && !p.blocks[k].empty())
            throw std::invalid_argument("a zero bound requires an empty block");
        uint64_t mask = 0;
        for (const std::string& label : p.blocks[k]) {
            int idx = c.vertex_index(label);
            if (idx < 0)
                throw std::invalid_argument("unknown vertex '" + label + "' in partition");
            uint64_t bit = uint64_t{1} << idx;
            if ((covered | mask) & bit)
                throw std::invalid_argument("vertex '" + label + "' appears twice in partition");
            mask |= bit;
        }
        covered |= mask;
        block_masks.push_back(mask);
    }
    uint64_t full = c.vertices.empty()
                        ? 0
                        : (c.vertices.size() == 64 ? ~uint64_t{0}
                                                   : (uint64_t{1} << c.vertices.size()) - 1);
    if (covered != full)
        throw std::invalid_argument("partition does not cover the vertex set");

    long long bound_sum = std::accumulate(p.bounds.begin(), p.bounds.end(), 0LL);
    if (bound_sum != 1 + c.dim())
        return false;
    for (uint64_t facet : c.facets)
        for (size_t k = 0; k < block_masks.size(); ++k)
            if (std::popcount(facet & block_masks[k]) > p.bounds[k])
                return false;
    return true;
}

Polarization polarize(const MonomialIdeal& I, std::span<const int> block_sizes,
                      std::span<const int> display_indices) {
    if (!I.is_proper())
        throw std::invalid_argument("polarization requires a proper ideal");
    int n = I.n;
    std::vector<int> max_exp(static_cast<size_t>(n), 0);
    for (const Monomial& g : I.gens)
        for (int i = 0; i < n; ++i)
            max_exp[static_cast<size_t>(i)] = std::max(max_exp[static_cast<size_t>(i)],
                                                       g.exps[static_cast<size_t>(i)]);
    std::vector<int> sizes(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        int least = std::max(max_exp[static_cast<size_t>(i)], 1);
        if (!block_sizes.empty()) {
            if (static_cast<int>(block_sizes.size()) != n)
                throw std::invalid_argument("block_sizes must have one entry per variable");
            if (block_sizes[static_cast<size_t>(i)] < least)
                throw std::invalid_argument("block size below the maximal exponent");
            sizes[static_cast<size_t>(i)] = block_sizes[static_cast<size_t>(i)];
        } else {
            sizes[static_cast<size_t>(i)] = least;
        }
    }
    if (!display_indices.empty() && static_cast<int>(display_indices.size()) != n)
        throw std::invalid_argument("display_indices must have one entry per variable");

    std::vector<int> offset(static_cast<size_t>(n), 0);
    int total = 0;
    for (int i = 0; i < n; ++i) {
        offset[static_cast<size_t>(i)] = total;
        total += sizes[static_cast<size_t>(i)];
    }

    Polarization out;
    for (int i = 0; i < n; ++i) {
        int display = display_indices.empty() ? i + 1 : display_indices[static_cast<size_t>(i)];
        std::vector<int> vars;
        std::vector<std::string> labels;
        for (int k = 0; k < sizes[static_cast<size_t>(i)]; ++k) {
            vars.push_back(offset[static_cast<size_t>(i)] + k + 1);
            labels.push_back(k == 0 ? "x" + std::to_string(display)
                                    : "y" + std::to_string(display) + "," + std::to_string(k));
        }
        out.block_vars.push_back(std::move(vars));
        out.block_labels.push_back(std::move(labels));
    }

    std::vector<Monomial> gens;
    for (const Monomial& g : I.gens) {
        std::vector<int> e(static_cast<size_t>(total), 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < g.exps[static_cast<size_t>(i)]; ++k)
                e[static_cast<size_t>(offset[static_cast<size_t>(i)] + k)] = 1;
        gens.emplace_back(std::move(e));
    }
    out.ideal = minimalize(total, std::move(gens));
    return out;
}

std::vector<std::string> Polarization::labels() const {
    std::vector<std::string> out;
    for (const auto& block : block_labels)
        out.insert(out.end(), block.begin(), block.end());
    return out;
}

SimplicialComplex link(const SimplicialComplex& c, uint64_t face) {
    if (!c.has_face(face))
        throw std::invalid_argument("link of a non-face");
    std::vector<uint64_t> candidates;
    for (uint64_t f : c.facets)
        if ((face & ~f) == 0)
            candidates.push_back(f & ~face);
    candidates = maximalize(std::move(candidates));
    uint64_t used = 0;
    for (uint64_t f : candidates)
        used |= f;
    std::vector<std::string> labels;
    std::vector<int> new_index(c.vertices.size(), -1);
    for (size_t v = 0; v < c.vertices.size(); ++v) {
        if (used & (uint64_t{1} << v)) {
            new_index[v] = static_cast<int>(labels.size());
            labels.push_back(c.vertices[v]);
        }
    }
    std::vector<uint64_t> facets;
    for (uint64_t f : candidates) {
        uint64_t m = 0;
        for (size_t v = 0; v < c.vertices.size(); ++v)
            if (f & (uint64_t{1} << v))
                m |= uint64_t{1} << new_index[v];
        facets.push_back(m);
    }
    return make_complex(std::move(labels), std::move(facets));
}

namespace {

int gf_rank(std::vector<std::vector<int>> m, int p) {
    if (m.empty() || m.front().empty())
        return 0;
    size_t rows = m.size(), cols = m.front().size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && m[pivot][col] % p == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[rank], m[pivot]);
        // scale pivot row to 1
        int inv = 1;
        {
            int a = ((m[rank][col] % p) + p) % p;
            // extended Euclid for a^{-1} mod p
            int t0 = 0, t1 = 1, r0 = p, r1 = a;
            while (r1 != 0) {
                int q = r0 / r1;
                t0 -= q * t1;
                std::swap(t0, t1);
                r0 -= q * r1;
                std::swap(r0, r1);
            }
            inv = ((t0 % p) + p) % p;
        }
        for (size_t j = col; j < cols; ++j)
            m[rank][j] = static_cast<int>((static_cast<long long>(((m[rank][j] % p) + p) % p) * inv) % p);
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col] % p == 0)
                continue;
            int factor = ((m[i][col] % p) + p) % p;
            for (size_t j = col; j < cols; ++j)
                m[i][j] = static_cast<int>(((m[i][j] - static_cast<long long>(factor) * m[rank][j]) % p + p) % p);
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace

std::vector<int> reduced_homology_ranks(const SimplicialComplex& c, int p) {
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    int D = c.dim();
    std::vector<std::vector<uint64_t>> by_dim(static_cast<size_t>(D) + 2);
    for (uint64_t face : all_faces(c))
        by_dim[static_cast<size_t>(std::popcount(face))].push_back(face);
    // all_faces is sorted, so each dimension's list is sorted for stable indexing

    // boundary ranks: bd[k] = rank of C_{k} -> C_{k-1} for k = 0..D (dim index shift +1)
    std::vector<int> bd(static_cast<size_t>(D) + 2, 0);
    for (int k = 0; k <= D; ++k) {
        const std::vector<uint64_t>& domain = by_dim[static_cast<size_t>(k) + 1];
        const std::vector<uint64_t>& codomain = by_dim[static_cast<size_t>(k)];
        if (domain.empty() || codomain.empty())
            continue;
        std::vector<std::vector<int>> m(codomain.size(), std::vector<int>(domain.size(), 0));
        for (size_t col = 0; col < domain.size(); ++col) {
            uint64_t face = domain[col];
            int sign = 1;
            for (int v = 0; v < c.vertex_count(); ++v) {
                uint64_t bit = uint64_t{1} << v;
                if (!(face & bit))
                    continue;
                uint64_t sub = face & ~bit;
                size_t row = static_cast<size_t>(
                    std::lower_bound(codomain.begin(), codomain.end(), sub) - codomain.begin());
                m[row][col] = sign;
                sign = -sign;
            }
        }
        bd[static_cast<size_t>(k) + 1] = gf_rank(std::move(m), p);
    }

    std::vector<int> ranks;
    for (int k = -1; k <= D; ++k) {
        int dimC = static_cast<int>(by_dim[static_cast<size_t>(k) + 1].size());
        int lower = k >= 0 ? bd[static_cast<size_t>(k) + 1] : 0;       // rank of boundary out of C_k
        int upper = k + 1 <= D ? bd[static_cast<size_t>(k) + 2] : 0;   // rank of boundary into C_k
        ranks.push_back(dimC - lower - upper);
    }
    return ranks;
}

bool is_cohen_macaulay(const SimplicialComplex& c, int p) {
    for (uint64_t face : all_faces(c)) {
        SimplicialComplex lk = link(c, face);
        std::vector<int> ranks = reduced_homology_ranks(lk, p);
        for (size_t i = 0; i + 1 < ranks.size(); ++i)
            if (ranks[i] != 0)
                return false;
    }
    return true;
}

namespace {

std::vector<Int> trimmed(std::vector<Int> v) {
    while (!v.empty() && v.back() == 0)
        v.pop_back();
    return v;
}

}  // namespace

TransferResult balanced_transfer(const SimplicialComplex& complex, const TransferOptions& options) {
    TransferResult out;
    out.sr = stanley_reisner(complex);
    out.h = h_vector(complex);
    for (const Int& v : out.h)
        if (v < 0)
            throw std::invalid_argument("negative h-vector entry: the input cannot be "
                                        "Cohen-Macaulay");
    out.characteristic = options.characteristic;
    if (options.characteristic)
        out.input_cm = is_cohen_macaulay(complex, *options.characteristic);

    out.flag = is_flag(complex);
    if (out.sr.is_zero()) {
        // full simplex: no non-faces, the transfer degenerates to {emptyset}
        out.t = 0;
        if (options.caps && !options.caps->empty())
            throw rejection_error("the Stanley-Reisner ideal is zero; no caps apply");
        out.suggested_caps = std::vector<int>{};
    } else {
        out.t = height(out.sr);
        if (out.flag)
            out.suggested_caps = std::vector<int>(static_cast<size_t>(out.t), 2);
        std::optional<std::vector<int>> requested = options.caps;
        if (!requested && out.flag)
            requested = out.suggested_caps;
        DegreeSequenceResult seq = choose_degree_sequence(out.sr, requested, options.trust,
                                                          options.seed, options.attempts);
        out.caps = seq.ring.caps;
        out.certificate = std::move(seq.certificate);
    }

    CapVector artinian_ring{out.t, out.caps};
    try {
        out.artinian = artinian_reduction_witness(out.h, artinian_ring);
    } catch (const infeasible_error& e) {
        throw infeasible_error(e.info, "transfer step 4 (artinian reduction)");
    }

    // eliminate cap-1 variables before polarizing: their blocks stay empty
    MonomialIdeal reduced = out.artinian;
    std::vector<int> kept_caps, kept_display;
    for (int i = out.t; i >= 1; --i)
        if (out.caps[static_cast<size_t>(i) - 1] == 1)
            reduced = quotient_mod_variable(reduced, i);
    for (int i = 1; i <= out.t; ++i) {
        if (out.caps[static_cast<size_t>(i) - 1] > 1) {
            kept_caps.push_back(out.caps[static_cast<size_t>(i) - 1]);
            kept_display.push_back(i);
        }
    }
    out.polarized = polarize(reduced, kept_caps, kept_display);

    ComplexOfResult gamma = complex_of(out.polarized.ideal, out.polarized.labels());
    out.gamma = gamma.complex;
    out.omitted = gamma.omitted;

    // partition: block i keeps the polarized labels still present in gamma
    size_t kept_pos = 0;
    for (int i = 1; i <= out.t; ++i) {
        if (out.caps[static_cast<size_t>(i) - 1] == 1) {
            out.partition.blocks.emplace_back();
            out.partition.bounds.push_back(0);
            continue;
        }
        std::vector<std::string> block;
        for (const std::string& label : out.polarized.block_labels[kept_pos])
            if (out.gamma.vertex_index(label) >= 0)
                block.push_back(label);
        out.partition.blocks.push_back(std::move(block));
        out.partition.bounds.push_back(out.caps[static_cast<size_t>(i) - 1] - 1);
        ++kept_pos;
    }

    out.h_gamma = h_vector(out.gamma);
    out.h_equal = trimmed(out.h) == trimmed(out.h_gamma);
    out.balanced = is_balanced(out.gamma, out.partition);
    if (options.characteristic)
        out.gamma_cm = is_cohen_macaulay(out.gamma, *options.characteristic);
    return out;
}

}  // namespace eghforge
