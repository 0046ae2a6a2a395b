#include "eghforge/egh.hpp"

#include <algorithm>
#include <numeric>

namespace eghforge {

namespace {

std::vector<ProductOfLinearForms> wrap_monomials(const std::vector<Monomial>& ms) {
    std::vector<ProductOfLinearForms> fs;
    fs.reserve(ms.size());
    for (const Monomial& m : ms)
        fs.push_back(product_from_monomial(m));
    return fs;
}

std::optional<std::vector<ProductOfLinearForms>> certificate_for(const MonomialIdeal& I,
                                                                 const std::vector<int>& A,
                                                                 Trust trust, uint64_t seed,
                                                                 int attempts) {
    if (trust == Trust::monomial_certificate) {
        if (auto ms = monomial_regular_sequence(I, A))
            return wrap_monomials(*ms);
        return std::nullopt;
    }
    return search_regular_sequence(I, A, seed, attempts);
}

}  // namespace

DegreeSequenceResult choose_degree_sequence(const MonomialIdeal& I,
                                            std::optional<std::vector<int>> A, Trust trust,
                                            uint64_t seed, int attempts) {
    if (I.is_zero() || I.is_unit())
        throw rejection_error("degree sequence selection requires a proper nonzero ideal");
    int t = height(I);
    auto [lo, hi] = generator_degree_range(I);

    if (A) {
        if (static_cast<int>(A->size()) != t)
            throw rejection_error("caps length " + std::to_string(A->size()) +
                                  " does not equal the ideal height " + std::to_string(t));
        for (size_t i = 0; i < A->size(); ++i) {
            if ((*A)[i] < lo || (*A)[i] > hi)
                throw rejection_error("cap " + std::to_string((*A)[i]) +
                                      " outside the generator-degree range [" +
                                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
            if (i > 0 && (*A)[i] < (*A)[i - 1])
                throw rejection_error("caps must be non-decreasing");
        }
        CapVector ring = make_cap_vector(I.n, *A);
        if (trust == Trust::assume)
            return {ring, std::nullopt};
        auto cert = certificate_for(I, *A, trust, seed, attempts);
        if (!cert)
            throw search_failure("no regular-sequence certificate found for the requested caps");
        return {ring, std::move(cert)};
    }

    if (trust == Trust::assume)
        return {make_cap_vector(I.n, std::vector<int>(static_cast<size_t>(t), lo)), std::nullopt};

    // non-decreasing tuples over [lo, hi], lexicographically from the smallest
    std::vector<int> tuple(static_cast<size_t>(t), lo);
    while (true) {
        if (auto cert = certificate_for(I, tuple, trust, seed, attempts))
            return {make_cap_vector(I.n, tuple), std::move(cert)};
        int i = t - 1;
        while (i >= 0 && tuple[static_cast<size_t>(i)] == hi)
            --i;
        if (i < 0)
            break;
        int v = tuple[static_cast<size_t>(i)] + 1;
        for (int k = i; k < t; ++k)
            tuple[static_cast<size_t>(k)] = v;
    }
    throw search_failure("no certified degree sequence within the generator-degree bounds");
}

WitnessResult egh_witness(const MonomialIdeal& I, const CapVector& ring,
                          std::optional<int> horizon) {
    validate(ring);
    if (ring.n != I.n)
        throw std::invalid_argument("ideal and cap vector have different ambient counts");
    int maxgen = 0;
    if (!I.is_zero() && !I.is_unit())
        maxgen = generator_degree_range(I).second;
    int D = horizon.value_or(maxgen + std::accumulate(ring.caps.begin(), ring.caps.end(), 0) + 2);
    if (D < 1)
        D = 1;

    HilbertSeries series = hilbert_series(I);
    QPolynomial reduced = reduce_series(series);

    for (int retry = 0;; ++retry) {
        std::vector<Int> target = expand(series, D);
        LppResult lpp = lpp_from_hilbert(target, ring);
        if (!lpp.ok())
            throw infeasible_error(*lpp.infeasible);
        WitnessResult out;
        out.witness = *lpp.ideal;
        out.ring = ring;
        out.horizon = D;
        out.certified = reduce_series(hilbert_series(out.witness)) == reduced;
        for (size_t d = 0; d < target.size(); ++d)
            out.per_degree.push_back({static_cast<int>(d), target[d],
                                      Int(lpp.segments[d].members.size())});
        if (out.certified || retry == 3)
            return out;
        D *= 2;
    }
}

WitnessReport verify_witness(const MonomialIdeal& I, const MonomialIdeal& W,
                             const CapVector& ring) {
    if (I.n != W.n)
        throw std::invalid_argument("ideals live in different ambient variable counts");
    WitnessReport report;
    report.series_equal = reduce_series(hilbert_series(I)) == reduce_series(hilbert_series(W));
    report.powers_contained = true;
    for (int i = 0; i < ring.t(); ++i)
        if (!contains(W, pure_power(ring.n, i + 1, ring.caps[static_cast<size_t>(i)])))
            report.powers_contained = false;
    report.lex_plus_powers = is_lpp(W, ring);
    return report;
}

MonomialIdeal artinian_reduction_witness(std::span<const Int> h, const CapVector& ring) {
    validate(ring);
    if (ring.t() != ring.n)
        throw std::invalid_argument("artinian reduction requires every variable capped (t = n)");
    if (h.empty() || h[0] != 1)
        throw std::invalid_argument("h_0 must equal 1");
    for (const Int& v : h)
        if (v < 0)
            throw std::invalid_argument("h entries must be non-negative");
    int top = std::accumulate(ring.caps.begin(), ring.caps.end(), 0) - ring.n;  // sum (a_i - 1)
    size_t len = std::max(h.size(), static_cast<size_t>(top) + 2);
    std::vector<Int> target(h.begin(), h.end());
    target.resize(len, Int(0));
    LppResult lpp = lpp_from_hilbert(target, ring);
    if (!lpp.ok())
        throw infeasible_error(*lpp.infeasible);
    return *lpp.ideal;
}

namespace {

// Embed a monomial on variables 2..n behind x_1^i.
Monomial embed_behind_power(const Monomial& z, int power) {
    std::vector<int> e;
    e.reserve(z.exps.size() + 1);
    e.push_back(power);
    e.insert(e.end(), z.exps.begin(), z.exps.end());
    return Monomial{std::move(e)};
}

struct AssembledPieces {
    std::vector<Monomial> at_d;
    std::vector<Monomial> at_d1;
    DegreeTrace trace;
};

void sort_unique(std::vector<Monomial>& v) {
    std::sort(v.begin(), v.end(), lex_greater);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool subset_of(const std::vector<Monomial>& small, const std::vector<Monomial>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end(), lex_greater);
}

std::vector<Monomial> ideal_piece(const MonomialIdeal& I, int d) {
    std::vector<Monomial> out;
    if (d < 0)
        return out;
    for (const Monomial& m : enumerate_monomials(I.n, d))
        if (contains(I, m))
            out.push_back(m);
    return out;
}

AssembledPieces assemble_degree(const MonomialIdeal& I, const CapVector& ring, int d) {
    const int n = I.n;
    const int t = ring.t();
    AssembledPieces out;
    out.trace.d = d;

    if (t == 0 || n <= 1) {
        // Macaulay base (no powers prescribed) and the one-variable base,
        // where the ideal is its own witness.
        if (t == 0) {
            std::vector<Int> target = hilbert_function_range(I, d + 1);
            LppResult lpp = lpp_from_hilbert(target, ring);
            if (!lpp.ok())
                throw infeasible_error(*lpp.infeasible);
            out.at_d = lpp_piece(ring, lpp.segments, d);
            out.at_d1 = lpp_piece(ring, lpp.segments, d + 1);
        } else {
            // n == 1: the only monomial of degree a_1 is x1^{a_1} itself
            if (!contains(I, pure_power(1, 1, ring.caps[0])))
                throw hypothesis_error("the ideal contains no monomial of degree " +
                                       std::to_string(ring.caps[0]));
            out.at_d = ideal_piece(I, d);
            out.at_d1 = ideal_piece(I, d + 1);
        }
        Int cl_d = 0;
        for (const Monomial& m : out.at_d)
            if (respects_caps(m, ring.caps))
                ++cl_d;
        out.trace.piece_d = Int(out.at_d.size());
        out.trace.piece_d1 = Int(out.at_d1.size());
        out.trace.segment_d = cl_d;
        return out;
    }

    const int r = ring.caps[0];

    // f_1: lex-greatest degree-a_1 monomial of I
    std::optional<Monomial> f1;
    for (const Monomial& m : enumerate_monomials(n, r)) {
        if (contains(I, m)) {
            f1 = m;
            break;
        }
    }
    if (!f1)
        throw hypothesis_error("the ideal contains no monomial of degree " + std::to_string(r));
    out.trace.f1 = *f1;

    std::vector<int> remaining;
    for (int v = 1; v <= n; ++v)
        for (int k = 0; k < f1->exp(v); ++k)
            remaining.push_back(v);

    // greedy factor order: at step i pick the remaining variable with the
    // largest |(I : l_1..l_{i-1})_{d-i+1} intersect <x_v>|, smaller index on ties
    std::vector<int> order;
    MonomialIdeal cur = I;
    for (int step = 1; step <= r; ++step) {
        int best_idx = -1;
        Int best_score = -1;
        for (size_t k = 0; k < remaining.size(); ++k) {
            if (k > 0 && remaining[k] == remaining[k - 1])
                continue;  // equal variables score equally
            Int score = graded_piece_dim(colon(cur, variable(n, remaining[k])), d - step);
            if (score > best_score) {
                best_score = score;
                best_idx = static_cast<int>(k);
            }
        }
        int v = remaining[static_cast<size_t>(best_idx)];
        order.push_back(v);
        remaining.erase(remaining.begin() + best_idx);
        cur = colon(cur, variable(n, v));
    }
    out.trace.factors = order;

    CapVector sub_ring{n - 1, std::vector<int>(ring.caps.begin() + 1, ring.caps.end())};

    std::vector<std::vector<Monomial>> piece_lo(static_cast<size_t>(r));
    std::vector<std::vector<Monomial>> piece_hi(static_cast<size_t>(r));
    MonomialIdeal colon_acc = I;  // (I : l_1..l_i) while walking the levels
    for (int i = 0; i < r; ++i) {
        int v = order[static_cast<size_t>(i)];
        Monomial xv = variable(n, v);
        if (i == r - 1 && !contains(colon_acc, xv))
            throw std::logic_error("last factor is not in the final colon ideal");
        if (!ses_identity_check(colon_acc, xv, d - i) ||
            !ses_identity_check(colon_acc, xv, d - i + 1))
            throw std::logic_error("short-exact-sequence identity failed at level " +
                                   std::to_string(i));
        MonomialIdeal J = add(colon_acc, xv);
        MonomialIdeal Jbar = quotient_mod_variable(J, v);
        out.trace.levels.push_back(J);
        out.trace.level_images.push_back(Jbar);

        int sub_horizon = d - i + 1;
        if (sub_horizon >= 0) {
            std::vector<Int> target = hilbert_function_range(Jbar, sub_horizon);
            LppResult lpp = lpp_from_hilbert(target, sub_ring);
            if (!lpp.ok())
                throw infeasible_error(*lpp.infeasible);
            piece_lo[static_cast<size_t>(i)] = lpp_piece(sub_ring, lpp.segments, d - i);
            piece_hi[static_cast<size_t>(i)] = lpp_piece(sub_ring, lpp.segments, d - i + 1);

            if (d - i >= 0) {
                // replay the construction one level down and compare sizes
                AssembledPieces sub = assemble_degree(Jbar, sub_ring, d - i);
                if (sub.at_d.size() != piece_lo[static_cast<size_t>(i)].size() ||
                    sub.at_d1.size() != piece_hi[static_cast<size_t>(i)].size())
                    throw std::logic_error("recursive and direct pieces disagree at level " +
                                           std::to_string(i));
            }
        }
        colon_acc = colon(colon_acc, xv);
    }
    out.trace.level_piece_lo = piece_lo;
    out.trace.level_piece_hi = piece_hi;

    // level containment: L_{i, d-i} inside L_{i+1, d-i}
    for (int i = 0; i + 1 < r; ++i) {
        if (!subset_of(piece_lo[static_cast<size_t>(i)], piece_hi[static_cast<size_t>(i) + 1]))
            throw std::logic_error("level containment failed between levels " + std::to_string(i) +
                                   " and " + std::to_string(i + 1));
    }

    // assemble: K_i = x1^i * (pieces of L_i), K_r = everything past x1^r
    auto assemble_at = [&](int j) {
        std::vector<Monomial> u;
        for (int i = 0; i < r; ++i) {
            const std::vector<Monomial>& src =
                (j == d) ? piece_lo[static_cast<size_t>(i)] : piece_hi[static_cast<size_t>(i)];
            int zdeg = j - i;
            for (const Monomial& z : src)
                if (z.degree() == zdeg)
                    u.push_back(embed_behind_power(z, i));
        }
        if (j >= r)
            for (const Monomial& z : enumerate_monomials(n, j - r))
                u.push_back(mul(z, pure_power(n, 1, r)));
        sort_unique(u);
        return u;
    };
    out.at_d = assemble_at(d);
    out.at_d1 = assemble_at(d + 1);

    // membership claim: the ideal generated by the K sets has exactly these
    // degree-d and degree-(d+1) pieces
    {
        std::vector<Monomial> gens;
        gens.push_back(pure_power(n, 1, r));
        for (int i = 0; i < r; ++i) {
            for (const Monomial& z : piece_lo[static_cast<size_t>(i)])
                gens.push_back(embed_behind_power(z, i));
            for (const Monomial& z : piece_hi[static_cast<size_t>(i)])
                gens.push_back(embed_behind_power(z, i));
        }
        MonomialIdeal L = minimalize(n, std::move(gens));
        if (ideal_piece(L, d) != out.at_d || ideal_piece(L, d + 1) != out.at_d1)
            throw std::logic_error("membership claim failed: assembled sets are not the pieces "
                                   "of the generated ideal");
    }

    // counting identity and agreement with the input's Hilbert function
    for (int j : {d, d + 1}) {
        const std::vector<Monomial>& u = (j == d) ? out.at_d : out.at_d1;
        Int rhs = 0;
        for (int i = 0; i < r; ++i) {
            rhs += monomial_count(n - 1, j - i);
            const std::vector<Monomial>& src =
                (j == d) ? piece_lo[static_cast<size_t>(i)] : piece_hi[static_cast<size_t>(i)];
            Int cnt = 0;
            for (const Monomial& z : src)
                if (z.degree() == j - i)
                    ++cnt;
            rhs -= cnt;
        }
        if (monomial_count(n, j) - Int(u.size()) != rhs)
            throw std::logic_error("counting identity failed at degree " + std::to_string(j));
        if (Int(u.size()) != graded_piece_dim(I, j))
            throw std::logic_error("assembled piece size differs from the input ideal at degree " +
                                   std::to_string(j));
    }

    Int seg = 0;
    for (const Monomial& m : out.at_d)
        if (respects_caps(m, ring.caps))
            ++seg;
    out.trace.piece_d = Int(out.at_d.size());
    out.trace.piece_d1 = Int(out.at_d1.size());
    out.trace.segment_d = seg;
    return out;
}

}  // namespace

RecursiveResult egh_witness_recursive(const MonomialIdeal& I, const CapVector& ring, int horizon) {
    validate(ring);
    if (ring.n != I.n)
        throw std::invalid_argument("ideal and cap vector have different ambient counts");
    if (horizon < 0)
        throw std::invalid_argument("negative horizon");
    RecursiveResult result;
    for (int d = 0; d <= horizon; ++d) {
        AssembledPieces pieces = assemble_degree(I, ring, d);
        result.segment_sizes.push_back(pieces.trace.segment_d);
        result.trace.degrees.push_back(std::move(pieces.trace));
    }
    return result;
}

}  // namespace eghforge
