#include "eghforge/clements.hpp"

#include <algorithm>
#include <stdexcept>

namespace eghforge {

void validate(const CapVector& ring) {
    if (ring.n < 0)
        throw std::invalid_argument("negative variable count");
    if (ring.t() > ring.n)
        throw std::invalid_argument("more caps than variables");
    for (size_t i = 0; i < ring.caps.size(); ++i) {
        if (ring.caps[i] < 1)
            throw std::invalid_argument("caps must be >= 1");
        if (i > 0 && ring.caps[i] < ring.caps[i - 1])
            throw std::invalid_argument("caps must be non-decreasing");
    }
}

CapVector make_cap_vector(int n, std::vector<int> caps) {
    CapVector ring{n, std::move(caps)};
    validate(ring);
    return ring;
}

Int cl_count(const CapVector& ring, int d) {
    if (d < 0)
        return 0;
    // product of truncated geometric polynomials for the capped variables,
    // then the free variables contribute a plain monomial count
    std::vector<Int> poly{Int(1)};
    for (int cap : ring.caps) {
        std::vector<Int> next(std::min<size_t>(poly.size() + static_cast<size_t>(cap) - 1,
                                               static_cast<size_t>(d) + 1),
                              Int(0));
        for (size_t i = 0; i < poly.size(); ++i) {
            if (poly[i] == 0)
                continue;
            for (int e = 0; e < cap && i + static_cast<size_t>(e) < next.size(); ++e)
                next[i + static_cast<size_t>(e)] += poly[i];
        }
        poly = std::move(next);
    }
    int free_vars = ring.n - ring.t();
    Int total = 0;
    for (size_t k = 0; k < poly.size() && k <= static_cast<size_t>(d); ++k)
        total += poly[k] * monomial_count(free_vars, d - static_cast<int>(k));
    return total;
}

LexSegment lex_segment(const CapVector& ring, int d, const Int& size) {
    if (size < 0 || size > cl_count(ring, d))
        throw std::out_of_range("lex segment size out of range 0..cl_count");
    if (size > 10'000'000)
        throw std::runtime_error("lex segment too large to materialize");
    size_t limit = static_cast<size_t>(size.convert_to<unsigned long long>());
    LexSegment seg{ring, d, enumerate_monomials(ring.n, d, ring.caps, limit)};
    return seg;
}

std::vector<Monomial> span_growth(const CapVector& ring, std::span<const Monomial> members) {
    std::vector<Monomial> out;
    for (const Monomial& u : members) {
        for (int j = 1; j <= ring.n; ++j) {
            Monomial w = mul_var(u, j);
            if (respects_caps(w, ring.caps))
                out.push_back(std::move(w));
        }
    }
    std::sort(out.begin(), out.end(), lex_greater);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Monomial> segment_span_growth(const LexSegment& seg) {
    return span_growth(seg.ring, seg.members);
}

LppResult lpp_from_hilbert(std::span<const Int> target, const CapVector& ring) {
    validate(ring);
    LppResult result;
    for (size_t d = 0; d < target.size(); ++d) {
        Int cnt = cl_count(ring, static_cast<int>(d));
        Int size = cnt - target[d];
        if (size < 0) {
            result.infeasible = LppInfeasible{
                static_cast<int>(d),
                "target " + target[d].str() + " exceeds the degree-" + std::to_string(d) +
                    " dimension " + cnt.str() + " of the truncated ring",
                {},
                {}};
            return result;
        }
        if (size > cnt) {
            result.infeasible = LppInfeasible{static_cast<int>(d), "negative target value", {}, {}};
            return result;
        }
        result.segments.push_back(lex_segment(ring, static_cast<int>(d), size));
    }
    for (size_t d = 0; d + 1 < result.segments.size(); ++d) {
        std::vector<Monomial> growth = segment_span_growth(result.segments[d]);
        const std::vector<Monomial>& next = result.segments[d + 1].members;
        bool glued = std::includes(next.begin(), next.end(), growth.begin(), growth.end(),
                                   lex_greater);
        if (!glued) {
            result.infeasible =
                LppInfeasible{static_cast<int>(d),
                              "span growth of the degree-" + std::to_string(d) +
                                  " segment is not contained in the degree-" +
                                  std::to_string(d + 1) + " segment",
                              std::move(growth), next};
            result.segments.clear();
            return result;
        }
    }

    std::vector<Monomial> gens;
    for (int i = 0; i < ring.t(); ++i)
        gens.push_back(pure_power(ring.n, i + 1, ring.caps[static_cast<size_t>(i)]));
    for (size_t d = 0; d < result.segments.size(); ++d) {
        std::vector<Monomial> reached =
            d == 0 ? std::vector<Monomial>{} : segment_span_growth(result.segments[d - 1]);
        for (const Monomial& u : result.segments[d].members) {
            if (!std::binary_search(reached.begin(), reached.end(), u, lex_greater))
                gens.push_back(u);
        }
    }
    result.ideal = minimalize(ring.n, std::move(gens));
    return result;
}

bool is_lpp(const MonomialIdeal& I, const CapVector& ring) {
    validate(ring);
    if (I.n != ring.n)
        throw std::invalid_argument("ideal and cap vector have different ambient counts");
    for (int i = 0; i < ring.t(); ++i)
        if (!contains(I, pure_power(ring.n, i + 1, ring.caps[static_cast<size_t>(i)])))
            return false;
    if (I.is_zero())
        return true;  // t = 0 only: no powers required, all pieces empty prefixes
    // Past maxgendeg the pieces grow as S_1 * (previous piece), and the
    // cap-respecting span of a lex prefix is again a lex prefix, so checking
    // up to maxgendeg + 1 settles all degrees.
    int dmax = 1;
    for (const Monomial& g : I.gens)
        dmax = std::max(dmax, g.degree());
    ++dmax;
    for (int d = 0; d <= dmax; ++d) {
        bool outside_seen = false;
        for (const Monomial& u : enumerate_monomials(ring.n, d, ring.caps)) {
            bool in = contains(I, u);
            if (in && outside_seen)
                return false;
            if (!in)
                outside_seen = true;
        }
    }
    return true;
}

std::vector<Monomial> lpp_piece(const CapVector& ring, const std::vector<LexSegment>& segments,
                                int d) {
    if (d < 0)
        return {};
    if (static_cast<size_t>(d) >= segments.size())
        throw std::out_of_range("lpp_piece degree beyond the constructed horizon");
    std::vector<Monomial> out;
    for (const Monomial& m : enumerate_monomials(ring.n, d))
        if (!respects_caps(m, ring.caps))
            out.push_back(m);
    out.insert(out.end(), segments[static_cast<size_t>(d)].members.begin(),
               segments[static_cast<size_t>(d)].members.end());
    std::sort(out.begin(), out.end(), lex_greater);
    return out;
}

}  // namespace eghforge
