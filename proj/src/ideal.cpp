#include "eghforge/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace eghforge {

namespace {

void require_same_vars(const MonomialIdeal& I, const Monomial& m) {
    if (I.n != m.vars())
        throw std::invalid_argument("ideal and monomial have different ambient variable counts");
}

void sort_desc(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(), lex_greater);
}

}  // namespace

MonomialIdeal zero_ideal(int n) {
    return MonomialIdeal{n, {}};
}

MonomialIdeal unit_ideal(int n) {
    return MonomialIdeal{n, {unit_monomial(n)}};
}

MonomialIdeal minimalize(int n, std::vector<Monomial> raw) {
    for (const Monomial& m : raw) {
        if (m.vars() != n)
            throw std::invalid_argument("generator has wrong ambient variable count");
        if (m.is_unit())
            return unit_ideal(n);
    }
    // ascending lex puts any divisor before its multiples (degree dominates)
    std::sort(raw.begin(), raw.end(), lex_less);
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<Monomial> kept;
    for (Monomial& m : raw) {
        bool redundant = false;
        for (const Monomial& k : kept) {
            if (divides(k, m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant)
            kept.push_back(std::move(m));
    }
    sort_desc(kept);
    return MonomialIdeal{n, std::move(kept)};
}

bool contains(const MonomialIdeal& I, const Monomial& m) {
    require_same_vars(I, m);
    for (const Monomial& g : I.gens)
        if (divides(g, m))
            return true;
    return false;
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& m) {
    require_same_vars(I, m);
    std::vector<Monomial> raw;
    raw.reserve(I.gens.size());
    for (const Monomial& g : I.gens)
        raw.push_back(quotient(g, gcd(g, m)));
    return minimalize(I.n, std::move(raw));
}

MonomialIdeal add(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.n != J.n)
        throw std::invalid_argument("ideal sum requires equal ambient variable counts");
    std::vector<Monomial> raw = I.gens;
    raw.insert(raw.end(), J.gens.begin(), J.gens.end());
    return minimalize(I.n, std::move(raw));
}

MonomialIdeal add(const MonomialIdeal& I, const Monomial& m) {
    require_same_vars(I, m);
    std::vector<Monomial> raw = I.gens;
    raw.push_back(m);
    return minimalize(I.n, std::move(raw));
}

MonomialIdeal quotient_mod_variable(const MonomialIdeal& I, int j) {
    if (j < 1 || j > I.n)
        throw std::invalid_argument("variable index out of range");
    std::vector<Monomial> raw;
    for (const Monomial& g : I.gens) {
        if (g.exps[static_cast<size_t>(j) - 1] > 0)
            continue;
        std::vector<int> e = g.exps;
        e.erase(e.begin() + (j - 1));
        raw.emplace_back(std::move(e));
    }
    return minimalize(I.n - 1, std::move(raw));
}

namespace {

void cover_search(const std::vector<uint64_t>& supports, uint64_t cover, int size, int& best) {
    if (size >= best)
        return;
    const uint64_t* uncovered = nullptr;
    for (const uint64_t& s : supports) {
        if (!(s & cover)) {
            uncovered = &s;
            break;
        }
    }
    if (!uncovered) {
        best = size;
        return;
    }
    uint64_t s = *uncovered;
    while (s) {
        uint64_t bit = s & (~s + 1);
        cover_search(supports, cover | bit, size + 1, best);
        s ^= bit;
    }
}

}  // namespace

int height(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit())
        throw std::domain_error("height is undefined for the zero and unit ideals");
    std::vector<uint64_t> supports;
    supports.reserve(I.gens.size());
    for (const Monomial& g : I.gens)
        supports.push_back(support_mask(g));
    int best = I.n + 1;
    cover_search(supports, 0, 0, best);
    return best;
}

std::pair<int, int> generator_degree_range(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit())
        throw std::domain_error("generator degrees are undefined for the zero and unit ideals");
    int lo = I.gens.front().degree(), hi = lo;
    for (const Monomial& g : I.gens) {
        int d = g.degree();
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return {lo, hi};
}

namespace {

struct SlotBase {
    Monomial m;
    uint64_t mask;
};

bool regseq_search(const std::vector<SlotBase>& bases, std::span<const int> degrees, bool fixed,
                   size_t pos, size_t t, uint64_t used, std::vector<Monomial>& out) {
    if (pos == t)
        return true;
    for (const SlotBase& b : bases) {
        if (b.mask & used)
            continue;
        int deg = b.m.degree();
        Monomial candidate = b.m;
        if (fixed) {
            int target = degrees[pos];
            if (deg > target)
                continue;
            if (deg < target) {
                int v = support(b.m).front();
                for (int k = deg; k < target; ++k)
                    candidate = mul_var(candidate, v);
            }
        }
        out.push_back(candidate);
        if (regseq_search(bases, degrees, fixed, pos + 1, t, used | b.mask, out))
            return true;
        out.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<Monomial>> monomial_regular_sequence(const MonomialIdeal& I,
                                                               std::span<const int> degrees) {
    if (!I.is_proper())
        throw std::invalid_argument("monomial_regular_sequence requires a proper ideal");
    if (I.is_zero())
        return std::nullopt;
    size_t t = degrees.empty() ? static_cast<size_t>(height(I)) : degrees.size();
    if (t == 0)
        return std::vector<Monomial>{};

    std::vector<SlotBase> bases;
    for (const Monomial& g : I.gens)
        bases.push_back({g, support_mask(g)});
    size_t singles = bases.size();
    for (size_t i = 0; i < singles; ++i)
        for (size_t j = i + 1; j < singles; ++j)
            bases.push_back({mul(bases[i].m, bases[j].m), bases[i].mask | bases[j].mask});

    std::vector<Monomial> out;
    bool fixed = !degrees.empty();
    if (regseq_search(bases, degrees, fixed, 0, t, 0, out))
        return out;
    return std::nullopt;
}

Int graded_piece_dim_enumeration(const MonomialIdeal& I, int d) {
    if (monomial_count(I.n, d) > 10'000'000)
        throw std::runtime_error("graded piece too large to enumerate");
    Int count = 0;
    for (const Monomial& m : enumerate_monomials(I.n, d))
        if (contains(I, m))
            ++count;
    return count;
}

namespace {

void ie_rec(const std::vector<Monomial>& gens, size_t from, const Monomial& current, int d,
            int sign, Int& total) {
    for (size_t j = from; j < gens.size(); ++j) {
        Monomial L = lcm(current, gens[j]);
        int deg = L.degree();
        if (deg > d)
            continue;  // every superset's lcm is at least as large in each exponent
        total += sign * monomial_count(L.vars(), d - deg);
        ie_rec(gens, j + 1, L, d, -sign, total);
    }
}

int most_frequent_variable(const MonomialIdeal& I) {
    std::vector<int> freq(static_cast<size_t>(I.n), 0);
    for (const Monomial& g : I.gens)
        for (int i = 0; i < I.n; ++i)
            if (g.exps[static_cast<size_t>(i)] > 0)
                ++freq[static_cast<size_t>(i)];
    int best = 0;
    for (int i = 1; i < I.n; ++i)
        if (freq[static_cast<size_t>(i)] > freq[static_cast<size_t>(best)])
            best = i;
    return best + 1;
}

}  // namespace

Int graded_piece_dim_inclusion_exclusion(const MonomialIdeal& I, int d) {
    if (I.gens.size() > 18)
        throw std::runtime_error("inclusion-exclusion capped at 18 generators");
    Int total = 0;
    ie_rec(I.gens, 0, unit_monomial(I.n), d, +1, total);
    return total;
}

Int graded_piece_dim(const MonomialIdeal& I, int d) {
    if (d < 0)
        return 0;
    if (I.is_zero())
        return 0;
    if (I.is_unit())
        return monomial_count(I.n, d);
    std::vector<Monomial> active;
    for (const Monomial& g : I.gens)
        if (g.degree() <= d)
            active.push_back(g);
    if (active.empty())
        return 0;
    MonomialIdeal J{I.n, std::move(active)};
    if (J.gens.size() <= 18)
        return graded_piece_dim_inclusion_exclusion(J, d);
    // pivot split on a most-frequent variable:
    // |I_d| = |(I:x_j)_{d-1}| + |image of I in the other variables at degree d|
    int j = most_frequent_variable(J);
    return graded_piece_dim(colon(J, variable(J.n, j)), d - 1) +
           graded_piece_dim(quotient_mod_variable(J, j), d);
}

}  // namespace eghforge
