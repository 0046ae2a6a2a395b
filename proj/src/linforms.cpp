#include "eghforge/linforms.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <stdexcept>

namespace eghforge {

bool LinearForm::is_zero() const {
    for (const Rat& c : coeffs)
        if (c != 0)
            return false;
    return true;
}

LinearForm variable_form(int n, int j) {
    if (j < 1 || j > n)
        throw std::invalid_argument("variable index out of range");
    LinearForm f{std::vector<Rat>(static_cast<size_t>(n), Rat(0))};
    f.coeffs[static_cast<size_t>(j) - 1] = 1;
    return f;
}

ProductOfLinearForms product_from_monomial(const Monomial& m) {
    if (m.is_unit())
        throw std::invalid_argument("the unit monomial is not a product of linear forms");
    ProductOfLinearForms f;
    for (int i = 0; i < m.vars(); ++i)
        for (int k = 0; k < m.exps[static_cast<size_t>(i)]; ++k)
            f.factors.push_back(variable_form(m.vars(), i + 1));
    return f;
}

std::vector<Monomial> expand_support(const ProductOfLinearForms& f) {
    if (f.factors.empty())
        throw std::invalid_argument("empty product of linear forms");
    int n = f.vars();
    std::map<std::vector<int>, Rat> terms{{std::vector<int>(static_cast<size_t>(n), 0), Rat(1)}};
    for (const LinearForm& l : f.factors) {
        if (l.vars() != n)
            throw std::invalid_argument("factors live in different ambient variable counts");
        if (l.is_zero())
            throw std::invalid_argument("zero linear form");
        std::map<std::vector<int>, Rat> next;
        for (const auto& [e, c] : terms) {
            for (int i = 0; i < n; ++i) {
                if (l.coeffs[static_cast<size_t>(i)] == 0)
                    continue;
                std::vector<int> e2 = e;
                ++e2[static_cast<size_t>(i)];
                next[std::move(e2)] += c * l.coeffs[static_cast<size_t>(i)];
            }
        }
        terms = std::move(next);
    }
    std::vector<Monomial> out;
    for (const auto& [e, c] : terms)
        if (c != 0)
            out.emplace_back(e);
    std::sort(out.begin(), out.end(), lex_greater);
    return out;
}

bool contained_in(const ProductOfLinearForms& f, const MonomialIdeal& I) {
    if (f.vars() != I.n)
        throw std::invalid_argument("product and ideal have different ambient variable counts");
    for (const Monomial& m : expand_support(f))
        if (!contains(I, m))
            return false;
    return true;
}

int rational_rank(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty())
        return 0;
    size_t ncols = rows.front().size();
    // clear denominators row-wise (rank-invariant), then Bareiss
    std::vector<std::vector<Int>> a;
    a.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != ncols)
            throw std::invalid_argument("ragged matrix");
        Int scale = 1;
        for (const Rat& x : row)
            scale = boost::multiprecision::lcm(scale, Int(boost::multiprecision::denominator(x)));
        std::vector<Int> r;
        r.reserve(ncols);
        for (const Rat& x : row)
            r.push_back(Int(boost::multiprecision::numerator(x)) * (scale / Int(boost::multiprecision::denominator(x))));
        a.push_back(std::move(r));
    }
    size_t rank = 0;
    Int prev_pivot = 1;
    for (size_t col = 0; col < ncols && rank < a.size(); ++col) {
        size_t pivot = rank;
        while (pivot < a.size() && a[pivot][col] == 0)
            ++pivot;
        if (pivot == a.size())
            continue;
        std::swap(a[rank], a[pivot]);
        for (size_t i = rank + 1; i < a.size(); ++i) {
            for (size_t j = col + 1; j < ncols; ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev_pivot;
            a[i][col] = 0;
        }
        prev_pivot = a[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

RegSeqCheck verify_regular_sequence(std::span<const ProductOfLinearForms> fs) {
    size_t t = fs.size();
    if (t == 0)
        return {true, {}};
    int n = fs.front().vars();
    for (const auto& f : fs) {
        if (f.vars() != n)
            throw std::invalid_argument("products live in different ambient variable counts");
        if (f.factors.empty())
            throw std::invalid_argument("empty product of linear forms");
        for (const LinearForm& l : f.factors)
            if (l.is_zero())
                throw std::invalid_argument("zero linear form");
    }
    if (t > static_cast<size_t>(n))
        return {false, std::vector<int>(t, 0)};

    unsigned long long selections = 1;
    for (const auto& f : fs) {
        selections *= f.factors.size();
        if (selections > 10'000'000ULL)
            throw std::runtime_error("selection count exceeds 10^7; input rejected");
    }

    std::vector<int> sel(t, 0);
    while (true) {
        std::vector<std::vector<Rat>> rows;
        rows.reserve(t);
        for (size_t i = 0; i < t; ++i)
            rows.push_back(fs[i].factors[static_cast<size_t>(sel[i])].coeffs);
        if (rational_rank(rows) != static_cast<int>(t))
            return {false, sel};
        size_t i = 0;
        for (; i < t; ++i) {
            if (++sel[i] < static_cast<int>(fs[i].factors.size()))
                break;
            sel[i] = 0;
        }
        if (i == t)
            break;
    }
    return {true, {}};
}

namespace {

std::vector<std::vector<int>> support_pools(const MonomialIdeal& I) {
    std::vector<uint64_t> masks;
    for (const Monomial& g : I.gens)
        masks.push_back(support_mask(g));
    uint64_t all = 0;
    for (uint64_t m : masks)
        all |= m;
    std::vector<uint64_t> pools = masks;
    for (size_t i = 0; i < masks.size(); ++i)
        for (size_t j = i + 1; j < masks.size(); ++j)
            pools.push_back(masks[i] | masks[j]);
    pools.push_back(all);
    std::sort(pools.begin(), pools.end());
    pools.erase(std::unique(pools.begin(), pools.end()), pools.end());
    std::vector<std::vector<int>> out;
    for (uint64_t mask : pools) {
        std::vector<int> vars;
        for (int v = 0; v < I.n; ++v)
            if (mask & (uint64_t{1} << v))
                vars.push_back(v + 1);
        if (!vars.empty())
            out.push_back(std::move(vars));
    }
    return out;
}

}  // namespace

std::optional<std::vector<ProductOfLinearForms>> search_regular_sequence(
    const MonomialIdeal& I, std::span<const int> degrees, uint64_t seed, int attempts) {
    if (I.is_zero() || I.is_unit())
        return std::nullopt;
    size_t t = degrees.size();
    if (t == 0)
        return std::vector<ProductOfLinearForms>{};
    if (t > static_cast<size_t>(I.n) || static_cast<int>(t) > height(I))
        return std::nullopt;

    if (auto mono = monomial_regular_sequence(I, degrees)) {
        std::vector<ProductOfLinearForms> fs;
        for (const Monomial& m : *mono)
            fs.push_back(product_from_monomial(m));
        if (verify_regular_sequence(fs).regular)
            return fs;
    }

    std::vector<std::vector<int>> pools = support_pools(I);
    if (pools.empty())
        return std::nullopt;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff_dist(-2, 2);
    std::uniform_int_distribution<size_t> pool_dist(0, pools.size() - 1);

    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<ProductOfLinearForms> fs;
        bool built = true;
        for (size_t i = 0; i < t && built; ++i) {
            bool found = false;
            for (int inner = 0; inner < 25 && !found; ++inner) {
                const std::vector<int>& pool = pools[pool_dist(rng)];
                ProductOfLinearForms f;
                bool ok = true;
                for (int k = 0; k < degrees[i] && ok; ++k) {
                    LinearForm l{std::vector<Rat>(static_cast<size_t>(I.n), Rat(0))};
                    bool nonzero = false;
                    for (int v : pool) {
                        int c = coeff_dist(rng);
                        l.coeffs[static_cast<size_t>(v) - 1] = c;
                        nonzero = nonzero || c != 0;
                    }
                    if (!nonzero)
                        ok = false;
                    else
                        f.factors.push_back(std::move(l));
                }
                if (ok && contained_in(f, I)) {
                    fs.push_back(std::move(f));
                    found = true;
                }
            }
            built = found;
        }
        if (built && verify_regular_sequence(fs).regular)
            return fs;
    }
    return std::nullopt;
}

std::string to_string(const LinearForm& f) {
    std::string s;
    for (int i = 0; i < f.vars(); ++i) {
        const Rat& c = f.coeffs[static_cast<size_t>(i)];
        if (c == 0)
            continue;
        Rat abs = c < 0 ? Rat(-c) : c;
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? "-" : "+";
        if (abs != 1)
            s += abs.str() + "*";
        s += "x" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

std::string to_string(const ProductOfLinearForms& f) {
    std::string s;
    for (const LinearForm& l : f.factors) {
        if (!s.empty())
            s += ";";
        s += to_string(l);
    }
    return s;
}

namespace {

Rat parse_rational(const std::string& text, size_t& pos) {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos == start)
        throw std::invalid_argument("expected a number at position " + std::to_string(start) +
                                    " in '" + text + "'");
    Int num(text.substr(start, pos - start));
    Int den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == dstart)
            throw std::invalid_argument("expected a denominator at position " +
                                        std::to_string(dstart) + " in '" + text + "'");
        den = Int(text.substr(dstart, pos - dstart));
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + text + "'");
    }
    return Rat(num, den);
}

}  // namespace

LinearForm parse_linear_form(const std::string& text, int n) {
    LinearForm f{std::vector<Rat>(static_cast<size_t>(n), Rat(0))};
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    };
    bool any = false;
    while (true) {
        skip_ws();
        if (pos >= text.size())
            break;
        Rat sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-')
                sign = -1;
            ++pos;
            skip_ws();
        } else if (any) {
            throw std::invalid_argument("expected '+' or '-' at position " + std::to_string(pos) +
                                        " in linear form '" + text + "'");
        }
        Rat coeff = 1;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = parse_rational(text, pos);
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                skip_ws();
            }
        }
        if (pos >= text.size() || text[pos] != 'x')
            throw std::invalid_argument("expected a variable at position " + std::to_string(pos) +
                                        " in linear form '" + text + "'");
        ++pos;
        size_t istart = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == istart)
            throw std::invalid_argument("expected a variable index in linear form '" + text + "'");
        long long idx = std::stoll(text.substr(istart, pos - istart));
        if (idx < 1 || idx > n)
            throw std::invalid_argument("variable x" + std::to_string(idx) + " out of range 1.." +
                                        std::to_string(n) + " in linear form '" + text + "'");
        f.coeffs[static_cast<size_t>(idx) - 1] += sign * coeff;
        any = true;
    }
    if (!any)
        throw std::invalid_argument("empty linear form");
    if (f.is_zero())
        throw std::invalid_argument("linear form '" + text + "' cancels to zero");
    return f;
}

ProductOfLinearForms parse_product(const std::string& text, int n) {
    ProductOfLinearForms f;
    size_t start = 0;
    while (start <= text.size()) {
        size_t sep = text.find(';', start);
        std::string piece = text.substr(start, sep == std::string::npos ? std::string::npos
                                                                        : sep - start);
        f.factors.push_back(parse_linear_form(piece, n));
        if (sep == std::string::npos)
            break;
        start = sep + 1;
    }
    return f;
}

}  // namespace eghforge
