#include "eghforge/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace eghforge {

namespace {

void require_same_vars(const Monomial& u, const Monomial& v) {
    if (u.vars() != v.vars())
        throw std::invalid_argument("monomials have different ambient variable counts (" +
                                    std::to_string(u.vars()) + " vs " + std::to_string(v.vars()) + ")");
}

int checked_add(int a, int b) {
    long long s = static_cast<long long>(a) + b;
    if (s > std::numeric_limits<int>::max())
        throw std::overflow_error("monomial exponent overflow");
    return static_cast<int>(s);
}

}  // namespace

int Monomial::degree() const {
    long long d = 0;
    for (int e : exps)
        d += e;
    if (d > std::numeric_limits<int>::max())
        throw std::overflow_error("monomial degree overflow");
    return static_cast<int>(d);
}

bool Monomial::is_unit() const {
    for (int e : exps)
        if (e != 0)
            return false;
    return true;
}

Ordering compare_lex(const Monomial& u, const Monomial& v) {
    require_same_vars(u, v);
    int du = u.degree(), dv = v.degree();
    if (du != dv)
        return du < dv ? Ordering::less : Ordering::greater;
    for (int i = 0; i < u.vars(); ++i) {
        if (u.exps[i] != v.exps[i])
            return u.exps[i] < v.exps[i] ? Ordering::less : Ordering::greater;
    }
    return Ordering::equal;
}

Monomial unit_monomial(int n) {
    return Monomial(std::vector<int>(static_cast<size_t>(n), 0));
}

Monomial variable(int n, int j) {
    return pure_power(n, j, 1);
}

Monomial pure_power(int n, int j, int e) {
    if (j < 1 || j > n)
        throw std::invalid_argument("variable index out of range");
    Monomial m = unit_monomial(n);
    m.exps[static_cast<size_t>(j) - 1] = e;
    return m;
}

bool divides(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    for (int i = 0; i < a.vars(); ++i)
        if (a.exps[i] > b.exps[i])
            return false;
    return true;
}

Monomial mul(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    Monomial r = a;
    for (int i = 0; i < a.vars(); ++i)
        r.exps[i] = checked_add(r.exps[i], b.exps[i]);
    return r;
}

Monomial mul_var(const Monomial& a, int j) {
    if (j < 1 || j > a.vars())
        throw std::invalid_argument("variable index out of range");
    Monomial r = a;
    r.exps[static_cast<size_t>(j) - 1] = checked_add(r.exps[static_cast<size_t>(j) - 1], 1);
    return r;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    Monomial r = a;
    for (int i = 0; i < a.vars(); ++i) {
        r.exps[i] -= b.exps[i];
        if (r.exps[i] < 0)
            throw std::invalid_argument("monomial quotient is not exact");
    }
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    Monomial r = a;
    for (int i = 0; i < a.vars(); ++i)
        r.exps[i] = std::min(a.exps[i], b.exps[i]);
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    Monomial r = a;
    for (int i = 0; i < a.vars(); ++i)
        r.exps[i] = std::max(a.exps[i], b.exps[i]);
    return r;
}

std::vector<int> support(const Monomial& m) {
    std::vector<int> s;
    for (int i = 0; i < m.vars(); ++i)
        if (m.exps[i] > 0)
            s.push_back(i + 1);
    return s;
}

uint64_t support_mask(const Monomial& m) {
    if (m.vars() > 64)
        throw std::invalid_argument("support_mask requires at most 64 variables");
    uint64_t mask = 0;
    for (int i = 0; i < m.vars(); ++i)
        if (m.exps[i] > 0)
            mask |= uint64_t{1} << i;
    return mask;
}

bool disjoint_support(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b);
    for (int i = 0; i < a.vars(); ++i)
        if (a.exps[i] > 0 && b.exps[i] > 0)
            return false;
    return true;
}

bool respects_caps(const Monomial& m, std::span<const int> caps) {
    for (size_t i = 0; i < caps.size() && i < m.exps.size(); ++i)
        if (m.exps[i] >= caps[i])
            return false;
    return true;
}

namespace {

// Descending lex comes from filling the leading variable as high as its cap
// allows and recursing on the tail.
bool enumerate_rec(std::vector<Monomial>& out, std::vector<int>& stack, int n, int pos, int rem,
                   std::span<const int> caps, const std::optional<size_t>& limit) {
    if (pos == n - 1) {
        int cap = static_cast<size_t>(pos) < caps.size() ? caps[static_cast<size_t>(pos)]
                                                         : std::numeric_limits<int>::max();
        if (rem < cap) {
            stack[static_cast<size_t>(pos)] = rem;
            out.emplace_back(stack);
            if (limit && out.size() >= *limit)
                return false;
        }
        return true;
    }
    int cap = static_cast<size_t>(pos) < caps.size() ? caps[static_cast<size_t>(pos)]
                                                     : std::numeric_limits<int>::max();
    int hi = std::min(rem, cap == std::numeric_limits<int>::max() ? rem : cap - 1);
    for (int e = hi; e >= 0; --e) {
        stack[static_cast<size_t>(pos)] = e;
        if (!enumerate_rec(out, stack, n, pos + 1, rem - e, caps, limit))
            return false;
    }
    return true;
}

}  // namespace

std::vector<Monomial> enumerate_monomials(int n, int d, std::span<const int> caps,
                                          std::optional<size_t> limit) {
    if (n < 0 || d < 0)
        throw std::invalid_argument("enumerate_monomials: n and d must be non-negative");
    std::vector<Monomial> out;
    if (limit && *limit == 0)
        return out;
    if (n == 0) {
        if (d == 0)
            out.push_back(Monomial{});
        return out;
    }
    std::vector<int> stack(static_cast<size_t>(n), 0);
    enumerate_rec(out, stack, n, 0, d, caps, limit);
    return out;
}

std::string to_string(const Monomial& m) {
    std::string s;
    for (int i = 0; i < m.vars(); ++i) {
        if (m.exps[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += 'x';
        s += std::to_string(i + 1);
        if (m.exps[i] > 1) {
            s += '^';
            s += std::to_string(m.exps[i]);
        }
    }
    return s.empty() ? "1" : s;
}

Monomial parse_monomial(const std::string& text, int n) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
            ++pos;
    };
    auto parse_int = [&]() -> long long {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw std::invalid_argument("expected a number at position " + std::to_string(start) +
                                        " in monomial '" + text + "'");
        return std::stoll(text.substr(start, pos - start));
    };

    Monomial m = unit_monomial(n);
    skip_ws();
    if (pos < text.size() && text[pos] == '1') {
        ++pos;
        skip_ws();
        if (pos != text.size())
            throw std::invalid_argument("trailing characters after '1' in monomial '" + text + "'");
        return m;
    }
    bool first = true;
    while (true) {
        skip_ws();
        if (!first) {
            if (pos >= text.size())
                break;
            if (text[pos] != '*')
                throw std::invalid_argument("expected '*' at position " + std::to_string(pos) +
                                            " in monomial '" + text + "'");
            ++pos;
            skip_ws();
        }
        if (pos >= text.size() || text[pos] != 'x')
            throw std::invalid_argument("expected a variable at position " + std::to_string(pos) +
                                        " in monomial '" + text + "'");
        ++pos;
        long long idx = parse_int();
        if (idx < 1 || idx > n)
            throw std::invalid_argument("variable x" + std::to_string(idx) + " out of range 1.." +
                                        std::to_string(n) + " in monomial '" + text + "'");
        long long e = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            e = parse_int();
            if (e < 1 || e > std::numeric_limits<int>::max())
                throw std::invalid_argument("exponent out of range in monomial '" + text + "'");
        }
        m.exps[static_cast<size_t>(idx) - 1] =
            checked_add(m.exps[static_cast<size_t>(idx) - 1], static_cast<int>(e));
        first = false;
        skip_ws();
        if (pos >= text.size())
            break;
    }
    if (first)
        throw std::invalid_argument("empty monomial text");
    return m;
}

}  // namespace eghforge
