#include "eghforge/intpoly.hpp"

#include <stdexcept>

namespace eghforge {

IntPoly IntPoly::term(int power, Int coeff) {
    if (power < 0)
        throw std::invalid_argument("negative power");
    std::vector<Int> c(static_cast<size_t>(power) + 1, Int(0));
    c.back() = std::move(coeff);
    return IntPoly{std::move(c)};
}

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

Int IntPoly::at(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= c.size())
        return 0;
    return c[static_cast<size_t>(i)];
}

Int IntPoly::eval_one() const {
    Int s = 0;
    for (const Int& x : c)
        s += x;
    return s;
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i)
        c[i] += b.c[i];
    return IntPoly{std::move(c)};
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i)
        c[i] -= b.c[i];
    return IntPoly{std::move(c)};
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero())
        return IntPoly::zero();
    std::vector<Int> c(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] += a.c[i] * b.c[j];
    return IntPoly{std::move(c)};
}

bool divide_by_one_minus_t(const IntPoly& p, IntPoly& out) {
    if (p.eval_one() != 0)
        return false;
    if (p.is_zero()) {
        out = IntPoly::zero();
        return true;
    }
    // (1-t)*q = p  =>  q[i] = p[i] + q[i-1]
    std::vector<Int> q(p.c.size() - 1, Int(0));
    Int carry = 0;
    for (size_t i = 0; i + 1 < p.c.size(); ++i) {
        carry += p.c[i];
        q[i] = carry;
    }
    out = IntPoly{std::move(q)};
    return true;
}

std::string to_string(const IntPoly& p) {
    if (p.is_zero())
        return "0";
    std::string s;
    for (size_t i = 0; i < p.c.size(); ++i) {
        const Int& coeff = p.c[i];
        if (coeff == 0)
            continue;
        Int abs = coeff < 0 ? Int(-coeff) : coeff;
        if (s.empty())
            s += coeff < 0 ? "-" : "";
        else
            s += coeff < 0 ? " - " : " + ";
        bool unit_coeff = abs == 1 && i > 0;
        if (!unit_coeff)
            s += abs.str();
        if (i > 0) {
            if (!unit_coeff)
                s += "*";
            s += "t";
            if (i > 1)
                s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace eghforge
