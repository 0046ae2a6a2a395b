#pragma once

#include <random>
#include <string>
#include <vector>

#include "eghforge/ideal.hpp"

namespace eghforge::testing {

inline MonomialIdeal make_ideal(int n, const std::vector<std::string>& gens) {
    std::vector<Monomial> ms;
    for (const std::string& g : gens)
        ms.push_back(parse_monomial(g, n));
    return minimalize(n, std::move(ms));
}

// Random proper nonzero monomial ideal in exactly n variables.
inline MonomialIdeal random_ideal_in(std::mt19937_64& rng, int n, int max_gens, int max_deg) {
    std::uniform_int_distribution<int> gd(1, max_gens);
    std::uniform_int_distribution<int> dd(1, max_deg);
    while (true) {
        int g = gd(rng);
        std::vector<Monomial> gens;
        for (int i = 0; i < g; ++i) {
            int d = dd(rng);
            std::vector<int> e(static_cast<size_t>(n), 0);
            for (int k = 0; k < d; ++k)
                ++e[static_cast<size_t>(rng() % n)];
            gens.emplace_back(std::move(e));
        }
        MonomialIdeal I = minimalize(n, std::move(gens));
        if (!I.is_zero() && I.is_proper())
            return I;
    }
}

// Same with the variable count drawn from 1..max_vars.
inline MonomialIdeal random_ideal(std::mt19937_64& rng, int max_vars, int max_gens, int max_deg) {
    std::uniform_int_distribution<int> nd(1, max_vars);
    return random_ideal_in(rng, nd(rng), max_gens, max_deg);
}

}  // namespace eghforge::testing
