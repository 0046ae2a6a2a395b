#include "eghforge/bigint.hpp"

namespace eghforge {

Int binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0)
        return 0;
    if (k > n - k)
        k = n - k;
    Int result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

Int monomial_count(int vars, int d) {
    if (d < 0)
        return 0;
    if (vars == 0)
        return d == 0 ? 1 : 0;
    return binomial(static_cast<long long>(vars) + d - 1, d);
}

}  // namespace eghforge
