#include "liezeta/counting.hpp"

#include <algorithm>

namespace liezeta {

IntPoly count_disjoint(long long d, long long l, long long m) {
    if (m < 0) return IntPoly();
    return IntPoly::power(static_cast<unsigned>(l * m)) * gaussian_binomial(d - l, m);
}

IntPoly count_intersecting(long long d, long long l, long long m, long long s) {
    if (s < 0 || m < s || l < s) return IntPoly();
    return IntPoly::power(static_cast<unsigned>((l - s) * (m - s))) *
           gaussian_binomial(d - l, m - s) * gaussian_binomial(l, s);
}

IntPoly g_count(long long d, long long l1, long long l2,
                long long n1, long long n2, long long m) {
    if (l1 + l2 > d)
        throw std::invalid_argument("g_count: requires l1 + l2 <= d (disjoint W1, W2)");
    IntPoly total;
    long long rmax = std::min({l1 - n1, l2 - n2, m - n1 - n2});
    for (long long r = 0; r <= rmax; ++r) {
        long long e1 = (l1 - n1) + (l2 - n2) - r;
        long long e2 = m - n1 - n2 - r;
        IntPoly term = IntPoly::power(static_cast<unsigned>(e1 * e2)) *
                       gaussian_binomial(l1 - n1, r) * gaussian_binomial(l2 - n2, r) *
                       gaussian_binomial(d - l1 - l2, m - n1 - n2 - r);
        for (long long e = 0; e < r; ++e)
            term = term * (IntPoly::power(static_cast<unsigned>(r)) -
                           IntPoly::power(static_cast<unsigned>(e)));
        total += term;
    }
    return gaussian_binomial(l1, n1) * gaussian_binomial(l2, n2) * total;
}

bigint g_count_bruteforce(const PrimeField& F, std::size_t d,
                          const Subspace& W1, const Subspace& W2,
                          std::size_t n1, std::size_t n2, std::size_t m) {
    if (intersect(W1, W2, F).dim() != 0)
        throw std::invalid_argument("g_count_bruteforce: W1 and W2 must be disjoint");
    bigint count = 0;
    SubspaceStream st(d, m, F);
    Subspace U;
    while (st.next(U)) {
        if (intersect(U, W1, F).dim() == n1 && intersect(U, W2, F).dim() == n2)
            ++count;
    }
    return count;
}

}  // namespace liezeta
