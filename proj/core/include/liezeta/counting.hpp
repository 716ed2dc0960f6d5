#pragma once

// Closed-form subspace counts over F_p: the four elementary Grassmannian
// counts and the two-subspace intersection count g, with its brute-force
// oracle twin.

#include "liezeta/intpoly.hpp"
#include "liezeta/subspace.hpp"

namespace liezeta {

// number of m-dimensional subspaces of F_p^d
inline IntPoly count_subspaces(long long d, long long m) {
    return gaussian_binomial(d, m);
}

// number of m-dimensional subspaces containing a fixed l-dimensional W
inline IntPoly count_containing(long long d, long long l, long long m) {
    return gaussian_binomial(d - l, m - l);
}

// number of m-dimensional subspaces meeting a fixed l-dimensional W trivially
IntPoly count_disjoint(long long d, long long l, long long m);

// number of m-dimensional subspaces meeting a fixed l-dimensional W in
// dimension exactly s
IntPoly count_intersecting(long long d, long long l, long long m, long long s);

// Number of m-dimensional subspaces U of F_p^d with dim(U cap W1) = n1 and
// dim(U cap W2) = n2, for fixed disjoint W1, W2 of dimensions l1, l2.
//
// Sum over r = dim(U cap (W1+W2)) - n1 - n2; the final Gaussian factor counts
// the extension outside W1+W2 and must be binom(d-l1-l2, m-n1-n2-r): the -r is
// necessary (the extension adds m-n1-n2-r further dimensions), as the
// brute-force twin confirms.
IntPoly g_count(long long d, long long l1, long long l2,
                long long n1, long long n2, long long m);

// Independent oracle: filter the full m-subspace stream on both intersection
// dimensions.  Requires W1 cap W2 = 0.
bigint g_count_bruteforce(const PrimeField& F, std::size_t d,
                          const Subspace& W1, const Subspace& W2,
                          std::size_t n1, std::size_t n2, std::size_t m);

}  // namespace liezeta
