#pragma once

// Graded layers of the free class-c nilpotent Lie algebra on two generators,
// built inside the word algebra: L_1 = <X_1, X_2>, L_{k+1} = phi_1(L_k) +
// phi_2(L_k).  Layer bases are the deterministic RREF of stacked phi images
// in word coordinates; all downstream counts are basis-independent.

#include "liezeta/subspace.hpp"
#include "liezeta/words.hpp"

#include <string>
#include <vector>

namespace liezeta {

long long witt_dimension(unsigned k);

struct GradedLieAlgebra {
    unsigned c = 0;
    PrimeField field;

    // per layer k = 1..c (index k-1)
    std::vector<std::size_t> d;         // layer dimensions
    std::vector<FpMatrix> B;            // d_k x 2^k RREF word-coordinate bases
    // phi_i on layer coordinates: phi[i-1][k-1] is d_k x d_{k+1}, k = 1..c-1
    std::vector<FpMatrix> phi_coord[2];

    // Lambda_{k+1} = phi_1(L_k) cap phi_2(L_k) in L_{k+1} coordinates,
    // lambda[k-1] for k = 1..c-1; l-values are their dimensions.
    std::vector<Subspace> lambda;
    // W_{k,i} = phi_i^{-1}(Lambda_{k+1}) in L_k coordinates, defined on the
    // injective range 2 <= k <= c-1 (empty placeholder at k=1).
    std::vector<Subspace> W[2];

    std::size_t l(unsigned k_plus_1) const { return lambda[k_plus_1 - 2].dim(); }

    // image phi(I) = phi_1(I) + phi_2(I) in L_{k+1} coordinates
    Subspace phi_on_subspace(unsigned k, const Subspace& I) const;
    // 2 dim(I) - dim(phi(I))
    long long dim_collapse(unsigned k, const Subspace& I) const;
};

// Builds layers, coordinate phi maps and the Lambda/W spaces.  Rejects p < c
// unless allow_small_prime: the structural lemmas downstream (disjointness of
// the W spaces, chi scaling) need p >= c, and the enumerator's quarantined
// small-prime mode is the only caller that may bypass the check.
GradedLieAlgebra build_graded_algebra(unsigned c, const PrimeField& F,
                                      bool allow_small_prime = false);

// kernel of phi_i on the weight-n slice; expected span{X_i^n}
Subspace kernel_of_phi_layer(unsigned i, unsigned n, const PrimeField& F);

struct RelationCheck {
    std::string name;
    bool holds = false;
};

struct Table1Report {
    std::vector<RelationCheck> relations;
    bool all_hold() const {
        for (const auto& r : relations)
            if (!r.holds) return false;
        return true;
    }
};

// Builds each X_{k,j} of the c<=6 bracket basis as a TensorVector and checks
// the Jacobi-relation column as exact vector identities in word coordinates.
Table1Report verify_table1_relations(const PrimeField& F);

}  // namespace liezeta
