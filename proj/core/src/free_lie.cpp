#include "liezeta/free_lie.hpp"

#include <stdexcept>

namespace liezeta {

long long witt_dimension(unsigned k) {
    if (k == 0) throw std::invalid_argument("witt_dimension: k >= 1");
    auto mobius = [](unsigned m) -> long long {
        long long r = 1;
        for (unsigned d = 2; d * d <= m; ++d) {
            if (m % d == 0) {
                m /= d;
                if (m % d == 0) return 0;
                r = -r;
            }
        }
        if (m > 1) r = -r;
        return r;
    };
    long long s = 0;
    for (unsigned j = 1; j <= k; ++j)
        if (k % j == 0) s += mobius(j) * (1ll << (k / j));
    return s / k;
}

Subspace GradedLieAlgebra::phi_on_subspace(unsigned k, const Subspace& I) const {
    if (k < 1 || k >= c) throw std::invalid_argument("phi_on_subspace: k out of range");
    if (I.ambient_dim != d[k - 1])
        throw std::invalid_argument("phi_on_subspace: ambient mismatch");
    FpMatrix img1 = mat_mul(I.basis, phi_coord[0][k - 1], field);
    FpMatrix img2 = mat_mul(I.basis, phi_coord[1][k - 1], field);
    return canonical_subspace(img1.stacked(img2), d[k], field);
}

long long GradedLieAlgebra::dim_collapse(unsigned k, const Subspace& I) const {
    return 2 * static_cast<long long>(I.dim()) -
           static_cast<long long>(phi_on_subspace(k, I).dim());
}

GradedLieAlgebra build_graded_algebra(unsigned c, const PrimeField& F,
                                      bool allow_small_prime) {
    if (c < 1) throw std::invalid_argument("build_graded_algebra: c >= 1");
    if (c > kMaxWordWeight)
        throw std::invalid_argument("build_graded_algebra: c exceeds word-weight bound");
    if (F.p() < c && !allow_small_prime)
        throw std::invalid_argument(
            "build_graded_algebra: p < c violates the structural hypothesis p >= c "
            "(W-space disjointness and chi-scaling need every layer index invertible)");

    GradedLieAlgebra A{c, F, {}, {}, {}, {}, {}};

    // L_1 = span{X_1, X_2}; in word coordinates X_1 -> index 0, X_2 -> index 1.
    FpMatrix B1 = FpMatrix::identity(2);
    A.B.push_back(B1);
    A.d.push_back(2);

    for (unsigned k = 1; k < c; ++k) {
        FpMatrix ph1 = phi_word_map(1, k, F);
        FpMatrix ph2 = phi_word_map(2, k, F);
        FpMatrix img1 = mat_mul(A.B[k - 1], ph1, F);
        FpMatrix img2 = mat_mul(A.B[k - 1], ph2, F);
        RrefResult nxt = rref(img1.stacked(img2), F);
        A.B.push_back(nxt.rref);
        A.d.push_back(nxt.rank);

        // phi_i in layer coordinates: solve row * B_{k+1} = image row
        for (unsigned i = 0; i < 2; ++i) {
            const FpMatrix& img = i == 0 ? img1 : img2;
            FpMatrix coord(A.d[k - 1], A.d[k]);
            for (std::size_t r = 0; r < A.d[k - 1]; ++r) {
                auto x = solve_left(A.B[k],
                                    std::vector<u32>(img.row(r), img.row(r) + img.cols), F);
                if (!x) throw std::logic_error("phi image escaped the next layer");
                for (std::size_t j = 0; j < A.d[k]; ++j) coord.at(r, j) = (*x)[j];
            }
            A.phi_coord[i].push_back(std::move(coord));
        }

        // Lambda_{k+1} and, for k >= 2, the preimages W_{k,i}
        Subspace im1 = canonical_subspace(A.phi_coord[0][k - 1], A.d[k], F);
        Subspace im2 = canonical_subspace(A.phi_coord[1][k - 1], A.d[k], F);
        Subspace lam = intersect(im1, im2, F);
        A.lambda.push_back(lam);
        for (unsigned i = 0; i < 2; ++i) {
            if (k >= 2)
                A.W[i].push_back(preimage(A.phi_coord[i][k - 1], lam, F));
            else
                A.W[i].push_back(Subspace::zero(A.d[0]));  // k=1: phi_i not injective
        }
    }
    return A;
}

Subspace kernel_of_phi_layer(unsigned i, unsigned n, const PrimeField& F) {
    if (n < 1) throw std::invalid_argument("kernel_of_phi_layer: n >= 1");
    return canonical_subspace(left_kernel(phi_word_map(i, n, F), F),
                              std::size_t(1) << n, F);
}

namespace {

struct BracketBasis {
    // X[k][j] for k = 1..6, j = 1..d_k, as weight-k tensor vectors
    std::vector<std::vector<TensorVector>> X;

    explicit BracketBasis(const PrimeField& F) {
        X.resize(7);
        Word x1, x2;
        x1.letters = {1};
        x2.letters = {2};
        TensorVector X1 = TensorVector::word(x1), X2 = TensorVector::word(x2);
        X[1] = {X1, X2};
        X[2] = {bracket(X1, X2, F)};
        X[3] = {bracket(X1, X[2][0], F), bracket(X2, X[2][0], F)};
        X[4] = {bracket(X1, X[3][0], F), bracket(X2, X[3][0], F), bracket(X2, X[3][1], F)};
        X[5] = {bracket(X1, X[4][0], F), bracket(X1, X[4][1], F), bracket(X1, X[4][2], F),
                bracket(X2, X[4][0], F), bracket(X2, X[4][1], F), bracket(X2, X[4][2], F)};
        X[6] = {bracket(X1, X[5][0], F), bracket(X1, X[5][1], F), bracket(X1, X[5][2], F),
                bracket(X1, X[5][3], F), bracket(X1, X[5][4], F), bracket(X1, X[5][5], F),
                bracket(X2, X[5][1], F), bracket(X2, X[5][2], F), bracket(X2, X[5][5], F)};
    }
    const TensorVector& at(unsigned k, unsigned j) const { return X[k][j - 1]; }
};

}  // namespace

Table1Report verify_table1_relations(const PrimeField& F) {
    if (F.p() < 7)
        throw std::invalid_argument("verify_table1_relations: requires p >= 7");
    BracketBasis T(F);
    auto phi = [&](unsigned i, const TensorVector& a) { return apply_phi(i, a, F); };

    Table1Report rep;
    auto check = [&](std::string name, const TensorVector& lhs, const TensorVector& rhs) {
        rep.relations.push_back({std::move(name), sub(lhs, rhs, F).is_zero()});
    };

    // k <= 5 rows: each basis vector is a phi image of the previous layer
    check("X_{3,1} = phi1(X_{2,1})", T.at(3, 1), phi(1, T.at(2, 1)));
    check("X_{3,2} = phi2(X_{2,1})", T.at(3, 2), phi(2, T.at(2, 1)));
    check("X_{4,1} = phi1(X_{3,1})", T.at(4, 1), phi(1, T.at(3, 1)));
    check("X_{4,2} = phi2(X_{3,1})", T.at(4, 2), phi(2, T.at(3, 1)));
    check("phi2(X_{3,1}) = phi1(X_{3,2})", phi(2, T.at(3, 1)), phi(1, T.at(3, 2)));
    check("X_{4,3} = phi2(X_{3,2})", T.at(4, 3), phi(2, T.at(3, 2)));
    for (unsigned j = 1; j <= 3; ++j)
        check("X_{5," + std::to_string(j) + "} = phi1(X_{4," + std::to_string(j) + "})",
              T.at(5, j), phi(1, T.at(4, j)));
    for (unsigned j = 1; j <= 3; ++j)
        check("X_{5," + std::to_string(j + 3) + "} = phi2(X_{4," + std::to_string(j) + "})",
              T.at(5, j + 3), phi(2, T.at(4, j)));

    // k = 6 rows, including the three non-trivial Jacobi decompositions
    check("X_{6,1} = phi1(X_{5,1})", T.at(6, 1), phi(1, T.at(5, 1)));
    check("phi1(X_{5,2}) = 2 X_{6,4} - phi2(X_{5,1})", phi(1, T.at(5, 2)),
          sub(scale(2, T.at(6, 4), F), phi(2, T.at(5, 1)), F));
    check("phi1(X_{5,3}) = phi2(X_{5,4}) + 3 X_{6,5} - 3 X_{6,7}", phi(1, T.at(5, 3)),
          add(phi(2, T.at(5, 4)),
              sub(scale(3, T.at(6, 5), F), scale(3, T.at(6, 7), F), F), F));
    check("X_{6,4} = phi1(X_{5,4})", T.at(6, 4), phi(1, T.at(5, 4)));
    check("X_{6,5} = phi1(X_{5,5})", T.at(6, 5), phi(1, T.at(5, 5)));
    check("phi1(X_{5,6}) = 2 X_{6,8} - phi2(X_{5,5})", phi(1, T.at(5, 6)),
          sub(scale(2, T.at(6, 8), F), phi(2, T.at(5, 5)), F));
    check("X_{6,7} = phi2(X_{5,2})", T.at(6, 7), phi(2, T.at(5, 2)));
    check("X_{6,8} = phi2(X_{5,3})", T.at(6, 8), phi(2, T.at(5, 3)));
    check("X_{6,9} = phi2(X_{5,6})", T.at(6, 9), phi(2, T.at(5, 6)));

    // the nine k=6 vectors must be a basis
    FpMatrix rows(9, 64);
    for (unsigned j = 1; j <= 9; ++j)
        for (std::size_t cidx = 0; cidx < 64; ++cidx)
            rows.at(j - 1, cidx) = T.at(6, j).coords[cidx];
    rep.relations.push_back({"X_{6,1..9} linearly independent", rank(rows, F) == 9});
    return rep;
}

}  // namespace liezeta
