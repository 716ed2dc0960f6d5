#include "liezeta/free_lie.hpp"
#include "liezeta/gamma.hpp"

#include <doctest.h>

using namespace liezeta;

TEST_CASE("witt dimensions") {
    CHECK(witt_dimension(1) == 2);
    CHECK(witt_dimension(2) == 1);
    CHECK(witt_dimension(3) == 2);
    CHECK(witt_dimension(4) == 3);
    CHECK(witt_dimension(5) == 6);
    CHECK(witt_dimension(6) == 9);
    CHECK(witt_dimension(7) == 18);
    CHECK(witt_dimension(8) == 30);
}

TEST_CASE("layer dimensions match the Witt values, c <= 8, two primes") {
    for (u32 p : {11u, 13u}) {
        PrimeField F(p);
        GradedLieAlgebra A = build_graded_algebra(8, F);
        for (unsigned k = 1; k <= 8; ++k)
            CHECK(static_cast<long long>(A.d[k - 1]) == witt_dimension(k));
    }
}

TEST_CASE("l-sequence: (1,0,1,0,3,0) up to c=7, and l_8 = 6") {
    PrimeField F(11);
    GradedLieAlgebra A = build_graded_algebra(8, F);
    CHECK(A.l(2) == 1);
    CHECK(A.l(3) == 0);
    CHECK(A.l(4) == 1);
    CHECK(A.l(5) == 0);
    CHECK(A.l(6) == 3);
    CHECK(A.l(7) == 0);
    CHECK(A.l(8) == 6);
}

TEST_CASE("small primes are rejected unless quarantined") {
    PrimeField F(5);
    CHECK_THROWS_AS(build_graded_algebra(6, F), std::invalid_argument);
    GradedLieAlgebra A = build_graded_algebra(6, F, /*allow_small_prime=*/true);
    CHECK(A.d == std::vector<std::size_t>{2, 1, 2, 3, 6, 9});
}

TEST_CASE("phi injectivity on layers k >= 2") {
    PrimeField F(11);
    GradedLieAlgebra A = build_graded_algebra(7, F);
    for (unsigned k = 2; k + 1 <= 7; ++k)
        for (unsigned i = 0; i < 2; ++i)
            CHECK(rank(A.phi_coord[i][k - 1], F) == A.d[k - 1]);
    // and the layer-1 maps each kill one generator
    CHECK(rank(A.phi_coord[0][0], F) == 1);
    CHECK(rank(A.phi_coord[1][0], F) == 1);
}

TEST_CASE("W spaces: dimension l_{k+1}, pairwise disjoint for k >= 2") {
    for (auto [c, p] : std::vector<std::pair<unsigned, u32>>{{6, 7}, {7, 11}}) {
        PrimeField F(p);
        GradedLieAlgebra A = build_graded_algebra(c, F);
        for (unsigned k = 2; k + 1 <= c; ++k) {
            CHECK(A.W[0][k - 1].dim() == A.l(k + 1));
            CHECK(A.W[1][k - 1].dim() == A.l(k + 1));
            CHECK(intersect(A.W[0][k - 1], A.W[1][k - 1], F).dim() == 0);
        }
    }
}

TEST_CASE("the disjointness hypothesis genuinely needs p >= c: k=5 at p=5") {
    PrimeField F(5);
    GradedLieAlgebra A = build_graded_algebra(6, F, true);
    CHECK(intersect(A.W[0][4], A.W[1][4], F).dim() == 2);
}

TEST_CASE("phi_on_subspace: full layer, zero, and the m4=3 image") {
    PrimeField F(7);
    GradedLieAlgebra A = build_graded_algebra(5, F);
    CHECK(A.phi_on_subspace(1, Subspace::full(2)).dim() == 1);  // phi(L_1) = L_2
    for (unsigned k = 2; k + 1 <= 5; ++k) {
        CHECK(A.phi_on_subspace(k, Subspace::full(A.d[k - 1])).dim() ==
              2 * A.d[k - 1] - A.l(k + 1));
        CHECK(A.phi_on_subspace(k, Subspace::zero(A.d[k - 1])).dim() == 0);
    }
    // every 3-dimensional subspace of L_4 maps to dimension 6
    SubspaceStream st(A.d[3], 3, F);
    Subspace I;
    while (st.next(I)) CHECK(A.phi_on_subspace(4, I).dim() == 6);
}

TEST_CASE("dimension of collapse: layer-3 examples") {
    PrimeField F(7);
    GradedLieAlgebra A = build_graded_algebra(5, F);
    SubspaceStream st(A.d[2], 1, F);
    Subspace I;
    while (st.next(I)) CHECK(A.dim_collapse(3, I) == 0);
    CHECK(A.dim_collapse(3, Subspace::full(2)) == 1);
    CHECK(A.dim_collapse(3, Subspace::zero(2)) == 0);
}

TEST_CASE("image dimension is determined by the layer dimension for c <= 5") {
    // exhaustive at p = 7: d_phi per m matches (m1:1, m2:2, m3:m+1, m4:2m)
    PrimeField F(7);
    GradedLieAlgebra A = build_graded_algebra(5, F);
    auto expect = [](unsigned k, std::size_t m) -> std::size_t {
        if (m == 0) return 0;
        switch (k) {
            case 1: return 1;
            case 2: return 2;
            case 3: return m + 1;
            default: return 2 * m;
        }
    };
    for (unsigned k = 1; k <= 4; ++k)
        for (std::size_t m = 0; m <= A.d[k - 1]; ++m) {
            SubspaceStream st(A.d[k - 1], m, F);
            Subspace I;
            while (st.next(I))
                CHECK(A.phi_on_subspace(k, I).dim() == expect(k, m));
        }
}

TEST_CASE("bracket-basis relations hold in word coordinates") {
    for (u32 p : {7u, 11u}) {
        PrimeField F(p);
        Table1Report rep = verify_table1_relations(F);
        for (const auto& r : rep.relations) {
            INFO(r.name);
            CHECK(r.holds);
        }
    }
    PrimeField F5(5);
    CHECK_THROWS_AS(verify_table1_relations(F5), std::invalid_argument);
}

TEST_CASE("w X1 - X1 sigma1(w) lies in the image of phi_2, words of length <= 6") {
    PrimeField F(5);
    for (unsigned n = 1; n <= 6; ++n) {
        FpMatrix ph2 = phi_word_map(2, n, F);
        Subspace img = canonical_subspace(ph2, std::size_t(1) << (n + 1), F);
        WordPermutation s1 = sigma(1, n);
        for (std::size_t wi = 0; wi < (std::size_t(1) << n); ++wi) {
            Word w = Word::from_index(wi, n);
            Word sw = Word::from_index(s1.images[wi], n);
            Word wx1 = w, x1sw;
            wx1.letters.push_back(1);
            x1sw.letters.push_back(1);
            x1sw.letters.insert(x1sw.letters.end(), sw.letters.begin(),
                                sw.letters.end());
            TensorVector v =
                sub(TensorVector::word(wx1), TensorVector::word(x1sw), F);
            CHECK(img.contains_vector(v.coords, F));
        }
    }
}
