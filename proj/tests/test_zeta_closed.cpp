#include "liezeta/zeta_closed.hpp"

#include <doctest.h>

using namespace liezeta;

namespace {

IntPoly b(long long n, long long i) { return gaussian_binomial(n, i); }

// the published closed forms for c = 2..5, coefficient by coefficient
DirichletPoly golden_zeta(unsigned c) {
    DirichletPoly z;
    auto set = [&](std::size_t i, IntPoly v) {
        if (z.coeffs.size() <= i) z.coeffs.resize(i + 1);
        z.coeffs[i] = std::move(v);
    };
    set(0, IntPoly(1));
    set(1, b(2, 1));
    set(2, IntPoly(1));
    set(3, IntPoly(1));
    if (c == 2) return z;
    set(4, b(2, 1));
    set(5, IntPoly(1));
    if (c == 3) return z;
    set(5, IntPoly(1) + b(2, 1));
    set(6, b(3, 2));
    set(7, b(3, 1));
    set(8, IntPoly(1));
    if (c == 4) return z;
    set(6, b(3, 2) + b(2, 1) * b(2, 1));
    set(7, b(2, 1) + b(3, 2) * b(2, 1) + b(3, 1));
    set(8, b(3, 2) + b(3, 2) * b(4, 3) + IntPoly(1));  // gaussian binom(4,3)
    set(9, b(3, 1) * b(4, 2) + b(6, 5));
    set(10, b(3, 1) * b(4, 1) + b(6, 4));
    set(11, b(3, 1) + b(6, 3));
    set(12, b(6, 2));
    set(13, b(6, 1));
    set(14, IntPoly(1));
    return z;
}

}  // namespace

TEST_CASE("dphi table per the determinism lemma") {
    CHECK(dphi_table(5, 4, 3) == 6);
    CHECK(dphi_table(5, 4, 2) == 4);
    CHECK(dphi_table(5, 4, 1) == 2);
    CHECK(dphi_table(5, 3, 1) == 2);
    CHECK(dphi_table(5, 3, 2) == 3);
    CHECK(dphi_table(5, 2, 1) == 2);
    CHECK(dphi_table(5, 1, 1) == 1);
    CHECK(dphi_table(5, 1, 2) == 1);
    for (unsigned k = 1; k <= 4; ++k) CHECK(dphi_table(5, k, 0) == 0);
    CHECK_THROWS_AS(dphi_table(6, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(dphi_table(5, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(dphi_table(5, 4, 4), std::invalid_argument);
}

TEST_CASE("product formula reproduces the published polynomials, c = 2..5") {
    for (unsigned c = 2; c <= 5; ++c) {
        DirichletPoly got = zeta_graded_closed(c);
        DirichletPoly want = golden_zeta(c);
        REQUIRE(got.coeffs.size() == want.coeffs.size());
        for (std::size_t i = 0; i < got.coeffs.size(); ++i) {
            INFO("c=", c, " t^", i);
            CHECK(got.coeffs[i] == want.coeffs[i]);
        }
    }
}

TEST_CASE("palindromic endpoints: the full algebra and the zero ideal") {
    for (unsigned c = 1; c <= 5; ++c) {
        DirichletPoly z = zeta_graded_closed(c);
        CHECK(z.coeffs.front() == IntPoly(1));
        CHECK(z.coeffs.back() == IntPoly(1));
    }
}

TEST_CASE("c=2 rendering") {
    CHECK(zeta_graded_closed(2).to_string() == "1 + (p + 1) t + t^2 + t^3");
}

TEST_CASE("f_k closed form: the layer-3 table and the l=0 degeneration") {
    // d_3 = 2, l_4 = 1
    CHECK(f_k_closed(2, 1, 0, 0) == IntPoly(1));
    CHECK(f_k_closed(2, 1, 1, 0) == IntPoly({1, 1}));  // p + 1
    CHECK(f_k_closed(2, 1, 1, 1).is_zero());
    CHECK(f_k_closed(2, 1, 2, 0).is_zero());
    CHECK(f_k_closed(2, 1, 2, 1) == IntPoly(1));
    // l = 0 forces j = r = 0: plain Grassmannian counts, nothing collapses
    for (long long m = 0; m <= 3; ++m) {
        CHECK(f_k_closed(3, 0, m, 0) == gaussian_binomial(3, m));
        CHECK(f_k_closed(3, 0, m, 1).is_zero());
    }
}

TEST_CASE("alpha_1 closed form examples") {
    LayerDims dims = LayerDims::reference(5);
    // k = 1 window: 1, 1, p+1, 1
    CHECK(alpha1_closed(dims, 0, 1) == IntPoly(1));
    CHECK(alpha1_closed(dims, 1, 1) == IntPoly(1));
    CHECK(alpha1_closed(dims, 2, 1) == IntPoly({1, 1}));
    CHECK(alpha1_closed(dims, 3, 1) == IntPoly(1));
    CHECK(alpha1_closed(dims, 4, 1).is_zero());
    // k = 2 window: 1, binom(2,1), 1, 1, then zero
    CHECK(alpha1_closed(dims, 0, 2) == IntPoly(1));
    CHECK(alpha1_closed(dims, 1, 2) == gaussian_binomial(2, 1));
    CHECK(alpha1_closed(dims, 2, 2) == IntPoly(1));
    CHECK(alpha1_closed(dims, 3, 2) == IntPoly(1));
    for (long long a = 4; a <= 6; ++a) CHECK(alpha1_closed(dims, a, 2).is_zero());
    // k = 3 window examples
    CHECK(alpha1_closed(dims, 1, 3) == gaussian_binomial(3, 1));
    CHECK(alpha1_closed(dims, 2, 3) == gaussian_binomial(3, 2));
    CHECK(alpha1_closed(dims, 3, 3) == IntPoly({2, 1}));  // p + 2
    CHECK(alpha1_closed(dims, 4, 3) == IntPoly({1, 1}));  // p + 1
    CHECK(alpha1_closed(dims, 5, 3) == IntPoly(1));
    CHECK(alpha1_closed(dims, 6, 3).is_zero());
}

TEST_CASE("alpha_2 at k=1 reassembles the class-3 zeta coefficients") {
    LayerDims dims3 = LayerDims::reference(3);
    DirichletPoly z3 = zeta_graded_closed(3);
    const std::size_t N = z3.coeffs.size() - 1;  // 5
    for (long long a = 0; a <= static_cast<long long>(N); ++a)
        CHECK(alpha2_closed(dims3, a, 1) == z3.coeffs[N - a]);
    CHECK(alpha2_closed(dims3, 0, 1) == IntPoly(1));
    CHECK(alpha2_closed(dims3, 99, 1).is_zero());
}

TEST_CASE("alpha_2 rejects the even window starts") {
    LayerDims dims = LayerDims::reference(6);
    CHECK_THROWS_AS(alpha2_closed(dims, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(alpha2_closed(dims, 3, 4), std::invalid_argument);
    CHECK(alpha2_closed(dims, 0, 3) == IntPoly(1));
}

TEST_CASE("one-step zeta: c=2 matches the class-2 graded zeta") {
    LayerDims dims = LayerDims::reference(2);
    DirichletPoly z = onestep_zeta_closed(dims);
    REQUIRE(z.coeffs.size() == 4);
    CHECK(z.coeffs[0] == IntPoly(1));
    CHECK(z.coeffs[1] == IntPoly({1, 1}));
    CHECK(z.coeffs[2] == IntPoly(1));
    CHECK(z.coeffs[3] == IntPoly(1));
    // c=3: the two windows overlay to (2, 7, 7, 2) at p = 5
    DirichletPoly z3 = onestep_zeta_closed(LayerDims::reference(3));
    std::vector<bigint> at5 = z3.eval_at(5);
    CHECK(at5 == std::vector<bigint>{2, 7, 7, 2});
}

TEST_CASE("one-step zeta is computable through c = 8") {
    for (unsigned c = 2; c <= 8; ++c) {
        LayerDims dims = LayerDims::reference(c);
        DirichletPoly z = onestep_zeta_closed(dims);
        CHECK(z.coeffs.size() ==
              dims.d[c - 2] + dims.d[c - 1] + 1);  // deepest window dominates
        CHECK(z.coeffs[0] == IntPoly(c - 1));      // every window has one full chain
    }
}

TEST_CASE("published c=6 codimension-9 predictions") {
    ResidueFamily fam = c6_codim9_prediction();
    CHECK(fam.modulus == 8);
    CHECK_FALSE(fam.uniform());
    CHECK(fam.for_prime(5).eval(5) == 29154);
    CHECK(fam.for_prime(13).eval(13) == 6098330);
    CHECK(fam.for_prime(7).eval(7) == 182634);
    // the two class polynomials differ by exactly 2p
    IntPoly diff = fam.classes[0].second - fam.classes[1].second;
    CHECK(diff == IntPoly({0, 2}));
}

TEST_CASE("published per-profile predictions assemble to the codim-9 family") {
    IntPoly sum35, sum17;
    for (const auto& prof : c6_codim9_profiles()) {
        ResidueFamily f = c6_profile_prediction(prof);
        sum35 += f.for_prime(5);
        sum17 += f.for_prime(7);
    }
    ResidueFamily total = c6_codim9_prediction();
    CHECK(sum35 == total.for_prime(5));
    CHECK(sum17 == total.for_prime(7));
    // pinned values
    CHECK(c6_profile_prediction({{0, 0, 0, 1, 5, 8}}).for_prime(5).eval(5) == 216);
    CHECK(c6_profile_prediction({{0, 0, 0, 1, 5, 8}}).for_prime(7).eval(7) == 498);
    CHECK(c6_profile_prediction({{0, 0, 0, 2, 5, 7}}).for_prime(7).eval(7) == 0);
    CHECK(c6_profile_prediction({{0, 0, 0, 0, 5, 9}}).for_prime(5).eval(5) == 3906);
    CHECK_THROWS_AS(c6_profile_prediction({{1, 0, 0, 0, 0, 0}}),
                    std::invalid_argument);
}

TEST_CASE("layer data source: reference dims equal the Witt values") {
    for (unsigned c : {5u, 6u, 8u}) {
        LayerDims dims = LayerDims::reference(c);
        REQUIRE(dims.d.size() == c);
        for (unsigned k = 1; k <= c; ++k)
            CHECK(static_cast<long long>(dims.d[k - 1]) == witt_dimension(k));
    }
    LayerDims d6 = LayerDims::reference(6);
    CHECK(d6.l == std::vector<std::size_t>{1, 0, 1, 0, 3});
}
