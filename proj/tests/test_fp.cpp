#include "liezeta/fp.hpp"
#include "liezeta/intpoly.hpp"

#include <doctest.h>

#include <random>

using namespace liezeta;

TEST_CASE("primality and field construction") {
    CHECK(is_prime_u32(2));
    CHECK(is_prime_u32(3));
    CHECK(is_prime_u32(31));
    CHECK(is_prime_u32(2147483629u));  // largest prime < 2^31
    CHECK_FALSE(is_prime_u32(0));
    CHECK_FALSE(is_prime_u32(1));
    CHECK_FALSE(is_prime_u32(4));
    CHECK_FALSE(is_prime_u32(1000000001u));  // 7 * 11 * 13 * ...
    CHECK_THROWS_AS(PrimeField(6), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(0x80000007u), std::invalid_argument);  // >= 2^31
}

TEST_CASE("field arithmetic") {
    PrimeField F(10007);
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        u32 a = rng() % 10007, b = rng() % 10007;
        CHECK(F.add(a, F.neg(a)) == 0);
        CHECK(F.sub(F.add(a, b), b) == a);
        if (a) CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.mul(a, b) == (u64(a) * b) % 10007);
    }
    CHECK(F.pow(3, 0) == 1);
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
}

TEST_CASE("rref: identity is a fixed point") {
    PrimeField F(5);
    FpMatrix id = FpMatrix::identity(3);
    RrefResult r = rref(id, F);
    CHECK(r.rank == 3);
    CHECK(r.rref == id);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("rref: duplicate rows over F_3") {
    PrimeField F(3);
    FpMatrix m = FpMatrix::from_rows({{1, 2, 0}, {1, 2, 0}}, F);
    CHECK(rref(m, F).rank == 1);
}

// fixed 10x9 matrix taken from the published c=6 case analysis (second branch
// of the third case, with a_3 = b_3 = 0): a handy dense rank fixture
TEST_CASE("rank of a published 10x9 fixture is 8 at p = 7") {
    PrimeField F(7);
    FpMatrix m = FpMatrix::from_rows({{0, 1, 0, 0, 0, 0, 0, 0, 0},
                                      {0, 0, 1, 0, 0, 0, 0, 0, 0},
                                      {0, 0, 0, 0, 1, 0, 0, 0, 0},
                                      {0, 0, 0, 0, 0, 1, 0, 0, 0},
                                      {0, 0, 0, 1, 0, 0, 0, 0, 0},
                                      {0, 0, 0, 0, 0, 0, 1, 0, 0},
                                      {0, 0, 0, 0, 0, 0, 0, 1, 0},
                                      {0, 0, 0, 0, 0, -1, 0, 2, 0},
                                      {0, 0, 0, 0, 0, 0, 0, 0, 1},
                                      {0, 0, 1, 0, -3, 0, 0, 3, 0}},
                                     F);
    CHECK(rank(m, F) == 8);
}

namespace {

// the published 8x9 double-image matrix of the 2-dimensional layer-4 space
// [[1,0,a3],[0,1,b3]]
FpMatrix case11_matrix(long long a3, long long b3, const PrimeField& F) {
    return FpMatrix::from_rows({{1, 0, a3, 0, 0, 0, 0, 0, 0},
                                {0, 1, b3, 0, 0, 0, 0, 0, 0},
                                {0, 0, 0, 1, 0, a3, 0, 0, 0},
                                {0, 0, 0, 0, 1, b3, 0, 0, 0},
                                {0, -1, 0, 2, 0, 0, 0, a3, 0},
                                {0, 0, 0, 0, 0, 0, 1, b3, 0},
                                {0, 0, 1, 0, -3, 0, 0, 3, a3},
                                {0, 0, 0, 0, 0, -1, 0, 2, b3}},
                               F);
}

}  // namespace

TEST_CASE("rank of the published 8x9 family") {
    for (u32 p : {5u, 7u, 11u}) {
        PrimeField F(p);
        CHECK(rank(case11_matrix(0, 0, F), F) == 7);
        CHECK(rank(case11_matrix(-1, -1, F), F) == 7);
    }
    PrimeField F7(7);
    CHECK(rank(case11_matrix(1, 0, F7), F7) == 8);
    PrimeField F5(5);
    FpMatrix z(4, 4);
    CHECK(rank(z, F5) == 0);
}

TEST_CASE("left kernel and solve_left round trips") {
    PrimeField F(11);
    std::mt19937 rng(3);
    for (int t = 0; t < 30; ++t) {
        FpMatrix m(4, 6);
        for (auto& x : m.data) x = rng() % 11;
        FpMatrix ker = left_kernel(m, F);
        CHECK(ker.rows + rank(m, F) == 4);
        for (std::size_t r = 0; r < ker.rows; ++r) {
            std::vector<u32> v(ker.row(r), ker.row(r) + 4);
            for (u32 x : m.apply_left(v, F)) CHECK(x == 0);
        }
        std::vector<u32> x0{1, 2, 3, 4};
        auto sol = solve_left(m, m.apply_left(x0, F), F);
        REQUIRE(sol.has_value());
        CHECK(m.apply_left(*sol, F) == m.apply_left(x0, F));
    }
}

TEST_CASE("echelon accumulator agrees with rref rank") {
    PrimeField F(3);
    std::mt19937 rng(5);
    for (int t = 0; t < 50; ++t) {
        FpMatrix m(5, 5);
        for (auto& x : m.data) x = rng() % 3;
        Echelon e(5, F);
        for (std::size_t r = 0; r < 5; ++r)
            e.absorb(std::vector<u32>(m.row(r), m.row(r) + 5));
        CHECK(e.rank() == rref(m, F).rank);
    }
}

TEST_CASE("gaussian binomial values and conventions") {
    CHECK(gaussian_binomial(2, 1) == IntPoly({1, 1}));  // p + 1
    CHECK(gaussian_binomial(4, 2) == IntPoly({1, 1, 2, 1, 1}));
    CHECK(gaussian_binomial(3, 5).is_zero());
    CHECK(gaussian_binomial(3, -1).is_zero());
    CHECK(gaussian_binomial(3, 0) == IntPoly(1));
    for (long long n = 0; n <= 9; ++n)
        for (long long i = 0; i <= n; ++i) {
            CHECK(gaussian_binomial(n, i) == gaussian_binomial(n, n - i));
            for (long long p : {2, 3, 7})
                CHECK(gaussian_binomial(n, i).eval(p) == gaussian_binomial_at(n, i, p));
        }
}

TEST_CASE("intpoly arithmetic and rendering") {
    IntPoly p = IntPoly::variable();
    IntPoly q = (p + IntPoly(1)) * (p - IntPoly(1));
    CHECK(q == IntPoly({-1, 0, 1}));
    CHECK(q.eval(10) == 99);
    CHECK(IntPoly({4, 10, 9, 6, 5, 3, 1}).to_string() ==
          "p^6 + 3p^5 + 5p^4 + 6p^3 + 9p^2 + 10p + 4");
    CHECK(IntPoly().to_string() == "0");
    CHECK((q - q).is_zero());
}
