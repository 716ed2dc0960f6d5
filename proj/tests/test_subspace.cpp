#include "liezeta/counting.hpp"
#include "liezeta/subspace.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace liezeta;

TEST_CASE("canonicity: canonical(M) == canonical(rref(M))") {
    PrimeField F(3);
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
        FpMatrix m(3, 5);
        for (auto& x : m.data) x = rng() % 3;
        Subspace a = canonical_subspace(m, 5, F);
        Subspace b = canonical_subspace(rref(m, F).rref, 5, F);
        CHECK(a == b);
        for (std::size_t i = 0; i + 1 < a.pivots.size(); ++i)
            CHECK(a.pivots[i] < a.pivots[i + 1]);
    }
}

TEST_CASE("enumeration completeness and distinctness") {
    for (u32 p : {2u, 3u}) {
        PrimeField F(p);
        for (std::size_t d = 0; d <= 5; ++d)
            for (std::size_t m = 0; m <= d; ++m) {
                SubspaceStream st(d, m, F);
                std::set<Subspace> seen;
                Subspace s;
                while (st.next(s)) {
                    CHECK(s.dim() == m);
                    CHECK(seen.insert(s).second);  // pairwise distinct
                }
                CHECK(bigint(seen.size()) == gaussian_binomial_at(d, m, p));
            }
    }
}

TEST_CASE("small enumeration examples") {
    PrimeField F3(3);
    SubspaceStream st(2, 1, F3);
    Subspace s;
    int n = 0;
    while (st.next(s)) ++n;
    CHECK(n == 4);

    PrimeField F2(2);
    SubspaceStream st2(3, 2, F2);
    n = 0;
    while (st2.next(s)) ++n;
    CHECK(n == 7);

    PrimeField F5(5);
    SubspaceStream st3(4, 0, F5);
    n = 0;
    while (st3.next(s)) {
        ++n;
        CHECK(s == Subspace::zero(4));
    }
    CHECK(n == 1);
}

TEST_CASE("streams are restartable and cell-partitionable") {
    PrimeField F(3);
    SubspaceStream st(4, 2, F);
    std::vector<Subspace> first;
    Subspace s;
    while (st.next(s)) first.push_back(s);
    st.reset();
    std::size_t i = 0;
    while (st.next(s)) CHECK(s == first[i++]);
    CHECK(i == first.size());

    std::set<Subspace> by_cells;
    for (std::size_t c = 0; c < st.cell_count(); ++c) {
        SubspaceStream cs = SubspaceStream::for_cell(4, 2, F, c);
        while (cs.next(s)) CHECK(by_cells.insert(s).second);
    }
    CHECK(by_cells.size() == first.size());
}

TEST_CASE("superspace stream: count, containment, zero base") {
    PrimeField F(3);
    // zero base reproduces the plain stream
    SuperspaceStream sup(Subspace::zero(3), 2, F);
    SubspaceStream plain(3, 2, F);
    Subspace a, b;
    while (true) {
        bool ha = sup.next(a), hb = plain.next(b);
        CHECK(ha == hb);
        if (!ha) break;
        CHECK(a == b);
    }

    // d=6, dim(U)=2, m=5: 40 superspaces at p=3, each containing U
    FpMatrix u(2, 6);
    u.at(0, 0) = 1;
    u.at(1, 3) = 1;
    Subspace U = canonical_subspace(u, 6, F);
    SuperspaceStream st(U, 5, F);
    int n = 0;
    while (st.next(a)) {
        CHECK(a.contains(U, F));
        ++n;
    }
    CHECK(n == 40);
    CHECK(bigint(n) == gaussian_binomial_at(6 - 2, 5 - 2, 3));

    // codimension-one extension in a 9-dim ambient: binom(2,1)_p = p + 1
    FpMatrix big(7, 9);
    for (std::size_t i = 0; i < 7; ++i) big.at(i, i) = 1;
    SuperspaceStream st9(canonical_subspace(big, 9, F), 8, F);
    n = 0;
    while (st9.next(a)) ++n;
    CHECK(n == 4);
}

TEST_CASE("dimension formula for intersections and sums, exhaustive at d=4, p=2") {
    PrimeField F(2);
    std::vector<Subspace> all;
    for (std::size_t m = 0; m <= 4; ++m) {
        SubspaceStream st(4, m, F);
        Subspace s;
        while (st.next(s)) all.push_back(s);
    }
    CHECK(all.size() == 67);
    for (const auto& u : all)
        for (const auto& v : all) {
            Subspace in = intersect(u, v, F);
            Subspace su = sum(u, v, F);
            CHECK(in.dim() + su.dim() == u.dim() + v.dim());
            CHECK(u.contains(in, F));
            CHECK(su.contains(u, F));
        }
}

TEST_CASE("preimage matches a direct definition") {
    PrimeField F(5);
    std::mt19937 rng(2);
    for (int t = 0; t < 20; ++t) {
        FpMatrix m(3, 4);
        for (auto& x : m.data) x = rng() % 5;
        FpMatrix w(1, 4);
        for (auto& x : w.data) x = rng() % 5;
        Subspace S = canonical_subspace(w, 4, F);
        Subspace pre = preimage(m, S, F);
        // every vector of a basis maps into S; and the dimension is maximal
        for (std::size_t r = 0; r < pre.dim(); ++r) {
            std::vector<u32> v(pre.basis.row(r), pre.basis.row(r) + 3);
            CHECK(S.contains_vector(m.apply_left(v, F), F));
        }
        // brute-force size over all of F_5^3: |preimage| = 5^dim
        std::size_t cnt = 0;
        for (u32 x = 0; x < 5; ++x)
            for (u32 y = 0; y < 5; ++y)
                for (u32 z = 0; z < 5; ++z)
                    if (S.contains_vector(m.apply_left({x, y, z}, F), F)) ++cnt;
        std::size_t pw = 1;
        for (std::size_t i = 0; i < pre.dim(); ++i) pw *= 5;
        CHECK(cnt == pw);
    }
}

TEST_CASE("digit serialization") {
    PrimeField F(7);
    FpMatrix m = FpMatrix::from_rows({{1, 0, 3}, {0, 1, 5}}, F);
    Subspace s = canonical_subspace(m, 3, F);
    CHECK(s.digits(F) == "103015");
    PrimeField F13(13);
    Subspace s2 = canonical_subspace(FpMatrix::from_rows({{1, 12}}, F13), 2, F13);
    CHECK(s2.digits(F13) == "1.12");
}
