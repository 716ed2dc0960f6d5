#pragma once

// Exact linear algebra over the prime field F_p.
//
// Elements are single machine words in [0, p) with p < 2^31, so a product of
// two reduced elements fits a uint64_t before reduction.  All matrices are
// dense, row-major.  Row vectors act on matrices from the left: v -> v*M.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liezeta {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

bool is_prime_u32(u32 n);

// F_p with p prime, p < 2^31.  Checked at construction.
class PrimeField {
public:
    explicit PrimeField(u32 p);

    u32 p() const { return p_; }

    u32 reduce(long long x) const {
        long long r = x % static_cast<long long>(p_);
        return static_cast<u32>(r < 0 ? r + p_ : r);
    }
    u32 add(u32 a, u32 b) const { u32 s = a + b; return s >= p_ ? s - p_ : s; }
    u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p_ - b; }
    u32 neg(u32 a) const { return a ? p_ - a : 0; }
    u32 mul(u32 a, u32 b) const { return static_cast<u32>(u64(a) * b % p_); }
    u32 inv(u32 a) const;
    u32 pow(u32 a, u64 e) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    u32 p_;
};

// Dense rows x cols matrix over F_p.  Entries are assumed reduced.
struct FpMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<u32> data;

    FpMatrix() = default;
    FpMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    u32& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    u32 at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    u32* row(std::size_t r) { return data.data() + r * cols; }
    const u32* row(std::size_t r) const { return data.data() + r * cols; }

    static FpMatrix identity(std::size_t n);
    static FpMatrix from_rows(std::vector<std::vector<long long>> rows_in,
                              const PrimeField& F);

    // v*M for a row vector v of length rows.
    std::vector<u32> apply_left(const std::vector<u32>& v, const PrimeField& F) const;

    FpMatrix transposed() const;
    FpMatrix stacked(const FpMatrix& below) const;

    bool operator==(const FpMatrix& o) const {
        return rows == o.rows && cols == o.cols && data == o.data;
    }
};

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b, const PrimeField& F);

struct RrefResult {
    FpMatrix rref;               // zero rows stripped
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // strictly increasing column indices
};

// Unique reduced row echelon form of M; row space preserved.
RrefResult rref(const FpMatrix& M, const PrimeField& F);

std::size_t rank(const FpMatrix& M, const PrimeField& F);

// Basis of {v : v*M = 0}, rows of the returned matrix, in RREF.
FpMatrix left_kernel(const FpMatrix& M, const PrimeField& F);

// One solution x of x*A = b over row vectors, if any.
std::optional<std::vector<u32>> solve_left(const FpMatrix& A,
                                           const std::vector<u32>& b,
                                           const PrimeField& F);

// Incremental echelon accumulator: absorb rows one by one, track rank.
// Used by the enumerators where thousands of small rank computations share a
// fixed prefix of rows.
class Echelon {
public:
    Echelon(std::size_t cols, const PrimeField& F) : F_(F), cols_(cols) {}

    // Reduces v against the current rows; if a nonzero remainder is left it is
    // normalized and inserted.  Returns true if the rank grew.
    bool absorb(std::vector<u32> v);
    // Reduce v in place without inserting; returns true if remainder is zero
    // (i.e. v lies in the current row space).
    bool reduces_to_zero(std::vector<u32>& v) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<std::vector<u32>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivs_; }

private:
    PrimeField F_;
    std::size_t cols_;
    std::vector<std::vector<u32>> rows_;   // echelon (not fully reduced upward)
    std::vector<std::size_t> pivs_;
};

}  // namespace liezeta
