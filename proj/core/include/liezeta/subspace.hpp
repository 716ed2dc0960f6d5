#pragma once

// Canonically represented linear subspaces of F_p^d and lazy Schubert-cell
// enumeration streams.  A subspace is its unique RREF basis; equality is
// structural.

#include "liezeta/fp.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace liezeta {

struct Subspace {
    std::size_t ambient_dim = 0;
    FpMatrix basis;                    // dim x ambient_dim, RREF, full rank
    std::vector<std::size_t> pivots;   // strictly increasing

    std::size_t dim() const { return basis.rows; }

    bool operator==(const Subspace& o) const {
        return ambient_dim == o.ambient_dim && basis == o.basis;
    }
    bool operator<(const Subspace& o) const;  // arbitrary total order (for sets)

    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);

    bool contains(const Subspace& u, const PrimeField& F) const;
    bool contains_vector(const std::vector<u32>& v, const PrimeField& F) const;

    // Row-major digit serialization of the RREF basis (see cli docs):
    // entries joined without separator when p <= 10, else dot-separated.
    std::string digits(const PrimeField& F) const;
};

// Canonical subspace spanned by the rows of `vectors` (any rank, any rows).
Subspace canonical_subspace(const FpMatrix& vectors, std::size_t ambient_dim,
                            const PrimeField& F);

Subspace intersect(const Subspace& u, const Subspace& v, const PrimeField& F);
Subspace sum(const Subspace& u, const Subspace& v, const PrimeField& F);

// {x : x*M in span(S)} for M: n x t, S a subspace of F_p^t.
Subspace preimage(const FpMatrix& M, const Subspace& S, const PrimeField& F);

// Lazy, restartable stream of all m-dimensional subspaces of F_p^d, iterating
// Schubert cells (pivot-column sets) in lexicographic order and free entries
// odometer-style.  Single consumer; copy the stream to fork it.
class SubspaceStream {
public:
    SubspaceStream(std::size_t d, std::size_t m, PrimeField F);

    bool next(Subspace& out);
    void reset();

    // Parallel partitioning: total number of pivot cells and a stream
    // restricted to one cell.
    std::size_t cell_count() const { return cells_; }
    static SubspaceStream for_cell(std::size_t d, std::size_t m, PrimeField F,
                                   std::size_t cell_index);

private:
    bool advance_cell();
    void load_cell();
    bool bump_free();
    void emit(Subspace& out) const;

    PrimeField F_;
    std::size_t d_, m_;
    std::size_t cells_ = 0;
    bool single_cell_ = false;
    bool done_ = false, fresh_ = true;
    std::vector<std::size_t> pivots_;              // current pivot columns
    std::vector<std::pair<std::size_t, std::size_t>> free_pos_;  // (row, col)
    std::vector<u32> free_vals_;
};

// Stream of all m-dimensional superspaces of a fixed subspace U, produced by
// enumerating (m - dim U)-dimensional subspaces of the quotient F_p^d / U in
// the non-pivot coordinates and lifting.
class SuperspaceStream {
public:
    SuperspaceStream(Subspace base, std::size_t m, PrimeField F);

    bool next(Subspace& out);
    void reset() { inner_.reset(); }

private:
    PrimeField F_;
    Subspace base_;
    std::vector<std::size_t> nonpivots_;
    SubspaceStream inner_;
};

}  // namespace liezeta
