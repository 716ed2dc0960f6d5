#pragma once

// The weight-n slice of the free associative algebra on two letters, in word
// coordinates.  A word of length n over {1,2} is indexed by its binary
// encoding (letter 1 -> bit 0, letter 2 -> bit 1, leftmost letter most
// significant), a bijection with [0, 2^n).

#include "liezeta/fp.hpp"

#include <cstdint>
#include <vector>

namespace liezeta {

// Practical cap: coordinates are 2^n, and nothing in scope needs n > 16.
inline constexpr unsigned kMaxWordWeight = 16;

struct Word {
    std::vector<std::uint8_t> letters;  // values in {1,2}

    std::size_t length() const { return letters.size(); }
    std::size_t index() const {
        std::size_t v = 0;
        for (auto c : letters) v = (v << 1) | (c - 1);
        return v;
    }
    static Word from_index(std::size_t idx, std::size_t n) {
        Word w;
        w.letters.resize(n);
        for (std::size_t j = 0; j < n; ++j)
            w.letters[j] = static_cast<std::uint8_t>(1 + ((idx >> (n - 1 - j)) & 1));
        return w;
    }
};

// An element of the weight-n slice: 2^n coordinates indexed by word index.
struct TensorVector {
    unsigned weight = 0;
    std::vector<u32> coords;

    static TensorVector zero(unsigned n) {
        TensorVector t;
        t.weight = n;
        t.coords.assign(std::size_t(1) << n, 0);
        return t;
    }
    static TensorVector word(const Word& w) {
        TensorVector t = zero(static_cast<unsigned>(w.length()));
        t.coords[w.index()] = 1;
        return t;
    }
    bool is_zero() const {
        for (u32 c : coords)
            if (c) return false;
        return true;
    }
};

TensorVector add(const TensorVector& a, const TensorVector& b, const PrimeField& F);
TensorVector sub(const TensorVector& a, const TensorVector& b, const PrimeField& F);
TensorVector scale(u32 s, const TensorVector& a, const PrimeField& F);

// Concatenation product extended bilinearly (weights add).
TensorVector concat(const TensorVector& a, const TensorVector& b, const PrimeField& F);

// [P,Q] = PQ - QP.
TensorVector bracket(const TensorVector& a, const TensorVector& b, const PrimeField& F);

// phi_i(a) = X_i a - a X_i, weight n -> n+1.
TensorVector apply_phi(unsigned i, const TensorVector& a, const PrimeField& F);

// Matrix of phi_i on word coordinates: 2^n x 2^(n+1); the row of word w has
// +1 at index(X_i w) and -1 at index(w X_i) (cancelling only for w = X_i^n).
FpMatrix phi_word_map(unsigned i, unsigned n, const PrimeField& F);

// Matrix of the right-to-left Lie bracketing chi on the weight-n slice,
// 2^n x 2^n: word X_{i_1}...X_{i_n} -> [X_{i_1},[...,[X_{i_{n-1}},X_{i_n}]...]].
// Defined for n >= 1.
FpMatrix chi_map(unsigned n, const PrimeField& F);

// chi applied to a single word; recursive bracket expansion.
TensorVector chi_of_word(const Word& w, const PrimeField& F);

}  // namespace liezeta
