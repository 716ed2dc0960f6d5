#include "liezeta/words.hpp"

#include <stdexcept>

namespace liezeta {

namespace {

void check_weight(unsigned n) {
    if (n > kMaxWordWeight)
        throw std::invalid_argument("word weight exceeds supported bound (16)");
}

}  // namespace

TensorVector add(const TensorVector& a, const TensorVector& b, const PrimeField& F) {
    if (a.weight != b.weight) throw std::invalid_argument("add: weight mismatch");
    TensorVector out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i)
        out.coords[i] = F.add(out.coords[i], b.coords[i]);
    return out;
}

TensorVector sub(const TensorVector& a, const TensorVector& b, const PrimeField& F) {
    if (a.weight != b.weight) throw std::invalid_argument("sub: weight mismatch");
    TensorVector out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i)
        out.coords[i] = F.sub(out.coords[i], b.coords[i]);
    return out;
}

TensorVector scale(u32 s, const TensorVector& a, const PrimeField& F) {
    TensorVector out = a;
    for (auto& c : out.coords) c = F.mul(c, s);
    return out;
}

TensorVector concat(const TensorVector& a, const TensorVector& b, const PrimeField& F) {
    unsigned n = a.weight + b.weight;
    check_weight(n);
    TensorVector out = TensorVector::zero(n);
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (!a.coords[i]) continue;
        u64 ca = a.coords[i];
        std::size_t hi = i << b.weight;
        for (std::size_t j = 0; j < b.coords.size(); ++j) {
            if (!b.coords[j]) continue;
            std::size_t idx = hi | j;
            out.coords[idx] = static_cast<u32>((out.coords[idx] + ca * b.coords[j]) % F.p());
        }
    }
    return out;
}

TensorVector bracket(const TensorVector& a, const TensorVector& b, const PrimeField& F) {
    return sub(concat(a, b, F), concat(b, a, F), F);
}

TensorVector apply_phi(unsigned i, const TensorVector& a, const PrimeField& F) {
    if (i != 1 && i != 2) throw std::invalid_argument("apply_phi: i must be 1 or 2");
    check_weight(a.weight + 1);
    TensorVector out = TensorVector::zero(a.weight + 1);
    const std::size_t bit = (i - 1);
    for (std::size_t w = 0; w < a.coords.size(); ++w) {
        u32 c = a.coords[w];
        if (!c) continue;
        std::size_t left = (bit << a.weight) | w;   // X_i w
        std::size_t right = (w << 1) | bit;         // w X_i
        out.coords[left] = F.add(out.coords[left], c);
        out.coords[right] = F.sub(out.coords[right], c);
    }
    return out;
}

FpMatrix phi_word_map(unsigned i, unsigned n, const PrimeField& F) {
    if (i != 1 && i != 2) throw std::invalid_argument("phi_word_map: i must be 1 or 2");
    check_weight(n + 1);
    const std::size_t N = std::size_t(1) << n;
    FpMatrix M(N, N << 1);
    const std::size_t bit = (i - 1);
    for (std::size_t w = 0; w < N; ++w) {
        std::size_t left = (bit << n) | w;
        std::size_t right = (w << 1) | bit;
        M.at(w, left) = F.add(M.at(w, left), 1);
        M.at(w, right) = F.sub(M.at(w, right), 1);
    }
    return M;
}

TensorVector chi_of_word(const Word& w, const PrimeField& F) {
    if (w.length() == 0) throw std::invalid_argument("chi: empty word");
    Word last;
    last.letters = {w.letters.back()};
    TensorVector v = TensorVector::word(last);
    for (std::size_t j = w.length() - 1; j-- > 0;) {
        Word letter;
        letter.letters = {w.letters[j]};
        v = bracket(TensorVector::word(letter), v, F);
    }
    return v;
}

FpMatrix chi_map(unsigned n, const PrimeField& F) {
    if (n == 0) throw std::invalid_argument("chi_map: weight must be >= 1");
    check_weight(n);
    const std::size_t N = std::size_t(1) << n;
    FpMatrix M(N, N);
    for (std::size_t w = 0; w < N; ++w) {
        TensorVector img = chi_of_word(Word::from_index(w, n), F);
        for (std::size_t c = 0; c < N; ++c) M.at(w, c) = img.coords[c];
    }
    return M;
}

}  // namespace liezeta
