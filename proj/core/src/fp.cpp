#include "liezeta/fp.hpp"

#include <algorithm>

namespace liezeta {

namespace {

u64 pow_mod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = (unsigned __int128)(r) * a % m;
        a = (unsigned __int128)(a) * a % m;
        e >>= 1;
    }
    return r;
}

}  // namespace

// Deterministic Miller-Rabin; bases {2,3,5,7} decide primality below 3.2e9.
bool is_prime_u32(u32 n) {
    if (n < 2) return false;
    for (u32 q : {2u, 3u, 5u, 7u}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull}) {
        u64 x = pow_mod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = (unsigned __int128)(x) * x % n;
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(u32 p) : p_(p) {
    if (p >= (1u << 31))
        throw std::invalid_argument("PrimeField: modulus must be < 2^31");
    if (!is_prime_u32(p))
        throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
}

u32 PrimeField::pow(u32 a, u64 e) const {
    return static_cast<u32>(pow_mod_u64(a, e, p_));
}

u32 PrimeField::inv(u32 a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p_ - 2);
}

FpMatrix FpMatrix::identity(std::size_t n) {
    FpMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(std::vector<std::vector<long long>> rows_in,
                             const PrimeField& F) {
    FpMatrix m(rows_in.size(), rows_in.empty() ? 0 : rows_in[0].size());
    for (std::size_t r = 0; r < m.rows; ++r) {
        if (rows_in[r].size() != m.cols)
            throw std::invalid_argument("FpMatrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = F.reduce(rows_in[r][c]);
    }
    return m;
}

std::vector<u32> FpMatrix::apply_left(const std::vector<u32>& v,
                                      const PrimeField& F) const {
    if (v.size() != rows) throw std::invalid_argument("apply_left: size mismatch");
    std::vector<u32> out(cols, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!v[r]) continue;
        const u32* src = row(r);
        u64 f = v[r];
        for (std::size_t c = 0; c < cols; ++c)
            out[c] = static_cast<u32>((out[c] + f * src[c]) % F.p());
    }
    return out;
}

FpMatrix FpMatrix::transposed() const {
    FpMatrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

FpMatrix FpMatrix::stacked(const FpMatrix& below) const {
    if (rows == 0 && cols == 0) return below;
    if (below.rows == 0 && below.cols == 0) return *this;
    if (cols != below.cols) throw std::invalid_argument("stacked: column mismatch");
    FpMatrix s(rows + below.rows, cols);
    std::copy(data.begin(), data.end(), s.data.begin());
    std::copy(below.data.begin(), below.data.end(), s.data.begin() + data.size());
    return s;
}

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b, const PrimeField& F) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    FpMatrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            u64 f = a.at(i, k);
            if (!f) continue;
            const u32* brow = b.row(k);
            u32* orow = out.row(i);
            for (std::size_t j = 0; j < b.cols; ++j)
                orow[j] = static_cast<u32>((orow[j] + f * brow[j]) % F.p());
        }
    }
    return out;
}

RrefResult rref(const FpMatrix& M, const PrimeField& F) {
    FpMatrix W = M;
    const std::size_t rows = W.rows, cols = W.cols;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (W.at(i, c)) { sel = i; break; }
        if (sel == rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(W.at(sel, j), W.at(r, j));
        u32 inv = F.inv(W.at(r, c));
        if (inv != 1)
            for (std::size_t j = c; j < cols; ++j) W.at(r, j) = F.mul(W.at(r, j), inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            u32 f = W.at(i, c);
            if (!f) continue;
            u64 fm = F.p() - f;
            for (std::size_t j = c; j < cols; ++j)
                W.at(i, j) = static_cast<u32>((W.at(i, j) + fm * W.at(r, j)) % F.p());
        }
        pivots.push_back(c);
        ++r;
    }
    RrefResult out;
    out.rank = r;
    out.pivots = std::move(pivots);
    out.rref = FpMatrix(r, cols);
    std::copy(W.data.begin(), W.data.begin() + r * cols, out.rref.data.begin());
    return out;
}

std::size_t rank(const FpMatrix& M, const PrimeField& F) {
    if (M.rows == 0 || M.cols == 0) return 0;
    Echelon e(M.cols, F);
    for (std::size_t r = 0; r < M.rows; ++r)
        e.absorb(std::vector<u32>(M.row(r), M.row(r) + M.cols));
    return e.rank();
}

FpMatrix left_kernel(const FpMatrix& M, const PrimeField& F) {
    // v*M = 0  <=>  M^T v^T = 0: read free columns off rref(M^T).
    RrefResult R = rref(M.transposed(), F);
    const std::size_t n = M.rows;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : R.pivots) is_pivot[c] = true;
    FpMatrix ker(n - R.rank, n);
    std::size_t k = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        ker.at(k, f) = 1;
        for (std::size_t i = 0; i < R.rank; ++i)
            ker.at(k, R.pivots[i]) = F.neg(R.rref.at(i, f));
        ++k;
    }
    return rref(ker, F).rref;  // canonical basis
}

std::optional<std::vector<u32>> solve_left(const FpMatrix& A,
                                           const std::vector<u32>& b,
                                           const PrimeField& F) {
    // x*A = b: solve A^T x^T = b^T by elimination on [A^T | b^T].
    if (b.size() != A.cols) throw std::invalid_argument("solve_left: size mismatch");
    FpMatrix aug(A.cols, A.rows + 1);
    for (std::size_t r = 0; r < A.cols; ++r) {
        for (std::size_t c = 0; c < A.rows; ++c) aug.at(r, c) = A.at(c, r);
        aug.at(r, A.rows) = b[r];
    }
    RrefResult R = rref(aug, F);
    std::vector<u32> x(A.rows, 0);
    for (std::size_t i = 0; i < R.rank; ++i) {
        if (R.pivots[i] == A.rows) return std::nullopt;  // inconsistent
        x[R.pivots[i]] = R.rref.at(i, A.rows);
    }
    return x;
}

bool Echelon::absorb(std::vector<u32> v) {
    const u32 p = F_.p();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        u32 f = v[pivs_[i]];
        if (!f) continue;
        u64 fm = p - f;
        const std::vector<u32>& rw = rows_[i];
        for (std::size_t j = pivs_[i]; j < cols_; ++j)
            v[j] = static_cast<u32>((v[j] + fm * rw[j]) % p);
    }
    std::size_t lead = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
        if (v[j]) { lead = j; break; }
    if (lead == cols_) return false;
    u32 inv = F_.inv(v[lead]);
    if (inv != 1)
        for (std::size_t j = lead; j < cols_; ++j) v[j] = F_.mul(v[j], inv);
    // keep rows ordered by pivot so reduction stays one pass
    std::size_t pos = 0;
    while (pos < pivs_.size() && pivs_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivs_.insert(pivs_.begin() + pos, lead);
    return true;
}

bool Echelon::reduces_to_zero(std::vector<u32>& v) const {
    const u32 p = F_.p();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        u32 f = v[pivs_[i]];
        if (!f) continue;
        u64 fm = p - f;
        const std::vector<u32>& rw = rows_[i];
        for (std::size_t j = pivs_[i]; j < cols_; ++j)
            v[j] = static_cast<u32>((v[j] + fm * rw[j]) % p);
    }
    for (u32 x : v)
        if (x) return false;
    return true;
}

}  // namespace liezeta
