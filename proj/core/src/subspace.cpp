#include "liezeta/subspace.hpp"

#include <algorithm>
#include <sstream>

namespace liezeta {

bool Subspace::operator<(const Subspace& o) const {
    if (ambient_dim != o.ambient_dim) return ambient_dim < o.ambient_dim;
    if (basis.rows != o.basis.rows) return basis.rows < o.basis.rows;
    return basis.data < o.basis.data;
}

Subspace Subspace::zero(std::size_t ambient) {
    Subspace s;
    s.ambient_dim = ambient;
    s.basis = FpMatrix(0, ambient);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s;
    s.ambient_dim = ambient;
    s.basis = FpMatrix::identity(ambient);
    s.pivots.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i) s.pivots[i] = i;
    return s;
}

bool Subspace::contains_vector(const std::vector<u32>& v, const PrimeField& F) const {
    std::vector<u32> w = v;
    for (std::size_t i = 0; i < basis.rows; ++i) {
        u32 f = w[pivots[i]];
        if (!f) continue;
        u64 fm = F.p() - f;
        const u32* row = basis.row(i);
        for (std::size_t j = 0; j < ambient_dim; ++j)
            w[j] = static_cast<u32>((w[j] + fm * row[j]) % F.p());
    }
    return std::all_of(w.begin(), w.end(), [](u32 x) { return x == 0; });
}

bool Subspace::contains(const Subspace& u, const PrimeField& F) const {
    for (std::size_t i = 0; i < u.basis.rows; ++i)
        if (!contains_vector(std::vector<u32>(u.basis.row(i), u.basis.row(i) + ambient_dim), F))
            return false;
    return true;
}

std::string Subspace::digits(const PrimeField& F) const {
    std::ostringstream os;
    const bool sep = F.p() > 10;
    for (std::size_t i = 0; i < basis.data.size(); ++i) {
        if (sep && i) os << '.';
        os << basis.data[i];
    }
    return os.str();
}

Subspace canonical_subspace(const FpMatrix& vectors, std::size_t ambient_dim,
                            const PrimeField& F) {
    if (vectors.rows && vectors.cols != ambient_dim)
        throw std::invalid_argument("canonical_subspace: ambient mismatch");
    FpMatrix m = vectors;
    m.cols = ambient_dim;
    RrefResult r = rref(m, F);
    Subspace s;
    s.ambient_dim = ambient_dim;
    s.basis = std::move(r.rref);
    s.basis.cols = ambient_dim;
    s.pivots = std::move(r.pivots);
    return s;
}

Subspace intersect(const Subspace& u, const Subspace& v, const PrimeField& F) {
    if (u.ambient_dim != v.ambient_dim)
        throw std::invalid_argument("intersect: ambient mismatch");
    if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(u.ambient_dim);
    // (a, b) with a*U = b*V: left kernel of [U; -V] stacked.
    FpMatrix stack(u.dim() + v.dim(), u.ambient_dim);
    for (std::size_t i = 0; i < u.dim(); ++i)
        std::copy(u.basis.row(i), u.basis.row(i) + u.ambient_dim, stack.row(i));
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < u.ambient_dim; ++j)
            stack.at(u.dim() + i, j) = F.neg(v.basis.at(i, j));
    FpMatrix ker = left_kernel(stack, F);
    FpMatrix pts(ker.rows, u.ambient_dim);
    for (std::size_t i = 0; i < ker.rows; ++i) {
        std::vector<u32> a(ker.row(i), ker.row(i) + u.dim());
        std::vector<u32> x = u.basis.apply_left(a, F);
        std::copy(x.begin(), x.end(), pts.row(i));
    }
    return canonical_subspace(pts, u.ambient_dim, F);
}

Subspace sum(const Subspace& u, const Subspace& v, const PrimeField& F) {
    if (u.ambient_dim != v.ambient_dim)
        throw std::invalid_argument("sum: ambient mismatch");
    return canonical_subspace(u.basis.stacked(v.basis), u.ambient_dim, F);
}

Subspace preimage(const FpMatrix& M, const Subspace& S, const PrimeField& F) {
    if (M.cols != S.ambient_dim) throw std::invalid_argument("preimage: shape mismatch");
    // Reduce each image row modulo S; membership is controlled by the residual
    // non-pivot coordinates, so the preimage is the left kernel of those.
    std::vector<std::size_t> nonpiv;
    std::vector<bool> is_piv(S.ambient_dim, false);
    for (std::size_t c : S.pivots) is_piv[c] = true;
    for (std::size_t c = 0; c < S.ambient_dim; ++c)
        if (!is_piv[c]) nonpiv.push_back(c);
    FpMatrix red(M.rows, nonpiv.size());
    for (std::size_t r = 0; r < M.rows; ++r) {
        std::vector<u32> v(M.row(r), M.row(r) + M.cols);
        for (std::size_t i = 0; i < S.basis.rows; ++i) {
            u32 f = v[S.pivots[i]];
            if (!f) continue;
            u64 fm = F.p() - f;
            const u32* row = S.basis.row(i);
            for (std::size_t j = 0; j < S.ambient_dim; ++j)
                v[j] = static_cast<u32>((v[j] + fm * row[j]) % F.p());
        }
        for (std::size_t j = 0; j < nonpiv.size(); ++j) red.at(r, j) = v[nonpiv[j]];
    }
    FpMatrix ker = left_kernel(red, F);
    return canonical_subspace(ker, M.rows, F);
}

// ---------------------------------------------------------------- streams

SubspaceStream::SubspaceStream(std::size_t d, std::size_t m, PrimeField F)
    : F_(F), d_(d), m_(m) {
    if (m > d) throw std::invalid_argument("SubspaceStream: m > d");
    // number of pivot cells = C(d, m)
    std::size_t c = 1;
    for (std::size_t i = 0; i < m_; ++i) c = c * (d_ - i) / (i + 1);
    cells_ = c;
    reset();
}

void SubspaceStream::reset() {
    done_ = false;
    fresh_ = true;
    pivots_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) pivots_[i] = i;
    load_cell();
}

SubspaceStream SubspaceStream::for_cell(std::size_t d, std::size_t m, PrimeField F,
                                        std::size_t cell_index) {
    SubspaceStream s(d, m, F);
    s.single_cell_ = true;
    for (std::size_t i = 0; i < cell_index; ++i)
        if (!s.advance_cell()) throw std::out_of_range("for_cell: index too large");
    return s;
}

void SubspaceStream::load_cell() {
    free_pos_.clear();
    std::vector<bool> is_piv(d_, false);
    for (std::size_t c : pivots_) is_piv[c] = true;
    for (std::size_t r = 0; r < m_; ++r)
        for (std::size_t c = pivots_[r] + 1; c < d_; ++c)
            if (!is_piv[c]) free_pos_.emplace_back(r, c);
    free_vals_.assign(free_pos_.size(), 0);
}

bool SubspaceStream::advance_cell() {
    // next m-combination of [0, d) in lexicographic order
    if (m_ == 0) return false;
    std::size_t i = m_;
    while (i-- > 0) {
        if (pivots_[i] + (m_ - i) <= d_ - 1) {
            ++pivots_[i];
            for (std::size_t j = i + 1; j < m_; ++j) pivots_[j] = pivots_[j - 1] + 1;
            load_cell();
            return true;
        }
    }
    return false;
}

bool SubspaceStream::bump_free() {
    for (std::size_t i = 0; i < free_vals_.size(); ++i) {
        if (++free_vals_[i] < F_.p()) return true;
        free_vals_[i] = 0;
    }
    return false;
}

void SubspaceStream::emit(Subspace& out) const {
    out.ambient_dim = d_;
    out.basis = FpMatrix(m_, d_);
    out.pivots = pivots_;
    for (std::size_t r = 0; r < m_; ++r) out.basis.at(r, pivots_[r]) = 1;
    for (std::size_t i = 0; i < free_pos_.size(); ++i)
        out.basis.at(free_pos_[i].first, free_pos_[i].second) = free_vals_[i];
}

bool SubspaceStream::next(Subspace& out) {
    if (done_) return false;
    if (fresh_) {
        fresh_ = false;
        emit(out);
        return true;
    }
    if (bump_free()) {
        emit(out);
        return true;
    }
    if (!single_cell_ && advance_cell()) {
        emit(out);
        return true;
    }
    done_ = true;
    return false;
}

SuperspaceStream::SuperspaceStream(Subspace base, std::size_t m, PrimeField F)
    : F_(F), base_(std::move(base)),
      inner_(base_.ambient_dim - base_.dim(),
             m >= base_.dim() ? m - base_.dim()
                              : throw std::invalid_argument("SuperspaceStream: m < dim base"),
             F) {
    std::vector<bool> is_piv(base_.ambient_dim, false);
    for (std::size_t c : base_.pivots) is_piv[c] = true;
    for (std::size_t c = 0; c < base_.ambient_dim; ++c)
        if (!is_piv[c]) nonpivots_.push_back(c);
}

bool SuperspaceStream::next(Subspace& out) {
    Subspace q;
    if (!inner_.next(q)) return false;
    FpMatrix lifted(base_.dim() + q.dim(), base_.ambient_dim);
    for (std::size_t i = 0; i < base_.dim(); ++i)
        std::copy(base_.basis.row(i), base_.basis.row(i) + base_.ambient_dim, lifted.row(i));
    for (std::size_t i = 0; i < q.dim(); ++i)
        for (std::size_t j = 0; j < nonpivots_.size(); ++j)
            lifted.at(base_.dim() + i, nonpivots_[j]) = q.basis.at(i, j);
    out = canonical_subspace(lifted, base_.ambient_dim, F_);
    return true;
}

}  // namespace liezeta
