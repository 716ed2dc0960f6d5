#include "liezeta/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <ostream>
#include <thread>

namespace liezeta {

namespace {

using Hist = std::vector<unsigned long long>;

// rank of a small dense matrix given as rows over F_p, destructive
std::size_t tiny_rank(std::vector<std::vector<u32>>& rows, const PrimeField& F) {
    const u32 p = F.p();
    std::size_t rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t sel = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][c]) { sel = r; break; }
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        u32 inv = F.inv(rows[rank][c]);
        for (std::size_t j = c; j < cols; ++j) rows[rank][j] = F.mul(rows[rank][j], inv);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            u32 f = rows[r][c];
            if (!f) continue;
            u64 fm = p - f;
            for (std::size_t j = c; j < cols; ++j)
                rows[r][j] = static_cast<u32>((rows[r][j] + fm * rows[rank][j]) % p);
        }
        ++rank;
    }
    return rank;
}

// Cokernel data for the tail rank identity
//   rank(phi(I)) = rank(F) - 2g + rank([P L | Q L]),
// where I = base + lift(V), V <= quotient of dim w, L a basis of the
// annihilator of V (dim g), F the stacked image matrix of base and quotient
// lifts, and P, Q the cokernel blocks over the two lift image blocks.
struct TailContext {
    std::size_t q = 0;         // quotient dimension
    std::size_t rankF = 0;
    std::size_t h = 0;         // cokernel dimension
    std::vector<std::vector<u32>> P, Q;  // h x q each
};

TailContext make_tail_context(const GradedLieAlgebra& A, unsigned j,
                              const Subspace& base) {
    const PrimeField& F = A.field;
    const std::size_t dj = A.d[j - 1], D = A.d[j];
    const std::size_t b = base.dim();
    TailContext ctx;
    ctx.q = dj - b;

    std::vector<std::size_t> nonpiv;
    std::vector<bool> is_piv(dj, false);
    for (std::size_t c : base.pivots) is_piv[c] = true;
    for (std::size_t c = 0; c < dj; ++c)
        if (!is_piv[c]) nonpiv.push_back(c);

    // stacked image matrix: phi_1(base), phi_2(base), then phi_i of the lifted
    // quotient unit vectors (= rows of the coordinate phi matrices)
    FpMatrix stack(2 * b + 2 * ctx.q, D);
    FpMatrix img1 = mat_mul(base.basis, A.phi_coord[0][j - 1], F);
    FpMatrix img2 = mat_mul(base.basis, A.phi_coord[1][j - 1], F);
    for (std::size_t r = 0; r < b; ++r) {
        std::copy(img1.row(r), img1.row(r) + D, stack.row(r));
        std::copy(img2.row(r), img2.row(r) + D, stack.row(b + r));
    }
    for (std::size_t t = 0; t < ctx.q; ++t) {
        const u32* r1 = A.phi_coord[0][j - 1].row(nonpiv[t]);
        const u32* r2 = A.phi_coord[1][j - 1].row(nonpiv[t]);
        std::copy(r1, r1 + D, stack.row(2 * b + t));
        std::copy(r2, r2 + D, stack.row(2 * b + ctx.q + t));
    }
    ctx.rankF = rank(stack, F);
    FpMatrix Y = left_kernel(stack, F);
    ctx.h = Y.rows;
    ctx.P.assign(ctx.h, std::vector<u32>(ctx.q));
    ctx.Q.assign(ctx.h, std::vector<u32>(ctx.q));
    for (std::size_t r = 0; r < ctx.h; ++r)
        for (std::size_t t = 0; t < ctx.q; ++t) {
            ctx.P[r][t] = Y.at(r, 2 * b + t);
            ctx.Q[r][t] = Y.at(r, 2 * b + ctx.q + t);
        }
    return ctx;
}

// ranks over one cell range of the annihilator stream; adds into hist
void tail_scan_lambda_range(const TailContext& ctx, const PrimeField& F,
                            std::size_t g, std::size_t cell_begin,
                            std::size_t cell_end, Hist& hist) {
    const u32 p = F.p();
    std::vector<std::vector<u32>> small(ctx.h, std::vector<u32>(2 * g));
    for (std::size_t cell = cell_begin; cell < cell_end; ++cell) {
        SubspaceStream st = SubspaceStream::for_cell(ctx.q, g, F, cell);
        Subspace L;
        while (st.next(L)) {
            for (std::size_t r = 0; r < ctx.h; ++r) {
                const std::vector<u32>& Pr = ctx.P[r];
                const std::vector<u32>& Qr = ctx.Q[r];
                for (std::size_t a = 0; a < g; ++a) {
                    const u32* lam = L.basis.row(a);
                    u64 sp = 0, sq = 0;
                    for (std::size_t t = 0; t < ctx.q; ++t) {
                        sp += u64(Pr[t]) * lam[t];
                        sq += u64(Qr[t]) * lam[t];
                    }
                    small[r][a] = static_cast<u32>(sp % p);
                    small[r][g + a] = static_cast<u32>(sq % p);
                }
            }
            std::vector<std::vector<u32>> work = small;
            std::size_t rs = tiny_rank(work, F);
            long long r = static_cast<long long>(ctx.rankF) -
                          2 * static_cast<long long>(g) + static_cast<long long>(rs);
            if (r < 0 || r >= static_cast<long long>(hist.size()))
                throw std::logic_error("tail rank identity out of range");
            ++hist[static_cast<std::size_t>(r)];
        }
    }
}

// g = 1 shortcut: the annihilator is a projective point lambda, the small
// matrix is [P lam | Q lam], and the rank<=1 locus decomposes over the P^1 of
// directions v*P - u*Q, so the histogram needs only O(p) small kernels.
void tail_scan_directions(const TailContext& ctx, const PrimeField& F, Hist& hist) {
    const u32 p = F.p();
    const std::size_t q = ctx.q;
    auto proj_points = [&](std::size_t kdim) -> unsigned long long {
        // (p^kdim - 1)/(p - 1)
        unsigned long long tot = 0, pw = 1;
        for (std::size_t i = 0; i < kdim; ++i) { tot += pw; pw *= p; }
        return tot;
    };
    // N0: lambda in ker P cap ker Q
    std::vector<std::vector<u32>> both;
    both.insert(both.end(), ctx.P.begin(), ctx.P.end());
    both.insert(both.end(), ctx.Q.begin(), ctx.Q.end());
    std::size_t r_both = tiny_rank(both, F);
    unsigned long long n0 = proj_points(q - r_both);
    // sum over directions [u:v] of |P(ker(vP - uQ))|
    unsigned long long dir_sum = 0;
    auto kernel_points = [&](u32 u, u32 v) {
        std::vector<std::vector<u32>> rows(ctx.h, std::vector<u32>(q));
        for (std::size_t r = 0; r < ctx.h; ++r)
            for (std::size_t t = 0; t < q; ++t)
                rows[r][t] = F.sub(F.mul(v, ctx.P[r][t]), F.mul(u, ctx.Q[r][t]));
        std::size_t rk = tiny_rank(rows, F);
        return proj_points(q - rk);
    };
    dir_sum += kernel_points(1, 0);
    for (u32 v = 0; v < p; ++v) dir_sum += kernel_points(v == 0 ? 0 : 1, v == 0 ? 1 : v);
    // that loop: v=0 -> direction (0,1); v>=1 -> (1,v)... direction (1,0) added above
    unsigned long long total = proj_points(q);
    unsigned long long n1 = dir_sum - (unsigned long long)(p + 1) * n0;
    unsigned long long n2 = total - n0 - n1;
    long long base_rank = static_cast<long long>(ctx.rankF) - 2;
    const unsigned long long counts[3] = {n0, n1, n2};
    for (int i = 0; i < 3; ++i) {
        if (!counts[i]) continue;
        long long r = base_rank + i;
        if (r < 0 || r >= static_cast<long long>(hist.size()))
            throw std::logic_error("tail rank identity out of range");
        hist[static_cast<std::size_t>(r)] += counts[i];
    }
}

unsigned long long checked_nodes(const bigint& est, const EnumOptions& opts) {
    if (est > opts.node_budget || est > bigint(1) << 62) throw BudgetExceeded(est);
    return est.convert_to<unsigned long long>();
}

}  // namespace

std::vector<unsigned long long> phi_rank_histogram(const GradedLieAlgebra& A,
                                                   unsigned j, const Subspace& base,
                                                   std::size_t m, unsigned threads) {
    const PrimeField& F = A.field;
    Hist hist(A.d[j] + 1, 0);
    if (m < base.dim() || m > A.d[j - 1]) return hist;
    const std::size_t w = m - base.dim();
    TailContext ctx = make_tail_context(A, j, base);
    const std::size_t g = ctx.q - w;

    if (g == 1 && F.p() >= 17) {
        tail_scan_directions(ctx, F, hist);
        return hist;
    }
    SubspaceStream probe(ctx.q, g, F);
    std::size_t cells = probe.cell_count();
    if (threads <= 1 || cells < 2) {
        tail_scan_lambda_range(ctx, F, g, 0, cells, hist);
        return hist;
    }
    std::vector<Hist> parts(threads, hist);
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next_cell{0};
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (;;) {
                std::size_t c = next_cell.fetch_add(1);
                if (c >= cells) break;
                tail_scan_lambda_range(ctx, F, g, c, c + 1, parts[t]);
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& part : parts)
        for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += part[i];
    return hist;
}

std::vector<unsigned long long> phi_rank_histogram_direct(const GradedLieAlgebra& A,
                                                          unsigned j,
                                                          const Subspace& base,
                                                          std::size_t m) {
    Hist hist(A.d[j] + 1, 0);
    if (m < base.dim() || m > A.d[j - 1]) return hist;
    SuperspaceStream st(base, m, A.field);
    Subspace I;
    while (st.next(I)) ++hist[A.phi_on_subspace(j, I).dim()];
    return hist;
}

namespace {

// Shared chain-walk for profile counting.  Layers 1..t-1 are enumerated, the
// tail histogram at t-1 absorbs the closed-form count of layer t, layers past
// t are full and contribute factor 1.
struct ProfileWalker {
    const GradedLieAlgebra& A;
    const std::vector<std::size_t>& m;
    unsigned t;  // deepest non-full layer (1-based); 0 means profile is full
    bigint p;

    bigint tail_at(unsigned j, const Subspace& base) const {
        // layer j = t-1 enumerated via histogram; layer t closed-formed
        Hist hist = phi_rank_histogram(A, j, base, m[j - 1], 1);
        bigint total = 0;
        for (std::size_t r = 0; r < hist.size(); ++r)
            if (hist[r])
                total += bigint(hist[r]) *
                         gaussian_binomial_at(static_cast<long long>(A.d[t - 1]) - r,
                                              static_cast<long long>(m[t - 1]) - r, p);
        return total;
    }

    bigint walk(unsigned j, const Subspace& base) const {
        if (j == t)
            return gaussian_binomial_at(
                static_cast<long long>(A.d[t - 1]) - base.dim(),
                static_cast<long long>(m[t - 1]) - base.dim(), p);
        if (m[j - 1] < base.dim() || m[j - 1] > A.d[j - 1]) return 0;
        if (m[j - 1] == A.d[j - 1])  // full layer: forced, image is phi(L_j)
            return walk(j + 1, A.phi_on_subspace(j, Subspace::full(A.d[j - 1])));
        if (j + 1 == t) return tail_at(j, base);
        bigint total = 0;
        SuperspaceStream st(base, m[j - 1], A.field);
        Subspace I;
        while (st.next(I)) total += walk(j + 1, A.phi_on_subspace(j, I));
        return total;
    }
};

}  // namespace

namespace {

// smallest possible dim(phi(I_j)) for an m-dimensional I_j: collapse is
// bounded by l_{j+1} (and the layer-1 images are at most one-dimensional)
long long min_image_dim(const GradedLieAlgebra& A, unsigned j, long long m) {
    if (m <= 0) return 0;
    if (j == 1) return 1;
    long long l = j < A.c ? static_cast<long long>(A.l(j + 1)) : 0;
    return std::max<long long>(m, 2 * m - l);
}

}  // namespace

bigint estimate_profile_nodes(const GradedLieAlgebra& A, const IdealProfile& profile) {
    // per enumerated layer, the superspace count over the smallest possible
    // base: binom(d_j - bmin, m_j - bmin); bases only grow, counts only shrink
    unsigned t = 0;
    for (unsigned j = 1; j <= A.c; ++j)
        if (profile.m[j - 1] < A.d[j - 1]) t = j;
    bigint est = 1;
    for (unsigned j = 1; j + 1 <= t; ++j) {
        if (profile.m[j - 1] == 0 || profile.m[j - 1] == A.d[j - 1]) continue;
        long long bmin = j >= 2 ? min_image_dim(A, j - 1, profile.m[j - 2]) : 0;
        bmin = std::min<long long>(bmin, profile.m[j - 1]);
        est *= gaussian_binomial_at(static_cast<long long>(A.d[j - 1]) - bmin,
                                    static_cast<long long>(profile.m[j - 1]) - bmin,
                                    A.field.p());
    }
    return est;
}

ProfileCount count_profile(const GradedLieAlgebra& A, const IdealProfile& profile,
                           const EnumOptions& opts) {
    if (profile.m.size() != A.c)
        throw std::invalid_argument("count_profile: profile length != c");
    for (unsigned j = 1; j <= A.c; ++j)
        if (profile.m[j - 1] > A.d[j - 1])
            throw std::invalid_argument("count_profile: m_k exceeds layer dimension");

    unsigned t = 0;
    for (unsigned j = 1; j <= A.c; ++j)
        if (profile.m[j - 1] < A.d[j - 1]) t = j;
    if (t == 0) return {profile, 1, A.field.p()};  // the full algebra

    checked_nodes(estimate_profile_nodes(A, profile), opts);
    ProfileWalker walker{A, profile.m, t, bigint(A.field.p())};

    // parallelize over the first enumerated layer with several nodes
    unsigned split_layer = 0;
    for (unsigned j = 1; j + 1 <= t; ++j)
        if (profile.m[j - 1] > 0 && profile.m[j - 1] < A.d[j - 1]) { split_layer = j; break; }

    if (opts.threads <= 1 || split_layer == 0 || split_layer + 1 > t) {
        return {profile, walker.walk(1, Subspace::zero(A.d[0])), A.field.p()};
    }

    // walk the prefix serially, collecting (base at split_layer) tasks
    std::vector<Subspace> tasks;
    {
        struct Pre { unsigned j; Subspace base; };
        std::vector<Pre> stack{{1, Subspace::zero(A.d[0])}};
        while (!stack.empty()) {
            Pre f = std::move(stack.back());
            stack.pop_back();
            if (f.j == split_layer) {
                if (profile.m[f.j - 1] >= f.base.dim()) {
                    SuperspaceStream st(f.base, profile.m[f.j - 1], A.field);
                    Subspace I;
                    while (st.next(I)) tasks.push_back(A.phi_on_subspace(f.j, I));
                }
                continue;
            }
            if (profile.m[f.j - 1] < f.base.dim()) continue;
            if (profile.m[f.j - 1] == A.d[f.j - 1]) {
                stack.push_back({f.j + 1,
                                 A.phi_on_subspace(f.j, Subspace::full(A.d[f.j - 1]))});
                continue;
            }
            SuperspaceStream st(f.base, profile.m[f.j - 1], A.field);
            Subspace I;
            while (st.next(I)) stack.push_back({f.j + 1, A.phi_on_subspace(f.j, I)});
        }
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::vector<bigint> partial(opts.threads, 0);
    std::vector<std::thread> pool;
    for (unsigned th = 0; th < opts.threads; ++th) {
        pool.emplace_back([&, th] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                partial[th] += walker.walk(split_layer + 1, tasks[i]);
                std::size_t d = done.fetch_add(1) + 1;
                if (opts.progress && th == 0 && d % 512 == 0)
                    (*opts.progress) << "  cells " << d << "/" << tasks.size() << "\n";
            }
        });
    }
    for (auto& thr : pool) thr.join();
    bigint total = 0;
    for (const auto& part : partial) total += part;
    return {profile, total, A.field.p()};
}

ZetaEnumeration enumerate_graded_zeta(unsigned c, u32 p, const EnumOptions& opts) {
    if (c < 1) throw std::invalid_argument("enumerate_graded_zeta: c >= 1");
    if (c > 6)
        throw std::invalid_argument(
            "enumerate_graded_zeta: c > 6 rejected (cost guard); use the window "
            "or profile operations instead");
    PrimeField F(p);
    GradedLieAlgebra A = build_graded_algebra(c, F, /*allow_small_prime=*/true);
    std::size_t N = 0;
    for (auto dk : A.d) N += dk;

    // budget estimate: chain-count upper bound by dynamic programming over
    // (layer, dim), superspace counts taken over the smallest possible base
    {
        unsigned last = opts.full_last_layer ? c : c - 1;
        std::vector<bigint> nodes(A.d[0] + 1);
        for (std::size_t m = 0; m <= A.d[0]; ++m)
            nodes[m] = gaussian_binomial_at(A.d[0], m, p);
        bigint est = 0;
        for (const auto& v : nodes) est += v;
        for (unsigned j = 2; j <= last; ++j) {
            std::vector<bigint> nxt(A.d[j - 1] + 1, 0);
            for (std::size_t mprev = 0; mprev < nodes.size(); ++mprev) {
                if (nodes[mprev] == 0) continue;
                long long bmin = min_image_dim(A, j - 1, static_cast<long long>(mprev));
                for (std::size_t m = 0; m <= A.d[j - 1]; ++m) {
                    long long b = std::min<long long>(bmin, static_cast<long long>(m));
                    nxt[m] += nodes[mprev] *
                              gaussian_binomial_at(static_cast<long long>(A.d[j - 1]) - b,
                                                   static_cast<long long>(m) - b, p);
                }
            }
            nodes = std::move(nxt);
            for (const auto& v : nodes) est += v;
            if (est > opts.node_budget) throw BudgetExceeded(est);
        }
        checked_nodes(est, opts);
    }

    ZetaEnumeration out;
    out.p = p;
    out.below_hypothesis = p < c;
    out.codim_coeffs.assign(N + 1, 0);

    // DFS over layers 1..c-1 with free dimensions; the final layer is either
    // closed-formed from the rank histogram or (reference mode) enumerated.
    std::function<void(unsigned, const Subspace&, std::size_t, std::vector<bigint>&)> rec =
        [&](unsigned j, const Subspace& base, std::size_t dims, std::vector<bigint>& acc) {
            if (j == c) {
                for (std::size_t mc = base.dim(); mc <= A.d[c - 1]; ++mc) {
                    if (opts.full_last_layer) {
                        SuperspaceStream st(base, mc, F);
                        Subspace I;
                        bigint n = 0;
                        while (st.next(I)) ++n;
                        acc[N - (dims + mc)] += n;
                    } else {
                        acc[N - (dims + mc)] += gaussian_binomial_at(
                            static_cast<long long>(A.d[c - 1]) - base.dim(),
                            static_cast<long long>(mc) - base.dim(), p);
                    }
                }
                return;
            }
            if (j + 1 == c && !opts.full_last_layer) {
                // tail: histogram per m_j, closed form for layer c
                for (std::size_t mj = base.dim(); mj <= A.d[j - 1]; ++mj) {
                    Hist hist = phi_rank_histogram(A, j, base, mj, 1);
                    for (std::size_t r = 0; r < hist.size(); ++r) {
                        if (!hist[r]) continue;
                        for (std::size_t mc = r; mc <= A.d[c - 1]; ++mc)
                            acc[N - (dims + mj + mc)] +=
                                bigint(hist[r]) *
                                gaussian_binomial_at(
                                    static_cast<long long>(A.d[c - 1]) - r,
                                    static_cast<long long>(mc) - r, p);
                    }
                }
                return;
            }
            for (std::size_t mj = base.dim(); mj <= A.d[j - 1]; ++mj) {
                SuperspaceStream st(base, mj, F);
                Subspace I;
                while (st.next(I)) rec(j + 1, A.phi_on_subspace(j, I), dims + mj, acc);
            }
        };

    if (c == 1) {
        // subspaces of the plane: no phi constraints at all
        for (std::size_t m = 0; m <= 2; ++m)
            out.codim_coeffs[N - m] += gaussian_binomial_at(2, m, p);
        return out;
    }

    if (opts.threads <= 1 || c <= 2) {
        rec(1, Subspace::zero(A.d[0]), 0, out.codim_coeffs);
        return out;
    }
    // split on layer-1 nodes
    struct Task { Subspace base; std::size_t dims; };
    std::vector<Task> tasks;
    for (std::size_t m1 = 0; m1 <= A.d[0]; ++m1) {
        SubspaceStream st(A.d[0], m1, F);
        Subspace I;
        while (st.next(I)) tasks.push_back({A.phi_on_subspace(1, I), m1});
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::vector<bigint>> partial(opts.threads,
                                             std::vector<bigint>(N + 1, 0));
    std::vector<std::thread> pool;
    for (unsigned th = 0; th < opts.threads; ++th) {
        pool.emplace_back([&, th] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                rec(2, tasks[i].base, tasks[i].dims, partial[th]);
            }
        });
    }
    for (auto& thr : pool) thr.join();
    for (const auto& part : partial)
        for (std::size_t i = 0; i <= N; ++i) out.codim_coeffs[i] += part[i];
    return out;
}

C6Codim9Result c6_codim9_enumerate(u32 p, const EnumOptions& opts) {
    if (p < 5)
        throw std::invalid_argument("c6_codim9_enumerate: requires p >= 5");
    PrimeField F(p);
    GradedLieAlgebra A = build_graded_algebra(6, F, /*allow_small_prime=*/p < 6);
    std::size_t N = 0;
    for (auto dk : A.d) N += dk;
    const std::size_t target = N - 9;

    C6Codim9Result out;
    out.p = p;
    out.total = 0;

    // candidate profiles by chain feasibility: m_{k+1} >= minimal image dim,
    // where the image of an m-dim subspace has dim >= 2m - l_{k+1} (and >= m
    // for m <= d_k, k >= 2; layer 1 images have dim >= 1 iff m >= 1)
    std::vector<IdealProfile> cands;
    std::vector<std::size_t> m(6, 0);
    std::function<void(unsigned, std::size_t, std::size_t)> gen = [&](unsigned k,
                                                                      std::size_t sum,
                                                                      std::size_t minimg) {
        if (k == 7) {
            if (sum == target) cands.push_back({m});
            return;
        }
        for (std::size_t mk = minimg; mk <= A.d[k - 1]; ++mk) {
            if (sum + mk > target) break;
            std::size_t nextmin;
            if (k == 1)
                nextmin = mk ? 1 : 0;
            else {
                long long lk1 = k < 6 ? static_cast<long long>(A.l(k + 1)) : 0;
                nextmin = static_cast<std::size_t>(
                    std::max<long long>(mk ? static_cast<long long>(mk) : 0,
                                        2 * static_cast<long long>(mk) - lk1));
            }
            m[k - 1] = mk;
            gen(k + 1, sum + mk, k < 6 ? nextmin : 0);
            m[k - 1] = 0;
        }
    };
    gen(1, 0, 0);

    const std::vector<IdealProfile> canonical = c6_codim9_profiles();
    for (const auto& prof : cands) {
        ProfileCount pc = count_profile(A, prof, opts);
        bool listed = std::find(canonical.begin(), canonical.end(), prof) !=
                      canonical.end();
        if (pc.count != 0 || listed) out.parts.push_back(pc);
        out.total += pc.count;
    }
    return out;
}

std::vector<bigint> f_k_collapse_table(const GradedLieAlgebra& A, unsigned k,
                                       std::size_t m, const EnumOptions& opts) {
    if (k < 1 || k >= A.c) throw std::invalid_argument("f_k: k < c required");
    const PrimeField& F = A.field;
    bigint est = gaussian_binomial_at(A.d[k - 1], m, F.p());
    checked_nodes(est, opts);
    std::vector<bigint> hist(m + 1, 0);
    if (k >= 2) {
        // phi_i injective: collapse = 2m - dim(phi(I)); one histogram pass
        Hist h = phi_rank_histogram(A, k, Subspace::zero(A.d[k - 1]), m, opts.threads);
        for (std::size_t r = 0; r < h.size(); ++r) {
            if (!h[r]) continue;
            long long i = 2 * static_cast<long long>(m) - static_cast<long long>(r);
            if (i < 0 || i > static_cast<long long>(m))
                throw std::logic_error("collapse out of range; injectivity violated?");
            hist[i] += bigint(h[r]);
        }
        return hist;
    }
    // k = 1: compute dim(phi_1 I cap phi_2 I) honestly
    SubspaceStream st(A.d[0], m, F);
    Subspace I;
    while (st.next(I)) {
        FpMatrix i1 = mat_mul(I.basis, A.phi_coord[0][0], F);
        FpMatrix i2 = mat_mul(I.basis, A.phi_coord[1][0], F);
        Subspace s1 = canonical_subspace(i1, A.d[1], F);
        Subspace s2 = canonical_subspace(i2, A.d[1], F);
        ++hist[intersect(s1, s2, F).dim()];
    }
    return hist;
}

bigint f_k_bruteforce(const GradedLieAlgebra& A, unsigned k, std::size_t m,
                      std::size_t i, const EnumOptions& opts) {
    std::vector<bigint> hist = f_k_collapse_table(A, k, m, opts);
    return i < hist.size() ? hist[i] : bigint(0);
}

std::vector<bigint> alpha_window_table(const GradedLieAlgebra& A, unsigned n,
                                       unsigned k, const EnumOptions& opts) {
    if (n != 1 && n != 2) throw std::invalid_argument("alpha_window: n in {1,2}");
    if (k < 1 || k + n > A.c)
        throw std::invalid_argument("alpha_window: window exceeds class");
    const PrimeField& F = A.field;
    const bigint p(F.p());
    std::size_t window = 0;
    for (unsigned j = k; j <= k + n; ++j) window += A.d[j - 1];
    std::vector<bigint> table(window + 1, 0);

    if (n == 1) {
        for (std::size_t m = 0; m <= A.d[k - 1]; ++m) {
            checked_nodes(gaussian_binomial_at(A.d[k - 1], m, F.p()), opts);
            Hist hist = phi_rank_histogram(A, k, Subspace::zero(A.d[k - 1]), m,
                                           opts.threads);
            for (std::size_t r = 0; r < hist.size(); ++r) {
                if (!hist[r]) continue;
                for (std::size_t m2 = r; m2 <= A.d[k]; ++m2)
                    table[m + m2] += bigint(hist[r]) *
                                     gaussian_binomial_at(
                                         static_cast<long long>(A.d[k]) - r,
                                         static_cast<long long>(m2) - r, p);
            }
        }
        return table;
    }
    // n = 2: enumerate I_k, histogram I_{k+1} over each base, closed-form I_{k+2}
    for (std::size_t m = 0; m <= A.d[k - 1]; ++m) {
        bigint est = gaussian_binomial_at(A.d[k - 1], m, F.p());
        for (std::size_t m2 = 0; m2 <= A.d[k]; ++m2)
            est += gaussian_binomial_at(A.d[k - 1], m, F.p()) *
                   gaussian_binomial_at(A.d[k], m2, F.p());
        checked_nodes(est, opts);
        SubspaceStream st(A.d[k - 1], m, F);
        Subspace I;
        while (st.next(I)) {
            Subspace img = A.phi_on_subspace(k, I);
            for (std::size_t m2 = img.dim(); m2 <= A.d[k]; ++m2) {
                Hist hist = phi_rank_histogram(A, k + 1, img, m2, 1);
                for (std::size_t r = 0; r < hist.size(); ++r) {
                    if (!hist[r]) continue;
                    for (std::size_t m3 = r; m3 <= A.d[k + 1]; ++m3)
                        table[m + m2 + m3] +=
                            bigint(hist[r]) *
                            gaussian_binomial_at(
                                static_cast<long long>(A.d[k + 1]) - r,
                                static_cast<long long>(m3) - r, p);
                }
            }
        }
    }
    return table;
}

bigint alpha_window_bruteforce(const GradedLieAlgebra& A, unsigned n, unsigned k,
                               std::size_t a, const EnumOptions& opts) {
    std::vector<bigint> table = alpha_window_table(A, n, k, opts);
    return a < table.size() ? table[a] : bigint(0);
}

}  // namespace liezeta
