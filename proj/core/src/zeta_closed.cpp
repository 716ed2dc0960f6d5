#include "liezeta/zeta_closed.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace liezeta {

std::string DirichletPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string c = coeffs[i].to_string();
        bool simple = coeffs[i].degree() <= 0;
        if (i == 0) {
            os << c;
        } else {
            if (c == "1") {
                // bare t-power
            } else if (simple) {
                os << c << " ";
            } else {
                os << "(" << c << ") ";
            }
            if (c == "1") os << "";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

const IntPoly& ResidueFamily::for_prime(const bigint& p) const {
    unsigned r = static_cast<unsigned>(p % modulus);
    for (const auto& cl : classes)
        if (std::find(cl.first.begin(), cl.first.end(), r) != cl.first.end())
            return cl.second;
    throw std::domain_error("ResidueFamily: prime residue not covered");
}

long long dphi_table(unsigned c, unsigned k, long long m_k) {
    if (c > 5) throw std::invalid_argument("dphi_table: c <= 5");
    if (k < 1 || k > c - 1) throw std::invalid_argument("dphi_table: k <= c-1");
    static const long long layer_dim[5] = {2, 1, 2, 3, 6};
    if (m_k < 0 || m_k > layer_dim[k - 1])
        throw std::invalid_argument("dphi_table: m_k out of range");
    if (m_k == 0) return 0;
    switch (k) {
        case 1: return 1;            // m_1 in {1,2}
        case 2: return 2;            // m_2 = 1
        case 3: return m_k + 1;      // 1 -> 2, 2 -> 3
        case 4: return 2 * m_k;      // 1,2,3 -> 2,4,6
        default: throw std::logic_error("dphi_table");
    }
}

DirichletPoly zeta_graded_closed(unsigned c) {
    if (c < 1 || c > 5) throw std::invalid_argument("zeta_graded_closed: 1 <= c <= 5");
    static const long long layer_dim[5] = {2, 1, 2, 3, 6};
    long long N = 0;
    for (unsigned k = 0; k < c; ++k) N += layer_dim[k];
    DirichletPoly zeta;
    zeta.coeffs.assign(N + 1, IntPoly());

    // depth-first over profiles; the binomial of layer k+1 depends on layer k
    // only through d_phi(m_k)
    struct Frame { unsigned k; long long dims; IntPoly weight; long long dphi_prev; };
    std::vector<Frame> stack{{1, 0, IntPoly(1), 0}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (f.k == c + 1) {
            zeta.coeffs[N - f.dims] += f.weight;
            continue;
        }
        long long dk = layer_dim[f.k - 1];
        for (long long mk = 0; mk <= dk; ++mk) {
            IntPoly factor = gaussian_binomial(dk - f.dphi_prev, mk - f.dphi_prev);
            if (factor.is_zero()) continue;
            long long dphi = f.k < c ? dphi_table(c, f.k, mk) : 0;
            stack.push_back({f.k + 1, f.dims + mk, f.weight * factor, dphi});
        }
    }
    return zeta;
}

IntPoly f_k_closed(long long d_k, long long l, long long m, long long i) {
    if (m < 0 || i < 0) return IntPoly();
    IntPoly total;
    for (long long j = i; j <= l; ++j) {
        IntPoly outer = gaussian_binomial(l, j) * gaussian_binomial(j, i);
        if (outer.is_zero()) continue;
        IntPoly inner;
        long long rmax = std::min({l - j, j - i, m - j - i});
        for (long long r = 0; r <= rmax; ++r) {
            IntPoly term = IntPoly::power(static_cast<unsigned>((l - i - r) * (m - j - i - r))) *
                           gaussian_binomial(l - j, r) * gaussian_binomial(j - i, r) *
                           gaussian_binomial(d_k - l - j, m - j - i - r);
            for (long long e = 0; e < r; ++e)
                term = term * (IntPoly::power(static_cast<unsigned>(r)) -
                               IntPoly::power(static_cast<unsigned>(e)));
            inner += term;
        }
        total += outer * inner;
    }
    return total;
}

LayerDims LayerDims::of(const GradedLieAlgebra& A) {
    LayerDims out;
    out.d = A.d;
    for (unsigned k = 1; k < A.c; ++k) out.l.push_back(A.l(k + 1));
    return out;
}

LayerDims LayerDims::reference(unsigned c) {
    static std::mutex mtx;
    static std::map<unsigned, LayerDims> cache;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(c);
    if (it != cache.end()) return it->second;
    // smallest prime >= max(c, 7); layer data is prime-independent in this range
    u32 p = std::max<u32>(c, 7);
    while (!is_prime_u32(p)) ++p;
    LayerDims dims = LayerDims::of(build_graded_algebra(c, PrimeField(p)));
    for (unsigned k = 1; k <= c; ++k)
        if (static_cast<long long>(dims.d[k - 1]) != witt_dimension(k))
            throw std::logic_error("layer dimension disagrees with the Witt formula");
    return cache.emplace(c, std::move(dims)).first->second;
}

namespace {

// k=1 window weights: the maps out of L_1 kill one generator each, so the
// image dimension table replaces the collapse count.  (m, dim phi) -> count.
struct K1Row { long long m, delta; IntPoly count; };
std::vector<K1Row> k1_rows() {
    return {{0, 0, IntPoly(1)},
            {1, 1, gaussian_binomial(2, 1)},
            {2, 1, IntPoly(1)}};
}

}  // namespace

IntPoly alpha1_closed(const LayerDims& dims, long long a, unsigned k) {
    if (k < 1 || k >= dims.d.size())
        throw std::invalid_argument("alpha1_closed: window k out of range");
    long long dk1 = dims.d[k];
    if (k == 1) {
        // equivalently the explicit values 1, 1, p+1, 1 for a = 0..3
        IntPoly total;
        for (const auto& row : k1_rows())
            total += row.count *
                     gaussian_binomial(dk1 - row.delta, (a - row.m) - row.delta);
        return total;
    }
    long long dk = dims.d[k - 1];
    long long l = dims.l[k - 1];
    IntPoly total;
    for (long long m = 0; m <= dk; ++m)
        for (long long i = 0; i <= std::min(m, l); ++i) {
            IntPoly f = f_k_closed(dk, l, m, i);
            if (f.is_zero()) continue;
            total += f * gaussian_binomial(dk1 - (2 * m - i), (a - m) - (2 * m - i));
        }
    return total;
}

IntPoly alpha2_closed(const LayerDims& dims, long long a, unsigned k) {
    if (k != 1 && k != 3 && k != 5)
        throw std::invalid_argument(
            "alpha2_closed: k must be 1, 3 or 5 (Lambda_{k+2} = 0 is required and "
            "fails at even k)");
    if (k + 2 > dims.d.size())
        throw std::invalid_argument("alpha2_closed: window exceeds class");
    if (dims.l[k] != 0)  // l_{k+2}
        throw std::logic_error("alpha2_closed: l_{k+2} != 0 in layer data");
    long long dk1 = dims.d[k], dk2 = dims.d[k + 1];

    // weights (m, delta = dim phi(I_k), count)
    std::vector<K1Row> rows;
    if (k == 1) {
        rows = k1_rows();
    } else {
        long long dk = dims.d[k - 1], l = dims.l[k - 1];
        for (long long m = 0; m <= dk; ++m)
            for (long long i = 0; i <= std::min(m, l); ++i) {
                IntPoly f = f_k_closed(dk, l, m, i);
                if (!f.is_zero()) rows.push_back({m, 2 * m - i, f});
            }
    }
    IntPoly total;
    for (const auto& row : rows)
        for (long long mp = row.delta; mp <= dk1; ++mp)
            total += row.count *
                     gaussian_binomial(dk1 - row.delta, mp - row.delta) *
                     gaussian_binomial(dk2 - 2 * mp, (a - row.m - mp) - 2 * mp);
    return total;
}

DirichletPoly onestep_zeta_closed(const LayerDims& dims) {
    unsigned c = static_cast<unsigned>(dims.d.size());
    if (c < 2) throw std::invalid_argument("onestep_zeta_closed: c >= 2");
    std::size_t maxpow = 0;
    for (unsigned k = 1; k < c; ++k)
        maxpow = std::max(maxpow, dims.d[k - 1] + dims.d[k]);
    DirichletPoly z;
    z.coeffs.assign(maxpow + 1, IntPoly());
    for (unsigned k = 1; k < c; ++k) {
        long long window = static_cast<long long>(dims.d[k - 1] + dims.d[k]);
        for (long long a = 0; a <= window; ++a)
            z.coeffs[window - a] += alpha1_closed(dims, a, k);
    }
    return z;
}

std::vector<IdealProfile> c6_codim9_profiles() {
    return {IdealProfile{{0, 0, 0, 2, 4, 8}},
            IdealProfile{{0, 0, 0, 2, 5, 7}},
            IdealProfile{{0, 0, 0, 1, 4, 9}},
            IdealProfile{{0, 0, 0, 1, 5, 8}},
            IdealProfile{{0, 0, 0, 0, 5, 9}}};
}

ResidueFamily c6_profile_prediction(const IdealProfile& profile) {
    ResidueFamily fam;
    fam.modulus = 8;
    auto uniform = [&](IntPoly poly) {
        fam.modulus = 1;
        fam.classes.push_back({{0}, std::move(poly)});
        return fam;
    };
    const auto& m = profile.m;
    if (m == std::vector<std::size_t>{0, 0, 0, 2, 4, 8})
        return uniform(IntPoly({1, 4, 1}));  // p^2 + 4p + 1
    if (m == std::vector<std::size_t>{0, 0, 0, 2, 5, 7})
        return uniform(IntPoly());
    if (m == std::vector<std::size_t>{0, 0, 0, 1, 4, 9})
        return uniform(gaussian_binomial(3, 1) * gaussian_binomial(4, 2));
    if (m == std::vector<std::size_t>{0, 0, 0, 0, 5, 9})
        return uniform(gaussian_binomial(6, 5));
    if (m == std::vector<std::size_t>{0, 0, 0, 1, 5, 8}) {
        fam.classes.push_back({{3, 5}, IntPoly({1, 3, 3, 1})});
        fam.classes.push_back({{1, 7}, IntPoly({1, 1, 3, 1})});
        return fam;
    }
    throw std::invalid_argument("c6_profile_prediction: unsupported profile");
}

ResidueFamily c6_codim9_prediction() {
    ResidueFamily fam;
    fam.modulus = 8;
    fam.classes.push_back({{3, 5}, IntPoly({4, 10, 9, 6, 5, 3, 1})});
    fam.classes.push_back({{1, 7}, IntPoly({4, 8, 9, 6, 5, 3, 1})});
    return fam;
}

}  // namespace liezeta
