#include "liezeta/gamma.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace liezeta {

WordPermutation sigma(unsigned i, unsigned n) {
    if (i != 1 && i != 2) throw std::invalid_argument("sigma: i must be 1 or 2");
    if (n < 1 || n > kMaxWordWeight) throw std::invalid_argument("sigma: bad weight");
    const unsigned other = 3 - i;
    WordPermutation s;
    s.n = n;
    s.images.resize(std::size_t(1) << n);
    for (std::size_t wi = 0; wi < s.images.size(); ++wi) {
        Word w = Word::from_index(wi, n);
        bool pure = std::all_of(w.letters.begin(), w.letters.end(),
                                [&](std::uint8_t c) { return c == other; });
        Word t;
        if (pure) {
            t = w;
        } else {
            std::size_t j = 0;
            while (w.letters[j] == other) ++j;  // w = other^j . i . rest
            t.letters.assign(w.letters.begin() + j + 1, w.letters.end());
            t.letters.push_back(static_cast<std::uint8_t>(i));
            t.letters.insert(t.letters.end(), j, static_cast<std::uint8_t>(other));
        }
        s.images[wi] = t.index();
    }
    return s;
}

// ------------------------------------------------------------------ BSGS

namespace {

std::vector<std::size_t> compose(const std::vector<std::size_t>& a,
                                 const std::vector<std::size_t>& b) {
    // apply a first, then b
    std::vector<std::size_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

std::vector<std::size_t> inverse(const std::vector<std::size_t>& a) {
    std::vector<std::size_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = i;
    return r;
}

bool is_identity(const std::vector<std::size_t>& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != i) return false;
    return true;
}

}  // namespace

PermutationGroup::PermutationGroup(std::vector<WordPermutation> generators)
    : gens_(std::move(generators)) {
    if (gens_.empty()) throw std::invalid_argument("PermutationGroup: no generators");
    degree_ = gens_[0].degree();
    for (const auto& g : gens_) {
        if (g.degree() != degree_)
            throw std::invalid_argument("PermutationGroup: degree mismatch");
        std::vector<bool> seen(degree_, false);
        for (std::size_t x : g.images) {
            if (x >= degree_ || seen[x])
                throw std::invalid_argument("PermutationGroup: not a permutation");
            seen[x] = true;
        }
    }
    build({});
}

void PermutationGroup::recompute_orbit(std::size_t level) {
    Level& L = levels_[level];
    L.coset_rep.assign(degree_, {});
    L.in_orbit.assign(degree_, false);
    Perm ident(degree_);
    for (std::size_t i = 0; i < degree_; ++i) ident[i] = i;
    L.in_orbit[L.base_point] = true;
    L.coset_rep[L.base_point] = ident;
    std::deque<std::size_t> q{L.base_point};
    L.orbit_size = 1;
    while (!q.empty()) {
        std::size_t x = q.front();
        q.pop_front();
        for (const Perm& s : L.gens) {
            std::size_t y = s[x];
            if (!L.in_orbit[y]) {
                L.in_orbit[y] = true;
                L.coset_rep[y] = compose(L.coset_rep[x], s);
                ++L.orbit_size;
                q.push_back(y);
            }
        }
    }
}

std::size_t PermutationGroup::sift(Perm& g, std::size_t from) const {
    for (std::size_t lev = from; lev < levels_.size(); ++lev) {
        const Level& L = levels_[lev];
        std::size_t img = g[L.base_point];
        if (img == L.base_point) continue;
        if (!L.in_orbit[img]) return lev;
        g = compose(g, inverse(L.coset_rep[img]));
    }
    return is_identity(g) ? static_cast<std::size_t>(-1) : levels_.size();
}

// g fixes the base points of all levels < first_moved_level; it joins the
// generator sets of levels 0..first_moved_level (the sets are cumulative: a
// level's orbit uses every strong generator fixing its base prefix).
void PermutationGroup::insert_strong_generator(Perm g, std::size_t first_moved_level) {
    if (first_moved_level == levels_.size()) {
        Level L;
        L.base_point = 0;
        for (std::size_t i = 0; i < degree_; ++i)
            if (g[i] != i) { L.base_point = i; break; }
        levels_.push_back(std::move(L));
    }
    for (std::size_t lev = 0; lev <= first_moved_level; ++lev) {
        bool fixes_prefix = true;
        for (std::size_t e = 0; e < lev; ++e)
            if (g[levels_[e].base_point] != levels_[e].base_point) {
                fixes_prefix = false;
                break;
            }
        if (fixes_prefix) levels_[lev].gens.push_back(g);
    }
}

void PermutationGroup::build(const std::vector<std::size_t>& base_hint) {
    levels_.clear();
    for (std::size_t b : base_hint) {
        Level L;
        L.base_point = b;
        levels_.push_back(std::move(L));
    }
    for (const auto& g : gens_) {
        if (is_identity(g.images)) continue;
        std::size_t j = levels_.size();
        for (std::size_t lev = 0; lev < levels_.size(); ++lev)
            if (g.images[levels_[lev].base_point] != levels_[lev].base_point) {
                j = lev;
                break;
            }
        insert_strong_generator(g.images, j);
    }
    if (levels_.empty()) return;  // trivial group
    for (std::size_t lev = 0; lev < levels_.size(); ++lev) recompute_orbit(lev);

    // deterministic Schreier-Sims: verify levels bottom-up; a new strong
    // generator at level j sends verification back down to j
    std::size_t i = levels_.size();
    while (i-- > 0) {
        recompute_orbit(i);
        bool clean = true;
        Level& L = levels_[i];
        for (std::size_t x = 0; x < degree_ && clean; ++x) {
            if (!L.in_orbit[x]) continue;
            for (const Perm& s : L.gens) {
                Perm schreier =
                    compose(compose(L.coset_rep[x], s), inverse(L.coset_rep[s[x]]));
                if (is_identity(schreier)) continue;
                std::size_t j = sift(schreier, i + 1);
                if (j == static_cast<std::size_t>(-1)) continue;
                insert_strong_generator(std::move(schreier), j);
                recompute_orbit(j);
                i = j + 1;  // loop decrements; reverify from level j upward
                clean = false;
                break;
            }
        }
        if (!clean) continue;
    }
}

bigint PermutationGroup::order() const {
    bigint o = 1;
    for (const auto& L : levels_) o *= static_cast<long long>(L.orbit_size);
    return o;
}

bool PermutationGroup::contains(const WordPermutation& g) const {
    if (g.degree() != degree_) return false;
    Perm w = g.images;
    return sift(w, 0) == static_cast<std::size_t>(-1);
}

bigint PermutationGroup::order_with_base(const std::vector<WordPermutation>& gens,
                                         const std::vector<std::size_t>& base_hint) {
    PermutationGroup g(gens);
    g.build(base_hint);
    return g.order();
}

bool orbit_connects(const std::vector<WordPermutation>& gens, std::size_t src,
                    std::size_t dst) {
    if (src == dst) return true;
    std::size_t deg = gens.at(0).degree();
    std::vector<std::vector<std::size_t>> step;
    for (const auto& g : gens) {
        step.push_back(g.images);
        step.push_back(inverse(g.images));
    }
    std::vector<bool> seen(deg, false);
    seen[src] = true;
    std::deque<std::size_t> q{src};
    while (!q.empty()) {
        std::size_t x = q.front();
        q.pop_front();
        for (const auto& s : step) {
            std::size_t y = s[x];
            if (y == dst) return true;
            if (!seen[y]) {
                seen[y] = true;
                q.push_back(y);
            }
        }
    }
    return false;
}

Subspace fixed_space(const std::vector<WordPermutation>& gens, const PrimeField& F) {
    if (gens.empty()) throw std::invalid_argument("fixed_space: no generators");
    const std::size_t N = gens[0].degree();
    // a is fixed iff a_{w} = a_{g(w)} for all g: kernel of stacked (P_g - I)
    FpMatrix stacked(N, N * gens.size());
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        for (std::size_t w = 0; w < N; ++w) {
            stacked.at(w, gi * N + gens[gi].images[w]) =
                F.add(stacked.at(w, gi * N + gens[gi].images[w]), 1);
            stacked.at(w, gi * N + w) = F.sub(stacked.at(w, gi * N + w), 1);
        }
    }
    return canonical_subspace(left_kernel(stacked, F), N, F);
}

Subspace m_space(unsigned order, unsigned n, const PrimeField& F) {
    unsigned i, j;
    if (order == 12) { i = 1; j = 2; }
    else if (order == 21) { i = 2; j = 1; }
    else throw std::invalid_argument("m_space: order must be 12 or 21");
    FpMatrix phi_i = phi_word_map(i, n, F);
    Subspace img_j = canonical_subspace(phi_word_map(j, n, F), std::size_t(1) << (n + 1), F);
    return preimage(phi_i, img_j, F);
}

bool verify_prop1(unsigned n, const PrimeField& F) {
    if (n < 2) throw std::invalid_argument("verify_prop1: n >= 2");
    WordPermutation s1 = sigma(1, n), s2 = sigma(2, n);
    Subspace m12 = m_space(12, n, F), m21 = m_space(21, n, F);
    if (!(m12 == fixed_space({s1}, F))) return false;
    if (!(m21 == fixed_space({s2}, F))) return false;
    return intersect(m12, m21, F) == fixed_space({s1, s2}, F);
}

bool verify_thm1(unsigned n, const PrimeField& F) {
    if (n < 2) throw std::invalid_argument("verify_thm1: n >= 2");
    Subspace fix = fixed_space({sigma(1, n), sigma(2, n)}, F);
    FpMatrix chi = chi_map(n, F);
    for (std::size_t r = 0; r < fix.dim(); ++r) {
        std::vector<u32> img = chi.apply_left(
            std::vector<u32>(fix.basis.row(r), fix.basis.row(r) + fix.ambient_dim), F);
        for (u32 x : img)
            if (x) return false;
    }
    return true;
}

}  // namespace liezeta
