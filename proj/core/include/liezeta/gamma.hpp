#pragma once

// The word permutations sigma_1, sigma_2 on X_n^*, the groups they generate,
// and the fixed-space linear algebra behind the structure results relating
// M_n spaces to permutation invariants.

#include "liezeta/intpoly.hpp"
#include "liezeta/subspace.hpp"
#include "liezeta/words.hpp"

#include <vector>

namespace liezeta {

struct WordPermutation {
    unsigned n = 0;
    std::vector<std::size_t> images;  // images[w] over word indices, a bijection

    std::size_t degree() const { return images.size(); }
};

// sigma_i: fixes powers of the other letter; X_i w -> w X_i;
// X_{3-i}^j X_i w -> w X_i X_{3-i}^j.
WordPermutation sigma(unsigned i, unsigned n);

// Deterministic Schreier-Sims stabilizer chain; degree is small (<= 2^7 in
// every use here), so Schreier generators are processed without randomization.
class PermutationGroup {
public:
    explicit PermutationGroup(std::vector<WordPermutation> generators);

    bigint order() const;
    bool contains(const WordPermutation& g) const;
    std::size_t degree() const { return degree_; }
    const std::vector<WordPermutation>& generators() const { return gens_; }

    // Orders recomputed over a caller-supplied base ordering must agree; used
    // by the self-consistency tests.
    static bigint order_with_base(const std::vector<WordPermutation>& gens,
                                  const std::vector<std::size_t>& base_hint);

private:
    using Perm = std::vector<std::size_t>;
    struct Level {
        std::size_t base_point = 0;
        std::vector<Perm> gens;            // strong generators fixing all earlier bases
        std::vector<Perm> coset_rep;       // point -> rep mapping base -> point; empty if outside
        std::vector<bool> in_orbit;
        std::size_t orbit_size = 0;
    };

    void build(const std::vector<std::size_t>& base_hint);
    void recompute_orbit(std::size_t level);
    // sift through levels [from, end); returns first level whose base the
    // residue fails at, or npos when the residue is the identity
    std::size_t sift(Perm& g, std::size_t from) const;
    void insert_strong_generator(Perm g, std::size_t first_moved_level);

    std::size_t degree_ = 0;
    std::vector<WordPermutation> gens_;
    std::vector<Level> levels_;
};

// Orbit search: true if some group element maps src to dst.
bool orbit_connects(const std::vector<WordPermutation>& gens, std::size_t src,
                    std::size_t dst);

// Subspace of F_p^(2^n) fixed by every generator (coefficient vectors constant
// on orbits): kernel of the stacked (P_g - I).
Subspace fixed_space(const std::vector<WordPermutation>& gens, const PrimeField& F);

// M_n^{X_1X_2} ({a : phi_1(a) in phi_2(R<X>_n)}) for order 12, and the
// letter-swapped M_n^{X_2X_1} for order 21; computed from the definition,
// independent of fixed_space.
Subspace m_space(unsigned order, unsigned n, const PrimeField& F);

// Prop: M^{12} = Fix(<sigma_1>), M^{21} = Fix(<sigma_2>), and their
// intersection = Fix(<sigma_1, sigma_2>).  n >= 2.
bool verify_prop1(unsigned n, const PrimeField& F);

// Thm: chi vanishes on Fix(<sigma_1, sigma_2>).  n >= 2.
bool verify_thm1(unsigned n, const PrimeField& F);

}  // namespace liezeta
