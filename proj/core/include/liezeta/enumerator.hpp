#pragma once

// Exact brute-force enumeration of graded ideals and ideal windows of
// f_{c,2}(F_p): the independent oracle for every closed form in the library.
//
// Chains are enumerated layer by layer (I_{k+1} ranges over superspaces of
// phi(I_k) in quotient coordinates); the deepest layer whose dimension
// influences later counts is the last one enumerated, everything beyond it is
// counted in closed form.  Work is budget-guarded and embarrassingly parallel
// over the outermost enumerated layer.

#include "liezeta/free_lie.hpp"
#include "liezeta/zeta_closed.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace liezeta {

struct EnumOptions {
    bigint node_budget = bigint(1000000000);  // enumerated-node ceiling
    unsigned threads = 1;
    bool full_last_layer = false;  // reference mode: enumerate the final layer too
    std::ostream* progress = nullptr;  // periodic cell progress, stderr-style
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(bigint est)
        : std::runtime_error("enumeration budget exceeded; estimated nodes = " +
                             est.str() + " (try a smaller prime or raise --budget)"),
          estimate(std::move(est)) {}
    bigint estimate;
};

// Histogram over all m-dimensional superspaces I of `base` inside layer j of
// dim(phi(I)); hist[r] = number of such I with rank r.  The rank is obtained
// from the left cokernel of the stacked image matrix, so the per-node work is
// a tiny rank; a direct-stream reference twin backs it in the tests.
std::vector<unsigned long long> phi_rank_histogram(const GradedLieAlgebra& A,
                                                   unsigned j, const Subspace& base,
                                                   std::size_t m,
                                                   unsigned threads = 1);

// Reference twin: same histogram via SuperspaceStream + phi_on_subspace.
std::vector<unsigned long long> phi_rank_histogram_direct(const GradedLieAlgebra& A,
                                                          unsigned j,
                                                          const Subspace& base,
                                                          std::size_t m);

struct ZetaEnumeration {
    u32 p = 0;
    std::vector<bigint> codim_coeffs;  // a_{p^i} for i = 0..N
    bool below_hypothesis = false;     // p < c: outside the paper's hypotheses
};

// Full graded ideal zeta function by chain enumeration, final layer counted
// in closed form (or enumerated when opts.full_last_layer).  c <= 6 (cost
// guard); p < c is allowed but flagged.
ZetaEnumeration enumerate_graded_zeta(unsigned c, u32 p, const EnumOptions& opts = {});

struct ProfileCount {
    IdealProfile profile;
    bigint count;
    u32 prime = 0;
};

ProfileCount count_profile(const GradedLieAlgebra& A, const IdealProfile& profile,
                           const EnumOptions& opts = {});

struct C6Codim9Result {
    u32 p = 0;
    bigint total;
    std::vector<ProfileCount> parts;  // the five contributing profiles
};

// All graded ideals of codimension 9 in f_{6,2}(F_p), broken down by profile.
// Profiles are derived from the chain constraints, not hard-coded.
C6Codim9Result c6_codim9_enumerate(u32 p, const EnumOptions& opts = {});

// Number of m-dimensional subspaces of L_k with collapse dimension i, by
// streaming.  Cost guard: binom(d_k, m)_p <= budget.
bigint f_k_bruteforce(const GradedLieAlgebra& A, unsigned k, std::size_t m,
                      std::size_t i, const EnumOptions& opts = {});

// One pass for all i at fixed m: hist[i] = count of collapse i.
std::vector<bigint> f_k_collapse_table(const GradedLieAlgebra& A, unsigned k,
                                       std::size_t m, const EnumOptions& opts = {});

// n-step window chains (I_k, ..., I_{k+n}) with phi(I_j) <= I_{j+1}, summed
// dimension a; final layer closed-form.  n in {1, 2}.
bigint alpha_window_bruteforce(const GradedLieAlgebra& A, unsigned n, unsigned k,
                               std::size_t a, const EnumOptions& opts = {});

// table[a] for all a = 0..(window dimension), one enumeration pass
std::vector<bigint> alpha_window_table(const GradedLieAlgebra& A, unsigned n,
                                       unsigned k, const EnumOptions& opts = {});

// Enumerated-node estimate used by the budget guard (and the CLI preflight).
bigint estimate_profile_nodes(const GradedLieAlgebra& A, const IdealProfile& profile);

}  // namespace liezeta
