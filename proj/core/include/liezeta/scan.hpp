#pragma once

// Prime scans: collect one exact count per prime, group by residue class,
// interpolate an integer polynomial per class by exact rational Lagrange
// interpolation, validate on held-out primes, and flag uniformity.

#include "liezeta/fp.hpp"
#include "liezeta/intpoly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace liezeta {

struct ScanClass {
    std::vector<unsigned> residues;               // classes of p mod modulus
    std::vector<std::pair<u32, bigint>> points;   // (p, count), fit order
    std::optional<IntPoly> poly;                  // absent if non-integral/underdetermined
    bool integral = false;      // rational fit had integer coefficients
    bool fits_all = false;      // every point (incl. held-out) matches
    bool validated = false;     // at least one held-out point checked and matched
    std::string note;
};

struct ScanResult {
    std::string task;
    unsigned modulus = 1;
    long degree_bound = 0;
    std::vector<ScanClass> classes;
    bool uniform = false;    // all class polynomials exist, are equal, fit all points
    bool confirmed = false;  // every class validated on a held-out prime
};

// counts must be supplied per prime (backends live in the enumerator / closed
// forms); class_spec optionally groups residues (default: one class per
// residue actually observed).  Throws std::invalid_argument when a class has
// fewer than degree_bound + 1 points.
ScanResult scan_primes(const std::string& task_name,
                       const std::function<bigint(u32)>& count_for_prime,
                       const std::vector<u32>& primes, unsigned modulus,
                       long degree_bound,
                       const std::vector<std::vector<unsigned>>& class_spec = {});

// Exact Lagrange fit through the given points; returns the polynomial iff all
// coefficients are integers.  nullopt on fractional coefficients.
std::optional<IntPoly> interpolate_integral(
    const std::vector<std::pair<u32, bigint>>& points);

// primes in [lo, hi]
std::vector<u32> primes_in_range(u32 lo, u32 hi);

}  // namespace liezeta
