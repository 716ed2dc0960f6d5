#include "liezeta/scan.hpp"

#include "liezeta/fp.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace liezeta {

using bigrat = boost::multiprecision::cpp_rational;

std::optional<IntPoly> interpolate_integral(
    const std::vector<std::pair<u32, bigint>>& points) {
    const std::size_t n = points.size();
    if (n == 0) return std::nullopt;
    // Lagrange in exact rationals
    std::vector<bigrat> acc(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        // numerator polynomial prod_{j != i} (x - x_j), coefficients low-to-high
        std::vector<bigrat> li{1};
        bigrat denom = 1;
        bigrat xi = points[i].first;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            bigrat xj = points[j].first;
            std::vector<bigrat> nxt(li.size() + 1, 0);
            for (std::size_t kk = 0; kk < li.size(); ++kk) {
                nxt[kk] += li[kk] * (-xj);
                nxt[kk + 1] += li[kk];
            }
            li = std::move(nxt);
            denom *= (xi - xj);
        }
        bigrat w = bigrat(points[i].second) / denom;
        for (std::size_t kk = 0; kk < li.size(); ++kk) acc[kk] += w * li[kk];
    }
    std::vector<bigint> coeffs;
    coeffs.reserve(n);
    for (const auto& c : acc) {
        if (boost::multiprecision::denominator(c) != 1) return std::nullopt;
        coeffs.push_back(boost::multiprecision::numerator(c));
    }
    return IntPoly(std::move(coeffs));
}

std::vector<u32> primes_in_range(u32 lo, u32 hi) {
    std::vector<u32> out;
    for (u32 n = std::max<u32>(lo, 2); n <= hi; ++n)
        if (is_prime_u32(n)) out.push_back(n);
    return out;
}

ScanResult scan_primes(const std::string& task_name,
                       const std::function<bigint(u32)>& count_for_prime,
                       const std::vector<u32>& primes, unsigned modulus,
                       long degree_bound,
                       const std::vector<std::vector<unsigned>>& class_spec) {
    if (modulus == 0) throw std::invalid_argument("scan: modulus >= 1");
    if (primes.size() < 2) throw std::invalid_argument("scan: need at least 2 primes");

    ScanResult out;
    out.task = task_name;
    out.modulus = modulus;
    out.degree_bound = degree_bound;

    // residue -> class index
    std::map<unsigned, std::size_t> class_of;
    if (!class_spec.empty()) {
        for (std::size_t ci = 0; ci < class_spec.size(); ++ci) {
            ScanClass cl;
            cl.residues = class_spec[ci];
            out.classes.push_back(std::move(cl));
            for (unsigned r : class_spec[ci]) class_of[r] = ci;
        }
    }
    for (u32 p : primes) {
        unsigned r = p % modulus;
        if (!class_of.count(r)) {
            if (!class_spec.empty())
                throw std::invalid_argument("scan: prime residue not covered by --classes");
            class_of[r] = out.classes.size();
            ScanClass cl;
            cl.residues = {r};
            out.classes.push_back(std::move(cl));
        }
        out.classes[class_of[r]].points.emplace_back(p, count_for_prime(p));
    }

    const std::size_t need = static_cast<std::size_t>(degree_bound) + 1;
    for (auto& cl : out.classes) {
        if (cl.points.size() < need) {
            throw std::invalid_argument(
                "scan: class needs at least degree_bound + 1 = " + std::to_string(need) +
                " primes (got " + std::to_string(cl.points.size()) + ")");
        }
        std::vector<std::pair<u32, bigint>> fit(cl.points.begin(),
                                                cl.points.begin() + need);
        auto poly = interpolate_integral(fit);
        cl.integral = poly.has_value();
        if (!poly) {
            cl.note = "non-integral interpolation (wrong modulus or degree?)";
            continue;
        }
        cl.poly = *poly;
        cl.fits_all = true;
        bool any_holdout = false;
        for (std::size_t i = need; i < cl.points.size(); ++i) {
            any_holdout = true;
            if (poly->eval(cl.points[i].first) != cl.points[i].second) {
                cl.fits_all = false;
                cl.note = "held-out prime " + std::to_string(cl.points[i].first) +
                          " does not fit";
                break;
            }
        }
        cl.validated = any_holdout && cl.fits_all;
        if (!any_holdout) cl.note = "unconfirmed: no held-out prime in this class";
    }

    out.uniform = true;
    out.confirmed = true;
    for (const auto& cl : out.classes) {
        if (!cl.poly || !cl.fits_all) out.uniform = false;
        if (!cl.validated) out.confirmed = false;
    }
    if (out.uniform)
        for (const auto& cl : out.classes)
            if (!(cl.poly == out.classes.front().poly)) out.uniform = false;
    return out;
}

}  // namespace liezeta
