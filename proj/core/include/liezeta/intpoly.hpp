#pragma once

// Integer-coefficient polynomials in the formal variable p, exact arithmetic.
// Every closed-form subspace count in the library is an IntPoly.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace liezeta {

using bigint = boost::multiprecision::cpp_int;

class IntPoly {
public:
    IntPoly() = default;                      // zero polynomial
    IntPoly(long long c) { if (c) coeffs_.push_back(c); }
    IntPoly(bigint c) { if (c != 0) coeffs_.push_back(std::move(c)); }
    IntPoly(std::initializer_list<long long> coeffs) {  // low-to-high
        for (long long c : coeffs) coeffs_.emplace_back(c);
        strip();
    }
    explicit IntPoly(std::vector<bigint> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

    static IntPoly variable();                // the polynomial p
    static IntPoly power(unsigned e);         // p^e

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const std::vector<bigint>& coeffs() const { return coeffs_; }        // low-to-high
    bigint coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : bigint(0);
    }

    bigint eval(const bigint& x) const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

    // Descending powers, caret notation: "p^6 + 3p^5 + ... + 4".
    std::string to_string() const;

private:
    void strip() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<bigint> coeffs_;
};

// Gaussian binomial binom(n,i)_p as an exact IntPoly, with the convention
// that it is 0 for i < 0 or i > n and 1 for i = 0.  Computed by the q-Pascal
// recurrence binom(n,i) = binom(n-1,i-1) + p^i binom(n-1,i); stays integral
// by construction.
IntPoly gaussian_binomial(long long n, long long i);

// Fixed-p evaluation is frequent enough to warrant a direct form.
bigint gaussian_binomial_at(long long n, long long i, const bigint& p);

}  // namespace liezeta
