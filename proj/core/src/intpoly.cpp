#include "liezeta/intpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace liezeta {

IntPoly IntPoly::variable() { return power(1); }

IntPoly IntPoly::power(unsigned e) {
    std::vector<bigint> c(e + 1, 0);
    c[e] = 1;
    return IntPoly(std::move(c));
}

bigint IntPoly::eval(const bigint& x) const {
    bigint r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    strip();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    strip();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<bigint> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        const bigint& c = coeffs_[e];
        if (c == 0) continue;
        bigint a = c < 0 ? bigint(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || e == 0) os << a.str();
        if (e >= 1) os << "p";
        if (e >= 2) os << "^" << e;
    }
    return os.str();
}

IntPoly gaussian_binomial(long long n, long long i) {
    if (i < 0 || i > n) return IntPoly();
    if (i == 0 || i == n) return IntPoly(1);
    static std::map<std::pair<long long, long long>, IntPoly> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = cache.find({n, i});
        if (it != cache.end()) return it->second;
    }
    IntPoly r = gaussian_binomial(n - 1, i - 1) +
                IntPoly::power(static_cast<unsigned>(i)) * gaussian_binomial(n - 1, i);
    std::lock_guard<std::mutex> lk(mtx);
    return cache.emplace(std::make_pair(n, i), std::move(r)).first->second;
}

bigint gaussian_binomial_at(long long n, long long i, const bigint& p) {
    if (i < 0 || i > n) return 0;
    if (i > n - i) i = n - i;
    if (i == 0) return 1;
    // exact quotient of products; numerator divisible at every step when
    // multiplied in this order
    bigint num = 1, den = 1;
    for (long long t = 0; t < i; ++t) {
        num *= boost::multiprecision::pow(p, static_cast<unsigned>(n - t)) - 1;
        den *= boost::multiprecision::pow(p, static_cast<unsigned>(t + 1)) - 1;
    }
    return num / den;
}

}  // namespace liezeta
