#ifndef MVONE_NUMBERS_HPP
#define MVONE_NUMBERS_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace mvone {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

inline Int dot(const Vec& a, const Vec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec negate(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Vec scale(const Int& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool is_zero(const Vec& a) {
    for (const auto& x : a) if (x != 0) return false;
    return true;
}

inline Int gcd_vec(const Vec& a) {
    Int g = 0;
    for (const auto& x : a) g = boost::multiprecision::gcd(g, x);
    return g;
}

inline Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n), Int(0)); }

inline Vec unit_vec(int n, int i) {
    Vec v = zero_vec(n);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::string vec_to_string(const Vec& v);

}  // namespace mvone

#endif
