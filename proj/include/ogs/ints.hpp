#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "ogs/errors.hpp"

namespace ogs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& x) { return x.sign(); }

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Int pow2(unsigned k) { return Int(1) << k; }

inline bool fits_int64(const Int& x) {
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    return x >= lo && x <= hi;
}

// Dyadic rational num / 2^k in lowest terms: num odd or zero, k == 0 when num == 0.
struct Dyadic {
    Int num;
    unsigned k = 0;

    Dyadic() : num(0) {}
    Dyadic(Int n, unsigned kk) : num(std::move(n)), k(kk) { normalize(); }
    static Dyadic from_int(Int n) { return Dyadic(std::move(n), 0); }

    void normalize() {
        if (num == 0) { k = 0; return; }
        while (k > 0 && (num & 1) == 0) { num >>= 1; --k; }
    }

    bool is_zero() const { return num == 0; }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        unsigned m = std::max(a.k, b.k);
        Int n = (a.num << (m - a.k)) + (b.num << (m - b.k));
        return Dyadic(std::move(n), m);
    }
    friend Dyadic operator-(const Dyadic& a) { return Dyadic(-a.num, a.k); }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

    // value * 2^e
    Dyadic mul_pow2(long long e) const {
        if (num == 0) return Dyadic();
        long long shift = e - static_cast<long long>(k);
        if (shift >= 0) return Dyadic(num << static_cast<unsigned>(shift), 0);
        return Dyadic(num, static_cast<unsigned>(-shift));
    }

    bool operator==(const Dyadic& o) const { return num == o.num && k == o.k; }

    // sign of a - b
    friend int cmp(const Dyadic& a, const Dyadic& b) {
        Int lhs = a.num << b.k;
        Int rhs = b.num << a.k;
        if (lhs < rhs) return -1;
        if (lhs > rhs) return 1;
        return 0;
    }
};

// Exact sign of u + v*phi under the real embedding phi = (1+sqrt(5))/2.
// 2*(u + v*phi) = (2u+v) + v*sqrt(5); compare (2u+v)^2 against 5v^2.
inline int golden_sign(const Int& u, const Int& v) {
    Int a = 2 * u + v;
    const Int& b = v;
    int sa = sign_of(a), sb = sign_of(b);
    if (sa == 0 && sb == 0) return 0;
    if (sa >= 0 && sb >= 0) return 1;
    if (sa <= 0 && sb <= 0) return -1;
    Int a2 = a * a, b2 = 5 * b * b;
    // a2 == b2 would mean sqrt(5) rational
    if (sa > 0) return a2 > b2 ? 1 : -1;
    return b2 > a2 ? 1 : -1;
}

} // namespace ogs
