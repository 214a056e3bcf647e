#pragma once

#include "numeric.hpp"

#include <array>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qrefl {

// Element of Q(sqrt2, sqrt5) with coefficients in R, written
//   a + b*sqrt2 + c*sqrt5 + d*sqrt10.
// R is Rat for field arithmetic and Int for the fraction-free kernels.
template <class R>
struct F4 {
    R a{}, b{}, c{}, d{};

    F4() = default;
    F4(R a_, R b_, R c_, R d_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
    explicit F4(long v) : a(v) {}

    static F4 zero() { return F4(); }
    static F4 one() { return F4(R(1), R(0), R(0), R(0)); }
    static F4 sqrt2() { return F4(R(0), R(1), R(0), R(0)); }
    static F4 sqrt5() { return F4(R(0), R(0), R(1), R(0)); }
    static F4 sqrt10() { return F4(R(0), R(0), R(0), R(1)); }

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    bool is_rational() const { return b == 0 && c == 0 && d == 0; }

    friend bool operator==(const F4& x, const F4& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const F4& x, const F4& y) { return !(x == y); }

    F4 operator-() const { return F4(-a, -b, -c, -d); }

    friend F4 operator+(const F4& x, const F4& y) { return F4(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d); }
    friend F4 operator-(const F4& x, const F4& y) { return F4(x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d); }

    F4& operator+=(const F4& y) {
        a += y.a; b += y.b; c += y.c; d += y.d;
        return *this;
    }
    F4& operator-=(const F4& y) {
        a -= y.a; b -= y.b; c -= y.c; d -= y.d;
        return *this;
    }

    // sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2*sqrt5, sqrt5*sqrt10 = 5*sqrt2.
    friend F4 operator*(const F4& x, const F4& y) {
        F4 r;
        r.a = x.a * y.a + 2 * (x.b * y.b) + 5 * (x.c * y.c) + 10 * (x.d * y.d);
        r.b = x.a * y.b + x.b * y.a + 5 * (x.c * y.d + x.d * y.c);
        r.c = x.a * y.c + x.c * y.a + 2 * (x.b * y.d + x.d * y.b);
        r.d = x.a * y.d + x.d * y.a + x.b * y.c + x.c * y.b;
        return r;
    }
    F4& operator*=(const F4& y) { return *this = *this * y; }

    friend F4 operator*(const F4& x, const R& s) { return F4(x.a * s, x.b * s, x.c * s, x.d * s); }
    friend F4 operator*(const R& s, const F4& x) { return x * s; }

    // In-place fused kernels for the fraction-free elimination paths; these
    // avoid temporaries on the hot path.
    void scale_ip(const R& s) { a *= s; b *= s; c *= s; d *= s; }
    void negate_ip() { a = -a; b = -b; c = -c; d = -d; }
    // *this += x*y. Grouped by coordinates of x with zero-skipping: most
    // catalog entries have one or two nonzero coordinates.
    void addmul(const F4& x, const F4& y) {
        if (x.a != 0) {
            if (y.a != 0) a += x.a * y.a;
            if (y.b != 0) b += x.a * y.b;
            if (y.c != 0) c += x.a * y.c;
            if (y.d != 0) d += x.a * y.d;
        }
        if (x.b != 0) {
            if (y.b != 0) a += 2 * (x.b * y.b);
            if (y.a != 0) b += x.b * y.a;
            if (y.d != 0) c += 2 * (x.b * y.d);
            if (y.c != 0) d += x.b * y.c;
        }
        if (x.c != 0) {
            if (y.c != 0) a += 5 * (x.c * y.c);
            if (y.d != 0) b += 5 * (x.c * y.d);
            if (y.a != 0) c += x.c * y.a;
            if (y.b != 0) d += x.c * y.b;
        }
        if (x.d != 0) {
            if (y.d != 0) a += 10 * (x.d * y.d);
            if (y.c != 0) b += 5 * (x.d * y.c);
            if (y.b != 0) c += 2 * (x.d * y.b);
            if (y.a != 0) d += x.d * y.a;
        }
    }
    // *this -= x*y
    void submul(const F4& x, const F4& y) {
        if (x.a != 0) {
            if (y.a != 0) a -= x.a * y.a;
            if (y.b != 0) b -= x.a * y.b;
            if (y.c != 0) c -= x.a * y.c;
            if (y.d != 0) d -= x.a * y.d;
        }
        if (x.b != 0) {
            if (y.b != 0) a -= 2 * (x.b * y.b);
            if (y.a != 0) b -= x.b * y.a;
            if (y.d != 0) c -= 2 * (x.b * y.d);
            if (y.c != 0) d -= x.b * y.c;
        }
        if (x.c != 0) {
            if (y.c != 0) a -= 5 * (x.c * y.c);
            if (y.d != 0) b -= 5 * (x.c * y.d);
            if (y.a != 0) c -= x.c * y.a;
            if (y.b != 0) d -= x.c * y.b;
        }
        if (x.d != 0) {
            if (y.d != 0) a -= 10 * (x.d * y.d);
            if (y.c != 0) b -= 5 * (x.d * y.c);
            if (y.b != 0) c -= 2 * (x.d * y.b);
            if (y.a != 0) d -= x.d * y.a;
        }
    }

    // Galois conjugates: sigma2 flips sqrt2, sigma5 flips sqrt5.
    F4 sigma2() const { return F4(a, -b, c, -d); }
    F4 sigma5() const { return F4(a, b, -c, -d); }
    F4 sigma25() const { return F4(a, -b, -c, d); }

    // Product of the three nontrivial Galois conjugates; x * conj_product(x) is rational.
    F4 conj_product() const { return sigma2() * sigma5() * sigma25(); }

    // Rational norm N_{F/Q}(x).
    R rational_norm() const {
        F4 n = *this * conj_product();
        return n.a;
    }

    double to_double() const;
};

using FieldElem = F4<Rat>;
using IField = F4<Int>;

inline double f4_to_double(const Rat& r) { return static_cast<double>(r); }
inline double f4_to_double(const Int& r) { return static_cast<double>(r); }

template <class R>
double F4<R>::to_double() const {
    static const double s2 = 1.4142135623730950488;
    static const double s5 = 2.2360679774997896964;
    return f4_to_double(a) + f4_to_double(b) * s2 + f4_to_double(c) * s5 + f4_to_double(d) * s2 * s5;
}

inline FieldElem field_inverse(const FieldElem& x) {
    if (x.is_zero()) throw std::domain_error("field_inverse: zero");
    FieldElem cp = x.conj_product();
    Rat n = (x * cp).a;
    Rat inv = Rat(1) / n;
    return cp * inv;
}

inline FieldElem operator/(const FieldElem& x, const FieldElem& y) { return x * field_inverse(y); }

// --- exact sign under the real embedding sqrt2 = 1.41..., sqrt5 = 2.23... ---

namespace detail {

// Rational enclosure [lo, hi] of sqrt(n) with hi - lo = 1/10^digits.
inline std::pair<Rat, Rat> sqrt_enclosure(long n, unsigned digits) {
    Int scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    Int lo = isqrt(Int(n) * scale * scale);
    return { Rat(lo, scale), Rat(lo + 1, scale) };
}

inline std::pair<Rat, Rat> interval_mul(const std::pair<Rat, Rat>& x, const Rat& coeff) {
    if (coeff >= 0) return { x.first * coeff, x.second * coeff };
    return { x.second * coeff, x.first * coeff };
}

}  // namespace detail

// Sign of x under the real embedding: -1, 0, +1. Exact: zero iff all
// coefficients vanish, otherwise refine rational interval enclosures of the
// radicals until zero is excluded.
template <class R>
int field_sign(const F4<R>& x) {
    if (x.is_zero()) return 0;
    if (x.a >= 0 && x.b >= 0 && x.c >= 0 && x.d >= 0) return 1;
    if (x.a <= 0 && x.b <= 0 && x.c <= 0 && x.d <= 0) return -1;
    Rat a(x.a), b(x.b), c(x.c), d(x.d);
    for (unsigned digits = 8;; digits *= 2) {
        auto s2 = detail::sqrt_enclosure(2, digits);
        auto s5 = detail::sqrt_enclosure(5, digits);
        std::pair<Rat, Rat> s10{ s2.first * s5.first, s2.second * s5.second };
        auto t2 = detail::interval_mul(s2, b);
        auto t5 = detail::interval_mul(s5, c);
        auto t10 = detail::interval_mul(s10, d);
        Rat lo = a + t2.first + t5.first + t10.first;
        Rat hi = a + t2.second + t5.second + t10.second;
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        if (digits > 4096) throw std::logic_error("field_sign: no convergence");
    }
}

template <class R>
std::size_t hash_f4(const F4<R>& x);

template <>
inline std::size_t hash_f4<Rat>(const F4<Rat>& x) {
    std::size_t h = hash_rat(x.a);
    hash_mix(h, hash_rat(x.b));
    hash_mix(h, hash_rat(x.c));
    hash_mix(h, hash_rat(x.d));
    return h;
}

template <>
inline std::size_t hash_f4<Int>(const F4<Int>& x) {
    std::size_t h = hash_int(x.a);
    hash_mix(h, hash_int(x.b));
    hash_mix(h, hash_int(x.c));
    hash_mix(h, hash_int(x.d));
    return h;
}

inline std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << num(r);
    if (den(r) != 1) os << '/' << den(r);
    return os.str();
}

template <class R>
std::string to_string(const F4<R>& x) {
    static const char* radicals[4] = { "", "*r2", "*r5", "*r10" };
    std::ostringstream os;
    const R* coeffs[4] = { &x.a, &x.b, &x.c, &x.d };
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (*coeffs[i] == 0) continue;
        Rat r(*coeffs[i]);
        if (!first) os << (r >= 0 ? "+" : "");
        os << rat_to_string(r) << radicals[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

template <class R>
std::ostream& operator<<(std::ostream& os, const F4<R>& x) {
    return os << to_string(x);
}

// Rationals of F: conversion helpers.
inline FieldElem fe(long v) { return FieldElem(Rat(v), Rat(0), Rat(0), Rat(0)); }
inline FieldElem fe(const Rat& v) { return FieldElem(v, Rat(0), Rat(0), Rat(0)); }
inline FieldElem fe(const Rat& a, const Rat& b, const Rat& c, const Rat& d) { return FieldElem(a, b, c, d); }

// tau = (1 + sqrt5)/2, the golden ratio.
inline FieldElem golden() { return FieldElem(Rat(1, 2), Rat(0), Rat(1, 2), Rat(0)); }
inline FieldElem golden_inv() { return FieldElem(Rat(-1, 2), Rat(0), Rat(1, 2), Rat(0)); }

}  // namespace qrefl
