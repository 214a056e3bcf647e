#pragma once

#include "field.hpp"

#include <ostream>
#include <stdexcept>

namespace qrefl {

// Quaternion w + x*i + y*j + z*k over F4<R>, with i^2 = j^2 = k^2 = ijk = -1.
template <class R>
struct Qu {
    F4<R> w{}, x{}, y{}, z{};

    Qu() = default;
    Qu(F4<R> w_, F4<R> x_, F4<R> y_, F4<R> z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
    explicit Qu(long v) : w(v) {}
    explicit Qu(const F4<R>& s) : w(s) {}

    static Qu zero() { return Qu(); }
    static Qu one() { return Qu(1); }
    static Qu ui() { return Qu(F4<R>::zero(), F4<R>::one(), F4<R>::zero(), F4<R>::zero()); }
    static Qu uj() { return Qu(F4<R>::zero(), F4<R>::zero(), F4<R>::one(), F4<R>::zero()); }
    static Qu uk() { return Qu(F4<R>::zero(), F4<R>::zero(), F4<R>::zero(), F4<R>::one()); }

    bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
    bool is_real() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

    friend bool operator==(const Qu& p, const Qu& q) {
        return p.w == q.w && p.x == q.x && p.y == q.y && p.z == q.z;
    }
    friend bool operator!=(const Qu& p, const Qu& q) { return !(p == q); }

    Qu operator-() const { return Qu(-w, -x, -y, -z); }

    friend Qu operator+(const Qu& p, const Qu& q) { return Qu(p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z); }
    friend Qu operator-(const Qu& p, const Qu& q) { return Qu(p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z); }
    Qu& operator+=(const Qu& q) { w += q.w; x += q.x; y += q.y; z += q.z; return *this; }
    Qu& operator-=(const Qu& q) { w -= q.w; x -= q.x; y -= q.y; z -= q.z; return *this; }

    friend Qu operator*(const Qu& p, const Qu& q) {
        return Qu(p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
                  p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
                  p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
                  p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w);
    }
    Qu& operator*=(const Qu& q) { return *this = *this * q; }

    // Central scalar (F is the center of H_F).
    friend Qu operator*(const Qu& p, const F4<R>& s) { return Qu(p.w * s, p.x * s, p.y * s, p.z * s); }
    friend Qu operator*(const F4<R>& s, const Qu& p) { return p * s; }
    friend Qu operator*(const Qu& p, const R& s) { return Qu(p.w * s, p.x * s, p.y * s, p.z * s); }

    void scale_ip(const R& s) { w.scale_ip(s); x.scale_ip(s); y.scale_ip(s); z.scale_ip(s); }

    // *this -= p*q, grouped by coordinates of q with zero-skipping
    void submul(const Qu& p, const Qu& q) {
        if (!q.w.is_zero()) {
            w.submul(p.w, q.w); x.submul(p.x, q.w); y.submul(p.y, q.w); z.submul(p.z, q.w);
        }
        if (!q.x.is_zero()) {
            w.addmul(p.x, q.x); x.submul(p.w, q.x); y.submul(p.z, q.x); z.addmul(p.y, q.x);
        }
        if (!q.y.is_zero()) {
            w.addmul(p.y, q.y); x.addmul(p.z, q.y); y.submul(p.w, q.y); z.submul(p.x, q.y);
        }
        if (!q.z.is_zero()) {
            w.addmul(p.z, q.z); x.submul(p.y, q.z); y.addmul(p.x, q.z); z.submul(p.w, q.z);
        }
    }

    Qu conj() const { return Qu(w, -x, -y, -z); }

    // Reduced norm q * conj(q), a field element.
    F4<R> nrd() const { return w * w + x * x + y * y + z * z; }
};

using Quat = Qu<Rat>;
using IQuat = Qu<Int>;

inline Quat quat_inverse(const Quat& q) {
    if (q.is_zero()) throw std::domain_error("quat_inverse: zero");
    FieldElem n = q.nrd();
    return q.conj() * field_inverse(n);
}

inline Quat operator/(const Quat& p, const Quat& q) { return p * quat_inverse(q); }

template <class R>
std::size_t hash_qu(const Qu<R>& q) {
    std::size_t h = hash_f4(q.w);
    hash_mix(h, hash_f4(q.x));
    hash_mix(h, hash_f4(q.y));
    hash_mix(h, hash_f4(q.z));
    return h;
}

template <class R>
std::string to_string(const Qu<R>& q) {
    std::ostringstream os;
    os << "(" << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ")";
    return os.str();
}

template <class R>
std::ostream& operator<<(std::ostream& os, const Qu<R>& q) {
    return os << to_string(q);
}

// omega = (-1 + i + j + k)/2, a unit of order 3.
inline Quat omega() {
    Rat h(1, 2);
    return Quat(fe(Rat(-1, 2)), fe(h), fe(h), fe(h));
}

// (tau + tau^{-1} i + j)/2, a unit of order 10 in the binary icosahedral group.
inline Quat icosian() {
    Rat h(1, 2);
    return Quat(golden() * h, golden_inv() * h, fe(h), fe(Rat(0)));
}

}  // namespace qrefl
