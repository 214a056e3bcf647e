#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/functional/hash.hpp>

#include <cstdint>
#include <string>

namespace qrefl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Rat make_rat(long num, long den = 1) { return Rat(Int(num), Int(den)); }

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Integer square root, rounded down. Newton iteration on cpp_int.
inline Int isqrt(const Int& n) {
    if (n <= 0) return 0;
    Int x = Int(1) << (static_cast<unsigned>(boost::multiprecision::msb(n)) / 2 + 1);
    for (;;) {
        Int y = (x + n / x) / 2;
        if (y >= x) return x;
        x = y;
    }
}

inline void hash_mix(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

inline std::size_t hash_int(const Int& v) {
    return boost::hash<Int>{}(v);
}

inline std::size_t hash_rat(const Rat& v) {
    std::size_t h = hash_int(num(v));
    hash_mix(h, hash_int(den(v)));
    return h;
}

// Compact byte serialization used for dedup keys. Not a wire format.
inline void append_int_bytes(std::string& out, const Int& v) {
    out.push_back(v < 0 ? '-' : (v == 0 ? 'z' : '+'));
    if (v != 0) {
        Int a = boost::multiprecision::abs(v);
        while (a > 0) {
            out.push_back(static_cast<char>(static_cast<unsigned char>(a & 0xff)));
            a >>= 8;
        }
    }
    out.push_back('\x01');
}

}  // namespace qrefl
