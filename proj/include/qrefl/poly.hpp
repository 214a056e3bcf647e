#pragma once

#include "numeric.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qrefl {

// Dense polynomial over Z in one variable t; coeffs[d] is the coefficient of t^d.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> cs) {
        for (long c : cs) coeffs_.push_back(Int(c));
        normalize();
    }
    explicit IntPoly(std::vector<Int> cs) : coeffs_(std::move(cs)) { normalize(); }
    static IntPoly one() { return IntPoly({ 1 }); }
    static IntPoly constant(Int c) { IntPoly p; p.coeffs_.push_back(std::move(c)); p.normalize(); return p; }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int coeff(size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Int(0); }
    Int lead() const { return coeffs_.empty() ? Int(0) : coeffs_.back(); }

    friend bool operator==(const IntPoly& p, const IntPoly& q) { return p.coeffs_ == q.coeffs_; }
    friend bool operator!=(const IntPoly& p, const IntPoly& q) { return !(p == q); }

    friend IntPoly operator+(const IntPoly& p, const IntPoly& q) {
        std::vector<Int> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Int(0));
        for (size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
        for (size_t i = 0; i < q.coeffs_.size(); ++i) c[i] += q.coeffs_[i];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& p, const IntPoly& q) {
        std::vector<Int> c(std::max(p.coeffs_.size(), q.coeffs_.size()), Int(0));
        for (size_t i = 0; i < p.coeffs_.size(); ++i) c[i] += p.coeffs_[i];
        for (size_t i = 0; i < q.coeffs_.size(); ++i) c[i] -= q.coeffs_[i];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const IntPoly& p, const IntPoly& q) {
        if (p.is_zero() || q.is_zero()) return IntPoly();
        std::vector<Int> c(p.coeffs_.size() + q.coeffs_.size() - 1, Int(0));
        for (size_t i = 0; i < p.coeffs_.size(); ++i)
            for (size_t j = 0; j < q.coeffs_.size(); ++j)
                c[i + j] += p.coeffs_[i] * q.coeffs_[j];
        return IntPoly(std::move(c));
    }
    IntPoly& operator+=(const IntPoly& q) { return *this = *this + q; }
    IntPoly& operator*=(const IntPoly& q) { return *this = *this * q; }

    Int eval(const Int& x) const {
        Int acc = 0;
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    // Exact division; nullopt if q does not divide p over Z[t].
    std::optional<IntPoly> divide_exact(const IntPoly& q) const {
        if (q.is_zero()) throw std::domain_error("divide_exact: zero divisor");
        std::vector<Int> rem = coeffs_;
        if (rem.size() < q.coeffs_.size()) return std::nullopt;
        std::vector<Int> quot(rem.size() - q.coeffs_.size() + 1, Int(0));
        for (size_t i = quot.size(); i-- > 0;) {
            Int top = rem[i + q.coeffs_.size() - 1];
            if (top == 0) continue;
            if (top % q.lead() != 0) return std::nullopt;
            Int f = top / q.lead();
            quot[i] = f;
            for (size_t j = 0; j < q.coeffs_.size(); ++j) rem[i + j] -= f * q.coeffs_[j];
        }
        for (const Int& r : rem)
            if (r != 0) return std::nullopt;
        return IntPoly(std::move(quot));
    }

    std::string str(const std::string& var = "t") const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t d = 0; d < coeffs_.size(); ++d) {
            const Int& c = coeffs_[d];
            if (c == 0) continue;
            if (!first) os << (c > 0 ? "+" : "-");
            else if (c < 0) os << "-";
            Int a = boost::multiprecision::abs(c);
            if (d == 0) os << a;
            else {
                if (a != 1) os << a;
                os << var;
                if (d > 1) os << "^" << d;
            }
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Int> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

struct Factorization {
    std::vector<std::pair<IntPoly, int>> factors;  // sorted, with multiplicities
    bool certified = true;  // false: some residual of degree >= 6 left unverified

    IntPoly expand() const {
        IntPoly p = IntPoly::one();
        for (const auto& [f, m] : factors)
            for (int i = 0; i < m; ++i) p *= f;
        return p;
    }

    std::string str(const std::string& var = "t") const {
        if (factors.empty()) return "1";
        std::ostringstream os;
        for (const auto& [f, m] : factors) {
            os << "(" << f.str(var) << ")";
            if (m > 1) os << "^" << m;
        }
        if (!certified) os << " [unverified residual]";
        return os.str();
    }
};

namespace detail {

inline std::vector<Int> divisors_signed(Int n) {
    n = boost::multiprecision::abs(n);
    std::vector<Int> divs;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d != n / d) divs.push_back(n / d);
        }
    }
    size_t sz = divs.size();
    for (size_t i = 0; i < sz; ++i) divs.push_back(-divs[i]);
    std::sort(divs.begin(), divs.end(), [](const Int& a, const Int& b) {
        Int aa = boost::multiprecision::abs(a), ab = boost::multiprecision::abs(b);
        if (aa != ab) return aa < ab;
        return a > b;
    });
    return divs;
}

inline bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

// Quadratic factors 1 + a t + b t^2 of p (constant term 1, no linear factors),
// found by matching coefficients; complete for deg(p) in {4, 5}.
inline std::optional<IntPoly> quadratic_factor_small(const IntPoly& p) {
    int n = p.degree();
    Int a1 = p.coeff(1), a2 = p.coeff(2), a3 = p.coeff(3), a4 = p.coeff(4);
    for (const Int& b : divisors_signed(p.lead())) {
        if (b == 0) continue;
        if (n == 4) {
            // p = (1+at+bt^2)(1+ct+dt^2), d = lead/b, c = a1 - a,
            // a*(a1-a) = a2 - b - d  =>  a^2 - a1*a + (a2-b-d) = 0
            Int d = p.lead() / b;
            Int disc = a1 * a1 - 4 * (a2 - b - d);
            if (!is_perfect_square(disc)) continue;
            Int rt = isqrt(disc);
            for (int sgn : { 1, -1 }) {
                Int num = a1 + sgn * rt;
                if (num % 2 != 0) continue;
                Int a = num / 2;
                IntPoly q(std::vector<Int>{ Int(1), a, b });
                if (p.divide_exact(q)) return q;
            }
        } else if (n == 5) {
            // p = (1+at+bt^2)(1+c1 t+c2 t^2+c3 t^3), c3 = lead/b;
            // a4 = a*c3 + b*c2 with c2 = a2 - b - a*a1 + a^2:
            // b*a^2 + (c3 - a1*b)*a + (b*a2 - b^2 - a4) = 0
            Int c3 = p.lead() / b;
            Int A = b, B = c3 - a1 * b, C = b * a2 - b * b - a4;
            Int disc = B * B - 4 * A * C;
            if (!is_perfect_square(disc)) continue;
            Int rt = isqrt(disc);
            for (int sgn : { 1, -1 }) {
                Int num = -B + sgn * rt;
                if (num % (2 * A) != 0) continue;
                Int a = num / (2 * A);
                IntPoly q(std::vector<Int>{ Int(1), a, b });
                if (p.divide_exact(q)) return q;
            }
        }
    }
    return std::nullopt;
}

// Kronecker-style quadratic search for degree >= 6 residuals: a factor q with
// q(0)=1 satisfies q(1) | p(1) and q(-1) | p(-1).
inline std::optional<IntPoly> quadratic_factor_kronecker(const IntPoly& p) {
    Int p1 = p.eval(1), pm1 = p.eval(-1);
    if (p1 == 0 || pm1 == 0) return std::nullopt;  // linear factors handled elsewhere
    for (const Int& u : divisors_signed(p1))
        for (const Int& v : divisors_signed(pm1)) {
            if ((u - v) % 2 != 0) continue;
            Int a = (u - v) / 2;
            Int b = (u + v) / 2 - 1;
            if (b == 0) continue;
            if (p.lead() % b != 0) continue;
            IntPoly q(std::vector<Int>{ Int(1), a, b });
            if (p.divide_exact(q)) return q;
        }
    return std::nullopt;
}

}  // namespace detail

// Factor p with p(0) = 1 and degree <= 8 into irreducibles over Z[t].
// Linear factors (1+ft) are found by a complete divisor search on the leading
// coefficient; quadratic residuals are certified by their discriminant;
// degree-4/5 residuals get a complete quadratic-factor search, so anything
// left with no factor of degree <= 2 and degree <= 5 is provably irreducible.
// Degree >= 6 residuals that resist the quadratic search are returned whole
// with certified = false.
inline Factorization factor_over_Z(const IntPoly& p) {
    if (p.coeff(0) != 1) throw std::invalid_argument("factor_over_Z: constant term must be 1");
    if (p.degree() > 8) throw std::invalid_argument("factor_over_Z: degree > 8");
    Factorization out;
    IntPoly rest = p;

    auto push = [&out](const IntPoly& f) {
        for (auto& [g, m] : out.factors)
            if (g == f) { ++m; return; }
        out.factors.emplace_back(f, 1);
    };

    bool progress = true;
    while (progress && rest.degree() >= 1) {
        progress = false;
        for (const Int& f : detail::divisors_signed(rest.lead())) {
            IntPoly lin(std::vector<Int>{ Int(1), f });
            for (auto q = rest.divide_exact(lin); q; q = rest.divide_exact(lin)) {
                push(lin);
                rest = *q;
                progress = true;
                if (rest.degree() == 0) break;
            }
            if (rest.degree() == 0) break;
        }
    }

    while (rest.degree() >= 4) {
        std::optional<IntPoly> q;
        if (rest.degree() <= 5) q = detail::quadratic_factor_small(rest);
        else q = detail::quadratic_factor_kronecker(rest);
        if (!q) break;
        push(*q);
        rest = *rest.divide_exact(*q);
    }

    if (rest.degree() >= 6) {
        // could still split as 3+3 etc.; flagged, not mis-certified
        push(rest);
        out.certified = false;
    } else if (rest.degree() >= 1) {
        if (rest.degree() == 2 && detail::is_perfect_square(rest.coeff(1) * rest.coeff(1) - 4 * rest.lead()))
            throw std::logic_error("factor_over_Z: reducible quadratic escaped linear search");
        push(rest);
    }

    std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
        if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
        return x.first.coeffs() < y.first.coeffs();
    });
    return out;
}

}  // namespace qrefl
