#pragma once

#include "gamma.hpp"
#include "matrix.hpp"
#include "poly.hpp"

#include <functional>
#include <unordered_set>

namespace qrefl {

// --- monomial realization of W_n(Gamma, Delta) ---

// Visit every element of W_n(Gamma, Delta) exactly once: permutation matrices
// times diagonals diag(g_1,...,g_n) with g_1*...*g_n in Delta.
inline void for_each_monomial(const GammaGroup& g, size_t n,
                              const std::function<void(const UnitaryMatrix&)>& fn) {
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    const size_t m = g.order();
    std::vector<size_t> diag(n, 0);
    do {
        // iterate over g_1..g_{n-1} free, g_n = (g_1...g_{n-1})^{-1} * delta
        std::vector<size_t> idx(n > 0 ? n - 1 : 0, 0);
        bool done = false;
        while (!done) {
            Quat head = Quat::one();
            for (size_t t = 0; t + 1 < n; ++t) head = head * g.elements[idx[t]];
            Quat head_inv = quat_inverse(head);
            for (size_t d : g.delta) {
                UnitaryMatrix M(n);
                for (size_t t = 0; t + 1 < n; ++t) M.at(perm[t], t) = g.elements[idx[t]];
                M.at(perm[n - 1], n - 1) = head_inv * g.elements[d];
                fn(M);
            }
            if (n <= 1) break;
            size_t pos = 0;
            for (;;) {
                if (++idx[pos] < m) break;
                idx[pos] = 0;
                if (++pos == n - 1) { done = true; break; }
            }
        }
        (void)diag;
    } while (std::next_permutation(perm.begin(), perm.end()));
}

inline size_t monomial_order(const GammaGroup& g, size_t n) {
    size_t f = 1;
    for (size_t i = 2; i <= n; ++i) f *= i;
    size_t pw = 1;
    for (size_t i = 0; i + 1 < n; ++i) pw *= g.order();
    return f * pw * g.delta_order();
}

inline std::vector<UnitaryMatrix> monomial_group(const GammaGroup& g, size_t n) {
    std::vector<UnitaryMatrix> out;
    out.reserve(monomial_order(g, n));
    for_each_monomial(g, n, [&](const UnitaryMatrix& M) { out.push_back(M); });
    return out;
}

// --- closure ---

struct GroupEnum {
    std::vector<UnitaryMatrix> elements;
    std::vector<UnitaryMatrix> generators;
    bool capped = false;
    size_t order() const { return elements.size(); }
};

// Breadth-first closure of unitary generators; elements stored.
inline GroupEnum close_group(const std::vector<UnitaryMatrix>& gens, size_t cap) {
    GroupEnum g;
    g.generators = gens;
    if (gens.empty()) return g;
    std::unordered_set<std::string> seen;
    UnitaryMatrix id = UnitaryMatrix::identity(gens[0].n);
    seen.insert(id.key());
    g.elements.push_back(id);
    std::vector<UnitaryMatrix> frontier{ id };
    while (!frontier.empty()) {
        std::vector<UnitaryMatrix> next;
        for (const auto& f : frontier)
            for (const auto& gen : gens) {
                UnitaryMatrix p = f * gen;
                if (seen.insert(p.key()).second) {
                    if (seen.size() > cap) { g.capped = true; return g; }
                    g.elements.push_back(p);
                    next.push_back(p);
                }
            }
        frontier = std::move(next);
    }
    return g;
}

// Closure that only counts: keeps serialized keys, not elements. Returns
// nullopt if the cap is exceeded.
inline std::optional<size_t> closure_order(const std::vector<UnitaryMatrix>& gens, size_t cap) {
    if (gens.empty()) return 1;
    std::unordered_set<std::string> seen;
    UnitaryMatrix id = UnitaryMatrix::identity(gens[0].n);
    seen.insert(id.key());
    std::vector<UnitaryMatrix> frontier{ id };
    while (!frontier.empty()) {
        std::vector<UnitaryMatrix> next;
        for (const auto& f : frontier)
            for (const auto& gen : gens) {
                UnitaryMatrix p = f * gen;
                if (seen.insert(p.key()).second) {
                    if (seen.size() > cap) return std::nullopt;
                    next.push_back(p);
                }
            }
        frontier = std::move(next);
    }
    return seen.size();
}

// Closure order for a reflection generating set: close over a small subset
// first, then grow only if some reflection is missing. The result equals
// closure_order over the full set.
inline std::optional<size_t> reflection_group_order(const std::vector<UnitaryMatrix>& refl, size_t cap) {
    if (refl.empty()) return 1;
    size_t take = std::min<size_t>(refl.size(), refl[0].n + 2);
    std::vector<UnitaryMatrix> gens(refl.begin(), refl.begin() + static_cast<long>(take));
    for (;;) {
        if (gens.size() == refl.size()) return closure_order(gens, cap);
        std::unordered_set<std::string> seen;
        UnitaryMatrix id = UnitaryMatrix::identity(gens[0].n);
        seen.insert(id.key());
        std::vector<UnitaryMatrix> frontier{ id };
        while (!frontier.empty()) {
            std::vector<UnitaryMatrix> next;
            for (const auto& f : frontier)
                for (const auto& gen : gens) {
                    UnitaryMatrix p = f * gen;
                    if (seen.insert(p.key()).second) {
                        if (seen.size() > cap) return std::nullopt;
                        next.push_back(p);
                    }
                }
            frontier = std::move(next);
        }
        bool complete = true;
        for (const auto& r : refl)
            if (!seen.count(r.key())) {
                gens.push_back(r);
                complete = false;
                break;
            }
        if (complete) return seen.size();
    }
}

// --- codimension census ---

// c_W(t) = sum over elements of t^codim(fix(w)).
inline IntPoly codim_census(const GroupEnum& g) {
    if (g.elements.empty()) return IntPoly::one();
    std::vector<Int> coeffs(g.elements[0].n + 1, Int(0));
    for (const auto& M : g.elements) coeffs[fix_codim(M)] += 1;
    return IntPoly(std::move(coeffs));
}

// Direct enumeration census of W_n(Gamma, Delta) without storing elements.
inline IntPoly family_codim_census_enum(const GammaGroup& g, size_t n) {
    std::vector<Int> coeffs(n + 1, Int(0));
    for_each_monomial(g, n, [&](const UnitaryMatrix& M) { coeffs[fix_codim(M)] += 1; });
    return IntPoly(std::move(coeffs));
}

// Closed-form product: prod_{k=1}^{n-1} (1 + (k m - 1) t) * (1 + (n p - 1) t)
// with m = |Gamma|, p = |Delta|.
inline IntPoly family_codim_poly(size_t m, size_t p, size_t n) {
    if (p == 0 || m % p != 0) throw std::invalid_argument("family_codim_poly: p must divide m");
    if (n < 1) throw std::invalid_argument("family_codim_poly: n >= 1");
    IntPoly out = IntPoly::one();
    for (size_t k = 1; k < n; ++k)
        out *= IntPoly(std::vector<Int>{ Int(1), Int(k * m - 1) });
    out *= IntPoly(std::vector<Int>{ Int(1), Int(n * p - 1) });
    return out;
}

namespace detail {

inline void partitions_rec(size_t n, size_t maxpart, std::vector<size_t>& cur,
                           const std::function<void(const std::vector<size_t>&)>& fn) {
    if (n == 0) { fn(cur); return; }
    for (size_t p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, fn);
        cur.pop_back();
    }
}

inline Int factorial(size_t n) {
    Int f = 1;
    for (size_t i = 2; i <= n; ++i) f *= Int(i);
    return f;
}

inline Int binomial(size_t n, size_t k) {
    if (k > n) return 0;
    Int r = 1;
    for (size_t i = 0; i < k; ++i) { r *= Int(n - i); r /= Int(i + 1); }
    return r;
}

}  // namespace detail

// Cycle-product census: the number of elements of W_n(Gamma, Delta) with fixed
// space of dimension d is
//   a(n,d) = sum_{lambda |- n} c_lambda C(l(lambda), d) m^{n - l(lambda)}
//            * sum_{delta in Delta} f(delta, l(lambda) - d),
// where f counts factorizations of delta into non-identity elements, given by
// the recursion a(1)=1, b(1)=0, b(k) = (m-1) a(k-1), a(k) = b(k-1) + (m-2) a(k-1).
inline IntPoly family_codim_census(const GammaGroup& g, size_t n) {
    const size_t m = g.order(), p = g.delta_order();
    // f(delta != 1, k) = A[k], f(1, k) = B[k]
    std::vector<Int> A(n + 1), B(n + 1);
    A[0] = 0; B[0] = 1;
    if (n >= 1) { A[1] = 1; B[1] = 0; }
    for (size_t k = 2; k <= n; ++k) {
        B[k] = Int(m - 1) * A[k - 1];
        A[k] = B[k - 1] + Int(m - 2) * A[k - 1];
    }
    std::vector<Int> fixdim(n + 1, Int(0));
    std::vector<size_t> scratch;
    detail::partitions_rec(n, n, scratch, [&](const std::vector<size_t>& lambda) {
        size_t len = lambda.size();
        // c_lambda = n! / (prod lambda_i * prod mult_j!)
        Int denom = 1;
        size_t run = 1;
        for (size_t i = 0; i < len; ++i) {
            denom *= Int(lambda[i]);
            if (i > 0 && lambda[i] == lambda[i - 1]) ++run;
            else run = 1;
            denom *= Int(run);
        }
        Int clambda = detail::factorial(n) / denom;
        Int mpow = 1;
        for (size_t i = 0; i < n - len; ++i) mpow *= Int(m);
        for (size_t d = 0; d <= len; ++d) {
            size_t k = len - d;
            Int dsum = B[k] + Int(p - 1) * A[k];
            fixdim[d] += clambda * detail::binomial(len, d) * mpow * dsum;
        }
    });
    // coefficient of t^c is the number of elements with fixed space of codim c
    std::vector<Int> coeffs(n + 1, Int(0));
    for (size_t d = 0; d <= n; ++d) coeffs[n - d] = fixdim[d];
    return IntPoly(std::move(coeffs));
}

// --- product decomposition in W_n(Gamma) ---

struct MonomialShape {
    std::vector<size_t> dest;  // column j maps e_j to e_{dest[j]} * entry[j]
    std::vector<Quat> entry;
};

inline MonomialShape monomial_shape(const UnitaryMatrix& w) {
    MonomialShape s;
    s.dest.assign(w.n, w.n);
    s.entry.assign(w.n, Quat());
    for (size_t j = 0; j < w.n; ++j) {
        for (size_t i = 0; i < w.n; ++i) {
            if (w.at(i, j).is_zero()) continue;
            if (s.dest[j] != w.n) throw std::invalid_argument("not a monomial matrix");
            s.dest[j] = i;
            s.entry[j] = w.at(i, j);
        }
        if (s.dest[j] == w.n) throw std::invalid_argument("not a monomial matrix");
    }
    return s;
}

// Unique factorization w = x * v with v in W_{n-1}(Gamma) (fixing e_n) and
// x in {1} u {gamma_n (mn) gamma_n^{-1}} u {gamma_n}.
inline std::pair<UnitaryMatrix, UnitaryMatrix> product_decomposition(const UnitaryMatrix& w,
                                                                     const GammaGroup& g) {
    const size_t n = w.n;
    MonomialShape s = monomial_shape(w);
    for (size_t j = 0; j < n; ++j)
        if (!g.contains(s.entry[j])) throw std::invalid_argument("entry not in Gamma");
    size_t m = s.dest[n - 1];
    Quat gamma = s.entry[n - 1];
    UnitaryMatrix x = UnitaryMatrix::identity(n);
    if (m == n - 1) {
        x.at(n - 1, n - 1) = gamma;  // gamma_n (or identity when gamma = 1)
    } else {
        // x = (gamma^{-1})_n (m n) (gamma)_n: x(e_n) = e_m gamma, x(e_m) = e_n gamma^{-1}
        x.at(n - 1, n - 1) = Quat();
        x.at(m, m) = Quat();
        x.at(m, n - 1) = gamma;
        x.at(n - 1, m) = quat_inverse(gamma);
    }
    // v = x^{-1} w; x is either diagonal or an involution
    UnitaryMatrix xinv(n);
    if (m == n - 1) {
        xinv = UnitaryMatrix::identity(n);
        xinv.at(n - 1, n - 1) = quat_inverse(gamma);
    } else {
        xinv = x;
    }
    UnitaryMatrix v = xinv * w;
    return { x, v };
}

}  // namespace qrefl
