#pragma once

#include "matgroup.hpp"

#include <array>
#include <map>
#include <optional>
#include <unordered_map>

namespace qrefl {

// A finite star-closed set of lines in H_F^n, stored in a canonical sorted
// order so that serialization and line indices are deterministic.
struct LineSystem {
    std::string name;
    size_t dim = 0;
    std::vector<Line> lines;
    std::unordered_map<std::string, size_t> index;

    size_t size() const { return lines.size(); }

    std::optional<size_t> index_of(const Line& l) const {
        auto it = index.find(row_key(l.ivec()));
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
    bool contains(const Line& l) const { return index_of(l).has_value(); }
};

namespace detail {

inline LineSystem finalize_system(std::string name, size_t dim, std::vector<Line> lines) {
    std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) {
        return row_key(a.ivec()) < row_key(b.ivec());
    });
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    LineSystem ls;
    ls.name = std::move(name);
    ls.dim = dim;
    ls.lines = std::move(lines);
    for (size_t i = 0; i < ls.lines.size(); ++i) ls.index.emplace(row_key(ls.lines[i].ivec()), i);
    return ls;
}

}  // namespace detail

// Lines of the reflection arrangement of W_n(Gamma, Delta): spans of
// e_p - e_q*gamma for p < q and gamma in Gamma, plus the coordinate lines
// exactly when Delta is nontrivial.
inline LineSystem family_lines(const GammaGroup& g, size_t n) {
    if (n < 2) throw std::invalid_argument("family_lines: n >= 2");
    std::vector<Line> lines;
    for (size_t p = 0; p < n; ++p)
        for (size_t q = p + 1; q < n; ++q)
            for (const Quat& gamma : g.elements) {
                Vector v(n);
                v[p] = Quat(1);
                v[q] = -gamma;
                lines.emplace_back(v);
            }
    if (!g.delta_trivial())
        for (size_t m = 0; m < n; ++m) {
            Vector v(n);
            v[m] = Quat(1);
            lines.emplace_back(v);
        }
    return detail::finalize_system("family:" + g.spec() + ":" + std::to_string(n), n, std::move(lines));
}

// Least star-closed superset of the seed, or nullopt when it would exceed cap.
inline std::optional<LineSystem> reflection_closure(const std::vector<Line>& seed, size_t cap,
                                                    const std::string& name = "closure") {
    if (seed.empty()) throw std::invalid_argument("reflection_closure: empty seed");
    size_t n = seed[0].dim();
    std::vector<Line> lines;
    std::vector<IField> norms;
    std::unordered_map<std::string, size_t> seen;
    auto add = [&](const Line& l) -> bool {
        auto key = row_key(l.ivec());
        if (seen.count(key)) return false;
        seen.emplace(std::move(key), lines.size());
        lines.push_back(l);
        norms.push_back(herm_norm(l.ivec()));
        return true;
    };
    for (const Line& l : seed) add(l);
    size_t next = 0;
    while (next < lines.size()) {
        if (lines.size() > cap) return std::nullopt;
        size_t hi = lines.size();
        for (size_t a = next; a < hi; ++a) {
            for (size_t b = 0; b < hi; ++b) {
                if (a == b) continue;
                add(reflect_line(lines[a].ivec(), norms[a], lines[b].ivec()));
                if (lines.size() > cap) return std::nullopt;
                if (b < next) {
                    add(reflect_line(lines[b].ivec(), norms[b], lines[a].ivec()));
                    if (lines.size() > cap) return std::nullopt;
                }
            }
        }
        next = hi;
    }
    return detail::finalize_system(name, n, std::move(lines));
}

inline bool star_closed(const LineSystem& ls) {
    std::vector<IField> norms;
    norms.reserve(ls.size());
    for (const Line& l : ls.lines) norms.push_back(herm_norm(l.ivec()));
    for (size_t a = 0; a < ls.size(); ++a)
        for (size_t b = 0; b < ls.size(); ++b) {
            if (a == b) continue;
            if (!ls.contains(reflect_line(ls.lines[a].ivec(), norms[a], ls.lines[b].ivec())))
                return false;
        }
    return true;
}

// Count of lines at each catalog angle from the given line; OUTSIDE counts in
// the last slot.
inline std::array<size_t, 6> angle_census_from(const LineSystem& ls, size_t idx) {
    std::array<size_t, 6> counts{};
    for (size_t b = 0; b < ls.size(); ++b) {
        if (b == idx) continue;
        counts[static_cast<size_t>(angle_class(ls.lines[idx], ls.lines[b]))]++;
    }
    return counts;
}

// Partition into frames (maximal sets of mutually orthogonal lines) when
// orthogonality is an equivalence relation; nullopt otherwise.
inline std::optional<std::vector<std::vector<size_t>>> frames(const LineSystem& ls) {
    size_t n = ls.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<size_t>> out;
    for (size_t i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<size_t> frame{ i };
        comp[i] = static_cast<int>(out.size());
        for (size_t j = i + 1; j < n; ++j) {
            if (comp[j] >= 0) continue;
            if (angle_class(ls.lines[i], ls.lines[j]) == AngleClass::RIGHT) {
                comp[j] = comp[i];
                frame.push_back(j);
            }
        }
        // equivalence demands each frame be a clique of mutually orthogonal lines
        for (size_t a = 0; a < frame.size(); ++a)
            for (size_t b = a + 1; b < frame.size(); ++b)
                if (angle_class(ls.lines[frame[a]], ls.lines[frame[b]]) != AngleClass::RIGHT)
                    return std::nullopt;
        out.push_back(std::move(frame));
    }
    return out;
}

// --- the seven exceptional systems ---

namespace detail {

inline Vector qv(std::initializer_list<Quat> qs) { return Vector(qs); }

inline void orbit_under(const std::vector<UnitaryMatrix>& group, const Vector& seed,
                        std::vector<Line>& out) {
    for (const auto& M : group) out.emplace_back(M.apply(seed));
}

// signed permutation matrices on n coordinates; even = only even numbers of
// sign flips (the Weyl group of type D_n)
inline std::vector<UnitaryMatrix> signed_permutations(size_t n, bool even_only) {
    std::vector<UnitaryMatrix> out;
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    do {
        for (size_t mask = 0; mask < (1u << n); ++mask) {
            if (even_only && (__builtin_popcount(static_cast<unsigned>(mask)) % 2) != 0) continue;
            UnitaryMatrix M(n);
            for (size_t j = 0; j < n; ++j)
                M.at(perm[j], j) = (mask >> j) & 1 ? -Quat(1) : Quat(1);
            out.push_back(M);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline bool perm_is_even(const std::vector<size_t>& p) {
    size_t inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0;
}

inline LineSystem build_Q() {
    GammaGroup c4 = gamma_group("C4", "pm1");  // G(4,2,3) = W_3(C4, {+-1})
    LineSystem roots = family_lines(c4, 3);
    std::vector<Line> lines = roots.lines;
    // alpha = (1 - i - j - sqrt5 k)/2
    Quat alpha(fe(Rat(1, 2)), fe(Rat(-1, 2)), fe(Rat(-1, 2)), FieldElem(Rat(0), Rat(0), Rat(-1, 2), Rat(0)));
    Vector v = qv({ Quat(1), Quat(1), alpha });
    orbit_under(monomial_group(c4, 3), v, lines);
    return finalize_system("Q", 3, std::move(lines));
}

inline LineSystem build_S1() {
    std::vector<Line> lines;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            for (int s : { 1, -1 }) {
                Vector v(4);
                v[i] = Quat(1);
                v[j] = Quat(s);
                lines.emplace_back(v);
            }
    // even-signed permutations of (1, i, j, k)
    std::array<Quat, 4> units{ Quat(1), Quat::ui(), Quat::uj(), Quat::uk() };
    std::vector<size_t> perm{ 0, 1, 2, 3 };
    do {
        for (size_t mask = 0; mask < 16; ++mask) {
            if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
            Vector v(4);
            for (size_t t = 0; t < 4; ++t) v[t] = (mask >> t) & 1 ? -units[perm[t]] : units[perm[t]];
            lines.emplace_back(v);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return finalize_system("S1", 4, std::move(lines));
}

inline LineSystem build_S2() {
    std::vector<Line> lines;
    for (size_t i = 0; i < 4; ++i) {
        Vector v(4);
        v[i] = Quat(1);
        lines.emplace_back(v);
        for (size_t j = i + 1; j < 4; ++j)
            for (int s : { 1, -1 }) {
                Vector w(4);
                w[i] = Quat(1);
                w[j] = Quat(s);
                lines.emplace_back(w);
            }
    }
    for (size_t mask = 0; mask < 8; ++mask) {
        Vector v(4);
        v[0] = Quat(1);
        for (size_t t = 0; t < 3; ++t) v[t + 1] = (mask >> t) & 1 ? -Quat(1) : Quat(1);
        lines.emplace_back(v);
    }
    // (1, +-p, +-q, +-r) over permutations {p,q,r} of {i,j,k}
    std::array<Quat, 3> im{ Quat::ui(), Quat::uj(), Quat::uk() };
    std::vector<size_t> perm{ 0, 1, 2 };
    do {
        for (size_t mask = 0; mask < 8; ++mask) {
            Vector v(4);
            v[0] = Quat(1);
            for (size_t t = 0; t < 3; ++t) v[t + 1] = (mask >> t) & 1 ? -im[perm[t]] : im[perm[t]];
            lines.emplace_back(v);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return finalize_system("S2", 4, std::move(lines));
}

inline LineSystem build_S3() {
    GammaGroup q8 = gamma_group("D2", "pm1");
    LineSystem w4 = family_lines(q8, 4);
    std::vector<Line> lines = w4.lines;
    // (1, p, q, r) with p, q, r in Q8 and p*q*r = +-1
    for (const Quat& p : q8.elements)
        for (const Quat& q : q8.elements)
            for (const Quat& r : q8.elements) {
                Quat prod = p * q * r;
                if (prod != Quat(1) && prod != -Quat(1)) continue;
                lines.emplace_back(qv({ Quat(1), p, q, r }));
            }
    return finalize_system("S3", 4, std::move(lines));
}

inline std::vector<Line> h4_lines() {
    std::vector<Line> lines;
    for (size_t i = 0; i < 4; ++i) {
        Vector v(4);
        v[i] = Quat(1);
        lines.emplace_back(v);
    }
    for (size_t mask = 0; mask < 8; ++mask) {
        Vector v(4);
        v[0] = Quat(1);
        for (size_t t = 0; t < 3; ++t) v[t + 1] = (mask >> t) & 1 ? -Quat(1) : Quat(1);
        lines.emplace_back(v);
    }
    // even permutations of (tau^{-1}, 1, tau, 0) with arbitrary sign changes
    std::array<Quat, 4> base{ Quat(golden_inv()), Quat(1), Quat(golden()), Quat() };
    std::vector<size_t> perm{ 0, 1, 2, 3 };
    do {
        if (!perm_is_even(perm)) continue;
        for (size_t mask = 0; mask < 16; ++mask) {
            Vector v(4);
            for (size_t t = 0; t < 4; ++t) v[t] = (mask >> t) & 1 ? -base[perm[t]] : base[perm[t]];
            lines.emplace_back(v);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return lines;
}

inline LineSystem build_T(bool conjugate_left = false) {
    std::vector<Line> lines = h4_lines();
    GammaGroup icos = gamma_group("I", "full");
    for (const Quat& p : icos.elements) {
        Quat pinv = quat_inverse(p);
        auto cj = [&](const Quat& u) { return conjugate_left ? pinv * u * p : p * u * pinv; };
        Quat ip = cj(Quat::ui()), jp = cj(Quat::uj()), kp = cj(Quat::uk());
        lines.emplace_back(qv({ Quat(1), ip, jp, kp }));
        lines.emplace_back(qv({ Quat(1), -ip, -jp, -kp }));
    }
    return finalize_system("T", 4, std::move(lines));
}

inline LineSystem build_U() {
    std::vector<Line> lines;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            for (int s : { 1, -1 }) {
                Vector v(5);
                v[i] = Quat(1);
                v[j] = Quat(s);
                lines.emplace_back(v);
            }
    {
        Vector e5(5);
        e5[4] = Quat(1);
        lines.emplace_back(e5);
    }
    Quat i = Quat::ui(), j = Quat::uj(), k = Quat::uk(), one = Quat(1);
    FieldElem s2 = FieldElem::sqrt2();
    std::vector<Vector> seeds = {
        qv({ one, i, j, k, Quat() }),
        qv({ one, one, one, i + j + k, Quat(s2) }),           // omega - omega^2 = i + j + k
        qv({ one, one, one, i - j - k, i * s2 }),
        qv({ one, one, one, -i + j - k, j * s2 }),
        qv({ one, one, one, -i - j + k, k * s2 }),
    };
    auto wd4 = signed_permutations(4, /*even_only=*/true);
    for (const auto& seed : seeds)
        for (const auto& M : wd4) {
            Vector v(5);
            Vector head(4);
            for (size_t t = 0; t < 4; ++t) head[t] = seed[t];
            Vector img = M.apply(head);
            for (size_t t = 0; t < 4; ++t) v[t] = img[t];
            v[4] = seed[4];
            lines.emplace_back(v);
        }
    return finalize_system("U", 5, std::move(lines));
}

// Cohen's realization of U: coordinate lines plus cyclic shifts and sign
// changes of four seed rows built from omega and its conjugates.
inline LineSystem build_U_cohen() {
    std::vector<Line> lines;
    for (size_t i = 0; i < 5; ++i) {
        Vector v(5);
        v[i] = Quat(1);
        lines.emplace_back(v);
    }
    Quat w = omega();
    Quat i = Quat::ui(), j = Quat::uj(), k = Quat::uk(), one = Quat(1);
    auto conj_by = [](const Quat& p, const Quat& x) { return p * x * quat_inverse(p); };
    std::vector<Vector> seeds = {
        qv({ Quat(), one, w, w, one }),
        qv({ Quat(), one, conj_by(i, w), conj_by(k, w), i }),
        qv({ Quat(), one, conj_by(j, w), conj_by(i, w), j }),
        qv({ Quat(), one, conj_by(k, w), conj_by(j, w), k }),
    };
    for (const auto& seed : seeds)
        for (size_t rot = 0; rot < 5; ++rot)
            for (size_t mask = 0; mask < 32; ++mask) {
                Vector v(5);
                for (size_t t = 0; t < 5; ++t) {
                    Quat q = seed[(t + 5 - rot) % 5];
                    v[t] = (mask >> t) & 1 ? -q : q;
                }
                lines.emplace_back(v);
            }
    return finalize_system("U-cohen", 5, std::move(lines));
}

// Change of basis carrying Cohen's realization of U to build_U()'s realization.
inline UnitaryMatrix u_transform_matrix() {
    UnitaryMatrix M(5);
    Quat w = omega();
    Quat w2 = w * w;
    FieldElem inv_s2 = field_inverse(FieldElem::sqrt2());
    Quat a = Quat(inv_s2);          // 1/sqrt2
    Quat b = -(w2 * inv_s2);        // -omega^2/sqrt2
    M.at(0, 0) = a;  M.at(0, 1) = b;
    M.at(1, 0) = -a; M.at(1, 1) = b;
    M.at(2, 2) = b;  M.at(2, 3) = a;
    M.at(3, 2) = -b; M.at(3, 3) = a;
    M.at(4, 4) = -w2;
    return M;
}

LineSystem build_R();  // defined after the seed search below

}  // namespace detail

// Search for a line of norm profile {1, tau, tau^{-1}} whose star closure
// with the 27 lines of W_3(Q8, {+-1}) is a 315-line system with the R angle
// census. Returns the first candidate in scan order.
inline std::optional<Vector> search_r_seed(size_t closure_cap = 400) {
    GammaGroup q8 = gamma_group("D2", "pm1");
    LineSystem base = family_lines(q8, 3);
    GammaGroup units = gamma_group("T", "full");  // 24 binary tetrahedral units
    FieldElem tau = golden(), taui = golden_inv();
    std::array<FieldElem, 3> profile{ fe(1), tau, taui };
    std::array<size_t, 3> idx{ 0, 1, 2 };
    std::sort(idx.begin(), idx.end());
    std::vector<std::array<size_t, 3>> perms;
    do perms.push_back(idx); while (std::next_permutation(idx.begin(), idx.end()));
    for (const auto& pm : perms)
        for (const Quat& x : units.elements)
            for (const Quat& y : units.elements) {
                Vector v(3);
                v[0] = Quat(profile[pm[0]]);
                v[1] = x * profile[pm[1]];
                v[2] = y * profile[pm[2]];
                Line cand(v);
                bool ok = true;
                for (const Line& l : base.lines)
                    if (angle_class(cand, l) == AngleClass::OUTSIDE) { ok = false; break; }
                if (!ok) continue;
                std::vector<Line> seed = base.lines;
                seed.push_back(cand);
                auto closed = reflection_closure(seed, closure_cap, "R");
                if (!closed || closed->size() != 315) continue;
                auto census = angle_census_from(*closed, *closed->index_of(base.lines[0]));
                // from (2,0,0): 10 orthogonal, 160 at pi/3, 80 at pi/4, 32 + 32 at pi/5, 2pi/5
                if (census[0] == 10 && census[1] == 160 && census[2] == 80 && census[3] == 32 &&
                    census[4] == 32 && census[5] == 0)
                    return v;
            }
    return std::nullopt;
}

namespace detail {

inline LineSystem build_R() {
    GammaGroup q8 = gamma_group("D2", "pm1");
    LineSystem base = family_lines(q8, 3);
    // Frozen seed found by search_r_seed(); regression-tested against the
    // census of the closure: (1, tau*(1+i+j+k)/2, tau^{-1}*(1+i+j-k)/2).
    Quat x(fe(Rat(1, 2)), fe(Rat(1, 2)), fe(Rat(1, 2)), fe(Rat(1, 2)));
    Quat y(fe(Rat(1, 2)), fe(Rat(1, 2)), fe(Rat(1, 2)), fe(Rat(-1, 2)));
    Vector seed(3);
    seed[0] = Quat(fe(1));
    seed[1] = x * golden();
    seed[2] = y * golden_inv();
    std::vector<Line> lines = base.lines;
    lines.emplace_back(seed);
    auto closed = reflection_closure(lines, 400, "R");
    if (!closed || closed->size() != 315) throw std::logic_error("build_R: closure failed");
    LineSystem out = *closed;
    out.name = "R";
    return out;
}

}  // namespace detail

inline LineSystem make_system(std::string name, size_t dim, std::vector<Line> lines) {
    return detail::finalize_system(std::move(name), dim, std::move(lines));
}

inline LineSystem exceptional_lines(const std::string& name) {
    if (name == "Q") return detail::build_Q();
    if (name == "R") return detail::build_R();
    if (name == "S1") return detail::build_S1();
    if (name == "S2") return detail::build_S2();
    if (name == "S3") return detail::build_S3();
    if (name == "T") return detail::build_T();
    if (name == "U") return detail::build_U();
    throw std::invalid_argument("exceptional_lines: unknown system " + name);
}

}  // namespace qrefl
