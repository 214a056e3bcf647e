#pragma once

#include "quat.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qrefl {

// Vectors of H_F^n. Rational entries at the API surface; the lattice kernels
// run on integer-coefficient vectors (IVec) which represent the same lines and
// subspaces up to a positive rational scale.
using Vector = std::vector<Quat>;
using IVec = std::vector<IQuat>;

inline Quat herm_form(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) throw std::invalid_argument("herm_form: dimension mismatch");
    Quat acc;
    for (size_t i = 0; i < u.size(); ++i) acc += u[i].conj() * v[i];
    return acc;
}

inline IQuat herm_form(const IVec& u, const IVec& v) {
    if (u.size() != v.size()) throw std::invalid_argument("herm_form: dimension mismatch");
    IQuat acc;
    for (size_t i = 0; i < u.size(); ++i) acc += u[i].conj() * v[i];
    return acc;
}

// (v, v) is real; return it as a field element.
inline IField herm_norm(const IVec& v) {
    IField acc;
    for (const auto& q : v) acc += q.nrd();
    return acc;
}

inline FieldElem herm_norm(const Vector& v) {
    FieldElem acc;
    for (const auto& q : v) acc += q.nrd();
    return acc;
}

inline bool ivec_is_zero(const IVec& v) {
    for (const auto& q : v) if (!q.is_zero()) return false;
    return true;
}

namespace detail {

inline void gcd_accum(Int& g, const Int& v) {
    if (v != 0) g = (g == 0) ? boost::multiprecision::abs(v) : gcd_int(g, v);
}

}  // namespace detail

// Divide out the integer content. Zero vectors pass through.
inline void remove_content(IVec& v) {
    Int g = 0;
    for (const auto& q : v)
        for (const IField* f : { &q.w, &q.x, &q.y, &q.z }) {
            detail::gcd_accum(g, f->a);
            detail::gcd_accum(g, f->b);
            detail::gcd_accum(g, f->c);
            detail::gcd_accum(g, f->d);
            if (g == 1) return;
        }
    if (g <= 1) return;
    for (auto& q : v)
        for (IField* f : { &q.w, &q.x, &q.y, &q.z }) {
            f->a /= g; f->b /= g; f->c /= g; f->d /= g;
        }
}

inline IVec ivec_scale(const IVec& v, const IField& s) {
    IVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
    return r;
}

inline int first_nonzero(const IVec& v) {
    for (size_t i = 0; i < v.size(); ++i) if (!v[i].is_zero()) return static_cast<int>(i);
    return -1;
}

// Canonicalize a nonzero vector as a line representative: right-scale so that
// the first nonzero coordinate becomes a positive rational integer, then make
// the vector primitive. Two vectors span the same line iff their canonical
// forms are identical.
inline void canonicalize_row(IVec& v) {
    int p = first_nonzero(v);
    if (p < 0) return;
    const IQuat& piv = v[static_cast<size_t>(p)];
    if (piv.is_real() && piv.w.is_rational()) {
        if (piv.w.a < 0)
            for (auto& q : v) q = -q;
    } else {
        // v * conj(piv) * conj_product(nrd(piv)) = v * piv^{-1} * N_{F/Q}(nrd piv)
        IField n = piv.nrd();
        IQuat scale = piv.conj() * n.conj_product();
        for (auto& q : v) q = q * scale;
    }
    remove_content(v);
}

// Convert a rational vector into the primitive integer form (same line).
inline IVec ivec_of(const Vector& v) {
    Int l = 1;
    for (const auto& q : v)
        for (const Rat* r : { &q.w.a, &q.w.b, &q.w.c, &q.w.d, &q.x.a, &q.x.b, &q.x.c, &q.x.d,
                              &q.y.a, &q.y.b, &q.y.c, &q.y.d, &q.z.a, &q.z.b, &q.z.c, &q.z.d })
            l = lcm_int(l, den(*r));
    IVec out(v.size());
    auto cv = [&](const Rat& r) { return num(r) * (l / den(r)); };
    for (size_t i = 0; i < v.size(); ++i) {
        const Quat& q = v[i];
        out[i] = IQuat(IField(cv(q.w.a), cv(q.w.b), cv(q.w.c), cv(q.w.d)),
                       IField(cv(q.x.a), cv(q.x.b), cv(q.x.c), cv(q.x.d)),
                       IField(cv(q.y.a), cv(q.y.b), cv(q.y.c), cv(q.y.d)),
                       IField(cv(q.z.a), cv(q.z.b), cv(q.z.c), cv(q.z.d)));
    }
    remove_content(out);
    return out;
}

inline Vector vector_of(const IVec& v) {
    Vector out(v.size());
    auto cf = [](const IField& f) { return FieldElem(Rat(f.a), Rat(f.b), Rat(f.c), Rat(f.d)); };
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = Quat(cf(v[i].w), cf(v[i].x), cf(v[i].y), cf(v[i].z));
    return out;
}

inline std::string row_key(const IVec& v) {
    std::string s;
    for (const auto& q : v)
        for (const IField* f : { &q.w, &q.x, &q.y, &q.z }) {
            append_int_bytes(s, f->a);
            append_int_bytes(s, f->b);
            append_int_bytes(s, f->c);
            append_int_bytes(s, f->d);
        }
    return s;
}

inline std::size_t hash_ivec(const IVec& v) {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& q : v) hash_mix(h, hash_qu(q));
    return h;
}

// A line in H_F^n, stored by its canonical primitive representative.
class Line {
public:
    Line() = default;
    explicit Line(const Vector& v) : rep_(ivec_of(v)) {
        canonicalize_row(rep_);
        if (ivec_is_zero(rep_)) throw std::invalid_argument("Line: zero vector");
    }
    explicit Line(IVec v) : rep_(std::move(v)) {
        canonicalize_row(rep_);
        if (ivec_is_zero(rep_)) throw std::invalid_argument("Line: zero vector");
    }

    const IVec& ivec() const { return rep_; }
    size_t dim() const { return rep_.size(); }

    // Canonical representative per the line convention: first nonzero
    // coordinate equal to 1.
    Vector rep() const {
        Vector v = vector_of(rep_);
        int p = first_nonzero(rep_);
        Quat inv = quat_inverse(v[static_cast<size_t>(p)]);
        for (auto& q : v) q = q * inv;
        return v;
    }

    friend bool operator==(const Line& a, const Line& b) { return a.rep_ == b.rep_; }
    friend bool operator!=(const Line& a, const Line& b) { return !(a == b); }

private:
    IVec rep_;
};

struct LineHash {
    std::size_t operator()(const Line& l) const { return hash_ivec(l.ivec()); }
};

// Reduce v against a canonical echelon row whose pivot is at column `col` with
// positive integer pivot value `pivval`: v <- v*pivval - row*(v[col]).
inline void reduce_against(IVec& v, const IVec& row, int col, const Int& pivval) {
    const IQuat coeff = v[static_cast<size_t>(col)];
    if (coeff.is_zero()) return;
    for (size_t i = 0; i < v.size(); ++i) {
        if (static_cast<int>(i) == col) { v[i] = IQuat(); continue; }
        if (!v[i].is_zero()) v[i].scale_ip(pivval);
        if (!row[i].is_zero()) v[i].submul(row[i], coeff);
    }
}

// Canonical subspace of H_F^n: rows form the reduced row-echelon basis of the
// right-span, stored in primitive integer form (each row is a positive
// rational multiple of the pivot-1 RREF row). Equal subspaces have identical
// rows, so rows serve as a dedup key.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(size_t n) : n_(n) {}

    size_t dim_ambient() const { return n_; }
    size_t rank() const { return rows_.size(); }
    const std::vector<IVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    // Reduce a copy of v against the rows. Result is zero iff v lies in the span.
    IVec reduce(IVec v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const size_t pc = static_cast<size_t>(pivots_[r]);
            if (v[pc].is_zero()) continue;
            const IQuat coeff = std::move(v[pc]);
            v[pc] = IQuat();
            const Int& N = rows_[r][pc].w.a;
            const IVec& row = rows_[r];
            const bool unit_piv = (N == 1);
            for (size_t i = 0; i < v.size(); ++i) {
                if (i == pc) continue;
                if (!unit_piv && !v[i].is_zero()) v[i].scale_ip(N);
                if (!row[i].is_zero()) v[i].submul(row[i], coeff);
            }
        }
        return v;
    }

    bool contains_vec(const IVec& v) const { return ivec_is_zero(reduce(v)); }
    bool contains(const Line& l) const {
        if (l.dim() != n_) throw std::invalid_argument("contains: dimension mismatch");
        return contains_vec(l.ivec());
    }

    // Insert a vector; returns true if the rank grew.
    bool insert(IVec v) {
        if (n_ == 0) n_ = v.size();
        if (v.size() != n_) throw std::invalid_argument("Subspace::insert: dimension mismatch");
        v = reduce(std::move(v));
        if (ivec_is_zero(v)) return false;
        remove_content(v);
        canonicalize_row(v);
        int col = first_nonzero(v);
        // back-eliminate the new pivot column from existing rows
        Int npiv = pivot_value(v, col);
        for (size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r][static_cast<size_t>(col)].is_zero()) continue;
            IVec& row = rows_[r];
            const IQuat coeff = row[static_cast<size_t>(col)];
            IField scale(npiv, Int(0), Int(0), Int(0));
            for (size_t i = 0; i < n_; ++i) row[i] = row[i] * scale - v[i] * coeff;
            row[static_cast<size_t>(col)] = IQuat();
            remove_content(row);
        }
        auto it = std::upper_bound(pivots_.begin(), pivots_.end(), col);
        size_t at = static_cast<size_t>(it - pivots_.begin());
        pivots_.insert(it, col);
        rows_.insert(rows_.begin() + static_cast<long>(at), std::move(v));
        return true;
    }

    bool insert_line(const Line& l) { return insert(l.ivec()); }

    std::string key() const {
        std::string s;
        for (const auto& r : rows_) s += row_key(r);
        return s;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

    // Rational reduced row-echelon basis with pivot entries equal to 1.
    std::vector<Vector> basis() const {
        std::vector<Vector> out;
        out.reserve(rows_.size());
        for (size_t r = 0; r < rows_.size(); ++r) {
            Vector v = vector_of(rows_[r]);
            Rat inv = Rat(1) / Rat(pivval(r));
            for (auto& q : v) q = q * fe(inv);
            out.push_back(std::move(v));
        }
        return out;
    }

private:
    Int pivot_value(const IVec& v, int col) const {
        const IQuat& p = v[static_cast<size_t>(col)];
        return p.w.a;  // canonical rows have positive rational-integer pivots
    }
    Int pivval(size_t r) const { return rows_[r][static_cast<size_t>(pivots_[r])].w.a; }

    size_t n_ = 0;
    std::vector<IVec> rows_;
    std::vector<int> pivots_;
};

inline Subspace span_of(const std::vector<Vector>& vs) {
    if (vs.empty()) throw std::invalid_argument("span_of: empty list");
    Subspace s(vs[0].size());
    for (const auto& v : vs) s.insert(ivec_of(v));
    return s;
}

inline Subspace span_of_lines(const std::vector<Line>& ls, size_t n) {
    Subspace s(n);
    for (const auto& l : ls) s.insert_line(l);
    return s;
}

// --- reflections ---

// Order-2 reflection in the hyperplane orthogonal to the line spanned by
// alpha: r(v) = v - alpha * (2/(alpha,alpha)) * (alpha,v).
inline Vector reflect(const Vector& alpha, const Vector& v) {
    FieldElem nn = herm_norm(alpha);
    Quat coeff = Quat(field_inverse(nn) * fe(2)) * herm_form(alpha, v);
    Vector out = v;
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] - alpha[i] * coeff;
    return out;
}

inline Vector reflect(const Line& l, const Vector& v) { return reflect(vector_of(l.ivec()), v); }

// Image of the line spanned by v under the reflection in alpha, computed
// fraction-free: v*(alpha,alpha) - alpha*(2*(alpha,v)).
inline Line reflect_line(const IVec& alpha, const IField& alpha_norm, const IVec& v) {
    IQuat h = herm_form(alpha, v);
    h = h * IField(Int(2), Int(0), Int(0), Int(0));
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * alpha_norm - alpha[i] * h;
    return Line(std::move(out));
}

// --- orthogonal complement ---

namespace detail {

// Left-coefficient canonicalization: scale so the first nonzero entry is a
// positive rational integer (multiplying on the left), then make primitive.
inline void canonicalize_row_left(IVec& v) {
    int p = first_nonzero(v);
    if (p < 0) return;
    const IQuat& piv = v[static_cast<size_t>(p)];
    if (piv.is_real() && piv.w.is_rational()) {
        if (piv.w.a < 0)
            for (auto& q : v) q = -q;
    } else {
        IField n = piv.nrd();
        IQuat scale = piv.conj() * n.conj_product();
        for (auto& q : v) q = scale * q;
    }
    remove_content(v);
}

}  // namespace detail

// Solve sum_i C[r][i] x_i = 0 where scalars act on the left of C's entries;
// the solution set is a right subspace. Returns its canonical form.
inline Subspace kernel_right(std::vector<IVec> C, size_t n) {
    std::vector<IVec> rows;
    std::vector<int> pivots;
    for (auto& v : C) {
        for (size_t r = 0; r < rows.size(); ++r) {
            const IQuat coeff = v[static_cast<size_t>(pivots[r])];
            if (coeff.is_zero()) continue;
            Int npiv = rows[r][static_cast<size_t>(pivots[r])].w.a;
            IField scale(npiv, Int(0), Int(0), Int(0));
            for (size_t i = 0; i < n; ++i) v[i] = scale * v[i] - coeff * rows[r][i];
            v[static_cast<size_t>(pivots[r])] = IQuat();
        }
        if (ivec_is_zero(v)) continue;
        remove_content(v);
        detail::canonicalize_row_left(v);
        int col = first_nonzero(v);
        Int npiv = v[static_cast<size_t>(col)].w.a;
        for (size_t r = 0; r < rows.size(); ++r) {
            const IQuat coeff = rows[r][static_cast<size_t>(col)];
            if (coeff.is_zero()) continue;
            IField scale(npiv, Int(0), Int(0), Int(0));
            for (size_t i = 0; i < n; ++i) rows[r][i] = scale * rows[r][i] - coeff * v[i];
            rows[r][static_cast<size_t>(col)] = IQuat();
            remove_content(rows[r]);
        }
        rows.push_back(std::move(v));
        pivots.push_back(col);
    }
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    Subspace ker(n);
    for (size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        // x_f = prod of pivots; x_{p_r} = -(prod/N_r) * C_r[f]
        Int prod = 1;
        for (size_t r = 0; r < rows.size(); ++r) prod *= rows[r][static_cast<size_t>(pivots[r])].w.a;
        IVec x(n);
        x[f] = IQuat(IField(prod, Int(0), Int(0), Int(0)), IField(), IField(), IField());
        for (size_t r = 0; r < rows.size(); ++r) {
            Int piv = rows[r][static_cast<size_t>(pivots[r])].w.a;
            IField scale(-prod / piv, Int(0), Int(0), Int(0));
            x[static_cast<size_t>(pivots[r])] = scale * rows[r][f];
        }
        ker.insert(std::move(x));
    }
    return ker;
}

// Orthogonal complement of s inside H_F^n under the standard Hermitian form.
inline Subspace orth_complement(const Subspace& s, size_t n) {
    if (s.rank() > n) throw std::invalid_argument("orth_complement: rank exceeds dimension");
    std::vector<IVec> C;
    C.reserve(s.rank());
    for (const auto& row : s.rows()) {
        IVec c(n);
        for (size_t i = 0; i < n; ++i) c[i] = row[i].conj();
        C.push_back(std::move(c));
    }
    return kernel_right(std::move(C), n);
}

// --- angles ---

enum class AngleClass { RIGHT, PI_3, PI_4, PI_5, TWO_PI_5, OUTSIDE };

inline const char* angle_name(AngleClass a) {
    switch (a) {
        case AngleClass::RIGHT: return "pi/2";
        case AngleClass::PI_3: return "pi/3";
        case AngleClass::PI_4: return "pi/4";
        case AngleClass::PI_5: return "pi/5";
        case AngleClass::TWO_PI_5: return "2pi/5";
        default: return "outside";
    }
}

// cos^2 of the five catalog angles: 0, 1/4, 1/2, (3+sqrt5)/8, (3-sqrt5)/8.
inline FieldElem angle_cos2(AngleClass a) {
    switch (a) {
        case AngleClass::RIGHT: return fe(0);
        case AngleClass::PI_3: return fe(Rat(1, 4));
        case AngleClass::PI_4: return fe(Rat(1, 2));
        case AngleClass::PI_5: return FieldElem(Rat(3, 8), Rat(0), Rat(1, 8), Rat(0));
        case AngleClass::TWO_PI_5: return FieldElem(Rat(3, 8), Rat(0), Rat(-1, 8), Rat(0));
        default: throw std::invalid_argument("angle_cos2: OUTSIDE");
    }
}

// Classify cos^2(angle) = nrd((v1,v2)) / ((v1,v1)(v2,v2)) against the catalog.
inline AngleClass angle_class_vec(const IVec& a, const IVec& b) {
    IQuat h = herm_form(a, b);
    IField num = h.nrd();
    IField den = herm_norm(a) * herm_norm(b);
    if (num.is_zero()) return AngleClass::RIGHT;
    auto eq = [&](long mul, const IField& target) {
        IField lhs(Int(mul), Int(0), Int(0), Int(0));
        return num * lhs == target;
    };
    if (eq(4, den)) return AngleClass::PI_3;
    if (eq(2, den)) return AngleClass::PI_4;
    IField t3(Int(3), Int(0), Int(0), Int(0)), s5(Int(0), Int(0), Int(1), Int(0));
    IField e8(Int(8), Int(0), Int(0), Int(0));
    if (num * e8 == (t3 + s5) * den) return AngleClass::PI_5;
    if (num * e8 == (t3 - s5) * den) return AngleClass::TWO_PI_5;
    return AngleClass::OUTSIDE;
}

inline AngleClass angle_class(const Line& a, const Line& b) {
    if (a == b) throw std::invalid_argument("angle_class: identical lines");
    return angle_class_vec(a.ivec(), b.ivec());
}

}  // namespace qrefl
