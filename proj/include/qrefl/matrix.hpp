#pragma once

#include "geometry.hpp"

namespace qrefl {

// Square matrix over H_F acting on column vectors from the left; scalars act
// on the right, so left matrix action is H-linear.
struct UnitaryMatrix {
    size_t n = 0;
    std::vector<Quat> e;  // row-major

    UnitaryMatrix() = default;
    explicit UnitaryMatrix(size_t n_) : n(n_), e(n_ * n_) {}

    static UnitaryMatrix identity(size_t n) {
        UnitaryMatrix m(n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = Quat(1);
        return m;
    }

    Quat& at(size_t i, size_t j) { return e[i * n + j]; }
    const Quat& at(size_t i, size_t j) const { return e[i * n + j]; }

    friend bool operator==(const UnitaryMatrix& a, const UnitaryMatrix& b) {
        return a.n == b.n && a.e == b.e;
    }
    friend bool operator!=(const UnitaryMatrix& a, const UnitaryMatrix& b) { return !(a == b); }

    friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
        UnitaryMatrix c(a.n);
        for (size_t i = 0; i < a.n; ++i)
            for (size_t k = 0; k < a.n; ++k) {
                const Quat& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < a.n; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    c.at(i, j) += aik * b.at(k, j);
                }
            }
        return c;
    }

    Vector apply(const Vector& v) const {
        Vector out(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (at(i, j).is_zero() || v[j].is_zero()) continue;
                out[i] += at(i, j) * v[j];
            }
        return out;
    }

    UnitaryMatrix conj_transpose() const {
        UnitaryMatrix m(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) m.at(i, j) = at(j, i).conj();
        return m;
    }

    bool is_unitary() const { return (*this) * conj_transpose() == identity(n); }

    std::string key() const {
        std::string s;
        for (const Quat& q : e)
            for (const FieldElem* f : { &q.w, &q.x, &q.y, &q.z })
                for (const Rat* r : { &f->a, &f->b, &f->c, &f->d }) {
                    append_int_bytes(s, num(*r));
                    append_int_bytes(s, den(*r));
                }
        return s;
    }
};

// Reflection of order 2 in the hyperplane orthogonal to alpha:
// M[i][j] = delta_ij - alpha_i * (2/(alpha,alpha)) * conj(alpha_j).
inline UnitaryMatrix reflection_matrix(const Vector& alpha) {
    size_t n = alpha.size();
    FieldElem c = field_inverse(herm_norm(alpha)) * fe(2);
    UnitaryMatrix m = UnitaryMatrix::identity(n);
    for (size_t i = 0; i < n; ++i) {
        if (alpha[i].is_zero()) continue;
        Quat ai = alpha[i] * c;
        for (size_t j = 0; j < n; ++j) {
            if (alpha[j].is_zero()) continue;
            m.at(i, j) -= ai * alpha[j].conj();
        }
    }
    return m;
}

inline UnitaryMatrix reflection_matrix(const Line& l) { return reflection_matrix(vector_of(l.ivec())); }

// Fixed subspace {v : Mv = v} as a canonical right subspace.
inline Subspace fixed_space(const UnitaryMatrix& m) {
    std::vector<IVec> C;
    for (size_t i = 0; i < m.n; ++i) {
        Vector row(m.n);
        for (size_t j = 0; j < m.n; ++j) {
            row[j] = m.at(i, j);
            if (i == j) row[j] -= Quat(1);
        }
        IVec irow = ivec_of(row);
        if (!ivec_is_zero(irow)) C.push_back(std::move(irow));
    }
    return kernel_right(std::move(C), m.n);
}

// H-codimension of the fixed space.
inline size_t fix_codim(const UnitaryMatrix& m) { return m.n - fixed_space(m).rank(); }

}  // namespace qrefl
