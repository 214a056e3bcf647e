#pragma once

#include "systems.hpp"

#include <atomic>
#include <cstring>
#include <functional>
#include <map>
#include <thread>

namespace qrefl {

// Bitset over the lines of one system; supports up to 320 lines (R has 315).
struct LineMask {
    static constexpr size_t kWords = 5;
    std::array<uint64_t, kWords> w{};

    void set(size_t i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
    bool test(size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool subset_of(const LineMask& o) const {
        for (size_t t = 0; t < kWords; ++t)
            if (w[t] & ~o.w[t]) return false;
        return true;
    }
    void unite(const LineMask& o) {
        for (size_t t = 0; t < kWords; ++t) w[t] |= o.w[t];
    }
    size_t count() const {
        size_t c = 0;
        for (uint64_t x : w) c += static_cast<size_t>(__builtin_popcountll(x));
        return c;
    }
    int first() const {
        for (size_t t = 0; t < kWords; ++t)
            if (w[t]) return static_cast<int>(t * 64 + static_cast<size_t>(__builtin_ctzll(w[t])));
        return -1;
    }
    template <class Fn>
    void for_each(Fn fn) const {
        for (size_t t = 0; t < kWords; ++t) {
            uint64_t x = w[t];
            while (x) {
                fn(t * 64 + static_cast<size_t>(__builtin_ctzll(x)));
                x &= x - 1;
            }
        }
    }
    friend bool operator==(const LineMask& a, const LineMask& b) { return a.w == b.w; }
    friend bool operator<(const LineMask& a, const LineMask& b) { return a.w < b.w; }
};

constexpr int64_t kUnknown = -1;

struct Flat {
    LineMask mask;
    std::array<uint16_t, 6> basis_lines{};  // spanning lines, one per rank
    uint8_t rank = 0;
    int32_t fp = -1;                        // fingerprint id in FlatLattice::fp_labels
    int64_t mobius = kUnknown;
    int64_t order = kUnknown;               // parabolic order
    int64_t elliptic = kUnknown;

    Subspace span(const LineSystem& ls) const {
        Subspace s(ls.dim);
        for (size_t t = 0; t < rank; ++t) s.insert_line(ls.lines[basis_lines[t]]);
        return s;
    }
};

struct BuildOptions {
    unsigned threads = 0;  // 0 = hardware concurrency
    std::function<void(const std::string&)> progress;
};

class FlatLattice {
public:
    LineSystem system;
    std::vector<std::vector<Flat>> layers;   // layers[d] sorted by mask
    // line_index[d][l]: indices of layer-d flats containing line l, ascending
    std::vector<std::vector<std::vector<uint32_t>>> line_index;
    std::vector<std::string> fp_labels;
    bool has_mobius = false;
    bool has_elliptic = false;

    size_t top_rank() const { return layers.size() - 1; }
    const Flat& top() const { return layers.back()[0]; }

    size_t flat_count() const {
        size_t c = 0;
        for (const auto& l : layers) c += l.size();
        return c;
    }

    int32_t fp_id(const std::string& label) {
        for (size_t i = 0; i < fp_labels.size(); ++i)
            if (fp_labels[i] == label) return static_cast<int32_t>(i);
        fp_labels.push_back(label);
        return static_cast<int32_t>(fp_labels.size() - 1);
    }
    const std::string& fp_of(const Flat& f) const { return fp_labels[static_cast<size_t>(f.fp)]; }

    // binary search within a layer; flats are mask-sorted
    const Flat* find(size_t rank, const LineMask& m) const {
        if (rank >= layers.size()) return nullptr;
        const auto& layer = layers[rank];
        size_t lo = 0, hi = layer.size();
        while (lo < hi) {
            size_t mid = (lo + hi) / 2;
            if (layer[mid].mask < m) lo = mid + 1;
            else hi = mid;
        }
        if (lo < layer.size() && layer[lo].mask == m) return &layer[lo];
        return nullptr;
    }
};

namespace detail {

inline unsigned effective_threads(unsigned requested) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return requested == 0 ? hw : requested;
}

struct PendingFlat {
    LineMask mask;
    std::array<uint16_t, 6> basis_lines;
};

}  // namespace detail

// Enumerate all flats of a star-closed line system, layer by layer: flats of
// rank d+1 arise as span(F, l) for F of rank d and l outside F. The flats
// covering F partition the lines outside F, so each cover is materialized
// once per F; global dedup is by the canonical subspace key.
inline FlatLattice build_lattice(const LineSystem& ls, const BuildOptions& opt = {}) {
    if (ls.size() > LineMask::kWords * 64) throw std::invalid_argument("build_lattice: too many lines");
    FlatLattice fl;
    fl.system = ls;
    const size_t L = ls.size();
    const unsigned nthreads = detail::effective_threads(opt.threads);

    std::vector<const IVec*> livecs(L);
    for (size_t i = 0; i < L; ++i) livecs[i] = &ls.lines[i].ivec();

    fl.layers.emplace_back();
    fl.layers[0].push_back(Flat{});  // rank 0: zero subspace, empty mask

    if (L > 0) {
        std::vector<Flat> lines_layer(L);
        for (size_t i = 0; i < L; ++i) {
            lines_layer[i].mask.set(i);
            lines_layer[i].basis_lines[0] = static_cast<uint16_t>(i);
            lines_layer[i].rank = 1;
        }
        fl.layers.push_back(std::move(lines_layer));
    }

    while (true) {
        const auto& cur = fl.layers.back();
        const size_t d = fl.layers.size() - 1;
        if (cur.size() == 1 && cur[0].mask.count() == L) break;  // reached the top flat

        auto extend_range = [&](size_t lo, size_t hi, std::map<std::string, detail::PendingFlat>& out) {
            for (size_t fi = lo; fi < hi; ++fi) {
                const Flat& F = cur[fi];
                Subspace base = F.span(ls);
                LineMask covered = F.mask;
                for (size_t l = 0; l < L; ++l) {
                    if (covered.test(l)) continue;
                    Subspace S = base;
                    S.insert(*livecs[l]);
                    std::string key = S.key();
                    auto it = out.find(key);
                    if (it != out.end()) {
                        covered.unite(it->second.mask);
                        continue;
                    }
                    detail::PendingFlat pf;
                    pf.mask = F.mask;
                    pf.mask.set(l);
                    pf.basis_lines = F.basis_lines;
                    pf.basis_lines[d] = static_cast<uint16_t>(l);
                    for (size_t l2 = 0; l2 < L; ++l2) {
                        if (pf.mask.test(l2)) continue;
                        if (S.contains_vec(*livecs[l2])) pf.mask.set(l2);
                    }
                    covered.unite(pf.mask);
                    out.emplace(std::move(key), std::move(pf));
                }
            }
        };

        unsigned T = std::min<size_t>(nthreads, std::max<size_t>(1, cur.size() / 16));
        std::vector<std::map<std::string, detail::PendingFlat>> found(T);
        if (T <= 1) {
            extend_range(0, cur.size(), found[0]);
        } else {
            std::vector<std::thread> workers;
            size_t chunk = (cur.size() + T - 1) / T;
            for (unsigned t = 0; t < T; ++t) {
                size_t lo = t * chunk, hi = std::min(cur.size(), lo + chunk);
                workers.emplace_back(extend_range, lo, hi, std::ref(found[t]));
            }
            for (auto& w : workers) w.join();
        }

        std::vector<Flat> next;
        {
            std::vector<const detail::PendingFlat*> merged;
            std::map<std::string, const detail::PendingFlat*> dedup;
            for (const auto& m : found)
                for (const auto& [k, pf] : m) dedup.emplace(k, &pf);
            merged.reserve(dedup.size());
            for (const auto& [k, pf] : dedup) merged.push_back(pf);
            std::sort(merged.begin(), merged.end(),
                      [](const detail::PendingFlat* a, const detail::PendingFlat* b) { return a->mask < b->mask; });
            next.reserve(merged.size());
            for (const detail::PendingFlat* pf : merged) {
                Flat f;
                f.mask = pf->mask;
                f.basis_lines = pf->basis_lines;
                f.rank = static_cast<uint8_t>(d + 1);
                next.push_back(f);
            }
        }
        if (next.empty()) break;  // deficient systems: span smaller than ambient space
        if (opt.progress)
            opt.progress("rank " + std::to_string(d + 1) + ": " + std::to_string(next.size()) + " flats");
        fl.layers.push_back(std::move(next));
    }

    fl.line_index.resize(fl.layers.size());
    for (size_t d = 0; d < fl.layers.size(); ++d) {
        fl.line_index[d].assign(L, {});
        for (size_t i = 0; i < fl.layers[d].size(); ++i)
            fl.layers[d][i].mask.for_each([&](size_t l) {
                fl.line_index[d][l].push_back(static_cast<uint32_t>(i));
            });
    }
    return fl;
}

// --- fingerprints ---

namespace detail {

inline std::string rank2_label(const LineSystem& ls, const Flat& f) {
    std::array<size_t, 6> cnt{};
    std::vector<size_t> ids;
    f.mask.for_each([&](size_t l) { ids.push_back(l); });
    for (size_t a = 0; a < ids.size(); ++a)
        for (size_t b = a + 1; b < ids.size(); ++b)
            cnt[static_cast<size_t>(angle_class(ls.lines[ids[a]], ls.lines[ids[b]]))]++;
    const size_t n = ids.size();
    auto is = [&](size_t right, size_t p3, size_t p4, size_t p5, size_t p25) {
        return cnt[0] == right && cnt[1] == p3 && cnt[2] == p4 && cnt[3] == p5 && cnt[4] == p25;
    };
    if (n == 2 && is(1, 0, 0, 0, 0)) return "A1xA1";
    if (n == 3 && is(0, 3, 0, 0, 0)) return "A2";
    if (n == 4 && is(2, 0, 4, 0, 0)) return "B2";
    if (n == 5 && is(0, 0, 0, 5, 5)) return "G(5,5,2)";
    if (n == 5 && is(1, 3, 6, 0, 0)) return "G(3,1,2)";
    if (n == 6 && is(3, 0, 12, 0, 0)) return "G(4,2,2)";
    if (n == 10 && is(5, 0, 40, 0, 0)) return "W2(Q,pm1)";
    std::string s = "R2[n=" + std::to_string(n);
    static const char* tag[5] = { "r", "p3", "p4", "p5", "p25" };
    for (size_t t = 0; t < 5; ++t)
        if (cnt[t]) s += std::string("|") + tag[t] + "=" + std::to_string(cnt[t]);
    return s + "]";
}

// registry of higher-rank types keyed by (#lines, census of rank-2 subflat labels)
inline std::string highrank_label(size_t nlines, const std::map<std::string, size_t>& census2) {
    auto key_is = [&](std::initializer_list<std::pair<const char*, size_t>> want) {
        if (census2.size() != want.size()) return false;
        for (const auto& [lab, c] : want) {
            auto it = census2.find(lab);
            if (it == census2.end() || it->second != c) return false;
        }
        return true;
    };
    if (nlines == 3 && key_is({ { "A1xA1", 3 } })) return "A1xA1xA1";
    if (nlines == 4 && key_is({ { "A1xA1", 3 }, { "A2", 1 } })) return "A2xA1";
    if (nlines == 6 && key_is({ { "A1xA1", 3 }, { "A2", 4 } })) return "A3";
    if (nlines == 6 && key_is({ { "A1xA1", 9 }, { "A2", 2 } })) return "A2xA2";
    if (nlines == 5 && key_is({ { "A1xA1", 6 }, { "B2", 1 } })) return "B2xA1";
    if (nlines == 6 && key_is({ { "A1xA1", 5 }, { "G(5,5,2)", 1 } })) return "G(5,5,2)xA1";
    if (nlines == 9 && key_is({ { "A1xA1", 6 }, { "B2", 3 }, { "A2", 4 } })) return "B3";
    if (nlines == 9 && key_is({ { "A2", 12 } })) return "G(3,3,3)";
    if (nlines == 12 && key_is({ { "B2", 3 }, { "A2", 16 } })) return "G(4,4,3)";
    if (nlines == 15 && key_is({ { "A1xA1", 15 }, { "A2", 10 }, { "G(5,5,2)", 6 } })) return "H3";
    if (nlines == 15 && key_is({ { "A2", 25 }, { "G(5,5,2)", 3 } })) return "G(5,5,3)";
    if (nlines == 27 && key_is({ { "A1xA1", 24 }, { "A2", 64 }, { "W2(Q,pm1)", 3 } })) return "W3(Q,pm1)";
    if (nlines == 11 && key_is({ { "A1xA1", 10 }, { "W2(Q,pm1)", 1 } })) return "W2(Q,pm1)xA1";
    if (nlines == 7 && key_is({ { "A1xA1", 9 }, { "A2", 4 } })) return "A3xA1";
    if (nlines == 10 && key_is({ { "A1xA1", 15 }, { "A2", 10 } })) return "A4";
    if (nlines == 10 && key_is({ { "A1xA1", 9 }, { "A2", 12 } })) return "G(3,3,3)xA1";
    if (nlines == 18 && key_is({ { "A1xA1", 27 }, { "A2", 42 } })) return "G(3,3,4)";
    if (nlines == 36 && key_is({ { "A1xA1", 54 }, { "A2", 192 } })) return "S1";
    std::string s = "R?[n=" + std::to_string(nlines);
    for (const auto& [lab, c] : census2) s += "|" + lab + ":" + std::to_string(c);
    return s + "]";
}

// Matrix of the reflection r_alpha restricted to a flat, in the flat's
// echelon basis: coordinates are read off at the pivot columns.
inline UnitaryMatrix restricted_reflection(const std::vector<Vector>& basis,
                                           const std::vector<int>& pivots, const Vector& alpha) {
    const size_t d = basis.size();
    UnitaryMatrix M(d);
    FieldElem c = field_inverse(herm_norm(alpha)) * fe(2);
    for (size_t i = 0; i < d; ++i) {
        Quat coeff = Quat(c) * herm_form(alpha, basis[i]);
        for (size_t j = 0; j < d; ++j) {
            Quat entry = (i == j) ? Quat(1) : Quat();
            entry -= alpha[static_cast<size_t>(pivots[j])] * coeff;
            M.at(j, i) = entry;
        }
    }
    return M;
}

}  // namespace detail

// Parabolic order of a flat: order of the group generated by the reflections
// in its lines, computed in the flat's own basis.
inline std::optional<size_t> parabolic_order_direct(const FlatLattice& fl, const Flat& f, size_t cap) {
    if (f.rank == 0) return 1;
    Subspace sp = f.span(fl.system);
    std::vector<Vector> basis = sp.basis();
    std::vector<UnitaryMatrix> refl;
    f.mask.for_each([&](size_t l) {
        refl.push_back(detail::restricted_reflection(basis, sp.pivots(), vector_of(fl.system.lines[l].ivec())));
    });
    return reflection_group_order(refl, cap);
}

struct AnnotateOptions {
    int64_t full_order = 0;   // order of the whole group; 0 = skip elliptic pass
    size_t parabolic_cap = 100000;
    unsigned threads = 0;
    std::function<void(const std::string&)> progress;
};

// One bottom-up pass computing Mobius values, fingerprints, parabolic orders
// and elliptic counts. Layers are processed in rank order; for each flat the
// proper subflats are enumerated through the line index.
inline void annotate_lattice(FlatLattice& fl, const AnnotateOptions& opt = {}) {
    const size_t top = fl.top_rank();
    const bool want_e = opt.full_order > 0;

    {
        Flat& zero = fl.layers[0][0];
        zero.mobius = 1;
        zero.order = 1;
        zero.elliptic = 1;
        zero.fp = fl.fp_id("0");
    }
    if (top >= 1) {
        int32_t a1 = fl.fp_id("A1");
        for (Flat& f : fl.layers[1]) {
            f.mobius = 1;
            f.order = 2;
            f.elliptic = 1;
            f.fp = a1;
        }
    }

    for (size_t d = 2; d <= top; ++d) {
        auto& layer = fl.layers[d];
        const size_t nf = layer.size();
        std::vector<int64_t> mu_acc(nf), e_acc(nf);
        std::vector<std::map<std::string, size_t>> census2(nf);
        for (size_t i = 0; i < nf; ++i) {
            mu_acc[i] = (d % 2 == 1) ? 1 : -1;  // rank-0 contribution (-1)^{d-1}
            e_acc[i] = 1;
        }
        for (size_t r = 1; r < d; ++r) {
            int64_t sign = ((d - r - 1) % 2 == 0) ? 1 : -1;
            for (const Flat& Y : fl.layers[r]) {
                int l0 = Y.mask.first();
                const auto& cands = fl.line_index[d][static_cast<size_t>(l0)];
                int64_t smu = sign * Y.mobius;
                for (uint32_t xi : cands) {
                    Flat& X = layer[xi];
                    if (!Y.mask.subset_of(X.mask)) continue;
                    mu_acc[xi] += smu;
                    if (want_e) e_acc[xi] += Y.elliptic;
                    if (r == 2) census2[xi][fl.fp_of(Y)]++;
                }
            }
        }
        for (size_t i = 0; i < nf; ++i) {
            layer[i].mobius = mu_acc[i];
            std::string label = (d == 2) ? detail::rank2_label(fl.system, layer[i])
                                         : detail::highrank_label(layer[i].mask.count(), census2[i]);
            layer[i].fp = fl.fp_id(label);
        }
        if (want_e) {
            // parabolic orders, memoized per fingerprint and verified on a
            // second representative; a clash abandons the memo for that label
            if (d == top && nf == 1) {
                layer[0].order = opt.full_order;
            } else {
                std::map<int32_t, std::vector<size_t>> byfp;
                for (size_t i = 0; i < nf; ++i) byfp[layer[i].fp].push_back(i);
                for (auto& [fp, idxs] : byfp) {
                    auto ord0 = parabolic_order_direct(fl, layer[idxs[0]], opt.parabolic_cap);
                    if (!ord0) throw std::runtime_error("parabolic order cap exceeded");
                    bool memo_ok = true;
                    if (idxs.size() > 1) {
                        auto ord1 = parabolic_order_direct(fl, layer[idxs[1]], opt.parabolic_cap);
                        if (!ord1 || *ord1 != *ord0) memo_ok = false;
                    }
                    if (memo_ok) {
                        for (size_t i : idxs) layer[i].order = static_cast<int64_t>(*ord0);
                    } else {
                        for (size_t i : idxs) {
                            auto o = parabolic_order_direct(fl, layer[i], opt.parabolic_cap);
                            if (!o) throw std::runtime_error("parabolic order cap exceeded");
                            layer[i].order = static_cast<int64_t>(*o);
                        }
                    }
                }
            }
            for (size_t i = 0; i < nf; ++i) layer[i].elliptic = layer[i].order - e_acc[i];
        }
        if (opt.progress)
            opt.progress("annotated rank " + std::to_string(d) + " (" + std::to_string(nf) + " flats)");
    }
    fl.has_mobius = true;
    fl.has_elliptic = want_e;
}

// rk H^{3d} = sum of mu over rank-d flats.
inline IntPoly poincare(const FlatLattice& fl) {
    if (!fl.has_mobius) throw std::logic_error("poincare: lattice not annotated");
    std::vector<Int> coeffs(fl.top_rank() + 1, Int(0));
    for (size_t d = 0; d < fl.layers.size(); ++d)
        for (const Flat& f : fl.layers[d]) coeffs[d] += Int(f.mobius);
    return IntPoly(std::move(coeffs));
}

// c_W(t) = sum_d (sum of e over rank-d flats) t^d.
inline IntPoly codim_poly_via_lattice(const FlatLattice& fl) {
    if (!fl.has_elliptic) throw std::logic_error("codim_poly_via_lattice: elliptic pass not run");
    std::vector<Int> coeffs(fl.top_rank() + 1, Int(0));
    for (size_t d = 0; d < fl.layers.size(); ++d)
        for (const Flat& f : fl.layers[d]) coeffs[d] += Int(f.elliptic);
    return IntPoly(std::move(coeffs));
}

// census: rank -> fingerprint -> count
inline std::map<size_t, std::map<std::string, size_t>> census(const FlatLattice& fl) {
    std::map<size_t, std::map<std::string, size_t>> out;
    for (size_t d = 1; d < fl.layers.size(); ++d)
        for (const Flat& f : fl.layers[d]) out[d][fl.fp_of(f)]++;
    return out;
}

// Lines of the system orthogonal to the flat.
inline LineMask perp_lines(const FlatLattice& fl, const Flat& f) {
    LineMask out;
    Subspace sp = f.span(fl.system);
    for (size_t l = 0; l < fl.system.size(); ++l) {
        const IVec& v = fl.system.lines[l].ivec();
        bool orth = true;
        for (const auto& row : sp.rows())
            if (!herm_form(row, v).is_zero()) { orth = false; break; }
        if (orth) out.set(l);
    }
    return out;
}

// Fingerprint of the flat spanned by the lines orthogonal to f, or "none".
inline std::string perp_profile(const FlatLattice& fl, const Flat& f) {
    LineMask pl = perp_lines(fl, f);
    size_t cnt = pl.count();
    if (cnt == 0) return "none";
    Subspace sp(fl.system.dim);
    pl.for_each([&](size_t l) { sp.insert_line(fl.system.lines[l]); });
    const Flat* g = fl.find(sp.rank(), [&] {
        // the orthogonal lines span a flat; recover its full mask
        LineMask m;
        for (size_t l = 0; l < fl.system.size(); ++l)
            if (sp.contains_vec(fl.system.lines[l].ivec())) m.set(l);
        return m;
    }());
    if (!g) return "unindexed";
    return fl.fp_of(*g);
}

// --- closed forms and recursions ---

// Rank-2: p = (1+t)(1+(N*-1)t), c = 1 + N t + (|W|-N-1) t^2.
inline std::pair<IntPoly, IntPoly> rank2_closed_form(size_t n_lines, size_t n_reflections, size_t order) {
    if (n_lines < 1) throw std::invalid_argument("rank2_closed_form: N* >= 1");
    IntPoly p = IntPoly(std::vector<Int>{ Int(1), Int(1) }) *
                IntPoly(std::vector<Int>{ Int(1), Int(n_lines - 1) });
    IntPoly c(std::vector<Int>{ Int(1), Int(n_reflections), Int(order - n_reflections - 1) });
    return { p, c };
}

namespace detail {

inline std::string lines_memo_key(const std::vector<Line>& lines) {
    std::vector<std::string> keys;
    keys.reserve(lines.size());
    for (const Line& l : lines) keys.push_back(row_key(l.ivec()));
    std::sort(keys.begin(), keys.end());
    std::string out;
    for (const auto& k : keys) { out += k; out.push_back('\x02'); }
    return out;
}

inline IntPoly delres_rec(std::vector<Line> lines, std::map<std::string, IntPoly>& memo) {
    if (lines.empty()) return IntPoly::one();
    std::string key = lines_memo_key(lines);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Line h0 = lines.back();
    std::vector<Line> del(lines.begin(), lines.end() - 1);
    // restriction: project the other lines into the hyperplane h0-perp
    const IVec& alpha = h0.ivec();
    IField n0 = herm_norm(alpha);
    std::vector<Line> restr;
    std::unordered_map<std::string, char> seen;
    for (const Line& l : del) {
        const IVec& v = l.ivec();
        IQuat h = herm_form(alpha, v);
        IVec w(v.size());
        for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] * n0 - alpha[i] * h;
        Line proj(std::move(w));
        if (seen.emplace(row_key(proj.ivec()), 1).second) restr.push_back(proj);
    }
    IntPoly res = delres_rec(std::move(del), memo) +
                  IntPoly(std::vector<Int>{ Int(0), Int(1) }) * delres_rec(std::move(restr), memo);
    memo.emplace(std::move(key), res);
    return res;
}

}  // namespace detail

// Deletion-restriction recursion p_A = p_{A^0} + t p_{A_0}, with the last
// line as the distinguished hyperplane. Independent of the Mobius route.
inline IntPoly poincare_deletion_restriction(const std::vector<Line>& lines, size_t cap = 25) {
    if (lines.size() > cap) throw std::invalid_argument("poincare_deletion_restriction: size cap exceeded");
    std::map<std::string, IntPoly> memo;
    return detail::delres_rec(lines, memo);
}

inline IntPoly poincare_deletion_restriction(const LineSystem& ls, size_t cap = 25) {
    return poincare_deletion_restriction(ls.lines, cap);
}

// --- Goethals-Seidel decomposition ---

struct GSDecomposition {
    std::vector<size_t> delta;    // orthogonal to all three star lines
    std::vector<size_t> lambda;   // orthogonal to none
    std::vector<size_t> gamma_a, gamma_b, gamma_c;
};

inline bool is_3_system(const LineSystem& ls) {
    for (size_t x = 0; x < ls.size(); ++x)
        for (size_t y = x + 1; y < ls.size(); ++y) {
            AngleClass ac = angle_class(ls.lines[x], ls.lines[y]);
            if (ac != AngleClass::RIGHT && ac != AngleClass::PI_3) return false;
        }
    return true;
}

// Partition of a 3-system relative to a 3-star {a, b, c}. The quadratic
// 3-system validation can be skipped when iterating many stars of one system.
inline GSDecomposition gs_decomposition(const LineSystem& ls, const std::array<size_t, 3>& star,
                                        bool check_system = true) {
    if (check_system && !is_3_system(ls))
        throw std::invalid_argument("gs_decomposition: not a 3-system");
    const Line &a = ls.lines[star[0]], &b = ls.lines[star[1]], &c = ls.lines[star[2]];
    if (angle_class(a, b) != AngleClass::PI_3 || angle_class(a, c) != AngleClass::PI_3 ||
        angle_class(b, c) != AngleClass::PI_3)
        throw std::invalid_argument("gs_decomposition: star lines not pairwise at pi/3");
    Subspace plane(ls.dim);
    plane.insert_line(a);
    plane.insert_line(b);
    if (plane.rank() != 2 || !plane.contains(c))
        throw std::invalid_argument("gs_decomposition: star does not span a plane");
    GSDecomposition out;
    for (size_t l = 0; l < ls.size(); ++l) {
        if (l == star[0] || l == star[1] || l == star[2]) continue;
        bool pa = angle_class(ls.lines[l], a) == AngleClass::RIGHT;
        bool pb = angle_class(ls.lines[l], b) == AngleClass::RIGHT;
        bool pc = angle_class(ls.lines[l], c) == AngleClass::RIGHT;
        int np = (pa ? 1 : 0) + (pb ? 1 : 0) + (pc ? 1 : 0);
        if (np == 3) out.delta.push_back(l);
        else if (np == 0) out.lambda.push_back(l);
        else if (np == 1) {
            if (pa) out.gamma_a.push_back(l);
            else if (pb) out.gamma_b.push_back(l);
            else out.gamma_c.push_back(l);
        } else {
            // orthogonal to two star lines means orthogonal to their span
            throw std::logic_error("gs_decomposition: impossible partition");
        }
    }
    return out;
}

}  // namespace qrefl
