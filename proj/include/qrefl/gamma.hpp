#pragma once

#include "quat.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrefl {

namespace detail {

inline std::string quat_sort_key(const Quat& q) {
    std::string s;
    for (const FieldElem* f : { &q.w, &q.x, &q.y, &q.z })
        for (const Rat* r : { &f->a, &f->b, &f->c, &f->d }) {
            append_int_bytes(s, num(*r));
            append_int_bytes(s, den(*r));
        }
    return s;
}

inline std::vector<Quat> quat_closure(std::vector<Quat> gens, size_t cap) {
    std::map<std::string, Quat> seen;
    seen.emplace(quat_sort_key(Quat::one()), Quat::one());
    std::vector<Quat> frontier{ Quat::one() };
    for (const Quat& g : gens) {
        auto k = quat_sort_key(g);
        if (seen.emplace(k, g).second) frontier.push_back(g);
    }
    while (!frontier.empty()) {
        std::vector<Quat> next;
        for (const Quat& f : frontier)
            for (const Quat& g : gens) {
                Quat p = f * g;
                if (seen.emplace(quat_sort_key(p), p).second) {
                    next.push_back(p);
                    if (seen.size() > cap) throw std::runtime_error("quat_closure: cap exceeded");
                }
            }
        frontier = std::move(next);
    }
    std::vector<Quat> out;
    out.reserve(seen.size());
    for (auto& [k, q] : seen) out.push_back(q);  // deterministic order
    return out;
}

}  // namespace detail

// A finite subgroup Gamma of the unit quaternions together with a normal
// subgroup Delta such that Gamma/Delta is abelian.
struct GammaGroup {
    std::string name;
    std::string delta_name;
    std::vector<Quat> elements;       // sorted canonically; closed under product
    std::vector<std::string> keys;    // sort keys, parallel to elements
    std::vector<size_t> delta;        // indices into elements
    std::vector<char> delta_flag;     // membership, parallel to elements

    size_t order() const { return elements.size(); }
    size_t delta_order() const { return delta.size(); }
    bool delta_trivial() const { return delta.size() == 1; }

    std::optional<size_t> index_of(const Quat& q) const {
        std::string key = detail::quat_sort_key(q);
        auto it = std::lower_bound(keys.begin(), keys.end(), key);
        if (it != keys.end() && *it == key) return static_cast<size_t>(it - keys.begin());
        return std::nullopt;
    }
    bool contains(const Quat& q) const { return index_of(q).has_value(); }
    bool in_delta(const Quat& q) const {
        auto i = index_of(q);
        return i && delta_flag[*i];
    }

    std::string spec() const { return name + ":" + delta_name; }
};

// Generators of the finite subgroups of H^x representable over Q(sqrt2, sqrt5):
// cyclic C1..C6, C8, C10; binary dihedral D1..D5 (order 4m); binary
// tetrahedral, octahedral, icosahedral.
inline std::vector<Quat> gamma_generators(const std::string& name) {
    Quat i = Quat::ui(), j = Quat::uj(), k = Quat::uk();
    Quat zeta8(FieldElem(Rat(0), Rat(1, 2), Rat(0), Rat(0)),
               FieldElem(Rat(0), Rat(1, 2), Rat(0), Rat(0)), fe(0), fe(0));  // (1+i)/sqrt2
    Quat sigma = icosian();                                                  // order 10
    if (name == "C1") return { Quat::one() };
    if (name == "C2") return { -Quat::one() };
    if (name == "C3") return { omega() };
    if (name == "C4") return { i };
    if (name == "C5") return { sigma * sigma };
    if (name == "C6") return { -omega() };
    if (name == "C8") return { zeta8 };
    if (name == "C10") return { sigma };
    if (name == "D1") return { -Quat::one(), j };
    if (name == "D2") return { i, j };  // quaternion group Q8
    if (name == "D3") {
        Quat v(fe(0), FieldElem(Rat(0), Rat(1, 2), Rat(0), Rat(0)),
               FieldElem(Rat(0), Rat(-1, 2), Rat(0), Rat(0)), fe(0));  // (i-j)/sqrt2
        return { -omega(), v };
    }
    if (name == "D4") return { zeta8, j };
    if (name == "D5") return { sigma, k };
    if (name == "T") return { omega(), i };
    if (name == "O") return { omega(), zeta8 };
    if (name == "I") return { omega(), sigma };
    throw std::invalid_argument("gamma_generators: unsupported group " + name);
}

inline size_t gamma_expected_order(const std::string& name) {
    if (name == "T") return 24;
    if (name == "O") return 48;
    if (name == "I") return 120;
    if (name.size() >= 2 && name[0] == 'C') return static_cast<size_t>(std::stoul(name.substr(1)));
    if (name.size() >= 2 && name[0] == 'D') return 4 * static_cast<size_t>(std::stoul(name.substr(1)));
    throw std::invalid_argument("gamma_expected_order: " + name);
}

// Build Gamma together with a named normal subgroup Delta.
// delta_spec: "full" | "triv" | "pm1" | "index<k>".
inline GammaGroup gamma_group(const std::string& name, const std::string& delta_spec = "full") {
    GammaGroup g;
    g.name = name;
    g.delta_name = delta_spec;
    g.elements = detail::quat_closure(gamma_generators(name), 360);
    if (g.elements.size() != gamma_expected_order(name))
        throw std::logic_error("gamma_group: closure has wrong order for " + name);
    g.keys.reserve(g.elements.size());
    for (const Quat& q : g.elements) g.keys.push_back(detail::quat_sort_key(q));

    auto subgroup_closure = [&](std::vector<Quat> gens) {
        auto elems = detail::quat_closure(std::move(gens), g.elements.size());
        std::vector<size_t> idx;
        for (const Quat& q : elems) {
            auto r = g.index_of(q);
            if (!r) throw std::logic_error("gamma_group: element lookup failed");
            idx.push_back(*r);
        }
        std::sort(idx.begin(), idx.end());
        return idx;
    };

    if (delta_spec == "full") {
        for (size_t t = 0; t < g.elements.size(); ++t) g.delta.push_back(t);
    } else if (delta_spec == "triv") {
        g.delta = subgroup_closure({ Quat::one() });
    } else if (delta_spec == "pm1") {
        if (!g.contains(-Quat::one())) throw std::invalid_argument("delta pm1: -1 not in Gamma");
        g.delta = subgroup_closure({ -Quat::one() });
    } else if (delta_spec.rfind("index", 0) == 0) {
        size_t k = static_cast<size_t>(std::stoul(delta_spec.substr(5)));
        if (k == 0 || g.order() % k != 0) throw std::invalid_argument("delta index does not divide order");
        size_t target = g.order() / k;
        if (name[0] == 'C') {
            Quat gen;  // a generator of the cyclic group
            for (const Quat& q : g.elements) {
                if (detail::quat_closure({ q }, g.order() + 1).size() == g.order()) { gen = q; break; }
            }
            Quat gk = Quat::one();
            for (size_t t = 0; t < k; ++t) gk = gk * gen;
            g.delta = subgroup_closure({ gk });
        } else if (name == "D2" && k == 2) {
            // the three index-2 subgroups of Q8 give identical invariants; fix <i>
            g.delta = subgroup_closure({ Quat::ui() });
        } else {
            throw std::invalid_argument("delta " + delta_spec + " unsupported for " + name);
        }
        if (g.delta.size() != target) throw std::logic_error("delta subgroup has wrong order");
    } else {
        throw std::invalid_argument("unknown delta spec: " + delta_spec);
    }

    g.delta_flag.assign(g.elements.size(), 0);
    for (size_t d : g.delta) g.delta_flag[d] = 1;

    for (const Quat& q : g.elements)
        if (q.nrd() != fe(1)) throw std::logic_error("gamma_group: non-unit element");

    if (g.delta.size() < g.elements.size()) {
        // Delta normal and Gamma/Delta abelian
        for (const Quat& a : g.elements) {
            Quat ainv = quat_inverse(a);
            for (size_t d : g.delta)
                if (!g.in_delta(a * g.elements[d] * ainv))
                    throw std::logic_error("gamma_group: Delta not normal");
            for (const Quat& b : g.elements)
                if (!g.in_delta(a * b * ainv * quat_inverse(b)))
                    throw std::invalid_argument("gamma_group: Gamma/Delta not abelian");
        }
    }
    return g;
}

}  // namespace qrefl
