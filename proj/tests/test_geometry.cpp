#include <catch2/catch_amalgamated.hpp>

#include <qrefl/geometry.hpp>

#include <random>

using namespace qrefl;

namespace {

std::mt19937_64 rng(987654);

Rat rrat() {
    std::uniform_int_distribution<long> numd(-5, 5), dend(1, 3);
    return Rat(numd(rng), dend(rng));
}
FieldElem rfield() {
    std::uniform_int_distribution<int> pick(0, 3);
    FieldElem f;
    f.a = rrat();
    if (pick(rng) == 0) f.b = rrat();
    if (pick(rng) == 0) f.c = rrat();
    return f;
}
Quat rquat() { return Quat(rfield(), rfield(), rfield(), rfield()); }
Vector rvec(size_t n) {
    Vector v(n);
    for (auto& q : v) q = rquat();
    return v;
}
Vector rvec_nonzero(size_t n) {
    for (;;) {
        Vector v = rvec(n);
        for (const auto& q : v)
            if (!q.is_zero()) return v;
    }
}

Vector vec(std::initializer_list<long> cs) {
    Vector v;
    for (long c : cs) v.push_back(Quat(c));
    return v;
}

}  // namespace

TEST_CASE("hermitian form basics") {
    Vector u{ Quat(1), Quat::ui() };
    CHECK(herm_form(u, u) == Quat(2));
    CHECK(herm_form(vec({ 1, 0 }), vec({ 0, 1 })) == Quat());
    CHECK(herm_form(vec({ 1, -1, 0, 0 }), vec({ 0, 1, -1, 0 })) == Quat(-1));
    CHECK_THROWS(herm_form(vec({ 1 }), vec({ 1, 0 })));
    // conjugate-linear in the first slot, right-linear in the second
    for (int t = 0; t < 50; ++t) {
        Vector a = rvec(3), b = rvec(3);
        Quat s = rquat();
        Vector bs = b, as = a;
        for (size_t i = 0; i < 3; ++i) { bs[i] = b[i] * s; as[i] = a[i] * s; }
        CHECK(herm_form(a, bs) == herm_form(a, b) * s);
        CHECK(herm_form(as, b) == s.conj() * herm_form(a, b));
    }
}

TEST_CASE("positivity of the form") {
    for (int t = 0; t < 100; ++t) {
        Vector v = rvec_nonzero(4);
        Quat n = herm_form(v, v);
        CHECK(n.is_real());
        CHECK(field_sign(n.w) == 1);
    }
}

TEST_CASE("line canonicalization") {
    Line l1(vec({ 1, 0 }));
    Vector w{ Quat::ui(), Quat() };
    Line l2(w);
    CHECK(l1 == l2);  // right-proportional vectors span one line
    Vector rep = l2.rep();
    CHECK(rep[0] == Quat(1));
    // first nonzero coordinate of every canonical rep is 1
    for (int t = 0; t < 100; ++t) {
        Vector v = rvec_nonzero(3);
        Line l(v);
        Vector r = l.rep();
        int p = -1;
        for (size_t i = 0; i < r.size(); ++i)
            if (!r[i].is_zero()) { p = static_cast<int>(i); break; }
        REQUIRE(p >= 0);
        CHECK(r[static_cast<size_t>(p)] == Quat(1));
        // scaling by a random nonzero quaternion does not change the line
        Quat s = rquat();
        if (s.is_zero()) continue;
        Vector vs = v;
        for (auto& q : vs) q = q * s;
        CHECK(Line(vs) == l);
    }
}

TEST_CASE("angle classes") {
    Line a(vec({ 1, -1, 0, 0 })), b(vec({ 0, 1, -1, 0 }));
    CHECK(angle_class(a, b) == AngleClass::PI_3);
    CHECK(angle_class(Line(vec({ 1, 0 })), Line(vec({ 0, 1 }))) == AngleClass::RIGHT);
    // span(2,0,0) vs span(tau, -tau^{-1}, -1): cos^2 = (3+sqrt5)/8
    Vector v1 = vec({ 2, 0, 0 });
    Vector v2{ Quat(golden()), -Quat(golden_inv()), -Quat(1) };
    CHECK(angle_class(Line(v1), Line(v2)) == AngleClass::PI_5);
    CHECK_THROWS(angle_class(a, a));
    // a pair outside the catalog
    CHECK(angle_class(Line(vec({ 1, 0 })), Line(vec({ 3, 1 }))) == AngleClass::OUTSIDE);
}

TEST_CASE("reflection formula") {
    // (v1,v1) = (v2,v2) = 2, (v1,v2) = -1: r_{v1}(v2) = v1 + v2
    Vector v1 = vec({ 1, -1, 0 }), v2 = vec({ 0, 1, -1 });
    REQUIRE(herm_form(v1, v2) == Quat(-1));
    Vector image = reflect(v1, v2);
    CHECK(image == vec({ 1, 0, -1 }));

    // fixes the orthogonal complement pointwise
    Vector w = vec({ 1, 1, 2 });
    REQUIRE(herm_form(v1, w) == Quat());
    CHECK(reflect(v1, w) == w);

    // involution and isometry on random data
    for (int t = 0; t < 100; ++t) {
        Vector alpha = rvec_nonzero(3), v = rvec(3), u = rvec(3);
        CHECK(reflect(alpha, reflect(alpha, v)) == v);
        CHECK(herm_form(reflect(alpha, u), reflect(alpha, v)) == herm_form(u, v));
    }
    // negates its own line
    Vector m = reflect(v1, v1);
    for (size_t i = 0; i < 3; ++i) CHECK(m[i] == -v1[i]);
}

TEST_CASE("span and contains") {
    Subspace s1 = span_of({ vec({ 1, 0 }), Vector{ Quat::ui(), Quat() } });
    CHECK(s1.rank() == 1);
    CHECK(s1.basis()[0] == vec({ 1, 0 }));

    Subspace s2 = span_of({ vec({ 1, -1, 0 }), vec({ 0, 1, -1 }) });
    CHECK(s2.rank() == 2);

    Subspace plane = span_of({ vec({ 1, 0 }), vec({ 0, 1 }) });
    Vector mixed{ Quat(fe(1), fe(1), fe(0), fe(0)), Quat::uj() };  // (1+i, j)
    CHECK(plane.contains(Line(mixed)));

    Subspace one = span_of({ vec({ 1, 0, 0 }) });
    CHECK_FALSE(one.contains(Line(vec({ 0, 1, 0 }))));

    // the six A3 lines lie in the span of a, b, d
    Vector a = vec({ 1, -1, 0, 0 }), b = vec({ 1, 0, -1, 0 }), d = vec({ 1, 0, 0, -1 });
    Subspace sa3 = span_of({ a, b, d });
    CHECK(sa3.rank() == 3);
    for (auto v : { vec({ 0, 1, -1, 0 }), vec({ 0, 1, 0, -1 }), vec({ 0, 0, 1, -1 }), a, b, d })
        CHECK(sa3.contains(Line(v)));
    CHECK_FALSE(sa3.contains(Line(vec({ 1, 1, 1, 1 }))));

    // nine G(3,3,3) lines span rank 3
    std::vector<Vector> g333;
    Quat w = omega();
    for (int k = 0; k < 3; ++k) {
        Quat wk = Quat::one();
        for (int t = 0; t < k; ++t) wk = wk * w;
        g333.push_back(Vector{ Quat(1), -wk, Quat() });
        g333.push_back(Vector{ Quat(1), Quat(), -wk });
        g333.push_back(Vector{ Quat(), Quat(1), -wk });
    }
    CHECK(span_of(g333).rank() == 3);
}

TEST_CASE("canonical echelon keys identify subspaces") {
    for (int t = 0; t < 50; ++t) {
        Vector a = rvec_nonzero(4), b = rvec_nonzero(4);
        Subspace s = span_of({ a, b });
        // re-span from scrambled right-multiples
        Quat sa = rquat(), sb = rquat();
        if (sa.is_zero() || sb.is_zero()) continue;
        Vector a2 = a, b2 = b;
        for (size_t i = 0; i < 4; ++i) { a2[i] = a2[i] * sa; b2[i] = b2[i] * sb; }
        Vector sum(4);
        for (size_t i = 0; i < 4; ++i) sum[i] = a2[i] + b2[i];
        Subspace s2 = span_of({ b2, sum });
        if (s.rank() == s2.rank()) {
            CHECK(s.key() == s2.key());
            CHECK(s == s2);
        }
    }
}

TEST_CASE("orthogonal complement") {
    Subspace last = span_of({ vec({ 0, 0, 0, 0, 1 }) });
    Subspace comp = orth_complement(last, 5);
    CHECK(comp.rank() == 4);
    for (long i = 0; i < 4; ++i) {
        Vector e(5, Quat());
        e[static_cast<size_t>(i)] = Quat(1);
        CHECK(comp.contains(Line(e)));
    }

    for (int t = 0; t < 50; ++t) {
        Subspace s = span_of({ rvec_nonzero(4), rvec_nonzero(4) });
        Subspace c = orth_complement(s, 4);
        CHECK(c.rank() == 4 - s.rank());
        for (const auto& br : s.basis())
            for (const auto& bc : c.basis())
                CHECK(herm_form(br, bc) == Quat());
        CHECK(orth_complement(c, 4) == s);
    }
}

TEST_CASE("Cauchy-Schwarz with equality iff proportional") {
    for (int t = 0; t < 200; ++t) {
        Vector u = rvec_nonzero(3), v = rvec_nonzero(3);
        FieldElem lhs = herm_form(u, v).nrd();
        FieldElem rhs = (herm_form(u, u) * herm_form(v, v)).w;
        int s = field_sign(rhs - lhs);
        CHECK(s >= 0);
        if (s == 0) CHECK(Line(u) == Line(v));
        else CHECK(Line(u) != Line(v));
    }
    // equality case
    Vector u = vec({ 1, 2, 3 });
    Vector uq = u;
    Quat q = rquat();
    while (q.is_zero()) q = rquat();
    for (auto& e : uq) e = e * q;
    CHECK(herm_form(u, uq).nrd() == (herm_form(u, u) * herm_form(uq, uq)).w);
}
