#include <catch2/catch_amalgamated.hpp>

#include <qrefl/quat.hpp>

#include <cmath>
#include <random>

using namespace qrefl;

namespace {

std::mt19937_64 rng(20240817);

Rat random_rat() {
    std::uniform_int_distribution<long> numd(-9, 9), dend(1, 4);
    return Rat(numd(rng), dend(rng));
}

FieldElem random_field() { return FieldElem(random_rat(), random_rat(), random_rat(), random_rat()); }

Quat random_quat() { return Quat(random_field(), random_field(), random_field(), random_field()); }

}  // namespace

TEST_CASE("field multiplication table") {
    FieldElem s2 = FieldElem::sqrt2(), s5 = FieldElem::sqrt5(), s10 = FieldElem::sqrt10();
    CHECK(s2 * s2 == fe(2));
    CHECK(s5 * s5 == fe(5));
    CHECK(s10 * s10 == fe(10));
    CHECK(s2 * s5 == s10);
    CHECK(s2 * s10 == fe(2) * s5);
    CHECK(s5 * s10 == fe(5) * s2);
}

TEST_CASE("field inverse and golden ratio") {
    FieldElem tau = golden();
    CHECK(tau * tau == tau + fe(1));  // tau^2 = tau + 1
    CHECK(field_inverse(tau) == golden_inv());
    for (int i = 0; i < 200; ++i) {
        FieldElem x = random_field();
        if (x.is_zero()) continue;
        CHECK(x * field_inverse(x) == fe(1));
    }
}

TEST_CASE("field_sign exact") {
    CHECK(field_sign(FieldElem()) == 0);
    CHECK(field_sign(golden()) == 1);
    // 3 - sqrt2 - sqrt5 is negative: 3 < 1.414... + 2.236...
    FieldElem x(Rat(3), Rat(-1), Rat(-1), Rat(0));
    CHECK(field_sign(x) == -1);
    CHECK(x.to_double() < 0);
    // tight cases around zero
    CHECK(field_sign(FieldElem(Rat(-140, 99), Rat(1), Rat(0), Rat(0))) == 1);   // sqrt2 > 140/99
    CHECK(field_sign(FieldElem(Rat(-99, 70), Rat(1), Rat(0), Rat(0))) == -1);   // sqrt2 < 99/70
    for (int i = 0; i < 200; ++i) {
        FieldElem f = random_field();
        double d = f.to_double();
        if (std::abs(d) < 1e-6) continue;
        CHECK(field_sign(f) == (d > 0 ? 1 : -1));
    }
}

TEST_CASE("float embedding agreement") {
    for (int i = 0; i < 500; ++i) {
        FieldElem a = random_field(), b = random_field();
        CHECK(std::abs((a * b).to_double() - a.to_double() * b.to_double()) < 1e-9);
        CHECK(std::abs((a + b).to_double() - (a.to_double() + b.to_double())) < 1e-9);
    }
}

TEST_CASE("quaternion relations") {
    Quat i = Quat::ui(), j = Quat::uj(), k = Quat::uk(), one = Quat::one();
    CHECK(i * i == -one);
    CHECK(j * j == -one);
    CHECK(k * k == -one);
    CHECK(i * j == k);
    CHECK(j * k == i);
    CHECK(k * i == j);
    CHECK(i * j * k == -one);
    Quat q = random_quat();
    CHECK(q * one == q);
    CHECK(one * q == q);
}

TEST_CASE("omega is a cube root of unity") {
    Quat w = omega();
    Quat w2 = w * w;
    // omega^2 = (-1 - i - j - k)/2 = conj(omega)
    CHECK(w2 == w.conj());
    CHECK(w * w * w == Quat::one());
}

TEST_CASE("icosian generator has order 10") {
    Quat s = icosian();
    CHECK(s.nrd() == fe(1));
    Quat p = Quat::one();
    for (int i = 1; i <= 10; ++i) {
        p = p * s;
        if (i < 10) CHECK(p != Quat::one());
    }
    CHECK(p == Quat::one());
}

TEST_CASE("quaternion inverse") {
    CHECK(quat_inverse(Quat::ui()) == -Quat::ui());
    CHECK(quat_inverse(Quat(2)) == Quat(fe(Rat(1, 2))));
    Quat onepi(fe(1), fe(1), fe(0), fe(0));  // 1 + i
    Quat expect(fe(Rat(1, 2)), fe(Rat(-1, 2)), fe(0), fe(0));
    CHECK(quat_inverse(onepi) == expect);
    CHECK(onepi * quat_inverse(onepi) == Quat::one());
    CHECK_THROWS(quat_inverse(Quat()));
    for (int i = 0; i < 100; ++i) {
        Quat q = random_quat();
        if (q.is_zero()) continue;
        CHECK(q * quat_inverse(q) == Quat::one());
        CHECK(quat_inverse(q) * q == Quat::one());
    }
}

TEST_CASE("reduced norm is multiplicative") {
    for (int i = 0; i < 1000; ++i) {
        Quat a = random_quat(), b = random_quat();
        CHECK((a * b).nrd() == a.nrd() * b.nrd());
    }
}

TEST_CASE("conjugation is an anti-homomorphism") {
    for (int i = 0; i < 300; ++i) {
        Quat a = random_quat(), b = random_quat();
        CHECK((a * b).conj() == b.conj() * a.conj());
        CHECK((a.conj() * a).is_real());
        CHECK(a.conj() * a == Quat(a.nrd()));
    }
}

TEST_CASE("canonical equality is coefficientwise") {
    Quat a(fe(Rat(2, 4)), fe(0), fe(0), fe(0));
    Quat b(fe(Rat(1, 2)), fe(0), fe(0), fe(0));
    CHECK(a == b);
    CHECK(hash_qu(a) == hash_qu(b));
}
