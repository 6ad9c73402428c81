#include "doctest.h"

#include "support.hpp"
#include "wbafrac/field.hpp"

using namespace wbafrac;
using namespace wbafrac::testing;

namespace {

Scalar z(const CycloField& f, long k) { return Scalar::zeta_power(f, k); }

}  // namespace

TEST_CASE("cyclotomic polynomials agree with two independent constructions")
{
    CHECK(same_poly({-1, 1}, cyclotomic_polynomial(1)));
    CHECK(same_poly({1, 0, 0, 0, 1}, cyclotomic_polynomial(8)));
    CHECK(same_poly({1, 0, -1, 0, 1}, cyclotomic_polynomial(12)));
    for (unsigned n = 1; n <= 64; ++n) {
        CAPTURE(n);
        CHECK(same_poly(cyclotomic_by_division(n), cyclotomic_polynomial(n)));
        CHECK(same_poly(cyclotomic_by_mobius(n), cyclotomic_polynomial(n)));
        CHECK(cyclotomic_polynomial(n).size() == euler_phi(n) + 1);
    }
    CHECK_THROWS_AS(cyclotomic_polynomial(0), InvalidArgument);
}

TEST_CASE("basic cyclotomic arithmetic")
{
    const auto& q4 = CycloField::get(4);
    CHECK(z(q4, 1) * z(q4, 1) == Scalar(q4, -1));

    const auto& q8 = CycloField::get(8);
    Scalar zeta = z(q8, 1);
    CHECK(zeta.inverse() == -z(q8, 3));
    CHECK(zeta * -z(q8, 3) == Scalar::one(q8));
    CHECK((Scalar(q8, 1) + zeta) + (Scalar(q8, 1) - zeta) == Scalar(2));
    CHECK(z(q8, 8).is_one());
    CHECK(z(q8, -1) == z(q8, 7));
    CHECK_THROWS_AS(Scalar::zero(q8).inverse(), DivisionByZero);
    CHECK_THROWS_AS(z(q8, 1) + z(CycloField::get(12), 1), FieldMismatch);
}

TEST_CASE("rationals embed into every cyclotomic field")
{
    const auto& f = CycloField::get(24);
    Scalar a = z(f, 5) + Scalar(Rational(1, 3));
    CHECK(a.field().conductor() == 24);
    CHECK(a - z(f, 5) == Scalar(Rational(1, 3)));
    CHECK((a - z(f, 5)).is_rational());
}

TEST_CASE("field axioms on random scalars")
{
    std::mt19937_64 rng(7);
    for (unsigned n : {1u, 4u, 8u, 12u, 16u, 24u}) {
        const auto& f = CycloField::get(n);
        for (int i = 0; i < 200; ++i) {
            Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
}

TEST_CASE("self-assignment arithmetic is alias safe")
{
    const auto& f = CycloField::get(8);
    Scalar a = z(f, 1) + Scalar(2);
    Scalar expect = a * a;
    a *= a;
    CHECK(a == expect);
    Scalar b = z(f, 3);
    Scalar twice = b + b;
    b += b;
    CHECK(b == twice);
}

TEST_CASE("quantum integers")
{
    const auto& f12 = CycloField::get(12);
    Scalar q = z(f12, 2);
    CHECK(quantum_integer(0, q).is_zero());
    CHECK(quantum_integer(1, q).is_one());
    Scalar two = quantum_integer(2, q);
    CHECK(two == q + q.inverse());
    CHECK(two * (q - q.inverse()) == q.pow(2) - q.pow(-2));
    for (long m = 0; m <= 10; ++m) CHECK(quantum_integer(m + 1, q) == q * quantum_integer(m, q) + q.pow(-m));
    CHECK(quantum_integer(-3, q) == -quantum_integer(3, q));
    CHECK_THROWS_AS(quantum_integer(2, Scalar(-1)), InvalidArgument);

    for (long r = 3; r <= 6; ++r) {
        const auto& f = CycloField::get(static_cast<unsigned>(8 * r));
        Scalar qr = z(f, 4);
        for (long n = 1; n < r; ++n) CHECK_FALSE(quantum_integer(n, qr).is_zero());
        CHECK(quantum_integer(r, qr).is_zero());
    }
}

TEST_CASE("square root of two")
{
    for (unsigned r = 1; r <= 4; ++r) {
        const auto& f = CycloField::get(8 * r);
        Scalar s = sqrt_two(f);
        CHECK(s * s == Scalar(2));
        CHECK((-s) * (-s) == Scalar(2));
        CHECK(s == z(f, r) + z(f, -static_cast<long>(r)));
    }
    CHECK_THROWS_AS(sqrt_two(CycloField::get(12)), InvalidArgument);
}

TEST_CASE("scalar json round trip")
{
    const auto& f = CycloField::get(16);
    Scalar a = z(f, 3) * Scalar(Rational(-7, 5)) + Scalar(Rational(1, 9));
    auto j = to_json(a);
    CHECK(j["conductor"] == 16);
    CHECK(scalar_from_json(j) == a);
    CHECK(to_json(scalar_from_json(j)).dump() == j.dump());
}
