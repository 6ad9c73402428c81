#pragma once

// Exact arithmetic in Q and in cyclotomic fields Q(zeta_n).
//
// A Scalar is a polynomial in zeta of degree < phi(n) with rational
// coefficients, stored as an integer numerator vector over one common
// positive denominator. Every operation returns a fully reduced value, so
// structural equality is field equality.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "wbafrac/errors.hpp"

namespace wbafrac {

using Rational = mpq_class;
using Integer = mpz_class;

/// Integer polynomial, coefficients from degree 0 upwards.
using IntPoly = std::vector<Integer>;

/// The n-th cyclotomic polynomial. Throws InvalidArgument for n == 0.
const IntPoly& cyclotomic_polynomial(unsigned n);

/// Euler's totient.
unsigned euler_phi(unsigned n);

class CycloField {
public:
    /// Interned field Q(zeta_n); references stay valid for the program lifetime.
    static const CycloField& get(unsigned conductor);
    static const CycloField& rationals() { return get(1); }

    unsigned conductor() const { return conductor_; }
    unsigned degree() const { return degree_; }
    const IntPoly& minimal_polynomial() const { return *minpoly_; }

    bool operator==(const CycloField& other) const { return conductor_ == other.conductor_; }

private:
    explicit CycloField(unsigned conductor);

    unsigned conductor_;
    unsigned degree_;
    const IntPoly* minpoly_;
};

/// The common field of two operands: equal fields, or Q embedded into the other.
const CycloField& join_fields(const CycloField& a, const CycloField& b);

class Scalar {
public:
    Scalar();  // zero in Q
    Scalar(long value);  // NOLINT(google-explicit-constructor)
    explicit Scalar(const Rational& value);
    Scalar(const CycloField& field, const Rational& value);

    static Scalar zero(const CycloField& field) { return Scalar(field, Rational(0)); }
    static Scalar one(const CycloField& field) { return Scalar(field, Rational(1)); }
    /// zeta^k for any integer k.
    static Scalar zeta_power(const CycloField& field, long k);
    /// Build from rational coefficients of 1, zeta, zeta^2, ... (any length; reduced mod Phi_n).
    static Scalar from_coeffs(const CycloField& field, const std::vector<Rational>& coeffs);

    const CycloField& field() const { return *field_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Coefficients of 1, zeta, ..., zeta^(phi-1).
    std::vector<Rational> coeffs() const;
    Rational rational_value() const;  // throws unless is_rational()

    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;
    Scalar pow(long exponent) const;
    /// Same value viewed in a field containing this one's field (only Q embeds).
    Scalar promoted(const CycloField& target) const;

    std::string to_string() const;

private:
    void normalize();
    void reduce_mod_minpoly(std::vector<Integer>& poly) const;

    const CycloField* field_;
    std::vector<Integer> num_;  // length == field_->degree()
    Integer den_;               // > 0, gcd(content(num_), den_) == 1
};

/// [[n]] = (q^n - q^-n) / (q - q^-1). Throws InvalidArgument if q^2 == 1.
Scalar quantum_integer(long n, const Scalar& q);

/// zeta^r + zeta^-r in Q(zeta_{8r}); squares to 2. Requires 8 | conductor.
Scalar sqrt_two(const CycloField& field);

nlohmann::json to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

}  // namespace wbafrac
