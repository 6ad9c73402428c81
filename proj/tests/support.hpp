#pragma once

// Shared helpers for the test binaries: random generators and small oracles.

#include <random>
#include <vector>

#include "wbafrac/field.hpp"

namespace wbafrac::testing {

/// Random element of Q(zeta_n) with small numerators and denominators.
inline Scalar random_scalar(std::mt19937_64& rng, const CycloField& f, int span = 6)
{
    std::uniform_int_distribution<int> num(-span, span), den(1, span);
    std::vector<Rational> cs;
    for (unsigned i = 0; i < f.degree(); ++i) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        cs.push_back(q);
    }
    return Scalar::from_coeffs(f, cs);
}

/// Polynomials with machine-integer coefficients, lowest degree first.
using SmallPoly = std::vector<long long>;

inline SmallPoly small_mul(const SmallPoly& a, const SmallPoly& b)
{
    SmallPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// Exact division by a monic polynomial; the remainder must vanish.
inline SmallPoly small_div(SmallPoly a, const SmallPoly& b)
{
    const std::size_t db = b.size() - 1;
    SmallPoly q(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        long long c = a[k];
        q[k - db] = c;
        for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
    }
    return q;
}

/// x^n - 1
inline SmallPoly x_pow_minus_one(unsigned n)
{
    SmallPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    return p;
}

/// Phi_n by recursive division of x^n - 1 by Phi_d for the proper divisors d.
inline SmallPoly cyclotomic_by_division(unsigned n)
{
    SmallPoly p = x_pow_minus_one(n);
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) p = small_div(p, cyclotomic_by_division(d));
    return p;
}

inline int mobius(unsigned n)
{
    int m = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}

/// Phi_n as prod_{d | n} (x^d - 1)^mu(n/d): multiply the positive factors, then divide.
inline SmallPoly cyclotomic_by_mobius(unsigned n)
{
    SmallPoly num{1}, den{1};
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d) continue;
        int m = mobius(n / d);
        if (m == 1) num = small_mul(num, x_pow_minus_one(d));
        if (m == -1) den = small_mul(den, x_pow_minus_one(d));
    }
    return small_div(num, den);
}

inline bool same_poly(const SmallPoly& a, const IntPoly& b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (Integer(static_cast<long>(a[i])) != b[i]) return false;
    return true;
}

/// Rank of a dense matrix over a cyclotomic field by plain Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<Scalar>> rows)
{
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        Scalar inv = rows[rank][c].inverse();
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            Scalar m = rows[i][c] * inv;
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= m * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace wbafrac::testing
