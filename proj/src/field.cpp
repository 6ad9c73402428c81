#include "wbafrac/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace wbafrac {

namespace {

std::mutex& registry_mutex()
{
    static std::mutex m;
    return m;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b)
{
    IntPoly out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// Exact quotient of num by a monic divisor; throws if the remainder is nonzero.
IntPoly poly_div_exact(IntPoly num, const IntPoly& den)
{
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) throw Error("poly_div_exact: degree too small");
    IntPoly quot(num.size() - dd, Integer(0));
    for (std::size_t k = num.size(); k-- > dd;) {
        Integer c = num[k];
        quot[k - dd] = c;
        if (sgn(c) == 0) continue;
        for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (sgn(num[i]) != 0) throw Error("poly_div_exact: nonzero remainder");
    return quot;
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p)
{
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Returns (quotient, remainder) of a / b over Q; b nonzero and trimmed.
std::pair<QPoly, QPoly> qpoly_divmod(QPoly a, const QPoly& b)
{
    trim(a);
    QPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        Rational c = a.back() / lead;
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    return {q, a};
}

QPoly qpoly_sub_mul(const QPoly& a, const QPoly& q, const QPoly& b)
{
    // a - q*b
    QPoly out = a;
    if (!q.empty() && !b.empty()) {
        if (out.size() < q.size() + b.size() - 1) out.resize(q.size() + b.size() - 1, Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
    trim(out);
    return out;
}

}  // namespace

unsigned euler_phi(unsigned n)
{
    if (n == 0) throw InvalidArgument("euler_phi: n must be positive");
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const IntPoly& cyclotomic_polynomial(unsigned n)
{
    if (n == 0) throw InvalidArgument("cyclotomic_polynomial: n must be >= 1");
    static std::map<unsigned, IntPoly> cache;
    {
        std::lock_guard lock(registry_mutex());
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    IntPoly divisor{Integer(1)};
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) divisor = poly_mul(divisor, cyclotomic_polynomial(d));
    IntPoly xn(n + 1, Integer(0));
    xn[0] = -1;
    xn[n] = 1;
    IntPoly phi = poly_div_exact(std::move(xn), divisor);
    std::lock_guard lock(registry_mutex());
    return cache.emplace(n, std::move(phi)).first->second;
}

CycloField::CycloField(unsigned conductor)
    : conductor_(conductor), degree_(euler_phi(conductor)), minpoly_(&cyclotomic_polynomial(conductor))
{
}

const CycloField& CycloField::get(unsigned conductor)
{
    if (conductor == 0) throw InvalidArgument("CycloField: conductor must be >= 1");
    static std::mutex fields_mutex;
    static std::map<unsigned, std::unique_ptr<CycloField>> fields;
    std::lock_guard lock(fields_mutex);
    auto& slot = fields[conductor];
    if (!slot) slot.reset(new CycloField(conductor));
    return *slot;
}

const CycloField& join_fields(const CycloField& a, const CycloField& b)
{
    if (a.conductor() == b.conductor()) return a;
    if (a.conductor() == 1) return b;
    if (b.conductor() == 1) return a;
    throw FieldMismatch("field mismatch: Q(zeta_" + std::to_string(a.conductor()) + ") vs Q(zeta_" +
                        std::to_string(b.conductor()) + ")");
}

// ---------------------------------------------------------------------------

Scalar::Scalar() : Scalar(CycloField::rationals(), Rational(0)) {}

Scalar::Scalar(long value) : Scalar(CycloField::rationals(), Rational(value)) {}

Scalar::Scalar(const Rational& value) : Scalar(CycloField::rationals(), value) {}

Scalar::Scalar(const CycloField& field, const Rational& value)
    : field_(&field), num_(field.degree(), Integer(0)), den_(1)
{
    Rational v = value;
    v.canonicalize();
    num_[0] = v.get_num();
    den_ = v.get_den();
}

Scalar Scalar::from_coeffs(const CycloField& field, const std::vector<Rational>& coeffs)
{
    Scalar s = zero(field);
    Integer den = 1;
    for (const auto& c : coeffs) den = lcm(den, Integer(c.get_den()));
    std::vector<Integer> poly(std::max<std::size_t>(coeffs.size(), field.degree()), Integer(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) poly[i] = coeffs[i].get_num() * (den / coeffs[i].get_den());
    s.reduce_mod_minpoly(poly);
    poly.resize(field.degree());
    s.num_ = std::move(poly);
    s.den_ = den;
    s.normalize();
    return s;
}

Scalar Scalar::zeta_power(const CycloField& field, long k)
{
    const long n = field.conductor();
    long e = k % n;
    if (e < 0) e += n;
    std::vector<Rational> coeffs(static_cast<std::size_t>(e) + 1, Rational(0));
    coeffs[static_cast<std::size_t>(e)] = 1;
    return from_coeffs(field, coeffs);
}

void Scalar::reduce_mod_minpoly(std::vector<Integer>& poly) const
{
    const IntPoly& phi = field_->minimal_polynomial();
    const std::size_t d = field_->degree();
    for (std::size_t k = poly.size(); k-- > d;) {
        if (sgn(poly[k]) == 0) continue;
        Integer c = poly[k];
        for (std::size_t i = 0; i < d; ++i) {
            if (sgn(phi[i]) != 0) poly[k - d + i] -= c * phi[i];
        }
        poly[k] = 0;
    }
}

void Scalar::normalize()
{
    Integer g = den_;
    bool all_zero = true;
    for (const auto& c : num_) {
        if (sgn(c) == 0) continue;
        all_zero = false;
        g = gcd(g, c);
        if (g == 1) break;
    }
    if (all_zero) {
        den_ = 1;
        return;
    }
    if (g != 1) {
        for (auto& c : num_) c /= g;
        den_ /= g;
    }
}

bool Scalar::is_zero() const
{
    for (const auto& c : num_)
        if (sgn(c) != 0) return false;
    return true;
}

bool Scalar::is_one() const { return is_rational() && num_[0] == 1 && den_ == 1; }

bool Scalar::is_rational() const
{
    for (std::size_t i = 1; i < num_.size(); ++i)
        if (sgn(num_[i]) != 0) return false;
    return true;
}

std::vector<Rational> Scalar::coeffs() const
{
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (const auto& c : num_) {
        Rational q(c, den_);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

Rational Scalar::rational_value() const
{
    if (!is_rational()) throw InvalidArgument("Scalar is not rational: " + to_string());
    Rational q(num_[0], den_);
    q.canonicalize();
    return q;
}

Scalar Scalar::promoted(const CycloField& target) const
{
    if (field_->conductor() == target.conductor()) return *this;
    if (field_->conductor() != 1)
        throw FieldMismatch("cannot embed Q(zeta_" + std::to_string(field_->conductor()) + ") into Q(zeta_" +
                            std::to_string(target.conductor()) + ")");
    Scalar out = zero(target);
    out.num_[0] = num_[0];
    out.den_ = den_;
    return out;
}

Scalar& Scalar::operator+=(const Scalar& other)
{
    if (&other == this) {
        Scalar copy = other;
        return *this += copy;
    }
    const CycloField& f = join_fields(*field_, *other.field_);
    if (field_ != &f) *this = promoted(f);
    const Scalar& rhs = (other.field_ == &f) ? other : other.promoted(f);
    if (rhs.is_zero()) return *this;
    if (den_ == rhs.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
    } else {
        Integer l = lcm(den_, rhs.den_);
        Integer a = l / den_;
        Integer b = l / rhs.den_;
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * a + rhs.num_[i] * b;
        den_ = l;
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other)
{
    if (&other == this) {
        Scalar copy = other;
        return *this *= copy;
    }
    const CycloField& f = join_fields(*field_, *other.field_);
    if (field_ != &f) *this = promoted(f);
    const Scalar& rhs = (other.field_ == &f) ? other : other.promoted(f);
    if (rhs.is_rational()) {
        if (sgn(rhs.num_[0]) == 0) {
            *this = zero(f);
            return *this;
        }
        for (auto& c : num_) c *= rhs.num_[0];
        den_ *= rhs.den_;
        normalize();
        return *this;
    }
    if (is_rational()) {
        Integer c0 = num_[0];
        Integer d0 = den_;
        num_ = rhs.num_;
        for (auto& c : num_) c *= c0;
        den_ = d0 * rhs.den_;
        normalize();
        return *this;
    }
    const std::size_t d = f.degree();
    std::vector<Integer> prod(2 * d - 1, Integer(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (sgn(num_[i]) == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (sgn(rhs.num_[j]) == 0) continue;
            prod[i + j] += num_[i] * rhs.num_[j];
        }
    }
    reduce_mod_minpoly(prod);
    prod.resize(d);
    num_ = std::move(prod);
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

Scalar Scalar::operator-() const
{
    Scalar out = *this;
    for (auto& c : out.num_) c = -c;
    return out;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (a.field_ == b.field_) return a.den_ == b.den_ && a.num_ == b.num_;
    const CycloField& f = join_fields(*a.field_, *b.field_);
    Scalar pa = a.promoted(f);
    Scalar pb = b.promoted(f);
    return pa.den_ == pb.den_ && pa.num_ == pb.num_;
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw DivisionByZero("division by zero in Q(zeta_" + std::to_string(field_->conductor()) + ")");
    if (is_rational()) {
        Scalar out = zero(*field_);
        out.num_[0] = den_;
        out.den_ = num_[0];
        if (sgn(out.den_) < 0) {
            out.den_ = -out.den_;
            out.num_[0] = -out.num_[0];
        }
        return out;
    }
    // Extended Euclid on (a, Phi): track s with s*a == r (mod Phi).
    QPoly a = coeffs();
    trim(a);
    QPoly m;
    for (const auto& c : field_->minimal_polynomial()) m.emplace_back(c);
    QPoly r0 = m, r1 = a;
    QPoly s0, s1{Rational(1)};
    while (!(r1.size() == 1)) {
        if (r1.empty()) throw Error("inverse: element shares a factor with the cyclotomic polynomial");
        auto [q, rem] = qpoly_divmod(r0, r1);
        QPoly s2 = qpoly_sub_mul(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    Rational c = r1[0];
    for (auto& x : s1) x /= c;
    return from_coeffs(*field_, s1);
}

Scalar Scalar::pow(long exponent) const
{
    if (exponent < 0) return inverse().pow(-exponent);
    Scalar result = one(*field_);
    Scalar base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

std::string Scalar::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto cs = coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        Rational c = cs[i];
        if (sgn(c) == 0) continue;
        const bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Scalar quantum_integer(long n, const Scalar& q)
{
    const Scalar qinv = q.inverse();
    const Scalar denom = q - qinv;
    if (denom.is_zero()) throw InvalidArgument("quantum_integer: q^2 == 1");
    return (q.pow(n) - q.pow(-n)) / denom;
}

Scalar sqrt_two(const CycloField& field)
{
    if (field.conductor() % 8 != 0)
        throw InvalidArgument("sqrt_two: conductor " + std::to_string(field.conductor()) + " not divisible by 8");
    const long r = field.conductor() / 8;
    return Scalar::zeta_power(field, r) + Scalar::zeta_power(field, -r);
}

nlohmann::json to_json(const Scalar& s)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
    return {{"conductor", s.field().conductor()}, {"coeffs", coeffs}};
}

Scalar scalar_from_json(const nlohmann::json& j)
{
    const unsigned n = j.at("conductor").get<unsigned>();
    const CycloField& f = CycloField::get(n);
    std::vector<Rational> cs;
    for (const auto& c : j.at("coeffs")) {
        Rational q(Integer(c.at(0).get<std::string>()), Integer(c.at(1).get<std::string>()));
        if (q.get_den() == 0) throw InvalidArgument("scalar_from_json: zero denominator");
        q.canonicalize();
        cs.push_back(q);
    }
    if (cs.size() != f.degree()) throw InvalidArgument("scalar_from_json: coefficient count != phi(n)");
    return Scalar::from_coeffs(f, cs);
}

}  // namespace wbafrac
