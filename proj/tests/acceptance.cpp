// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every failing criterion is listed in kKnownFailures
// (each one is documented in the README), and 1 otherwise. A known failure
// that starts passing is reported but does not fail the run.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "support.hpp"
#include "wbafrac/catalog.hpp"
#include "wbafrac/graded.hpp"
#include "wbafrac/suites.hpp"

using namespace wbafrac;
using namespace wbafrac::testing;

namespace {

// det_q with the printed alpha_j = 1/sqrt(2) is not central at r = 5.
const std::set<int> kKnownFailures{8};

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (ok) return;
        if (!passed) detail << "; ";
        passed = false;
        detail << what;
    }
};

std::string first_violation(const Report& rep)
{
    if (rep.violations().empty()) return rep.suite();
    const auto& v = rep.violations().front();
    std::string w;
    for (const auto& s : v.witness) w += (w.empty() ? "" : ", ") + s;
    return rep.suite() + ": " + v.check + " at (" + w + ")";
}

void require_report(Outcome& o, const Report& rep, const std::string& where)
{
    o.require(rep.passed(), where + " [" + first_violation(rep) + "]");
}

std::vector<Element> basis_samples(const Example& ex)
{
    std::vector<Element> out;
    for (BasisId b : ex.wba->basis(ex.wba->graded() ? ex.cutoff : kUnbounded)) out.push_back(Element::basis(b));
    return out;
}

Outcome wba_axioms()
{
    Outcome o;
    const std::vector<std::pair<std::string, Params>> cases{
        {"sweedler", {}},
        {"h4", {}},
        {"w_h4", {}},
        {"graph", {{"r", "3"}, {"cutoff", "2"}}},
        {"graph", {{"r", "4"}, {"cutoff", "2"}}},
        {"mq2", {{"r", "3"}, {"cutoff", "3"}}},
        {"mq2", {{"r", "4"}, {"cutoff", "3"}}},
        {"mhatq2", {{"r", "3"}, {"cutoff", "3"}}},
        {"mhatq2", {{"r", "4"}, {"cutoff", "3"}}},
    };
    std::size_t models = 0;
    for (const auto& [name, params] : cases) {
        Example ex = build_example(name, params);
        const std::string tag = name + (params.count("r") ? " r=" + params.at("r") : "");
        require_report(o, check_wba_axioms(*ex.wba, ex.cutoff), tag);
        for (const auto& [key, monoid] : ex.monoids) {
            if (std::find(ex.rejected_monoids.begin(), ex.rejected_monoids.end(), key) != ex.rejected_monoids.end())
                continue;
            Localization loc(monoid, ex.cutoff);
            if (!loc.materialized()) continue;
            auto model = loc.wba();
            require_report(o, check_wba_axioms(*model, model->graded() ? model->cutoff() : kUnbounded),
                           tag + "[" + key + "^-1]");
            ++models;
        }
    }

    // mutation harness: one corrupted constant must be caught with a witness
    auto corrupt = [&](std::shared_ptr<TableWba> t, const std::function<void(TableWba&)>& edit, unsigned cut,
                       const std::string& what) {
        edit(*t);
        Report rep = check_wba_axioms(*t, cut);
        o.require(!rep.passed(), "mutation " + what + " not detected");
        o.require(rep.passed() || !rep.violations().front().witness.empty(), "mutation " + what + " has no witness");
    };
    const BasisId one{0, 0}, f{0, 1}, y{0, 2}, fy{0, 3};
    corrupt(materialize(*sweedler().wba, kUnbounded), [&](TableWba& t) { t.set_mul(f, y, -Element::basis(fy)); },
            kUnbounded, "product f*y");
    corrupt(materialize(*sweedler().wba, kUnbounded),
            [&](TableWba& t) { t.set_delta(y, Tensor2::basis({y, one}) + Tensor2::basis({one, y})); }, kUnbounded,
            "Delta(y)");
    corrupt(materialize(*h4(), kUnbounded), [&](TableWba& t) { t.set_counit({0, 2}, Scalar(2)); }, kUnbounded,
            "counit of H4");
    const BasisId a{1, 0}, b{1, 1};
    corrupt(materialize(*mq2(3, 2).wba, 2),
            [&](TableWba& t) { t.set_delta(b, Tensor2::basis({a, b}) + Tensor2::basis({b, a})); }, 2,
            "Delta(b) in M_q(2)");
    if (o.passed) o.detail << cases.size() << " hosts, " << models << " localizations, 4 mutations caught";
    return o;
}

Outcome coquasi()
{
    Outcome o;
    for (long alpha : {1L, 2L, -3L}) {
        auto s = sweedler(Scalar(alpha));
        require_report(o, check_coquasi(*s.rform, kUnbounded, {s.one, s.f}), "sweedler alpha=" + std::to_string(alpha));
    }
    auto h = h4();
    std::vector<Element> gl;
    for (std::uint32_t i = 0; i < 4; ++i) gl.push_back(Element::basis({0, i}));
    require_report(o, check_coquasi(*commutative_rform(h), kUnbounded, gl), "h4");
    if (o.passed) o.detail << "Sweedler alpha in {1, 2, -3} and H4";
    return o;
}

Outcome conjugations()
{
    Outcome o;
    auto s = sweedler();
    o.require(conjugation(*s.rform, s.f, s.f) == s.f, "I_f(f) != f");
    o.require(conjugation(*s.rform, s.f, s.y) == -s.y, "I_f(y) != -y");
    for (BasisId b : s.wba->basis()) {
        Element x = Element::basis(b);
        const std::string label = s.wba->basis_label(b);
        o.require(conjugation(*s.rform, s.one, x) == x, "I_1 != id at " + label);
        o.require(conjugation(*s.rform, s.f, conjugation(*s.rform, s.f, x)) == x, "I_f o I_f != id at " + label);
    }
    if (o.passed) o.detail << "I_f(f) = f, I_f(y) = -y, I_1 = id, I_f^2 = id";
    return o;
}

Outcome localization_checks()
{
    Outcome o;
    std::size_t pairs = 0;
    for (const auto& d : catalog_descriptors()) {
        Example ex = build_example(d.name);
        if (ex.monoids.empty()) continue;
        for (const auto& [key, monoid] : ex.monoids) {
            if (std::find(ex.rejected_monoids.begin(), ex.rejected_monoids.end(), key) != ex.rejected_monoids.end())
                continue;
            const std::string tag = d.name + "[" + key + "]";
            require_report(o, check_ore(*monoid, basis_samples(ex), ex.cutoff), tag + " ore");
            Localization loc(monoid, ex.cutoff);
            if (loc.materialized()) {
                auto model = loc.wba();
                require_report(o, check_wba_axioms(*model, model->graded() ? model->cutoff() : kUnbounded),
                               tag + " localized axioms");
            }
            Report coalg = check_fraction_coalgebra(loc, 100, 2024);
            require_report(o, coalg, tag + " fraction coalgebra");
            o.require(coalg.checked() >= 100, tag + " fewer than 100 fraction pairs");
            pairs += 100;
        }
    }
    if (o.passed) o.detail << pairs << " random equivalent fraction pairs";
    return o;
}

Outcome h4_collapse()
{
    Outcome o;
    Example ex = build_example("h4");
    Localization loc = localize_example(ex);
    auto model = loc.wba();
    o.require(model->dimension() == 1, "dimension " + std::to_string(model->dimension()));
    auto kernel = model->kernel_basis(0);
    o.require(kernel.size() == 3, "kernel dimension " + std::to_string(kernel.size()));
    for (const auto& k : kernel) {
        Scalar total;
        for (const auto& [b, c] : k) total += c;
        o.require(total.is_zero(), "kernel vector with nonzero coefficient sum");
    }
    // differences of basis vectors span the sum-zero subspace and all die
    for (std::uint32_t i = 1; i < 4; ++i)
        o.require(model->phi(Element::basis({0, i}) - Element::basis({0, 0})).is_zero(), "phi(ibar - 0bar) != 0");
    o.require(!model->phi(Element::basis({0, 1})).is_zero(), "phi(1bar) = 0");
    if (o.passed) o.detail << "dim 1, ker(phi) = sum-zero elements (dim 3)";
    return o;
}

Outcome sweedler_stable()
{
    Outcome o;
    Example ex = build_example("sweedler");
    Localization loc = localize_example(ex);
    auto model = loc.wba();
    o.require(model->dimension() == 4, "dimension " + std::to_string(model->dimension()));
    o.require(model->kernel_dimension(0) == 0, "phi not injective");
    require_report(o, check_homomorphism(*ex.wba, *model, model->phi_map(), kUnbounded), "canonical map");
    const Wba& h = *ex.wba;
    for (BasisId a : h.basis())
        for (BasisId b : h.basis()) {
            Element x = Element::basis(a), y = Element::basis(b);
            o.require(model->phi(mul(h, x, y)) == mul(*model, model->phi(x), model->phi(y)), "product differs");
            o.require(apply(model->phi_map(), model->phi_map(), delta(h, x)) == delta(*model, model->phi(x)),
                      "coproduct differs");
            o.require(counit(h, x) == counit(*model, model->phi(x)), "counit differs");
        }
    if (o.passed) o.detail << "dim 4, phi bijective, structure constants equal";
    return o;
}

Outcome glq2()
{
    Outcome o;
    Example ex = build_example("glq2");
    const Wba& gl = *ex.wba;
    o.require(mul(gl, ex.element("det"), ex.element("X")) == gl.unit_element(), "det X != 1");
    o.require(mul(gl, ex.element("X"), ex.element("det")) == gl.unit_element(), "X det != 1");
    o.require(ex.antipode.has_value(), "no antipode table");
    if (ex.antipode) require_report(o, check_antipode(gl, *ex.antipode, ex.antipode_domain), "antipode");
    o.require(ex.antipode_domain.size() == 5, "antipode checked on " + std::to_string(ex.antipode_domain.size()) +
                                                  " elements");
    require_report(o, check_laurent_fraction_maps(*ex.laurent), "Laurent/fraction maps");
    if (o.passed) o.detail << "det X = 1, antipode on a, b, c, d, X, Laurent <-> fraction inverse";
    return o;
}

Outcome quantum_determinant_check()
{
    Outcome o;
    std::ostringstream good;
    for (unsigned r : {3u, 4u, 5u}) {
        auto m = mhatq2(r, 3);
        GroupLike kind = is_group_like(*m.wba, m.det);
        o.require(kind == GroupLike::both, "r=" + std::to_string(r) + " group-like: " + to_string(kind));
        Report central = check_central(*m.wba, m.det, 3);
        o.require(central.passed(), "r=" + std::to_string(r) + " not central (" + std::to_string(central.failed()) +
                                        " of " + std::to_string(central.checked()) + " commutators fail, first " +
                                        first_violation(central) + ")");
        if (r == 3) {
            const auto& g = *m.free;
            Element expected =
                Element::basis(g.pair({0, 1, 0}, {0, 1, 0})) - Element::basis(g.pair({0, 1, 0}, {1, 0, 1})) -
                Element::basis(g.pair({1, 0, 1}, {0, 1, 0})) + Element::basis(g.pair({1, 0, 1}, {1, 0, 1}));
            o.require(quantum_determinant(g, 3) == expected, "r=3 expansion differs");
        }
    }
    if (o.passed) o.detail << "group-like and central for r = 3, 4, 5";
    return o;
}

Outcome tensor_localization()
{
    Outcome o;
    Example mq = build_example("mq2");
    Localization gl = laurent_model(mq.wba, mq.element("det"), 3, "det");
    auto glt = gl.dimension_table();

    auto t1 = localize_example(build_example("h4_mq2")).dimension_table();
    o.require(t1 == glt, "(H4 (x) M_q(2))[G^-1] table differs from GL_q(2)");
    for (int d = 0; d <= 3; ++d) {
        auto it = t1.find({d, 0});
        o.require(it != t1.end() && it->second == mq.wba->block_dim(d),
                  "degree " + std::to_string(d) + " differs from M_q(2)");
    }

    auto t2 = localize_example(build_example("w_mq2")).dimension_table();
    o.require(t2.size() == glt.size(), "(W (x) M_q(2))[G^-1] has a different weight set");
    for (const auto& [w, n] : glt) {
        auto it = t2.find(w);
        o.require(it != t2.end() && it->second == 4 * n, "(W (x) M_q(2))[G^-1] differs from W (x) GL_q(2)");
    }
    if (o.passed) o.detail << "H4 (x) M_q(2) matches M_q(2) and GL_q(2); W (x) M_q(2) matches 4 x GL_q(2)";
    return o;
}

Outcome exact_field()
{
    Outcome o;
    std::mt19937_64 rng(20240601);
    const std::size_t triples = 10000;
    for (unsigned n : {1u, 4u, 8u, 12u, 16u, 24u}) {
        const auto& f = CycloField::get(n);
        bool ok = true;
        for (std::size_t i = 0; i < triples && ok; ++i) {
            Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
            ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                 a * b == b * a && a + b == b + a && a - a == Scalar::zero(f) && a * Scalar::one(f) == a &&
                 (a.is_zero() || (a * a.inverse()).is_one()) && (b.is_zero() || (a / b) * b == a);
        }
        o.require(ok, "field axioms fail in Q(zeta_" + std::to_string(n) + ")");
    }

    // x^n - 1 = prod_{d | n} Phi_d, and both independent constructions agree
    for (unsigned n = 1; n <= 64; ++n) {
        IntPoly prod{Integer(1)};
        for (unsigned d = 1; d <= n; ++d) {
            if (n % d) continue;
            const IntPoly& phi = cyclotomic_polynomial(d);
            IntPoly next(prod.size() + phi.size() - 1, Integer(0));
            for (std::size_t i = 0; i < prod.size(); ++i)
                for (std::size_t j = 0; j < phi.size(); ++j) next[i + j] += prod[i] * phi[j];
            prod = next;
        }
        bool ok = same_poly(x_pow_minus_one(n), prod) && same_poly(cyclotomic_by_division(n), cyclotomic_polynomial(n)) &&
                  same_poly(cyclotomic_by_mobius(n), cyclotomic_polynomial(n));
        o.require(ok, "Phi_" + std::to_string(n) + " reconstruction");
    }

    for (unsigned r = 1; r <= 4; ++r) {
        const auto& f = CycloField::get(8 * r);
        Scalar s = sqrt_two(f);
        o.require(s * s == Scalar(2), "sqrt(2)^2 != 2 for r=" + std::to_string(r));
        o.require(s == Scalar::zeta_power(f, r) + Scalar::zeta_power(f, -static_cast<long>(r)),
                  "sqrt(2) convention for r=" + std::to_string(r));
    }

    const auto& f12 = CycloField::get(12);
    Scalar q = Scalar::zeta_power(f12, 2);
    o.require(quantum_integer(2, q) == q + q.inverse(), "[[2]] != q + q^-1");
    o.require(quantum_integer(2, q) * (q - q.inverse()) == q.pow(2) - q.pow(-2), "[[2]](q - q^-1) != q^2 - q^-2");
    for (long m = 0; m <= 10; ++m)
        o.require(quantum_integer(m + 1, q) == q * quantum_integer(m, q) + q.pow(-m),
                  "[[m+1]] recursion at m=" + std::to_string(m));
    for (long n = 1; n <= 6; ++n)
        o.require(quantum_integer(-n, q) == -quantum_integer(n, q), "[[-n]] != -[[n]]");
    for (long r = 3; r <= 6; ++r) {
        const auto& f = CycloField::get(static_cast<unsigned>(8 * r));
        Scalar qr = Scalar::zeta_power(f, 4);
        for (long n = 1; n < r; ++n) o.require(!quantum_integer(n, qr).is_zero(), "[[n]] vanishes below r");
        o.require(quantum_integer(r, qr).is_zero(), "[[r]] != 0 for r=" + std::to_string(r));
    }
    if (o.passed) o.detail << triples << " triples x 6 conductors, Phi_n for n <= 64, sqrt(2), quantum integers";
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"WBA axioms and mutation harness", wba_axioms},
        {"coquasi-triangular identities", coquasi},
        {"conjugation automorphisms", conjugations},
        {"Ore condition, localized axioms, fraction coalgebra", localization_checks},
        {"H4[G^-1] is one-dimensional", h4_collapse},
        {"Sweedler[{1,f}^-1] = Sweedler", sweedler_stable},
        {"GL_q(2) Laurent model and antipode", glq2},
        {"det_q group-like and central for r = 3, 4, 5", quantum_determinant_check},
        {"tensor products commute with localization", tensor_localization},
        {"exact cyclotomic arithmetic", exact_field},
    };
    int unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool known = kKnownFailures.count(id) > 0;
        std::cout << "criterion " << id << ": " << (o.passed ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
                  << o.detail.str() << ")  [" << std::fixed << std::setprecision(1) << secs << " s]";
        if (!o.passed && known) std::cout << "  known failure, see README";
        if (o.passed && known) std::cout << "  listed as a known failure but passed";
        std::cout << std::endl;
        if (!o.passed && !known) ++unexpected;
    }
    std::cout << (unexpected ? "acceptance: unexpected failures\n" : "acceptance: no unexpected failures\n");
    return unexpected ? 1 : 0;
}
