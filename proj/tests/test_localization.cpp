#include "doctest.h"

#include "wbafrac/catalog.hpp"
#include "wbafrac/suites.hpp"

using namespace wbafrac;

namespace {

Fraction frac(const Element& x, Word w = {}) { return {x, std::move(w)}; }

}  // namespace

TEST_CASE("Sweedler localized at {1, f} is Sweedler again")
{
    auto ex = build_example("sweedler");
    Localization loc = localize_example(ex);
    auto model = loc.wba();
    REQUIRE(model->dimension() == 4);
    CHECK(model->kernel_dimension(0) == 0);
    LinearMap phi = model->phi_map();
    // structure constants agree under the canonical map
    CHECK(check_homomorphism(*ex.wba, *model, phi, kUnbounded).passed());
    const Wba& h = *ex.wba;
    for (BasisId a : h.basis())
        for (BasisId b : h.basis())
            CHECK(model->phi(mul(h, Element::basis(a), Element::basis(b))) ==
                  mul(*model, phi(Element::basis(a)), phi(Element::basis(b))));
    CHECK(check_wba_axioms(*model, kUnbounded).passed());
}

TEST_CASE("Sweedler fraction arithmetic")
{
    auto ex = build_example("sweedler");
    Localization loc = localize_example(ex);
    const Element& y = ex.element("y");
    // generator 1 of the default monoid is f
    Fraction yf = frac(y, {1});
    Fraction sum = loc.frac_add(yf, yf);
    CHECK(loc.frac_eq(sum, frac(y * Scalar(2), {1})) == FracEq::equal);
    // (y/f)(y/1) = y I_f^{-1}(y) / f = -y^2 / f = 0
    Fraction prod = loc.frac_mul(yf, frac(y));
    CHECK(loc.frac_eq(prod, frac(Element(), {})) == FracEq::equal);
    // f/f = 1/1
    CHECK(loc.frac_eq(frac(ex.element("f"), {1}), frac(ex.element("one"))) == FracEq::equal);
    CHECK(loc.frac_eq(frac(y), frac(ex.element("fy"))) == FracEq::not_equal);
    // Delta(y/f) = y/f (x) 1/f + f/f (x) y/f
    Tensor2 d = loc.to_laurent(loc.frac_delta(yf));
    Element one_f = loc.to_laurent(frac(ex.element("one"), {1}));
    Element f_f = loc.to_laurent(frac(ex.element("f"), {1}));
    Element y_f = loc.to_laurent(yf);
    CHECK(d == tensor(y_f, one_f) + tensor(f_f, y_f));
    CHECK(loc.frac_counit(yf).is_zero());
    CHECK(loc.frac_counit(frac(ex.element("f"), {1})).is_one());
}

TEST_CASE("H4 localized at {0bar, 1bar} is one-dimensional")
{
    auto ex = build_example("h4");
    Localization loc = localize_example(ex);
    auto model = loc.wba();
    CHECK(model->dimension() == 1);
    // ker(phi) = {sum c_i ibar : sum c_i = 0}
    auto kernel = model->kernel_basis(0);
    CHECK(kernel.size() == 3);
    for (const auto& k : kernel) {
        Scalar total;
        for (const auto& [b, c] : k) total += c;
        CHECK(total.is_zero());
        CHECK(model->phi(k).is_zero());
    }
    for (std::uint32_t i = 0; i < 4; ++i)
        for (std::uint32_t j = 0; j < 4; ++j)
            CHECK(model->phi(Element::basis({0, i}) - Element::basis({0, j})).is_zero());
    CHECK_FALSE(model->phi(Element::basis({0, 1})).is_zero());
    CHECK(check_wba_axioms(*model, kUnbounded).passed());
}

TEST_CASE("Ore condition and fraction coalgebra on every catalog localization")
{
    for (const char* name : {"sweedler", "h4", "mq2", "mhatq2", "w_h4", "w_mq2", "h4_mq2", "radford"}) {
        CAPTURE(name);
        auto ex = build_example(name);
        for (const auto& [key, monoid] : ex.monoids) {
            std::vector<Element> samples;
            for (BasisId b : ex.wba->basis(ex.wba->graded() ? ex.cutoff : kUnbounded))
                samples.push_back(Element::basis(b));
            CHECK(check_ore(*monoid, samples, ex.cutoff).passed());
            Localization loc(monoid, ex.cutoff);
            Report coalg = check_fraction_coalgebra(loc, 100, 11);
            CHECK(coalg.passed());
            CHECK(coalg.checked() >= 100);
            CHECK(check_laurent_fraction_maps(loc).passed());
        }
    }
}

TEST_CASE("M_q(2) fractions with central denominators")
{
    auto ex = build_example("mq2", {{"cutoff", "6"}});
    Localization loc = localize_example(ex);
    const Element &a = ex.element("a"), &b = ex.element("b");
    Fraction p = loc.frac_mul(frac(a, {0}), frac(b, {0}));
    CHECK(loc.frac_eq(p, frac(mul(*ex.wba, a, b), {0, 0})) == FracEq::equal);
    CHECK(loc.frac_eq(frac(a), frac(b)) == FracEq::not_equal);
    auto small = build_example("mq2");
    Localization loc3 = localize_example(small);
    CHECK(loc3.frac_eq(p, frac(mul(*ex.wba, a, b), {0, 0})) == FracEq::indeterminate);
    CHECK(loc.frac_eq(frac(ex.element("det"), {0}), frac(ex.element("one"))) == FracEq::equal);
    Fraction canon = loc.canonicalize(frac(mul(*ex.wba, a, ex.element("det")), {0}));
    CHECK(canon.den.empty());
    CHECK(canon.num == a);
}

TEST_CASE("GL_q(2) as a Laurent model")
{
    auto ex = build_example("glq2");
    const Wba& gl = *ex.wba;
    CHECK(mul(gl, ex.element("det"), ex.element("X")) == gl.unit_element());
    REQUIRE(ex.antipode);
    CHECK(check_antipode(gl, *ex.antipode, ex.antipode_domain).passed());
    CHECK(check_laurent_fraction_maps(*ex.laurent).passed());
    auto table = ex.laurent->dimension_table();
    CHECK(table.at({0, 1}) == 1);
    CHECK(table.at({1, 1}) == 4);
    CHECK(table.at({2, 0}) == 10);
    CHECK(table.at({2, 1}) == 9);
}

TEST_CASE("universal property: M_q(2) -> GL_q(2)")
{
    auto m = mq2(3, 3);
    auto gl = build_example("glq2", {{"cutoff", "3"}});
    auto loc = laurent_model(m.wba, m.det, 3, "det");
    auto target = loc.wba();
    UniversalMap u = universal_map(loc, *target, target->phi_map(), 3, target->x_power(1));
    CHECK(u.report.passed());
    // sigma(a / det) = psi(a) X
    Element a = Element::basis({1, 0});
    Element a_over_det = loc.to_laurent(frac(a, {0}));
    CHECK(u.sigma(a_over_det) == mul(*target, target->phi(a), target->x_power(1)));
    CHECK(gl.wba->dimension() == target->dimension());
}

TEST_CASE("graded dimensions of localized tensor products")
{
    auto mq = build_example("mq2");
    auto gl = laurent_model(mq.wba, mq.element("det"), 3, "det");

    auto h4mq = build_example("h4_mq2");
    auto t1 = localize_example(h4mq).dimension_table();
    auto glt = gl.dimension_table();
    CHECK(t1 == glt);
    for (int d = 0; d <= 3; ++d) CHECK(t1.at({d, 0}) == mq.wba->block_dim(d));

    auto wmq = build_example("w_mq2");
    auto t2 = localize_example(wmq).dimension_table();
    for (const auto& [g, n] : glt) CHECK(t2.at(g) == 4 * n);
}

TEST_CASE("validation rejects bad denominator sets")
{
    auto ex = build_example("sweedler");
    auto bad = monoid_from_names(ex, {"y"}, AnnihilatorStrategy::declared_regular());
    CHECK_THROWS_AS(Localization(bad, kUnbounded), StructureError);

    auto glf = build_example("glfusion");
    CHECK_FALSE(glf.monoids.at("verbatim")->validate(glf.cutoff).passed());
    CHECK_THROWS_AS(localize_example(glf, "verbatim"), StructureError);
}

TEST_CASE("Radford's T(V) at G = {1} is unchanged")
{
    auto ex = build_example("radford");
    Localization loc = localize_example(ex);
    auto model = loc.wba();
    for (unsigned d = 0; d <= ex.cutoff; ++d) CHECK(loc.dimension_table().at({int(d), 0}) == ex.wba->block_dim(d));
    CHECK(check_wba_axioms(*model, model->cutoff()).passed());
}

TEST_CASE("fraction JSON round trip")
{
    Fraction f{Element::basis({1, 2}) * Scalar(Rational(-3, 4)), {0, 1, 1}};
    Fraction back = fraction_from_json(to_json(f));
    CHECK(back.num == f.num);
    CHECK(back.den == f.den);
}
