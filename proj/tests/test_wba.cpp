#include "doctest.h"

#include "wbafrac/catalog.hpp"
#include "wbafrac/wba.hpp"

using namespace wbafrac;

namespace {

const BasisId kOne{0, 0}, kF{0, 1}, kY{0, 2}, kFY{0, 3};

Element e(BasisId b) { return Element::basis(b); }

}  // namespace

TEST_CASE("Sweedler structure constants")
{
    auto s = sweedler();
    const Wba& h = *s.wba;
    CHECK(mul(h, s.y, s.y).is_zero());
    CHECK(mul(h, s.f, s.f) == s.one);
    CHECK(mul(h, s.y, s.f) == -s.fy);
    CHECK(mul(h, s.f, s.y) == s.fy);
    CHECK(delta(h, s.y) == tensor(s.y, s.one) + tensor(s.f, s.y));
    CHECK(delta(h, s.f) == tensor(s.f, s.f));
    CHECK(counit(h, s.y).is_zero());
    CHECK(counit(h, s.f).is_one());
    // a bialgebra: eps_s = eta o eps
    CHECK(counital_source(h, s.y).is_zero());
    CHECK(counital_source(h, s.f) == s.one);
    CHECK(counital_target(h, s.fy).is_zero());
}

TEST_CASE("WBA axioms hold on the finite examples")
{
    CHECK(check_wba_axioms(*sweedler().wba, kUnbounded).passed());
    CHECK(check_wba_axioms(*sweedler(Scalar(-3)).wba, kUnbounded).passed());
    CHECK(check_wba_axioms(*h4(), kUnbounded).passed());
    CHECK(check_counital_maps(*h4(), kUnbounded).passed());
    CHECK(is_bialgebra(*h4(), kUnbounded));
}

TEST_CASE("mutation harness: one corrupted structure constant is located")
{
    SUBCASE("product")
    {
        auto t = materialize(*sweedler().wba, kUnbounded);
        REQUIRE(check_wba_axioms(*t, kUnbounded).passed());
        t->set_mul(kF, kY, -e(kFY));
        Report rep = check_wba_axioms(*t, kUnbounded);
        REQUIRE_FALSE(rep.passed());
        bool located = false;
        for (const auto& v : rep.violations()) {
            for (const auto& w : v.witness) located = located || w.find('f') != std::string::npos;
            CHECK_FALSE(v.check.empty());
        }
        CHECK(located);
    }
    SUBCASE("coproduct")
    {
        auto t = materialize(*sweedler().wba, kUnbounded);
        t->set_delta(kY, Tensor2::basis({kY, kOne}) + Tensor2::basis({kOne, kY}));
        Report rep = check_wba_axioms(*t, kUnbounded);
        REQUIRE_FALSE(rep.passed());
        CHECK(rep.violated("multiplicativity of Delta"));
    }
    SUBCASE("counit")
    {
        auto t = materialize(*h4(), kUnbounded);
        t->set_counit({0, 2}, Scalar(2));
        Report rep = check_wba_axioms(*t, kUnbounded);
        REQUIRE_FALSE(rep.passed());
        CHECK((rep.violated("counit") || rep.violated("weak counit")));
    }
    SUBCASE("graded host")
    {
        auto m = mq2(3, 2);
        auto t = materialize(*m.wba, 2);
        REQUIRE(check_wba_axioms(*t, 2).passed());
        BasisId a{1, 0}, b{1, 1};
        t->set_delta(b, Tensor2::basis({a, b}) + Tensor2::basis({b, a}));
        Report rep = check_wba_axioms(*t, 2);
        REQUIRE_FALSE(rep.passed());
        CHECK_FALSE(rep.violations().front().witness.empty());
    }
}

TEST_CASE("group-like classification")
{
    auto s = sweedler();
    CHECK(is_group_like(*s.wba, s.f) == GroupLike::both);
    CHECK(is_group_like(*s.wba, s.one) == GroupLike::both);
    CHECK(is_group_like(*s.wba, s.y) == GroupLike::neither);
    auto h = h4();
    for (std::uint32_t i = 0; i < 4; ++i) CHECK(is_group_like(*h, e({0, i})) == GroupLike::both);
}

TEST_CASE("Sweedler antipode: corrected table passes, printed table fails at y")
{
    auto s = sweedler();
    auto domain = s.wba->basis();
    CHECK(check_antipode(*s.wba, s.antipode, domain).passed());
    Report printed = check_antipode(*s.wba, s.printed_antipode, domain);
    REQUIRE_FALSE(printed.passed());
    bool at_y = false;
    for (const auto& v : printed.violations()) at_y = at_y || (v.witness.size() == 1 && v.witness[0] == "y");
    CHECK(at_y);
    // oracle: mu(S (x) id) Delta(y) = S(y) + S(f) y
    Element direct = s.antipode(s.y) + mul(*s.wba, s.antipode(s.f), s.y);
    CHECK(direct.is_zero());
}

TEST_CASE("tensor products of WBAs")
{
    auto s = sweedler();
    auto t = std::make_shared<TensorWba>(s.wba, h4());
    CHECK(t->dimension() == 16);
    CHECK(check_wba_axioms(*t, kUnbounded).passed());
    Element f1 = t->embed(s.f, e({0, 1}));
    CHECK(is_group_like(*t, f1) == GroupLike::both);
}

TEST_CASE("JSON round trip of a materialized WBA")
{
    auto m = mq2(3, 2);
    auto j = to_json(*m.wba, 2);
    auto back = wba_from_json(j);
    CHECK(to_json(*back, 2) == j);
    CHECK(back->dimension() == m.wba->dimension());
    CHECK(check_wba_axioms(*back, 2).passed());
}
