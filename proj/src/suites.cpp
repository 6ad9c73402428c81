#include "wbafrac/suites.hpp"

#include <algorithm>
#include <optional>

namespace wbafrac {

namespace {

bool rejected(const Example& ex, const std::string& key)
{
    return std::find(ex.rejected_monoids.begin(), ex.rejected_monoids.end(), key) != ex.rejected_monoids.end();
}

std::vector<Element> basis_samples(const Wba& h, unsigned cutoff)
{
    std::vector<Element> out;
    for (BasisId b : h.basis(h.graded() ? std::min(cutoff, h.cutoff()) : kUnbounded)) out.push_back(Element::basis(b));
    return out;
}

Report not_applicable(const std::string& suite, const std::string& why)
{
    Report rep(suite);
    rep.note("not applicable: " + why);
    return rep;
}

Report group_like_suite(const Example& ex)
{
    Report rep("group-like");
    for (const auto& [name, g] : ex.group_likes) {
        GroupLike kind = is_group_like(*ex.wba, g);
        rep.expect(kind == GroupLike::both, "group-like (both sides)", {name}, [&] { return to_string(kind); },
                   [] { return std::string("both"); });
    }
    return rep;
}

Report bialgebra_suite(const Example& ex)
{
    Report rep("bialgebra");
    const Wba& h = *ex.wba;
    const unsigned cut = check_cutoff(ex);
    for (const auto& x : basis_samples(h, cut)) {
        Element es = counital_source(h, x);
        Element expected = h.unit_element() * counit(h, x);
        rep.expect(es == expected, "eps_s(x) = eps(x) 1", {format(h, x)}, [&] { return format(h, es); },
                   [&] { return format(h, expected); });
    }
    return rep;
}

Report localize_suite(const Example& ex, std::uint64_t seed)
{
    Report rep("localize");
    for (const auto& [key, monoid] : ex.monoids) {
        if (rejected(ex, key)) continue;
        Report inner("localize:" + key);
        std::optional<Localization> built;
        try {
            built.emplace(monoid, check_cutoff(ex));
        } catch (const StructureError& e) {
            inner.fail("monoid validation", {key}, e.what());
            rep.merge(inner);
            continue;
        }
        const Localization& loc = *built;
        if (loc.materialized()) {
            auto model = loc.wba();
            inner.merge(check_wba_axioms(*model, model->graded() ? model->cutoff() : kUnbounded));
            inner.merge(check_laurent_fraction_maps(loc));
        } else {
            inner.note("generators do not commute; no Laurent model");
        }
        inner.merge(check_fraction_coalgebra(loc, 100, seed));
        rep.merge(inner);
    }
    return rep;
}

Report laurent_suite(const Example& ex)
{
    if (!ex.laurent) return not_applicable("laurent", "example is not a Laurent model");
    Report rep("laurent");
    const Wba& h = *ex.wba;
    Element dx = mul(h, ex.element("det"), ex.element("X"));
    Element xd = mul(h, ex.element("X"), ex.element("det"));
    rep.expect(dx == h.unit_element(), "det X = 1", {"det", "X"}, [&] { return format(h, dx); },
               [&] { return format(h, h.unit_element()); });
    rep.expect(xd == h.unit_element(), "X det = 1", {"X", "det"}, [&] { return format(h, xd); },
               [&] { return format(h, h.unit_element()); });
    rep.merge(check_laurent_fraction_maps(*ex.laurent));
    return rep;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"wba",    "counital",       "bialgebra", "coquasi",
                                                "group-like", "antipode",   "almost-central", "ore",
                                                "localize", "coideal",      "central",   "laurent"};
    return names;
}

unsigned check_cutoff(const Example& ex) { return ex.cutoff; }

Report run_suite(const Example& ex, const std::string& suite, std::uint64_t seed)
{
    const Wba& h = *ex.wba;
    const unsigned cut = check_cutoff(ex);
    if (suite == "wba") return check_wba_axioms(h, cut);
    if (suite == "counital") return check_counital_maps(h, cut);
    if (suite == "bialgebra") return bialgebra_suite(ex);
    if (suite == "coquasi") {
        if (!ex.rform) return not_applicable(suite, "no r-form");
        std::vector<Element> gl;
        for (const auto& [n, g] : ex.group_likes) gl.push_back(g);
        return check_coquasi(*ex.rform, cut, gl);
    }
    if (suite == "group-like") return group_like_suite(ex);
    if (suite == "antipode") {
        if (!ex.antipode) return not_applicable(suite, "no antipode");
        return check_antipode(h, *ex.antipode, ex.antipode_domain);
    }
    if (suite == "almost-central") {
        Report rep("almost-central");
        for (const auto& [key, m] : ex.monoids) {
            Report r = m->validate(cut);
            if (rejected(ex, key))
                rep.expect(!r.passed(), "monoid is rejected", {key}, [] { return std::string("accepted"); },
                           [] { return std::string("rejected"); });
            else
                rep.merge(r);
        }
        return rep;
    }
    if (suite == "ore") {
        Report rep("ore");
        auto samples = basis_samples(h, cut);
        for (const auto& [key, m] : ex.monoids)
            if (!rejected(ex, key)) rep.merge(check_ore(*m, samples, cut));
        return rep;
    }
    if (suite == "localize") return localize_suite(ex, seed);
    if (suite == "coideal") {
        if (!ex.quotient) return not_applicable(suite, "not a graded quotient");
        return ex.quotient->coideal_test(cut);
    }
    if (suite == "central") {
        Report rep("central");
        for (const auto& n : ex.central_elements) {
            Element x = ex.element(n);
            rep.merge(check_central(h, x, h.graded() ? std::min(cut, h.cutoff()) : kUnbounded));
        }
        return rep;
    }
    if (suite == "laurent") return laurent_suite(ex);
    throw InvalidArgument("unknown suite '" + suite + "'");
}

Localization localize_example(const Example& ex, const std::string& monoid, unsigned power_bound)
{
    auto it = ex.monoids.find(monoid);
    if (it == ex.monoids.end()) throw InvalidArgument("example " + ex.name + " has no monoid '" + monoid + "'");
    return Localization(it->second, check_cutoff(ex), power_bound);
}

Localization localize_example(const Example& ex, const std::vector<std::string>& names,
                              const AnnihilatorStrategy& strategy, unsigned power_bound)
{
    return Localization(monoid_from_names(ex, names, strategy), check_cutoff(ex), power_bound);
}

nlohmann::json report_header(const Example& ex)
{
    nlohmann::json j;
    j["version"] = kVersion;
    j["example"] = ex.name;
    j["params"] = ex.params;
    j["cutoff"] = ex.wba->graded() ? nlohmann::json(ex.wba->cutoff()) : nlohmann::json(nullptr);
    j["field_conductor"] = ex.wba->field().conductor();
    nlohmann::json strategies = nlohmann::json::object();
    for (const auto& [key, m] : ex.monoids) strategies[key] = m->strategy().to_json();
    j["strategies"] = strategies;
    return j;
}

nlohmann::json dimension_json(const Wba& h, unsigned cutoff)
{
    nlohmann::json j = nlohmann::json::object();
    if (!h.graded()) {
        j["total"] = h.dimension();
        return j;
    }
    std::map<Grade, std::size_t> table;
    for (std::uint32_t b = 0; b < h.num_blocks(); ++b) {
        if (h.block_weight(b) > cutoff) continue;
        table[h.block_grade(b)] += h.block_dim(b);
    }
    const bool two_index = std::any_of(table.begin(), table.end(), [](const auto& e) { return e.first.second != 0; });
    for (const auto& [g, d] : table) {
        std::string key = std::to_string(g.first);
        if (two_index) key += "," + std::to_string(g.second);
        j[key] = d;
    }
    return j;
}

}  // namespace wbafrac
