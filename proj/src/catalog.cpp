#include "wbafrac/catalog.hpp"

#include <algorithm>
#include <set>

namespace wbafrac {

namespace {

unsigned param_uint(const Params& p, const std::string& key, unsigned fallback)
{
    auto it = p.find(key);
    if (it == p.end()) return fallback;
    try {
        std::size_t pos = 0;
        long v = std::stol(it->second, &pos);
        if (pos != it->second.size() || v < 0) throw InvalidArgument("");
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw InvalidArgument("parameter " + key + " must be a non-negative integer, got '" + it->second + "'");
    }
}

Scalar param_rational(const Params& p, const std::string& key, long fallback)
{
    auto it = p.find(key);
    if (it == p.end()) return Scalar(fallback);
    Rational v;
    if (v.set_str(it->second, 10) != 0) throw InvalidArgument("parameter " + key + " must be a rational number");
    v.canonicalize();
    return Scalar(v);
}

void check_params(const std::string& name, const Params& p, const Params& defaults)
{
    for (const auto& [k, v] : p)
        if (!defaults.count(k)) throw InvalidArgument("example " + name + " has no parameter '" + k + "'");
}

std::shared_ptr<TableWba> single_block(const std::string& name, std::vector<std::string> labels)
{
    return std::make_shared<TableWba>(name, CycloField::rationals(),
                                      std::vector<TableWba::Block>{{0, {0, 0}, std::move(labels)}});
}

Element el(std::uint32_t block, std::uint32_t index) { return Element::basis({block, index}); }

bool is_central(const Wba& h, const Element& g, unsigned cutoff)
{
    try {
        return check_central(h, g, h.graded() ? std::min(cutoff, h.cutoff()) : kUnbounded).passed();
    } catch (const DegreeOverflow&) {
        return false;
    }
}

}  // namespace

// ---------------------------------------------------------------- base examples

SweedlerExample sweedler(const Scalar& alpha)
{
    if (alpha.is_zero()) throw InvalidArgument("alpha must be nonzero");
    auto h = single_block("Sweedler", {"1", "f", "y", "fy"});
    const BasisId one{0, 0}, f{0, 1}, y{0, 2}, fy{0, 3};
    h->set_unit(Element::basis(one));
    auto set = [&](BasisId a, BasisId b, BasisId c, long s) { h->set_mul(a, b, Element::term(c, Scalar(s))); };
    for (BasisId x : {one, f, y, fy}) {
        set(one, x, x, 1);
        if (x != one) set(x, one, x, 1);
    }
    set(f, f, one, 1);
    set(f, y, fy, 1);
    set(f, fy, y, 1);
    set(y, f, fy, -1);
    set(fy, f, y, -1);
    h->set_delta(one, Tensor2::basis({one, one}));
    h->set_delta(f, Tensor2::basis({f, f}));
    h->set_delta(y, Tensor2::basis({y, one}) + Tensor2::basis({f, y}));
    h->set_delta(fy, Tensor2::basis({fy, f}) + Tensor2::basis({one, fy}));
    h->set_counit(one, Scalar(1));
    h->set_counit(f, Scalar(1));
    h->set_factorization(one, {});
    h->set_factorization(f, {f});
    h->set_factorization(y, {y});
    h->set_factorization(fy, {f, y});

    PairTable gen{{{f, f}, Scalar(-1)}, {{y, y}, alpha}};
    auto form = std::make_shared<RecursiveRForm>(h, gen, gen);

    LinearMap s([=](BasisId b) {
        switch (b.index) {
        case 0: return Element::basis(one);
        case 1: return Element::basis(f);
        case 2: return Element::term(fy, Scalar(-1));
        default: return Element::basis(y);
        }
    });
    LinearMap printed([=](BasisId b) {
        switch (b.index) {
        case 0: return Element::basis(one);
        case 1: return Element::basis(f);
        case 2: return Element::basis(y);
        default: return Element::term(fy, Scalar(-1));
        }
    });
    return {h, form, Element::basis(one), Element::basis(f), Element::basis(y), Element::basis(fy), s, printed};
}

std::shared_ptr<TableWba> h4()
{
    auto h = single_block("H4", {"0bar", "1bar", "2bar", "3bar"});
    h->set_unit(el(0, 1));
    for (std::uint32_t i = 0; i < 4; ++i) {
        for (std::uint32_t j = 0; j < 4; ++j) h->set_mul({0, i}, {0, j}, el(0, (i * j) % 4));
        h->set_delta({0, i}, Tensor2::basis({BasisId{0, i}, BasisId{0, i}}));
        h->set_counit({0, i}, Scalar(1));
    }
    return h;
}

Mq2Example mq2(unsigned level, unsigned cutoff)
{
    const CycloField& field = level_field(level);
    Scalar q = Scalar::zeta_power(field, 4);
    if ((q * q + Scalar::one(field)).is_zero()) throw InvalidArgument("q^2 = -1 is excluded");
    auto free = free_matrix_bialgebra(2, cutoff, field);
    enum { A, B, C, D };
    auto w = [&](unsigned x, unsigned y) { return Element::basis(free->word_id({x, y})); };
    std::vector<Element> rel{
        w(B, A) - q * w(A, B),
        w(C, A) - q * w(A, C),
        w(D, B) - q * w(B, D),
        w(D, C) - q * w(C, D),
        w(B, C) - w(C, B),
        w(A, D) - w(D, A) - (q.inverse() - q) * w(B, C),
    };
    auto quotient = std::make_shared<GradedQuotient>(free, rel, "M_q(2)");
    Element det = quotient->reduce(w(D, A) - q * w(B, C));

    const BasisId a{1, A}, b{1, B}, c{1, C}, d{1, D};
    Scalar one = Scalar::one(field), qi = q.inverse();
    PairTable r{{{a, a}, q}, {{a, d}, one}, {{d, a}, one}, {{d, d}, q}, {{c, b}, q - qi}};
    PairTable rbar{{{a, a}, qi}, {{a, d}, one}, {{d, a}, one}, {{d, d}, qi}, {{c, b}, qi - q}};
    auto form = std::make_shared<RecursiveRForm>(quotient, r, rbar);
    return {quotient, form, det, q, level};
}

MhatExample mhatq2(unsigned level, unsigned cutoff)
{
    auto graph = std::make_shared<GraphWba>(DirectedGraph::linear(level), cutoff, level_field(level));
    auto quotient = std::make_shared<GradedQuotient>(graph, rtt_relations(*graph, level), "Mhat_q(2)");
    Element det = quotient->reduce(quantum_determinant(*graph, level));
    return {graph, quotient, det, level};
}

std::shared_ptr<FreeAlgebraWba> radford_tensor(unsigned cutoff)
{
    if (cutoff < 1) throw InvalidArgument("cutoff must be at least 1");
    return radford_tensor_algebra(cutoff);
}

// ---------------------------------------------------------------- examples

const Element& Example::element(const std::string& n) const
{
    for (const auto& [k, v] : elements)
        if (k == n) return v;
    throw InvalidArgument("example " + name + " has no element named '" + n + "'");
}

bool Example::has_element(const std::string& n) const
{
    return std::any_of(elements.begin(), elements.end(), [&](const auto& e) { return e.first == n; });
}

const std::vector<ExampleDescriptor>& catalog_descriptors()
{
    static const std::vector<ExampleDescriptor> d{
        {"sweedler", "Sweedler's Hopf algebra W with r(f(x)f) = -1, r(y(x)y) = alpha", {{"alpha", "1"}, {"antipode", "corrected"}},
         {"wba", "counital", "bialgebra", "coquasi", "group-like", "antipode", "almost-central", "ore", "localize"}},
        {"h4", "monoid algebra of (Z/4, *); 0bar is not regular", {},
         {"wba", "counital", "bialgebra", "coquasi", "group-like", "almost-central", "ore", "localize"}},
        {"graph", "graph WBA H[G] of the level-r graph", {{"r", "3"}, {"cutoff", "2"}}, {"wba", "counital"}},
        {"mq2", "quantum matrices M_q(2), q = zeta_8r^4", {{"r", "3"}, {"cutoff", "3"}},
         {"wba", "bialgebra", "coideal", "coquasi", "group-like", "central", "almost-central", "ore", "localize"}},
        {"mhatq2", "H[G]/I for the RTT relations of level r", {{"r", "3"}, {"cutoff", "3"}},
         {"wba", "counital", "coideal", "group-like", "central", "almost-central", "ore", "localize"}},
        {"glq2", "GL_q(2) = M_q(2)[X]/(det_q X - 1)", {{"r", "3"}, {"cutoff", "5"}},
         {"wba", "group-like", "antipode", "laurent"}},
        {"radford", "tensor algebra T(V) with Delta(u) = u(x)u - i(x)i", {{"cutoff", "3"}},
         {"wba", "bialgebra", "group-like", "localize"}},
        {"w_h4", "W (x) H4", {{"alpha", "1"}},
         {"wba", "bialgebra", "coquasi", "group-like", "almost-central", "ore", "localize"}},
        {"w_mq2", "W (x) M_q(2) localized at f(x)1 and 1(x)det_q", {{"alpha", "1"}, {"r", "3"}, {"cutoff", "3"}},
         {"wba", "bialgebra", "group-like", "almost-central", "ore", "localize"}},
        {"h4_mq2", "H4 (x) M_q(2) localized at 0bar(x)1 and 1bar(x)det_q", {{"r", "3"}, {"cutoff", "3"}},
         {"wba", "bialgebra", "group-like", "almost-central", "ore", "localize"}},
        {"glfusion", "W (x) H4 (x) Mhat_q(2), a WBA that is not a bialgebra",
         {{"alpha", "1"}, {"r", "3"}, {"cutoff", "2"}},
         {"wba", "counital", "group-like", "almost-central", "ore", "localize"}},
    };
    return d;
}

std::shared_ptr<const DenominatorMonoid> monoid_from_names(const Example& ex, const std::vector<std::string>& names,
                                                           const AnnihilatorStrategy& strategy)
{
    std::vector<Element> gens;
    ConjugationAction action;
    action.central = true;
    for (const auto& n : names) {
        const Element& g = ex.element(n);
        gens.push_back(g);
        auto it = ex.conjugations.find(n);
        if (it != ex.conjugations.end()) {
            action.forward.push_back(it->second.first);
            action.inverse.push_back(it->second.second);
            action.central = false;
        } else if (ex.rform && is_group_like(*ex.wba, g) == GroupLike::both && !is_central(*ex.wba, g, ex.cutoff)) {
            auto [f, i] = conjugation_maps(ex.rform, g);
            action.forward.push_back(f);
            action.inverse.push_back(i);
            action.central = false;
        } else {
            // Central generators act trivially; anything else is left for the
            // almost-centrality checker to reject.
            action.forward.push_back(LinearMap::identity());
            action.inverse.push_back(LinearMap::identity());
        }
    }
    return std::make_shared<DenominatorMonoid>(ex.wba, std::move(gens), names, std::move(action), strategy);
}

namespace {

void add_monoid(Example& ex, const std::string& key, const std::vector<std::string>& names,
                const AnnihilatorStrategy& strategy)
{
    ex.monoids[key] = monoid_from_names(ex, names, strategy);
}

Example build_sweedler(const Params& p)
{
    Example ex;
    auto s = sweedler(param_rational(p, "alpha", 1));
    ex.wba = s.wba;
    ex.rform = s.rform;
    ex.elements = {{"one", s.one}, {"f", s.f}, {"y", s.y}, {"fy", s.fy}};
    ex.group_likes = {{"one", s.one}, {"f", s.f}};
    ex.antipode_domain = s.wba->basis();
    add_monoid(ex, "default", {"one", "f"}, AnnihilatorStrategy::declared_regular());
    auto it = p.find("antipode");
    std::string variant = it == p.end() ? "corrected" : it->second;
    if (variant == "corrected") {
        ex.antipode = s.antipode;
        ex.notes.push_back("antipode S(y) = -fy; the printed S(y) = y (antipode=printed) violates S(y')y'' = eps(y)");
    } else if (variant == "printed") {
        ex.antipode = s.printed_antipode;
        ex.expected_failures.push_back("antipode");
        ex.notes.push_back("printed antipode S(y) = y: S(y')y'' = y + fy != eps(y)1");
    } else {
        throw InvalidArgument("parameter antipode must be 'corrected' or 'printed'");
    }
    return ex;
}

Example build_h4(const Params&)
{
    Example ex;
    auto h = h4();
    ex.wba = h;
    ex.rform = commutative_rform(h);
    ex.elements = {{"zerobar", el(0, 0)}, {"onebar", el(0, 1)}, {"twobar", el(0, 2)}, {"threebar", el(0, 3)}};
    ex.group_likes = ex.elements;
    add_monoid(ex, "default", {"zerobar", "onebar"}, AnnihilatorStrategy::finite({{0}, {1}}));
    return ex;
}

Example build_graph(const Params& p)
{
    Example ex;
    unsigned r = param_uint(p, "r", 3);
    ex.cutoff = param_uint(p, "cutoff", 2);
    auto g = std::make_shared<GraphWba>(DirectedGraph::linear(r), ex.cutoff);
    ex.wba = g;
    ex.elements = {{"one", g->unit_element()}};
    ex.group_likes = ex.elements;
    ex.expected_failures = {"bialgebra"};
    return ex;
}

void add_mq2_elements(Example& ex, const Mq2Example& m)
{
    const char* names[] = {"a", "b", "c", "d"};
    for (std::uint32_t i = 0; i < 4; ++i) ex.elements.emplace_back(names[i], el(1, i));
    ex.elements.emplace_back("det", m.det);
    ex.elements.emplace_back("one", m.wba->unit_element());
}

Example build_mq2(const Params& p)
{
    Example ex;
    ex.cutoff = param_uint(p, "cutoff", 3);
    auto m = mq2(param_uint(p, "r", 3), ex.cutoff);
    ex.wba = m.wba;
    ex.quotient = m.wba;
    ex.rform = m.rform;
    add_mq2_elements(ex, m);
    ex.group_likes = {{"one", m.wba->unit_element()}, {"det", m.det}};
    ex.central_elements = {"det"};
    add_monoid(ex, "default", {"det"}, AnnihilatorStrategy::declared_regular());
    return ex;
}

Example build_mhatq2(const Params& p)
{
    Example ex;
    ex.cutoff = param_uint(p, "cutoff", 3);
    auto m = mhatq2(param_uint(p, "r", 3), ex.cutoff);
    ex.wba = m.wba;
    ex.quotient = m.wba;
    ex.elements = {{"det", m.det}, {"one", m.wba->unit_element()}};
    ex.group_likes = {{"one", m.wba->unit_element()}, {"det", m.det}};
    ex.central_elements = {"det"};
    add_monoid(ex, "default", {"det"}, AnnihilatorStrategy::declared_regular());
    ex.notes.push_back("det_q is declared regular; left and right multiplication by det_q are checked "
                       "injective on every materialized degree");
    ex.expected_failures = {"bialgebra"};
    if (m.level >= 5) {
        ex.expected_failures.insert(ex.expected_failures.end(), {"central", "almost-central", "ore", "localize"});
        ex.notes.push_back("for r >= 5 the coefficients alpha_j = 1/sqrt(2) do not make det_q central; "
                           "the central group-like of this shape has odd-parity coefficients scaled by 1/[[2]]");
    }
    return ex;
}

Example build_glq2(const Params& p)
{
    Example ex;
    ex.cutoff = param_uint(p, "cutoff", 5);
    auto m = mq2(param_uint(p, "r", 3), ex.cutoff);
    auto loc = std::make_shared<Localization>(laurent_model(m.wba, m.det, ex.cutoff, "det"));
    auto gl = loc->wba();
    ex.wba = gl;
    ex.laurent = loc;
    const char* names[] = {"a", "b", "c", "d"};
    std::vector<Element> gen;
    for (std::uint32_t i = 0; i < 4; ++i) {
        gen.push_back(gl->phi(el(1, i)));
        ex.elements.emplace_back(names[i], gen.back());
    }
    Element x = gl->x_power(1);
    Element det = gl->phi(m.det);
    ex.elements.emplace_back("X", x);
    ex.elements.emplace_back("det", det);
    ex.elements.emplace_back("one", gl->unit_element());
    ex.group_likes = {{"one", gl->unit_element()}, {"det", det}, {"X", x}};

    // S(a) = dX, S(b) = -q bX, S(c) = -q^-1 cX, S(d) = aX, S(X) = det_q
    auto times_x = [gl, x](const Element& e) { return mul(*gl, e, x); };
    std::map<BasisId, Element> table;
    auto single = [](const Element& e) {
        if (e.size() != 1 || !e.begin()->second.is_one()) throw StructureError("generator is not a basis vector");
        return e.begin()->first;
    };
    table[single(gen[0])] = times_x(gen[3]);
    table[single(gen[1])] = times_x(gen[1]) * (-m.q);
    table[single(gen[2])] = times_x(gen[2]) * (-m.q.inverse());
    table[single(gen[3])] = times_x(gen[0]);
    table[single(x)] = det;
    ex.antipode = LinearMap([table](BasisId b) {
        auto it = table.find(b);
        if (it == table.end()) throw InvalidArgument("antipode table only covers a, b, c, d and X");
        return it->second;
    });
    for (const auto& [b, v] : table) ex.antipode_domain.push_back(b);
    return ex;
}

Example build_radford(const Params& p)
{
    Example ex;
    ex.cutoff = param_uint(p, "cutoff", 3);
    auto t = radford_tensor(ex.cutoff);
    ex.wba = t;
    ex.elements = {{"one", t->unit_element()}, {"u", el(1, 0)}, {"i", el(1, 1)}};
    ex.group_likes = {{"one", t->unit_element()}};
    add_monoid(ex, "default", {"one"}, AnnihilatorStrategy::declared_regular());
    return ex;
}

Example build_w_h4(const Params& p)
{
    Example ex;
    auto s = sweedler(param_rational(p, "alpha", 1));
    auto h = h4();
    auto t = std::make_shared<TensorWba>(s.wba, h);
    ex.wba = t;
    ex.rform = std::make_shared<TensorRForm>(t, s.rform, commutative_rform(h));
    Element one_h = el(0, 1);
    ex.elements = {{"one", t->unit_element()},
                   {"f", t->embed(s.f, one_h)},
                   {"zerobar", t->embed(s.one, el(0, 0))},
                   {"y", t->embed(s.y, one_h)}};
    ex.group_likes = {ex.elements[0], ex.elements[1], ex.elements[2]};
    auto [fi, fo] = conjugation_maps(s.rform, s.f);
    ex.conjugations["f"] = {t->tensor_map(fi, LinearMap::identity()), t->tensor_map(fo, LinearMap::identity())};
    add_monoid(ex, "default", {"f", "zerobar"}, AnnihilatorStrategy::finite({{1}}));
    return ex;
}

Example build_w_mq2(const Params& p)
{
    Example ex;
    ex.cutoff = param_uint(p, "cutoff", 3);
    auto s = sweedler(param_rational(p, "alpha", 1));
    auto m = mq2(param_uint(p, "r", 3), ex.cutoff);
    auto t = std::make_shared<TensorWba>(s.wba, m.wba);
    ex.wba = t;
    Element one_m = m.wba->unit_element();
    ex.elements = {{"one", t->unit_element()}, {"f", t->embed(s.f, one_m)}, {"det", t->embed(s.one, m.det)}};
    ex.group_likes = ex.elements;
    auto [fi, fo] = conjugation_maps(s.rform, s.f);
    ex.conjugations["f"] = {t->tensor_map(fi, LinearMap::identity()), t->tensor_map(fo, LinearMap::identity())};
    add_monoid(ex, "default", {"f", "det"}, AnnihilatorStrategy::declared_regular());
    return ex;
}

Example build_h4_mq2(const Params& p)
{
    Example ex;
    ex.cutoff = param_uint(p, "cutoff", 3);
    auto h = h4();
    auto m = mq2(param_uint(p, "r", 3), ex.cutoff);
    auto t = std::make_shared<TensorWba>(h, m.wba);
    ex.wba = t;
    ex.elements = {{"one", t->unit_element()},
                   {"zerobar", t->embed(el(0, 0), m.wba->unit_element())},
                   {"det", t->embed(el(0, 1), m.det)}};
    ex.group_likes = ex.elements;
    // det_q is regular in M_q(2), so x t = 0 for some t in G iff x (0bar (x) 1) = 0.
    add_monoid(ex, "default", {"zerobar", "det"}, AnnihilatorStrategy::finite({{0}}));
    return ex;
}

Example build_glfusion(const Params& p)
{
    Example ex;
    ex.cutoff = param_uint(p, "cutoff", 2);
    auto s = sweedler(param_rational(p, "alpha", 1));
    auto h = h4();
    auto m = mhatq2(param_uint(p, "r", 3), ex.cutoff);
    auto inner = std::make_shared<TensorWba>(s.wba, h);
    auto t = std::make_shared<TensorWba>(inner, m.wba);
    ex.wba = t;
    Element one_m = m.wba->unit_element(), onebar = el(0, 1);
    ex.elements = {{"one", t->unit_element()},
                   {"f", t->embed(inner->embed(s.f, onebar), one_m)},
                   {"y", t->embed(inner->embed(s.y, onebar), one_m)},
                   {"zerobar", t->embed(inner->embed(s.one, el(0, 0)), one_m)},
                   {"det", t->embed(inner->embed(s.one, onebar), m.det)}};
    ex.group_likes = {ex.elements[0], ex.elements[1], ex.elements[3], ex.elements[4]};
    auto [fi, fo] = conjugation_maps(s.rform, s.f);
    ex.conjugations["f"] = {t->tensor_map(inner->tensor_map(fi, LinearMap::identity()), LinearMap::identity()),
                            t->tensor_map(inner->tensor_map(fo, LinearMap::identity()), LinearMap::identity())};
    add_monoid(ex, "default", {"f", "zerobar", "det"}, AnnihilatorStrategy::finite({{1}}));
    add_monoid(ex, "verbatim", {"f", "y", "zerobar", "det"}, AnnihilatorStrategy::finite({{2}}));
    ex.rejected_monoids = {"verbatim"};
    ex.expected_failures = {"bialgebra"};
    ex.notes.push_back("default denominators omit y (1)(x)1bar(x)1, which is not group-like; the verbatim "
                       "generator list is available as the 'verbatim' monoid and is rejected by the "
                       "almost-centrality checker");
    return ex;
}

}  // namespace

Example build_example(const std::string& name, const Params& params)
{
    const ExampleDescriptor* desc = nullptr;
    for (const auto& d : catalog_descriptors())
        if (d.name == name) desc = &d;
    if (!desc) throw InvalidArgument("unknown example '" + name + "'");
    check_params(name, params, desc->defaults);

    Example ex;
    if (name == "sweedler") ex = build_sweedler(params);
    else if (name == "h4") ex = build_h4(params);
    else if (name == "graph") ex = build_graph(params);
    else if (name == "mq2") ex = build_mq2(params);
    else if (name == "mhatq2") ex = build_mhatq2(params);
    else if (name == "glq2") ex = build_glq2(params);
    else if (name == "radford") ex = build_radford(params);
    else if (name == "w_h4") ex = build_w_h4(params);
    else if (name == "w_mq2") ex = build_w_mq2(params);
    else if (name == "h4_mq2") ex = build_h4_mq2(params);
    else ex = build_glfusion(params);

    ex.name = name;
    ex.description = desc->summary;
    ex.params = desc->defaults;
    for (const auto& [k, v] : params) ex.params[k] = v;
    for (const auto& suite : desc->manifest)
        if (std::find(ex.expected_failures.begin(), ex.expected_failures.end(), suite) == ex.expected_failures.end())
            ex.manifest.push_back(suite);
    return ex;
}

}  // namespace wbafrac
