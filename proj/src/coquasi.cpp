#include "wbafrac/coquasi.hpp"

#include <set>

namespace wbafrac {

Scalar rform_eval(const RForm& form, const Element& x, const Element& y, bool bar)
{
    Scalar out = form.host().zero();
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            Scalar v = bar ? form.rbar(a, b) : form.r(a, b);
            if (!v.is_zero()) out += ca * cb * v;
        }
    return out;
}

// ---------------------------------------------------------------- tables

TableRForm::TableRForm(WbaPtr host, PairTable r, PairTable rbar)
    : host_(std::move(host)), r_(std::move(r)), rbar_(std::move(rbar))
{
}

Scalar TableRForm::r(BasisId x, BasisId y) const
{
    auto it = r_.find({x, y});
    return it == r_.end() ? host_->zero() : it->second;
}

Scalar TableRForm::rbar(BasisId x, BasisId y) const
{
    auto it = rbar_.find({x, y});
    return it == rbar_.end() ? host_->zero() : it->second;
}

RFormPtr commutative_rform(WbaPtr host)
{
    PairTable t;
    const auto basis = host->basis();
    for (BasisId x : basis)
        for (BasisId y : basis) {
            Scalar v = counit(*host, host->mul_basis(x, y));
            if (!v.is_zero()) t.emplace(std::make_pair(x, y), v);
        }
    return std::make_shared<TableRForm>(host, t, t);
}

RFormPtr tabulate(WbaPtr host, const RForm& form)
{
    if (host->graded()) throw InvalidArgument("tabulate requires a finite-dimensional host");
    PairTable r, rb;
    const auto basis = host->basis();
    for (BasisId x : basis)
        for (BasisId y : basis) {
            Scalar v = form.r(x, y), w = form.rbar(x, y);
            if (!v.is_zero()) r.emplace(std::make_pair(x, y), v);
            if (!w.is_zero()) rb.emplace(std::make_pair(x, y), w);
        }
    return std::make_shared<TableRForm>(host, r, rb);
}

// ---------------------------------------------------------------- recursive extension

RecursiveRForm::RecursiveRForm(WbaPtr host, PairTable r_gen, PairTable rbar_gen, Route route)
    : host_(std::move(host)), gen_{std::move(r_gen), std::move(rbar_gen)}, route_(route)
{
    const Element& one = host_->unit_element();
    if (one.size() != 1 || !one.begin()->second.is_one())
        throw StructureError("recursive r-form needs the unit to be a basis vector of " + host_->name());
}

std::vector<BasisId> RecursiveRForm::word(BasisId b) const
{
    auto w = host_->factorization(b);
    if (!w) throw StructureError("no generator word for " + host_->basis_label(b));
    return *w;
}

Element RecursiveRForm::product(const std::vector<BasisId>& letters, std::size_t from, std::size_t to) const
{
    Element out = Element::basis(letters[from]);
    for (std::size_t i = from + 1; i < to; ++i) out = mul(*host_, out, Element::basis(letters[i]));
    return out;
}

Scalar RecursiveRForm::eval(BasisId x, BasisId y, bool bar) const
{
    const int slot = bar ? 1 : 0;
    {
        std::lock_guard lock(mutex_);
        auto it = memo_[slot].find({x, y});
        if (it != memo_[slot].end()) return it->second;
    }
    Scalar v = compute(x, y, bar);
    std::lock_guard lock(mutex_);
    memo_[slot].emplace(std::make_pair(x, y), v);
    return v;
}

Scalar RecursiveRForm::eval_el(const Element& x, const Element& y, bool bar) const
{
    Scalar out = host_->zero();
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            Scalar v = eval(a, b, bar);
            if (!v.is_zero()) out += ca * cb * v;
        }
    return out;
}

Scalar RecursiveRForm::compute(BasisId x, BasisId y, bool bar) const
{
    const auto wx = word(x), wy = word(y);
    if (wx.empty()) return host_->counit_basis(y);
    if (wy.empty()) return host_->counit_basis(x);
    if (wx.size() == 1 && wy.size() == 1) {
        auto it = gen_[bar ? 1 : 0].find({x, y});
        return it == gen_[bar ? 1 : 0].end() ? host_->zero() : it->second;
    }
    const bool split_left = route_ == Route::left_first ? wx.size() >= 2 : wy.size() < 2;
    Scalar out = host_->zero();
    if (split_left) {
        const Element p = product(wx, 0, wx.size() - 1);
        const Element l = Element::basis(wx.back());
        for (const auto& [k, c] : host_->delta_basis(y)) {
            const Element y1 = Element::basis(k[0]), y2 = Element::basis(k[1]);
            Scalar v = bar ? eval_el(p, y1, true) * eval_el(l, y2, true) : eval_el(l, y1, false) * eval_el(p, y2, false);
            if (!v.is_zero()) out += c * v;
        }
    } else {
        const Element q = Element::basis(wy.front());
        const Element rest = product(wy, 1, wy.size());
        for (const auto& [k, c] : host_->delta_basis(x)) {
            const Element x1 = Element::basis(k[0]), x2 = Element::basis(k[1]);
            Scalar v = bar ? eval_el(x1, rest, true) * eval_el(x2, q, true)
                           : eval_el(x1, q, false) * eval_el(x2, rest, false);
            if (!v.is_zero()) out += c * v;
        }
    }
    return out;
}

// ---------------------------------------------------------------- tensor products

TensorRForm::TensorRForm(std::shared_ptr<const TensorWba> host, RFormPtr left, RFormPtr right)
    : host_(std::move(host)), left_(std::move(left)), right_(std::move(right))
{
}

Scalar TensorRForm::r(BasisId x, BasisId y) const
{
    auto [xa, xb] = host_->split(x);
    auto [ya, yb] = host_->split(y);
    Scalar a = left_->r(xa, ya);
    if (a.is_zero()) return a;
    return a * right_->r(xb, yb);
}

Scalar TensorRForm::rbar(BasisId x, BasisId y) const
{
    auto [xa, xb] = host_->split(x);
    auto [ya, yb] = host_->split(y);
    Scalar a = left_->rbar(xa, ya);
    if (a.is_zero()) return a;
    return a * right_->rbar(xb, yb);
}

// ---------------------------------------------------------------- identity suites

namespace {

struct BasisData {
    Tensor2 delta;
    Element es, et;  // eps_s, eps_t
};

}  // namespace

Report check_coquasi(const RForm& form, unsigned cutoff, const std::vector<Element>& group_likes)
{
    const Wba& h = form.host();
    Report rep("coquasi");
    const unsigned cut = h.graded() ? std::min(cutoff, h.cutoff()) : cutoff;
    const auto basis = h.basis(cut);
    const Element& one = h.unit_element();
    auto lbl = [&](BasisId b) { return h.basis_label(b); };
    auto r = [&](const Element& a, const Element& b) { return rform_eval(form, a, b, false); };
    auto rb = [&](const Element& a, const Element& b) { return rform_eval(form, a, b, true); };
    auto E = [](BasisId b) { return Element::basis(b); };
    auto eps = [&](const Element& a) { return counit(h, a); };
    auto fs = [](const Scalar& s) { return [&s] { return s.to_string(); }; };
    auto fe = [&](const Element& e) { return [&h, &e] { return format(h, e); }; };
    auto ft = [&](const Tensor2& e) { return [&h, &e] { return format(h, e); }; };

    std::map<BasisId, BasisData> data;
    for (BasisId x : basis) {
        Element ex = E(x);
        data.emplace(x, BasisData{h.delta_basis(x), counital_source(h, ex), counital_target(h, ex)});
    }
    auto dat = [&](BasisId b) -> const BasisData& {
        auto it = data.find(b);
        if (it == data.end()) it = data.emplace(b, BasisData{h.delta_basis(b), counital_source(h, E(b)),
                                                             counital_target(h, E(b))}).first;
        return it->second;
    };

    for (BasisId x : basis) {
        const Element ex = E(x);
        Scalar ex_eps = h.counit_basis(x);
        Scalar a = r(ex, one), b = r(one, ex);
        rep.expect(a == ex_eps, "r(x (x) 1) = eps(x)", {lbl(x)}, fs(a), fs(ex_eps));
        rep.expect(b == ex_eps, "r(1 (x) x) = eps(x)", {lbl(x)}, fs(b), fs(ex_eps));
    }

    for (BasisId x : basis) {
        for (BasisId y : basis) {
            if (h.weight(x) + h.weight(y) > cut) continue;
            const std::vector<std::string> w{lbl(x), lbl(y)};
            const Element ex = E(x), ey = E(y);
            const Tensor2& dx = dat(x).delta;
            const Tensor2& dy = dat(y).delta;
            const Scalar rxy = form.r(x, y);
            const Scalar exy = eps(h.mul_basis(x, y)), eyx = eps(h.mul_basis(y, x));

            Scalar d1 = h.zero(), d2 = h.zero(), i1 = h.zero(), i2 = h.zero();
            Scalar p2 = h.zero(), p3 = h.zero(), p4 = h.zero(), p5 = h.zero();
            Element braid_l, braid_r;
            Tensor2 p6l, p6r;
            for (const auto& [kx, cx] : dx) {
                for (const auto& [ky, cy] : dy) {
                    const Scalar c = cx * cy;
                    const Scalar r11 = form.r(kx[0], ky[0]), r22 = form.r(kx[1], ky[1]);
                    if (!r22.is_zero()) {
                        d1 += c * eps(h.mul_basis(kx[0], ky[0])) * r22;
                        i1 += c * form.rbar(kx[0], ky[0]) * r22;
                        braid_l.add_scaled(h.mul_basis(kx[0], ky[0]), c * r22);
                        p3 += c * r(E(kx[0]), dat(ky[0]).et) * r22;
                        p6r.add_scaled(tensor(dat(kx[0]).et, dat(ky[0]).es), c * r22);
                    }
                    if (!r11.is_zero()) {
                        d2 += c * r11 * eps(h.mul_basis(ky[1], kx[1]));
                        i2 += c * r11 * form.rbar(kx[1], ky[1]);
                        braid_r.add_scaled(h.mul_basis(ky[1], kx[1]), c * r11);
                        p2 += c * r11 * r(E(kx[1]), dat(ky[1]).es);
                        p6l.add_scaled(tensor(dat(ky[1]).et, dat(kx[1]).es), c * r11);
                    }
                    const Scalar r12 = form.r(kx[0], ky[1]);
                    if (!r12.is_zero()) p4 += c * r(dat(kx[1]).es, E(ky[0])) * r12;
                    const Scalar r21 = form.r(kx[1], ky[0]);
                    if (!r21.is_zero()) p5 += c * r21 * r(dat(kx[0]).et, E(ky[1]));
                }
            }
            rep.expect(d1 == rxy, "r(x (x) y) = eps(x'y') r(x'' (x) y'')", w, fs(d1), fs(rxy));
            rep.expect(d2 == rxy, "r(x (x) y) = r(x' (x) y') eps(y''x'')", w, fs(d2), fs(rxy));
            rep.expect(i1 == eyx, "rbar(x' (x) y') r(x'' (x) y'') = eps(yx)", w, fs(i1), fs(eyx));
            rep.expect(i2 == exy, "r(x' (x) y') rbar(x'' (x) y'') = eps(xy)", w, fs(i2), fs(exy));
            rep.expect(braid_l == braid_r, "x'y' r(x'' (x) y'') = r(x' (x) y') y''x''", w, fe(braid_l), fe(braid_r));
            rep.expect(p2 == rxy, "r(x' (x) y') r(x'' (x) eps_s(y'')) = r(x (x) y)", w, fs(p2), fs(rxy));
            rep.expect(p3 == rxy, "r(x' (x) eps_t(y')) r(x'' (x) y'') = r(x (x) y)", w, fs(p3), fs(rxy));
            rep.expect(p4 == rxy, "r(eps_s(x'') (x) y') r(x' (x) y'') = r(x (x) y)", w, fs(p4), fs(rxy));
            rep.expect(p5 == rxy, "r(x'' (x) y') r(eps_t(x') (x) y'') = r(x (x) y)", w, fs(p5), fs(rxy));
            rep.expect(p6l == p6r, "r(x' (x) y') eps_t(y'') (x) eps_s(x'') = eps_t(x') (x) eps_s(y') r(x'' (x) y'')",
                       w, ft(p6l), ft(p6r));

            const Element& ety = dat(y).et;
            const Element& esy = dat(y).es;
            const Element& etx = dat(x).et;
            const Element& esx = dat(x).es;
            Scalar q7 = r(ex, ety), q8 = r(ex, esy), q9 = r(etx, ey), q10 = r(esx, ey);
            Scalar e9 = eps(mul(h, etx, ey)), e10 = eps(mul(h, ey, esx));
            rep.expect(q7 == exy, "r(x (x) eps_t(y)) = eps(xy)", w, fs(q7), fs(exy));
            rep.expect(q8 == eyx, "r(x (x) eps_s(y)) = eps(yx)", w, fs(q8), fs(eyx));
            rep.expect(q9 == e9, "r(eps_t(x) (x) y) = eps(eps_t(x)y)", w, fs(q9), fs(e9));
            rep.expect(q10 == e10, "r(eps_s(x) (x) y) = eps(y eps_s(x))", w, fs(q10), fs(e10));

            Element l11, r11e, l12, r12e;
            for (const auto& [ky, cy] : dy) {
                l11.add_scaled(dat(ky[1]).es, cy * form.r(x, ky[0]));
                l12.add_scaled(dat(ky[0]).et, cy * form.r(x, ky[1]));
            }
            for (const auto& [kx, cx] : dx) {
                Scalar a = form.r(kx[0], y);
                if (!a.is_zero()) r11e.add_scaled(counital_source(h, dat(kx[1]).et), cx * a);
                Scalar b = form.r(kx[1], y);
                if (!b.is_zero()) r12e.add_scaled(counital_target(h, dat(kx[0]).es), cx * b);
            }
            rep.expect(l11 == r11e, "r(x (x) y') eps_s(y'') = r(x' (x) y) eps_s(eps_t(x''))", w, fe(l11), fe(r11e));
            rep.expect(l12 == r12e, "eps_t(y') r(x (x) y'') = eps_t(eps_s(x')) r(x'' (x) y)", w, fe(l12), fe(r12e));

            for (BasisId z : basis) {
                if (h.weight(x) + h.weight(y) + h.weight(z) > cut) continue;
                const std::vector<std::string> w3{lbl(x), lbl(y), lbl(z)};
                Scalar u1 = r(h.mul_basis(x, y), E(z)), u2 = r(ex, h.mul_basis(y, z));
                Scalar v1 = h.zero(), v2 = h.zero();
                for (const auto& [kz, cz] : dat(z).delta) {
                    Scalar a = form.r(y, kz[0]);
                    if (!a.is_zero()) v1 += cz * a * form.r(x, kz[1]);
                }
                for (const auto& [kx, cx] : dx) {
                    Scalar a = form.r(kx[0], y);
                    if (!a.is_zero()) v2 += cx * a * form.r(kx[1], z);
                }
                rep.expect(u1 == v1, "r(xy (x) z) = r(y (x) z') r(x (x) z'')", w3, fs(u1), fs(v1));
                rep.expect(u2 == v2, "r(x (x) yz) = r(x' (x) y) r(x'' (x) z)", w3, fs(u2), fs(v2));
            }
        }
    }

    for (std::size_t gi = 0; gi < group_likes.size(); ++gi) {
        const Element& g = group_likes[gi];
        const std::string gl = format(h, g);
        const Tensor2 dg = delta(h, g);
        for (BasisId x : basis) {
            if (h.weight(x) + weight(h, g) > cut) continue;
            const Tensor2& dx = dat(x).delta;
            const Scalar ex = h.counit_basis(x);
            Scalar g1 = h.zero(), g2 = h.zero();
            for (const auto& [kx, cx] : dx) {
                g1 += cx * rb(E(kx[0]), g) * r(E(kx[1]), g);
                g2 += cx * r(E(kx[0]), g) * rb(E(kx[1]), g);
            }
            rep.expect(g1 == ex, "rbar(x' (x) g) r(x'' (x) g) = eps(x)", {lbl(x), gl}, fs(g1), fs(ex));
            rep.expect(g2 == ex, "r(x' (x) g) rbar(x'' (x) g) = eps(x)", {lbl(x), gl}, fs(g2), fs(ex));
            for (BasisId y : basis) {
                if (h.weight(x) + h.weight(y) > cut) continue;
                const Tensor2& dy = dat(y).delta;
                Scalar l3 = h.zero(), r3 = h.zero(), l4 = h.zero(), r4 = h.zero();
                for (const auto& [kg, cg] : dg) {
                    l3 += cg * form.r(x, kg[0]) * form.r(y, kg[1]);
                    l4 += cg * form.rbar(x, kg[0]) * form.rbar(y, kg[1]);
                }
                for (const auto& [kx, cx] : dx)
                    for (const auto& [ky, cy] : dy) {
                        Scalar e1 = eps(h.mul_basis(ky[1], kx[1]));
                        if (!e1.is_zero()) r3 += cx * cy * r(E(kx[0]), g) * r(E(ky[0]), g) * e1;
                        Scalar e2 = eps(h.mul_basis(kx[0], ky[0]));
                        if (!e2.is_zero()) r4 += cx * cy * e2 * rb(E(kx[1]), g) * rb(E(ky[1]), g);
                    }
                rep.expect(l3 == r3, "r(x (x) g') r(y (x) g'') = r(x' (x) g) r(y' (x) g) eps(y''x'')",
                           {lbl(x), lbl(y), gl}, fs(l3), fs(r3));
                rep.expect(l4 == r4, "rbar(x (x) g') rbar(y (x) g'') = eps(x'y') rbar(x'' (x) g) rbar(y'' (x) g)",
                           {lbl(x), lbl(y), gl}, fs(l4), fs(r4));
            }
        }
    }
    return rep;
}

Report check_route_independence(const RForm& a, const RForm& b, unsigned cutoff)
{
    const Wba& h = a.host();
    Report rep("route-independence");
    const unsigned cut = h.graded() ? std::min(cutoff, h.cutoff()) : cutoff;
    const auto basis = h.basis(cut);
    for (BasisId x : basis)
        for (BasisId y : basis) {
            Scalar ra = a.r(x, y), rb = b.r(x, y);
            rep.expect(ra == rb, "r: left-first == right-first", {h.basis_label(x), h.basis_label(y)},
                       [&] { return ra.to_string(); }, [&] { return rb.to_string(); });
            Scalar sa = a.rbar(x, y), sb = b.rbar(x, y);
            rep.expect(sa == sb, "rbar: left-first == right-first", {h.basis_label(x), h.basis_label(y)},
                       [&] { return sa.to_string(); }, [&] { return sb.to_string(); });
        }
    return rep;
}

// ---------------------------------------------------------------- conjugation

Element conjugation(const RForm& form, const Element& g, const Element& x, Direction dir)
{
    const Wba& h = form.host();
    if (is_group_like(h, g) != GroupLike::both)
        throw StructureError("conjugation: " + format(h, g) + " is not group-like");
    const bool fwd = dir == Direction::forward;
    Element out;
    for (const auto& [k, c] : delta2(h, x)) {
        Scalar a = rform_eval(form, Element::basis(k[0]), g, fwd);
        if (a.is_zero()) continue;
        Scalar b = rform_eval(form, Element::basis(k[2]), g, !fwd);
        if (b.is_zero()) continue;
        out.add(k[1], c * a * b);
    }
    return out;
}

std::pair<LinearMap, LinearMap> conjugation_maps(RFormPtr form, const Element& g)
{
    if (is_group_like(form->host(), g) != GroupLike::both)
        throw StructureError("conjugation: " + format(form->host(), g) + " is not group-like");
    auto fwd = LinearMap::memoized(
        [form, g](BasisId b) { return conjugation(*form, g, Element::basis(b), Direction::forward); });
    auto inv = LinearMap::memoized(
        [form, g](BasisId b) { return conjugation(*form, g, Element::basis(b), Direction::inverse); });
    return {fwd, inv};
}

ConjugationAction ConjugationAction::identity(std::size_t generators)
{
    ConjugationAction a;
    a.forward.assign(generators, LinearMap::identity());
    a.inverse.assign(generators, LinearMap::identity());
    a.central = true;
    return a;
}

ConjugationAction ConjugationAction::from_rform(RFormPtr form, const std::vector<Element>& generators)
{
    ConjugationAction a;
    for (const auto& g : generators) {
        auto [f, i] = conjugation_maps(form, g);
        a.forward.push_back(f);
        a.inverse.push_back(i);
    }
    return a;
}

LinearMap ConjugationAction::word_map(const std::vector<int>& word) const
{
    LinearMap out;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = forward.at(static_cast<std::size_t>(*it)).after(out);
    return out;
}

LinearMap ConjugationAction::word_inverse(const std::vector<int>& word) const
{
    LinearMap out;
    for (int g : word) out = inverse.at(static_cast<std::size_t>(g)).after(out);
    return out;
}

Element evaluate_word(const Wba& h, const std::vector<Element>& generators, const std::vector<int>& word)
{
    Element out = h.unit_element();
    for (int g : word) out = mul(h, out, generators.at(static_cast<std::size_t>(g)));
    return out;
}

Report check_almost_central(const Wba& h, const std::vector<Element>& generators, const ConjugationAction& action,
                            const AlmostCentralOptions& options)
{
    Report rep("almost-central");
    const unsigned cut = h.graded() ? std::min(options.cutoff, h.cutoff()) : options.cutoff;
    const auto basis = h.basis(cut);
    if (action.forward.size() != generators.size() || action.inverse.size() != generators.size())
        throw InvalidArgument("action must list one automorphism per generator");

    for (std::size_t i = 0; i < generators.size(); ++i) {
        const Element& g = generators[i];
        const std::string gl = format(h, g);
        GroupLike kind = is_group_like(h, g);
        rep.expect(kind == GroupLike::both, "generator is group-like", {gl}, [&] { return to_string(kind); },
                   [] { return std::string("both"); });

        const LinearMap& f = action.forward[i];
        const LinearMap& finv = action.inverse[i];
        const unsigned wg = weight(h, g);
        for (BasisId x : basis) {
            if (wg + h.weight(x) > cut) continue;
            const Element ex = Element::basis(x);
            Element lhs = mul(h, g, ex);
            Element rhs = mul(h, f(ex), g);
            rep.expect(lhs == rhs, "(C1) g x = I_g(x) g", {gl, h.basis_label(x)}, [&] { return format(h, lhs); },
                       [&] { return format(h, rhs); });
            Element a = f(finv(ex)), b = finv(f(ex));
            rep.expect(a == ex && b == ex, "I_g o I_g^{-1} = id = I_g^{-1} o I_g", {gl, h.basis_label(x)},
                       [&] { return format(h, a) + " ; " + format(h, b); }, [&] { return format(h, ex); });
        }
        if (!f.is_identity()) rep.merge(check_homomorphism(h, h, f, cut, "automorphism"));
    }

    // (C2): I_g(h) must be an element of the monoid. Elements of weight w are
    // found among generator words of weight w and length <= word_bound.
    std::vector<Element> monoid{h.unit_element()};
    {
        std::vector<Element> frontier{h.unit_element()};
        for (unsigned len = 1; len <= options.word_bound && !frontier.empty(); ++len) {
            std::vector<Element> next;
            for (const auto& e : frontier)
                for (const auto& g : generators) {
                    Element p;
                    try {
                        if (weight(h, e) + weight(h, g) > cut) continue;
                        p = mul(h, e, g);
                    } catch (const DegreeOverflow&) {
                        continue;
                    }
                    bool seen = false;
                    for (const auto& m : monoid)
                        if (m == p) {
                            seen = true;
                            break;
                        }
                    if (seen) continue;
                    monoid.push_back(p);
                    next.push_back(p);
                }
            frontier = std::move(next);
        }
    }
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = 0; j < generators.size(); ++j) {
            Element img = action.forward[i](generators[j]);
            bool found = false;
            for (const auto& m : monoid)
                if (m == img) {
                    found = true;
                    break;
                }
            rep.expect(found, "(C2) I_g(G) in G", {format(h, generators[i]), format(h, generators[j])},
                       [&] { return format(h, img); }, [] { return std::string("a monoid element"); });
        }
    rep.note("(C2) searched " + std::to_string(monoid.size()) + " monoid elements from words of length <= " +
             std::to_string(options.word_bound));
    return rep;
}

}  // namespace wbafrac
