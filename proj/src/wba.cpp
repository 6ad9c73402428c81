#include "wbafrac/wba.hpp"

#include <sstream>

namespace wbafrac {

// ---------------------------------------------------------------- Wba basics

std::size_t Wba::dimension() const
{
    std::size_t n = 0;
    for (std::uint32_t b = 0; b < num_blocks(); ++b) n += block_dim(b);
    return n;
}

std::vector<BasisId> Wba::basis(unsigned max_weight) const
{
    std::vector<BasisId> out;
    for (std::uint32_t b = 0; b < num_blocks(); ++b) {
        if (block_weight(b) > max_weight) continue;
        for (std::uint32_t i = 0; i < block_dim(b); ++i) out.push_back({b, i});
    }
    return out;
}

std::vector<BasisId> Wba::block_basis(std::uint32_t block) const
{
    std::vector<BasisId> out;
    for (std::uint32_t i = 0; i < block_dim(block); ++i) out.push_back({block, i});
    return out;
}

std::vector<std::uint32_t> Wba::blocks_of_weight(unsigned w) const
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t b = 0; b < num_blocks(); ++b)
        if (block_weight(b) == w) out.push_back(b);
    return out;
}

std::optional<BasisId> Wba::find_label(const std::string& label) const
{
    for (std::uint32_t b = 0; b < num_blocks(); ++b)
        for (std::uint32_t i = 0; i < block_dim(b); ++i)
            if (basis_label({b, i}) == label) return BasisId{b, i};
    return std::nullopt;
}

const Tensor2& Wba::delta_unit() const
{
    std::call_once(unit_once_, [this] {
        unit_cache_ = unit();
        delta_unit_cache_ = delta(*this, unit_cache_);
    });
    return delta_unit_cache_;
}

const Element& Wba::unit_element() const
{
    delta_unit();
    return unit_cache_;
}

void Wba::check_weight(BasisId a, BasisId b) const
{
    if (!graded()) return;
    if (weight(a) + weight(b) > cutoff())
        throw DegreeOverflow("product of " + basis_label(a) + " and " + basis_label(b) + " exceeds cutoff " +
                             std::to_string(cutoff()) + " of " + name());
}

// ---------------------------------------------------------------- operations

unsigned weight(const Wba& h, const Element& x)
{
    unsigned w = 0;
    for (const auto& [b, c] : x) w = std::max(w, h.weight(b));
    return w;
}

Element mul(const Wba& h, const Element& x, const Element& y)
{
    Element out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) out.add_scaled(h.mul_basis(a, b), ca * cb);
    return out;
}

Element mul(const Wba& h, const std::vector<Element>& factors)
{
    Element out = h.unit_element();
    for (const auto& f : factors) out = mul(h, out, f);
    return out;
}

Tensor2 mul(const Wba& h, const Tensor2& x, const Tensor2& y)
{
    Tensor2 out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            Element l = h.mul_basis(a[0], b[0]);
            if (l.is_zero()) continue;
            Element r = h.mul_basis(a[1], b[1]);
            if (r.is_zero()) continue;
            out.add_scaled(tensor(l, r), ca * cb);
        }
    return out;
}

Tensor2 delta(const Wba& h, const Element& x)
{
    Tensor2 out;
    for (const auto& [a, c] : x) out.add_scaled(h.delta_basis(a), c);
    return out;
}

Tensor3 delta2(const Wba& h, const Element& x)
{
    Tensor3 out;
    for (const auto& [k, c] : delta(h, x)) {
        for (const auto& [k2, c2] : h.delta_basis(k[0])) out.add({k2[0], k2[1], k[1]}, c * c2);
    }
    return out;
}

Scalar counit(const Wba& h, const Element& x)
{
    Scalar out = h.zero();
    for (const auto& [a, c] : x) {
        Scalar e = h.counit_basis(a);
        if (!e.is_zero()) out += c * e;
    }
    return out;
}

Element power(const Wba& h, const Element& x, unsigned n)
{
    Element out = h.unit_element();
    for (unsigned i = 0; i < n; ++i) out = mul(h, out, x);
    return out;
}

Element counital_source(const Wba& h, const Element& x)
{
    Element out;
    for (const auto& [k, c] : h.delta_unit()) {
        Scalar e = counit(h, mul(h, x, Element::basis(k[1])));
        if (!e.is_zero()) out.add(k[0], c * e);
    }
    return out;
}

Element counital_target(const Wba& h, const Element& x)
{
    Element out;
    for (const auto& [k, c] : h.delta_unit()) {
        Scalar e = counit(h, mul(h, Element::basis(k[0]), x));
        if (!e.is_zero()) out.add(k[1], c * e);
    }
    return out;
}

std::string to_string(GroupLike g)
{
    switch (g) {
    case GroupLike::neither: return "neither";
    case GroupLike::right: return "right";
    case GroupLike::left: return "left";
    case GroupLike::both: return "both";
    }
    return "neither";
}

GroupLike is_group_like(const Wba& h, const Element& g)
{
    const Tensor2 dg = delta(h, g);
    const Tensor2 gg = tensor(g, g);
    const Tensor2& d1 = h.delta_unit();
    const Element& one = h.unit_element();
    bool right = dg == mul(h, gg, d1) && counital_source(h, g) == one;
    bool left = dg == mul(h, d1, gg) && counital_target(h, g) == one;
    if (right && left) return GroupLike::both;
    if (right) return GroupLike::right;
    if (left) return GroupLike::left;
    return GroupLike::neither;
}

// ---------------------------------------------------------------- LinearMap

LinearMap::LinearMap() : fn_(nullptr), identity_(true) {}

LinearMap::LinearMap(Fn fn, bool identity) : fn_(std::make_shared<const Fn>(std::move(fn))), identity_(identity) {}

LinearMap LinearMap::memoized(Fn fn)
{
    struct Cache {
        std::mutex m;
        std::map<BasisId, Element> images;
    };
    auto cache = std::make_shared<Cache>();
    return LinearMap([fn = std::move(fn), cache](BasisId b) {
        {
            std::lock_guard lock(cache->m);
            auto it = cache->images.find(b);
            if (it != cache->images.end()) return it->second;
        }
        Element img = fn(b);
        std::lock_guard lock(cache->m);
        cache->images.emplace(b, img);
        return img;
    });
}

Element LinearMap::operator()(BasisId b) const
{
    if (!fn_) return Element::basis(b);
    return (*fn_)(b);
}

Element LinearMap::operator()(const Element& x) const
{
    if (!fn_) return x;
    Element out;
    for (const auto& [b, c] : x) out.add_scaled((*fn_)(b), c);
    return out;
}

LinearMap LinearMap::after(const LinearMap& inner) const
{
    if (identity_) return inner;
    if (inner.identity_) return *this;
    LinearMap outer = *this;
    return LinearMap([outer, inner](BasisId b) { return outer(inner(b)); });
}

Tensor2 apply(const LinearMap& f, const LinearMap& g, const Tensor2& t)
{
    Tensor2 out;
    for (const auto& [k, c] : t) out.add_scaled(tensor(f(k[0]), g(k[1])), c);
    return out;
}

// ---------------------------------------------------------------- formatting

namespace {

std::string coeff_prefix(const Scalar& c)
{
    if (c.is_one()) return "";
    if ((-c).is_one()) return "-";
    return "(" + c.to_string() + ")*";
}

template <class T, class F>
std::string format_terms(const T& t, F&& label)
{
    if (t.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : t) {
        if (!first) out += " + ";
        first = false;
        out += coeff_prefix(c) + label(k);
    }
    return out;
}

}  // namespace

std::string format(const Wba& h, const Element& x)
{
    return format_terms(x, [&](BasisId b) { return h.basis_label(b); });
}

std::string format(const Wba& h, const Tensor2& t)
{
    return format_terms(t, [&](const std::array<BasisId, 2>& k) {
        return h.basis_label(k[0]) + " (x) " + h.basis_label(k[1]);
    });
}

std::string format(const Wba& h, const Tensor3& t)
{
    return format_terms(t, [&](const std::array<BasisId, 3>& k) {
        return h.basis_label(k[0]) + " (x) " + h.basis_label(k[1]) + " (x) " + h.basis_label(k[2]);
    });
}

// ---------------------------------------------------------------- checkers

namespace {

Tensor3 tensor3_mul(const Wba& h, const Tensor3& x, const Tensor3& y)
{
    Tensor3 out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            Element p0 = h.mul_basis(a[0], b[0]);
            if (p0.is_zero()) continue;
            Element p1 = h.mul_basis(a[1], b[1]);
            if (p1.is_zero()) continue;
            Element p2 = h.mul_basis(a[2], b[2]);
            if (p2.is_zero()) continue;
            out.add_scaled(tensor(p0, p1, p2), ca * cb);
        }
    return out;
}

Tensor3 lift_left(const Tensor2& t, const Element& one)
{
    Tensor3 out;
    for (const auto& [k, c] : t)
        for (const auto& [u, cu] : one) out.add({k[0], k[1], u}, c * cu);
    return out;
}

Tensor3 lift_right(const Tensor2& t, const Element& one)
{
    Tensor3 out;
    for (const auto& [k, c] : t)
        for (const auto& [u, cu] : one) out.add({u, k[0], k[1]}, c * cu);
    return out;
}

}  // namespace

Report check_wba_axioms(const Wba& h, unsigned cutoff)
{
    Report rep("wba");
    const unsigned cut = h.graded() ? std::min(cutoff, h.cutoff()) : cutoff;
    const auto basis = h.basis(cut);
    const Element& one = h.unit_element();
    auto lbl = [&](BasisId b) { return h.basis_label(b); };
    auto fe = [&](const Element& e) { return [&h, &e] { return format(h, e); }; };
    auto ft = [&](const Tensor2& e) { return [&h, &e] { return format(h, e); }; };
    auto f3 = [&](const Tensor3& e) { return [&h, &e] { return format(h, e); }; };
    auto fs = [](const Scalar& s) { return [&s] { return s.to_string(); }; };

    std::map<BasisId, Tensor2> deltas;
    for (BasisId x : basis) deltas.emplace(x, h.delta_basis(x));

    for (BasisId x : basis) {
        const Element ex = Element::basis(x);
        Element l = mul(h, one, ex), r = mul(h, ex, one);
        rep.expect(l == ex, "unit (left)", {lbl(x)}, fe(l), fe(ex));
        rep.expect(r == ex, "unit (right)", {lbl(x)}, fe(r), fe(ex));

        const Tensor2& dx = deltas.at(x);
        Element cl, cr;
        for (const auto& [k, c] : dx) {
            cl.add(k[1], c * h.counit_basis(k[0]));
            cr.add(k[0], c * h.counit_basis(k[1]));
        }
        rep.expect(cl == ex, "counit (left)", {lbl(x)}, fe(cl), fe(ex));
        rep.expect(cr == ex, "counit (right)", {lbl(x)}, fe(cr), fe(ex));

        Tensor3 dl, dr;
        for (const auto& [k, c] : dx) {
            for (const auto& [k2, c2] : h.delta_basis(k[0])) dl.add({k2[0], k2[1], k[1]}, c * c2);
            for (const auto& [k2, c2] : h.delta_basis(k[1])) dr.add({k[0], k2[0], k2[1]}, c * c2);
        }
        rep.expect(dl == dr, "coassociativity", {lbl(x)}, f3(dl), f3(dr));
    }

    // Pair tables indexed by basis position: products and eps(xy).
    const std::size_t n = basis.size();
    std::map<BasisId, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) pos.emplace(basis[i], i);
    std::vector<Scalar> eps(n);
    for (std::size_t i = 0; i < n; ++i) eps[i] = h.counit_basis(basis[i]);
    using Sparse = std::vector<std::pair<std::size_t, Scalar>>;
    std::vector<Sparse> prod(n * n);
    std::vector<Scalar> eps2(n * n, h.zero());
    std::vector<char> fits(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (h.weight(basis[i]) + h.weight(basis[j]) > cut) continue;
            fits[i * n + j] = 1;
            Scalar e = h.zero();
            for (const auto& [k, c] : h.mul_basis(basis[i], basis[j])) {
                std::size_t w = pos.at(k);
                prod[i * n + j].emplace_back(w, c);
                if (!eps[w].is_zero()) e += c * eps[w];
            }
            eps2[i * n + j] = e;
        }
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> dpos(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [k, c] : deltas.at(basis[i])) {
            auto a = pos.find(k[0]), b = pos.find(k[1]);
            if (a != pos.end() && b != pos.end()) dpos[i].emplace_back(a->second, b->second, c);
        }
    auto to_element = [&](const std::map<std::size_t, Scalar>& m) {
        Element out;
        for (const auto& [w, c] : m) out.add(basis[w], c);
        return out;
    };

    for (std::size_t i = 0; i < n; ++i) {
        const BasisId x = basis[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (!fits[i * n + j]) continue;
            const BasisId y = basis[j];
            const Element xy = h.mul_basis(x, y);
            const Tensor2 lhs = delta(h, xy);
            const Tensor2 rhs = mul(h, deltas.at(x), deltas.at(y));
            rep.expect(lhs == rhs, "multiplicativity of Delta", {lbl(x), lbl(y)}, ft(lhs), ft(rhs));

            for (std::size_t k = 0; k < n; ++k) {
                if (h.weight(x) + h.weight(y) + h.weight(basis[k]) > cut) continue;
                const BasisId z = basis[k];
                std::map<std::size_t, Scalar> acc_l, acc_r;
                auto accumulate = [](std::map<std::size_t, Scalar>& acc, std::size_t w, const Scalar& c) {
                    auto [it, ins] = acc.emplace(w, c);
                    if (!ins) it->second += c;
                };
                for (const auto& [w, c] : prod[i * n + j])
                    for (const auto& [v, d] : prod[w * n + k]) accumulate(acc_l, v, c * d);
                for (const auto& [w, c] : prod[j * n + k])
                    for (const auto& [v, d] : prod[i * n + w]) accumulate(acc_r, v, c * d);
                const Element xy_z = to_element(acc_l), x_yz = to_element(acc_r);
                rep.expect(xy_z == x_yz, "associativity", {lbl(x), lbl(y), lbl(z)}, fe(xy_z), fe(x_yz));

                Scalar exyz = h.zero();
                for (const auto& [w, c] : xy_z) exyz += c * eps[pos.at(w)];
                Scalar b1 = h.zero(), b2 = h.zero();
                for (const auto& [a, b, c] : dpos[j]) {
                    const Scalar& a1 = eps2[i * n + a];
                    const Scalar& a2 = eps2[b * n + k];
                    if (!a1.is_zero() && !a2.is_zero()) b1 += c * a1 * a2;
                    const Scalar& a3 = eps2[i * n + b];
                    const Scalar& a4 = eps2[a * n + k];
                    if (!a3.is_zero() && !a4.is_zero()) b2 += c * a3 * a4;
                }
                rep.expect(exyz == b1, "weak counit (B1): eps(xyz) = eps(xy')eps(y''z)", {lbl(x), lbl(y), lbl(z)},
                           fs(exyz), fs(b1));
                rep.expect(exyz == b2, "weak counit (B2): eps(xyz) = eps(xy'')eps(y'z)", {lbl(x), lbl(y), lbl(z)},
                           fs(exyz), fs(b2));
            }
        }
    }

    const Tensor2& d1 = h.delta_unit();
    const Tensor3 dd1 = delta2(h, one);
    const Tensor3 left = lift_left(d1, one);    // Delta(1) (x) 1
    const Tensor3 right = lift_right(d1, one);  // 1 (x) Delta(1)
    const Tensor3 c1 = tensor3_mul(h, left, right);
    const Tensor3 c2 = tensor3_mul(h, right, left);
    rep.expect(dd1 == c1, "weak unit (C1): Delta^2(1) = 1' (x) 1''1''' (x) 1''''", {"1"}, f3(dd1), f3(c1));
    rep.expect(dd1 == c2, "weak unit (C2): Delta^2(1) = 1' (x) 1'''1'' (x) 1''''", {"1"}, f3(dd1), f3(c2));
    return rep;
}

Report check_counital_maps(const Wba& h, unsigned cutoff)
{
    Report rep("counital");
    const unsigned cut = h.graded() ? std::min(cutoff, h.cutoff()) : cutoff;
    const auto basis = h.basis(cut);
    auto lbl = [&](BasisId b) { return h.basis_label(b); };
    std::vector<Element> src, tgt;
    for (BasisId x : basis) {
        Element ex = Element::basis(x);
        Element s = counital_source(h, ex), t = counital_target(h, ex);
        Element ss = counital_source(h, s), tt = counital_target(h, t);
        rep.expect(ss == s, "eps_s idempotent", {lbl(x)}, [&] { return format(h, ss); }, [&] { return format(h, s); });
        rep.expect(tt == t, "eps_t idempotent", {lbl(x)}, [&] { return format(h, tt); }, [&] { return format(h, t); });
        src.push_back(std::move(s));
        tgt.push_back(std::move(t));
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (src[i].is_zero() || tgt[j].is_zero()) continue;
            Element a = mul(h, src[i], tgt[j]), b = mul(h, tgt[j], src[i]);
            rep.expect(a == b, "eps_s(H) and eps_t(H) commute", {lbl(basis[i]), lbl(basis[j])},
                       [&] { return format(h, a); }, [&] { return format(h, b); });
        }
    return rep;
}

bool is_bialgebra(const Wba& h, unsigned cutoff)
{
    const unsigned cut = h.graded() ? std::min(cutoff, h.cutoff()) : cutoff;
    const Element& one = h.unit_element();
    for (BasisId x : h.basis(cut)) {
        Element s = counital_source(h, Element::basis(x));
        if (!(s == one * h.counit_basis(x))) return false;
    }
    return true;
}

Report check_antipode(const Wba& h, const LinearMap& s, const std::vector<BasisId>& elements)
{
    Report rep("antipode");
    for (BasisId x : elements) {
        const std::string l = h.basis_label(x);
        const Element ex = Element::basis(x);
        const Tensor2 dx = h.delta_basis(x);
        Element a1, a2;
        for (const auto& [k, c] : dx) {
            a1.add_scaled(mul(h, Element::basis(k[0]), s(k[1])), c);
            a2.add_scaled(mul(h, s(k[0]), Element::basis(k[1])), c);
        }
        Element et = counital_target(h, ex), es = counital_source(h, ex);
        rep.expect(a1 == et, "x' S(x'') = eps_t(x)", {l}, [&] { return format(h, a1); },
                   [&] { return format(h, et); });
        rep.expect(a2 == es, "S(x') x'' = eps_s(x)", {l}, [&] { return format(h, a2); },
                   [&] { return format(h, es); });
        Element a3;
        for (const auto& [k, c] : delta2(h, ex)) {
            Element t = mul(h, mul(h, s(k[0]), Element::basis(k[1])), s(k[2]));
            a3.add_scaled(t, c);
        }
        Element sx = s(x);
        rep.expect(a3 == sx, "S(x') x'' S(x''') = S(x)", {l}, [&] { return format(h, a3); },
                   [&] { return format(h, sx); });
    }
    return rep;
}

Report check_homomorphism(const Wba& a, const Wba& b, const LinearMap& f, unsigned cutoff, const std::string& suite)
{
    Report rep(suite);
    const unsigned cut = a.graded() ? std::min(cutoff, a.cutoff()) : cutoff;
    const auto basis = a.basis(cut);
    auto lbl = [&](BasisId x) { return a.basis_label(x); };
    Element fu = f(a.unit_element());
    rep.expect(fu == b.unit_element(), "f(1) = 1", {"1"}, [&] { return format(b, fu); },
               [&] { return format(b, b.unit_element()); });
    std::map<BasisId, Element> img;
    for (BasisId x : basis) img.emplace(x, f(x));
    for (BasisId x : basis) {
        const Element& fx = img.at(x);
        Tensor2 l = delta(b, fx), r = apply(f, f, a.delta_basis(x));
        rep.expect(l == r, "Delta f(x) = (f (x) f) Delta x", {lbl(x)}, [&] { return format(b, l); },
                   [&] { return format(b, r); });
        Scalar el = counit(b, fx), er = a.counit_basis(x);
        rep.expect(el == er, "eps f(x) = eps(x)", {lbl(x)}, [&] { return el.to_string(); },
                   [&] { return er.to_string(); });
        for (BasisId y : basis) {
            if (a.weight(x) + a.weight(y) > cut) continue;
            Element lhs = f(a.mul_basis(x, y));
            Element rhs = mul(b, fx, img.at(y));
            rep.expect(lhs == rhs, "f(xy) = f(x)f(y)", {lbl(x), lbl(y)}, [&] { return format(b, lhs); },
                       [&] { return format(b, rhs); });
        }
    }
    return rep;
}

// ---------------------------------------------------------------- TableWba

TableWba::TableWba(std::string name, const CycloField& field, std::vector<Block> blocks, unsigned cutoff)
    : name_(std::move(name)), field_(&field), blocks_(std::move(blocks)), cutoff_(cutoff)
{
}

void TableWba::set_mul(BasisId a, BasisId b, Element v)
{
    if (v.is_zero())
        mul_.erase({a, b});
    else
        mul_[{a, b}] = std::move(v);
}

void TableWba::set_delta(BasisId a, Tensor2 v) { delta_[a] = std::move(v); }

void TableWba::set_counit(BasisId a, Scalar v) { counit_[a] = std::move(v); }

std::uint32_t TableWba::block_dim(std::uint32_t block) const
{
    return static_cast<std::uint32_t>(blocks_.at(block).labels.size());
}

unsigned TableWba::block_weight(std::uint32_t block) const { return blocks_.at(block).weight; }

Grade TableWba::block_grade(std::uint32_t block) const { return blocks_.at(block).grade; }

std::string TableWba::basis_label(BasisId b) const { return blocks_.at(b.block).labels.at(b.index); }

Element TableWba::mul_basis(BasisId a, BasisId b) const
{
    check_weight(a, b);
    auto it = mul_.find({a, b});
    return it == mul_.end() ? Element() : it->second;
}

Tensor2 TableWba::delta_basis(BasisId a) const
{
    auto it = delta_.find(a);
    return it == delta_.end() ? Tensor2() : it->second;
}

Scalar TableWba::counit_basis(BasisId a) const
{
    auto it = counit_.find(a);
    return it == counit_.end() ? zero() : it->second;
}

std::optional<std::vector<BasisId>> TableWba::factorization(BasisId b) const
{
    auto it = factorization_.find(b);
    if (it == factorization_.end()) return std::nullopt;
    return it->second;
}

std::shared_ptr<TableWba> materialize(const Wba& h, unsigned cutoff)
{
    const unsigned cut = h.graded() ? std::min(cutoff, h.cutoff()) : kUnbounded;
    std::vector<TableWba::Block> blocks;
    std::map<std::uint32_t, std::uint32_t> remap;
    for (std::uint32_t b = 0; b < h.num_blocks(); ++b) {
        if (h.graded() && h.block_weight(b) > cut) continue;
        TableWba::Block blk;
        blk.weight = h.block_weight(b);
        blk.grade = h.block_grade(b);
        for (std::uint32_t i = 0; i < h.block_dim(b); ++i) blk.labels.push_back(h.basis_label({b, i}));
        remap.emplace(b, static_cast<std::uint32_t>(blocks.size()));
        blocks.push_back(std::move(blk));
    }
    auto map_id = [&](BasisId x) {
        auto it = remap.find(x.block);
        if (it == remap.end()) throw StructureError("structure constant leaves the materialized range of " + h.name());
        return BasisId{it->second, x.index};
    };
    auto map_el = [&](const Element& e) {
        Element out;
        for (const auto& [k, c] : e) out.add(map_id(k), c);
        return out;
    };
    auto out = std::make_shared<TableWba>(h.name(), h.field(), std::move(blocks), cut);
    out->set_unit(map_el(h.unit()));
    const auto basis = h.basis(cut);
    for (BasisId x : basis) {
        Tensor2 d;
        for (const auto& [k, c] : h.delta_basis(x)) d.add({map_id(k[0]), map_id(k[1])}, c);
        out->set_delta(map_id(x), std::move(d));
        Scalar e = h.counit_basis(x);
        if (!e.is_zero()) out->set_counit(map_id(x), e);
        if (auto f = h.factorization(x)) {
            std::vector<BasisId> letters;
            for (auto l : *f) letters.push_back(map_id(l));
            out->set_factorization(map_id(x), std::move(letters));
        }
        for (BasisId y : basis) {
            if (h.graded() && h.weight(x) + h.weight(y) > cut) continue;
            out->set_mul(map_id(x), map_id(y), map_el(h.mul_basis(x, y)));
        }
    }
    return out;
}

nlohmann::json to_json(const Wba& h, unsigned cutoff)
{
    auto t = materialize(h, cutoff);
    nlohmann::json j;
    j["name"] = t->name();
    j["conductor"] = t->field().conductor();
    j["cutoff"] = t->graded() ? nlohmann::json(t->cutoff()) : nlohmann::json(nullptr);
    auto blocks = nlohmann::json::array();
    for (std::uint32_t b = 0; b < t->num_blocks(); ++b) {
        nlohmann::json blk;
        blk["weight"] = t->block_weight(b);
        blk["grade"] = {t->block_grade(b).first, t->block_grade(b).second};
        auto labels = nlohmann::json::array();
        for (std::uint32_t i = 0; i < t->block_dim(b); ++i) labels.push_back(t->basis_label({b, i}));
        blk["labels"] = labels;
        blocks.push_back(blk);
    }
    j["blocks"] = blocks;
    j["unit"] = to_json(t->unit());
    auto mulj = nlohmann::json::array(), deltaj = nlohmann::json::array(), counitj = nlohmann::json::array();
    const auto basis = t->basis();
    for (BasisId x : basis) {
        Tensor2 d = t->delta_basis(x);
        if (!d.is_zero()) deltaj.push_back({to_json(x), to_json(d)});
        Scalar e = t->counit_basis(x);
        if (!e.is_zero()) counitj.push_back({to_json(x), to_json(e)});
        for (BasisId y : basis) {
            if (t->graded() && t->weight(x) + t->weight(y) > t->cutoff()) continue;
            Element p = t->mul_basis(x, y);
            if (!p.is_zero()) mulj.push_back({to_json(x), to_json(y), to_json(p)});
        }
    }
    j["mul"] = mulj;
    j["delta"] = deltaj;
    j["counit"] = counitj;
    return j;
}

std::shared_ptr<TableWba> wba_from_json(const nlohmann::json& j)
{
    try {
        const CycloField& field = CycloField::get(j.at("conductor").get<unsigned>());
        std::vector<TableWba::Block> blocks;
        for (const auto& bj : j.at("blocks")) {
            TableWba::Block blk;
            blk.weight = bj.at("weight").get<unsigned>();
            blk.grade = {bj.at("grade").at(0).get<int>(), bj.at("grade").at(1).get<int>()};
            blk.labels = bj.at("labels").get<std::vector<std::string>>();
            blocks.push_back(std::move(blk));
        }
        unsigned cutoff = j.at("cutoff").is_null() ? kUnbounded : j.at("cutoff").get<unsigned>();
        auto out = std::make_shared<TableWba>(j.at("name").get<std::string>(), field, std::move(blocks), cutoff);
        out->set_unit(element_from_json(j.at("unit")));
        for (const auto& m : j.at("mul"))
            out->set_mul(basis_id_from_json(m.at(0)), basis_id_from_json(m.at(1)), element_from_json(m.at(2)));
        for (const auto& d : j.at("delta")) out->set_delta(basis_id_from_json(d.at(0)), tensor2_from_json(d.at(1)));
        for (const auto& e : j.at("counit")) out->set_counit(basis_id_from_json(e.at(0)), scalar_from_json(e.at(1)));
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed WBA json: ") + e.what());
    }
}

// ---------------------------------------------------------------- TensorWba

TensorWba::TensorWba(WbaPtr left, WbaPtr right)
    : left_(std::move(left)), right_(std::move(right)), field_(&join_fields(left_->field(), right_->field()))
{
    cutoff_ = std::min(left_->cutoff(), right_->cutoff());
    for (std::uint32_t a = 0; a < left_->num_blocks(); ++a)
        for (std::uint32_t b = 0; b < right_->num_blocks(); ++b) {
            if (cutoff_ != kUnbounded && left_->block_weight(a) + right_->block_weight(b) > cutoff_) continue;
            block_index_.emplace(std::make_pair(a, b), static_cast<std::uint32_t>(blocks_.size()));
            blocks_.emplace_back(a, b);
        }
}

BasisId TensorWba::pair(BasisId a, BasisId b) const
{
    auto it = block_index_.find({a.block, b.block});
    if (it == block_index_.end()) throw DegreeOverflow("tensor factor weights exceed cutoff of " + name());
    return {it->second, a.index * right_->block_dim(b.block) + b.index};
}

std::pair<BasisId, BasisId> TensorWba::split(BasisId x) const
{
    auto [a, b] = blocks_.at(x.block);
    const std::uint32_t d = right_->block_dim(b);
    return {{a, x.index / d}, {b, x.index % d}};
}

Element TensorWba::embed(const Element& a, const Element& b) const
{
    Element out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) out.add(pair(ka, kb), ca * cb);
    return out;
}

LinearMap TensorWba::tensor_map(const LinearMap& f, const LinearMap& g) const
{
    if (f.is_identity() && g.is_identity()) return LinearMap::identity();
    return LinearMap::memoized([this, f, g](BasisId x) {
        auto [a, b] = split(x);
        return embed(f(a), g(b));
    });
}

std::string TensorWba::name() const { return left_->name() + " (x) " + right_->name(); }

std::uint32_t TensorWba::block_dim(std::uint32_t block) const
{
    auto [a, b] = blocks_.at(block);
    return left_->block_dim(a) * right_->block_dim(b);
}

unsigned TensorWba::block_weight(std::uint32_t block) const
{
    auto [a, b] = blocks_.at(block);
    return left_->block_weight(a) + right_->block_weight(b);
}

Grade TensorWba::block_grade(std::uint32_t block) const
{
    auto [a, b] = blocks_.at(block);
    Grade ga = left_->block_grade(a), gb = right_->block_grade(b);
    return {ga.first + gb.first, ga.second + gb.second};
}

std::string TensorWba::basis_label(BasisId x) const
{
    auto [a, b] = split(x);
    return left_->basis_label(a) + "⊗" + right_->basis_label(b);
}

Element TensorWba::unit() const { return embed(left_->unit_element(), right_->unit_element()); }

Element TensorWba::mul_basis(BasisId x, BasisId y) const
{
    check_weight(x, y);
    auto [xa, xb] = split(x);
    auto [ya, yb] = split(y);
    Element l = left_->mul_basis(xa, ya);
    if (l.is_zero()) return {};
    return embed(l, right_->mul_basis(xb, yb));
}

Tensor2 TensorWba::delta_basis(BasisId x) const
{
    auto [a, b] = split(x);
    Tensor2 out;
    const Tensor2 db = right_->delta_basis(b);
    for (const auto& [ka, ca] : left_->delta_basis(a))
        for (const auto& [kb, cb] : db) out.add({pair(ka[0], kb[0]), pair(ka[1], kb[1])}, ca * cb);
    return out;
}

Scalar TensorWba::counit_basis(BasisId x) const
{
    auto [a, b] = split(x);
    return left_->counit_basis(a) * right_->counit_basis(b);
}

std::vector<int> TensorWba::homogeneous_key(BasisId x) const
{
    auto [a, b] = split(x);
    std::vector<int> k = left_->homogeneous_key(a);
    k.push_back(static_cast<int>(left_->block_weight(a.block)));
    auto kb = right_->homogeneous_key(b);
    k.insert(k.end(), kb.begin(), kb.end());
    return k;
}

WbaPtr tensor_wba(WbaPtr left, WbaPtr right)
{
    if (left->field().conductor() != 1 && right->field().conductor() != 1 &&
        left->field().conductor() != right->field().conductor())
        throw FieldMismatch("tensor factors live over different fields");
    return std::make_shared<TensorWba>(std::move(left), std::move(right));
}

}  // namespace wbafrac
