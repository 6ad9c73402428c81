#include "wbafrac/localization.hpp"

#include <algorithm>
#include <random>

#include "wbafrac/graded.hpp"

namespace wbafrac {

namespace {

std::size_t key64(BasisId b) { return (static_cast<std::size_t>(b.block) << 32) | b.index; }

Vec global_vec(const Element& x)
{
    Vec v;
    for (const auto& [b, c] : x) v.add(key64(b), c);
    return v;
}

Word concat(Word a, const Word& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<Word> words_of_length(std::size_t generators, unsigned len)
{
    std::vector<Word> out{{}};
    for (unsigned k = 0; k < len; ++k) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (std::size_t g = 0; g < generators; ++g) next.push_back(concat(w, {static_cast<int>(g)}));
        out = std::move(next);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------- strategies

std::string AnnihilatorStrategy::name() const
{
    switch (kind) {
    case Kind::declared_regular: return "declared-regular";
    case Kind::finite_test_set: return "finite-test-set";
    case Kind::bounded_search: return "bounded-search";
    }
    return "";
}

nlohmann::json AnnihilatorStrategy::to_json() const
{
    nlohmann::json j{{"kind", name()}};
    if (kind == Kind::finite_test_set) j["test_words"] = test_words;
    if (kind == Kind::bounded_search) j["limit"] = limit;
    return j;
}

// ---------------------------------------------------------------- monoids

DenominatorMonoid::DenominatorMonoid(WbaPtr host, std::vector<Element> generators, std::vector<std::string> names,
                                     ConjugationAction action, AnnihilatorStrategy strategy)
    : host_(std::move(host)),
      generators_(std::move(generators)),
      names_(std::move(names)),
      action_(std::move(action)),
      strategy_(std::move(strategy))
{
    if (generators_.empty()) throw InvalidArgument("a denominator monoid needs at least one generator");
    if (names_.size() != generators_.size()) throw InvalidArgument("one name per generator required");
    if (action_.forward.size() != generators_.size() || action_.inverse.size() != generators_.size())
        throw InvalidArgument("action must list one automorphism per generator");
    for (const auto& w : strategy_.test_words)
        for (int g : w)
            if (g < 0 || static_cast<std::size_t>(g) >= generators_.size())
                throw InvalidArgument("test word uses an unknown generator");
}

Element DenominatorMonoid::evaluate(const Word& word) const { return evaluate_word(*host_, generators_, word); }

std::string DenominatorMonoid::word_label(const Word& word) const
{
    if (word.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) s += (i ? "*" : "") + names_.at(static_cast<std::size_t>(word[i]));
    return s;
}

std::vector<Word> DenominatorMonoid::test_words() const
{
    switch (strategy_.kind) {
    case AnnihilatorStrategy::Kind::declared_regular: return {};
    case AnnihilatorStrategy::Kind::finite_test_set: return strategy_.test_words;
    case AnnihilatorStrategy::Kind::bounded_search: {
        std::vector<Word> out;
        for (unsigned len = 1; len <= strategy_.limit; ++len)
            for (auto& w : words_of_length(generators_.size(), len)) out.push_back(std::move(w));
        return out;
    }
    }
    return {};
}

Annihilation DenominatorMonoid::annihilated(const Element& z) const
{
    if (z.is_zero()) return Annihilation::yes;
    if (strategy_.kind == AnnihilatorStrategy::Kind::declared_regular) return Annihilation::no;
    bool unknown = false;
    for (const auto& w : test_words()) {
        try {
            if (mul(*host_, z, evaluate(w)).is_zero()) return Annihilation::yes;
        } catch (const DegreeOverflow&) {
            unknown = true;
        }
    }
    if (strategy_.kind == AnnihilatorStrategy::Kind::bounded_search || unknown) return Annihilation::unknown;
    return Annihilation::no;
}

bool DenominatorMonoid::commuting() const
{
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = i + 1; j < generators_.size(); ++j)
            if (mul(*host_, generators_[i], generators_[j]) != mul(*host_, generators_[j], generators_[i])) return false;
    return true;
}

Report DenominatorMonoid::validate(unsigned cutoff, unsigned word_bound) const
{
    Report rep("denominators");
    rep.merge(check_almost_central(*host_, generators_, action_, {cutoff, word_bound}));
    if (strategy_.kind != AnnihilatorStrategy::Kind::declared_regular) return rep;

    const Wba& h = *host_;
    const unsigned cut = h.graded() ? std::min(cutoff, h.cutoff()) : kUnbounded;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const Element& g = generators_[i];
        const unsigned wg = weight(h, g);
        if (h.graded() && wg > cut) continue;
        std::vector<unsigned> weights;
        if (h.graded())
            for (unsigned d = 0; d + wg <= cut; ++d) weights.push_back(d);
        else
            weights.push_back(0);
        for (unsigned d : weights) {
            Echelon left, right;
            std::size_t n = 0;
            for (std::uint32_t b : h.blocks_of_weight(d))
                for (BasisId x : h.block_basis(b)) {
                    left.insert(global_vec(mul(h, g, Element::basis(x))));
                    right.insert(global_vec(mul(h, Element::basis(x), g)));
                    ++n;
                }
            std::string w = names_[i] + " on weight " + std::to_string(d);
            rep.expect(left.rank() == n, "declared-regular generator: x -> g x injective", {w},
                       [&] { return "rank " + std::to_string(left.rank()); }, [&] { return std::to_string(n); });
            rep.expect(right.rank() == n, "declared-regular generator: x -> x g injective", {w},
                       [&] { return "rank " + std::to_string(right.rank()); }, [&] { return std::to_string(n); });
        }
    }
    return rep;
}

// ---------------------------------------------------------------- fractions

nlohmann::json to_json(const Fraction& f) { return {{"num", to_json(f.num)}, {"den", f.den}}; }

Fraction fraction_from_json(const nlohmann::json& j)
{
    return {element_from_json(j.at("num")), j.at("den").get<Word>()};
}

std::string to_string(FracEq e)
{
    switch (e) {
    case FracEq::equal: return "equal";
    case FracEq::not_equal: return "not_equal";
    case FracEq::indeterminate: return "indeterminate";
    }
    return "";
}

// ---------------------------------------------------------------- Laurent model

SkewLaurentWba::SkewLaurentWba(MonoidPtr monoid, unsigned cutoff, unsigned power_bound)
    : monoid_(std::move(monoid)), power_bound_(std::max(1u, power_bound))
{
    const Wba& h = monoid_->host();
    if (!monoid_->commuting()) throw StructureError("the Laurent model needs pairwise commuting generators");
    Word all;
    for (std::size_t i = 0; i < monoid_->size(); ++i) all.push_back(static_cast<int>(i));
    d_ = monoid_->evaluate(all);
    if (d_.is_zero()) throw StructureError("the product of the generators is zero");
    e_ = wbafrac::weight(h, d_);
    for (const auto& [b, c] : d_)
        if (h.weight(b) != e_) throw StructureError("the product of the generators is not homogeneous");
    LinearMap inv = monoid_->action().word_inverse(all);
    d_inverse_ = inv.is_identity() ? inv : LinearMap::memoized([inv](BasisId b) { return inv(b); });

    if (h.graded()) {
        host_top_ = std::min(cutoff, h.cutoff());
    } else {
        host_top_ = 0;
        for (std::uint32_t b = 0; b < h.num_blocks(); ++b)
            if (h.block_weight(b) != 0) throw InvalidArgument("finite-dimensional host with weighted blocks");
    }

    slices_.resize(host_top_ + 1);
    for (unsigned d = 0; d <= host_top_; ++d) {
        auto& s = slices_[d];
        for (std::uint32_t b : h.blocks_of_weight(d))
            for (BasisId x : h.block_basis(b)) {
                s.column.emplace(x, s.basis.size());
                s.basis.push_back(x);
            }
    }

    // K_d = sum over test elements t of ker(x -> x t) restricted to weight d
    std::vector<unsigned> untested;
    for (const auto& w : monoid_->test_words()) {
        Element t;
        try {
            t = monoid_->evaluate(w);
        } catch (const DegreeOverflow&) {
            notes_.push_back("test word " + monoid_->word_label(w) + " exceeds the cutoff and was skipped");
            continue;
        }
        const unsigned wt = wbafrac::weight(h, t);
        for (unsigned d = 0; d <= host_top_; ++d) {
            if (d + wt > host_top_) {
                untested.push_back(d);
                continue;
            }
            Echelon images;
            for (std::size_t i = 0; i < slices_[d].basis.size(); ++i)
                images.insert(to_vec(d + wt, mul(h, Element::basis(slices_[d].basis[i]), t)), Vec::basis(i));
            for (const auto& k : images.kernel()) slices_[d].kernel.insert(k);
        }
    }
    if (!untested.empty()) {
        unsigned lo = *std::min_element(untested.begin(), untested.end());
        notes_.push_back("annihilators of weight >= " + std::to_string(lo) +
                         " only tested against test elements that fit under the cutoff");
    }

    for (unsigned d = 0; d <= host_top_; ++d) {
        auto& s = slices_[d];
        for (const auto& [col, row] : s.kernel.rows()) s.shifted.insert(row.vec);
        if (d >= e_) {
            const auto& lower = slices_[d - e_];
            for (std::size_t j = 0; j < lower.basis.size(); ++j)
                s.shifted.insert(to_vec(d, mul(h, Element::basis(lower.basis[j]), d_)), Vec::basis(j));
        }
        for (std::size_t col = 0; col < s.basis.size(); ++col) {
            if (!s.kernel.is_pivot(col)) {
                s.position[0].emplace(col, static_cast<std::uint32_t>(s.standard[0].size()));
                s.standard[0].push_back(col);
            }
            if (!s.shifted.is_pivot(col)) {
                s.position[1].emplace(col, static_cast<std::uint32_t>(s.standard[1].size()));
                s.standard[1].push_back(col);
            }
        }
    }

    auto add_block = [&](unsigned d, unsigned n) {
        if (slices_[d].standard[n > 0 ? 1 : 0].empty()) return;
        block_index_.emplace(std::make_pair(d, n), static_cast<std::uint32_t>(blocks_.size()));
        blocks_.push_back({d, n});
    };
    if (h.graded()) {
        cutoff_ = host_top_;
        for (unsigned t = 0; t <= cutoff_; ++t)
            for (unsigned n = 0; n <= t; ++n)
                if (t - n <= host_top_) add_block(t - n, n);
    } else {
        power_blocks_empty_ = slices_[0].standard[1].empty();
        cutoff_ = power_blocks_empty_ ? kUnbounded : power_bound_;
        add_block(0, 0);
        if (!power_blocks_empty_) {
            for (unsigned n = 1; n <= power_bound_; ++n) add_block(0, n);
            notes_.push_back("D is not invertible modulo the annihilator; powers of X materialized up to " +
                             std::to_string(power_bound_));
        }
    }
}

Vec SkewLaurentWba::to_vec(unsigned d, const Element& x) const
{
    if (d > host_top_) throw DegreeOverflow("host weight " + std::to_string(d) + " beyond the localization cutoff");
    Vec v;
    for (const auto& [b, c] : x) {
        auto it = slices_[d].column.find(b);
        if (it == slices_[d].column.end()) throw StructureError("element is not homogeneous of the expected weight");
        v.add(it->second, c);
    }
    return v;
}

Element SkewLaurentWba::from_vec(unsigned d, const Vec& v) const
{
    Element x;
    for (const auto& [col, c] : v) x.add(slices_[d].basis[col], c);
    return x;
}

Element SkewLaurentWba::normalize(const Element& x, unsigned n) const
{
    const Wba& h = monoid_->host();
    std::map<unsigned, Element> parts;
    for (const auto& [b, c] : x) parts[h.graded() ? h.weight(b) : 0].add(b, c);
    Element out;
    auto emit = [&](unsigned d, unsigned k, const Vec& res) {
        if (res.is_zero()) return;
        auto it = block_index_.find({d, k});
        if (it == block_index_.end())
            throw DegreeOverflow("x X^" + std::to_string(k) + " with x of weight " + std::to_string(d) +
                                 " lies beyond the cutoff of " + name());
        for (const auto& [col, c] : res) out.add({it->second, slices_[d].position[k > 0 ? 1 : 0].at(col)}, c);
    };
    for (const auto& [d0, part] : parts) {
        unsigned d = d0;
        Vec v = to_vec(d, part);
        for (unsigned k = n;; --k) {
            if (k == 0) {
                emit(d, 0, slices_[d].kernel.residual(v));
                break;
            }
            auto red = slices_[d].shifted.reduce(v);
            emit(d, k, red.residual);
            if (red.tag.is_zero()) break;
            v = red.tag;
            d -= e_;
        }
    }
    return out;
}

LinearMap SkewLaurentWba::phi_map() const
{
    return LinearMap::memoized([this](BasisId b) { return normalize(Element::basis(b), 0); });
}

Element SkewLaurentWba::x_power(unsigned n) const { return normalize(monoid_->host().unit_element(), n); }

std::pair<BasisId, unsigned> SkewLaurentWba::representative(BasisId b) const
{
    const Block& blk = blocks_.at(b.block);
    const auto& s = slices_[blk.d];
    return {s.basis[s.standard[blk.n > 0 ? 1 : 0].at(b.index)], blk.n};
}

std::size_t SkewLaurentWba::kernel_dimension(unsigned w) const
{
    return w < slices_.size() ? slices_[w].kernel.rank() : 0;
}

std::vector<Element> SkewLaurentWba::kernel_basis(unsigned w) const
{
    std::vector<Element> out;
    if (w >= slices_.size()) return out;
    for (const auto& [col, row] : slices_[w].kernel.rows()) out.push_back(from_vec(w, row.vec));
    return out;
}

std::string SkewLaurentWba::name() const { return monoid_->host().name() + "[G^-1]"; }

std::uint32_t SkewLaurentWba::block_dim(std::uint32_t block) const
{
    const Block& blk = blocks_.at(block);
    return static_cast<std::uint32_t>(slices_[blk.d].standard[blk.n > 0 ? 1 : 0].size());
}

unsigned SkewLaurentWba::block_weight(std::uint32_t block) const
{
    const Block& blk = blocks_.at(block);
    return blk.d + blk.n;
}

Grade SkewLaurentWba::block_grade(std::uint32_t block) const
{
    const Block& blk = blocks_.at(block);
    return {static_cast<int>(blk.d), static_cast<int>(blk.n)};
}

std::string SkewLaurentWba::basis_label(BasisId b) const
{
    auto [x, n] = representative(b);
    std::string base = monoid_->host().basis_label(x);
    if (n == 0) return base;
    std::string xs = n == 1 ? "X" : "X^" + std::to_string(n);
    if (Element::basis(x) == monoid_->host().unit_element()) return xs;
    return base + " " + xs;
}

Element SkewLaurentWba::unit() const { return normalize(monoid_->host().unit_element(), 0); }

Element SkewLaurentWba::mul_basis(BasisId a, BasisId b) const
{
    check_weight(a, b);
    {
        std::lock_guard lock(cache_mutex_);
        auto it = mul_cache_.find({a, b});
        if (it != mul_cache_.end()) return it->second;
    }
    auto [x, n] = representative(a);
    auto [y, m] = representative(b);
    Element twisted = Element::basis(y);
    for (unsigned i = 0; i < n; ++i) twisted = d_inverse_(twisted);
    Element v = normalize(mul(monoid_->host(), Element::basis(x), twisted), n + m);
    std::lock_guard lock(cache_mutex_);
    return mul_cache_.emplace(std::make_pair(a, b), std::move(v)).first->second;
}

Tensor2 SkewLaurentWba::delta_basis(BasisId a) const
{
    auto [x, n] = representative(a);
    auto leg = [&](BasisId b) { return normalize(Element::basis(b), n); };
    return apply_right(apply_left(monoid_->host().delta_basis(x), leg), leg);
}

Scalar SkewLaurentWba::counit_basis(BasisId a) const { return monoid_->host().counit_basis(representative(a).first); }

// ---------------------------------------------------------------- localization

Localization::Localization(MonoidPtr monoid, unsigned cutoff, unsigned power_bound)
    : monoid_(std::move(monoid)),
      cutoff_(cutoff),
      power_bound_(power_bound ? power_bound : static_cast<unsigned>(2 * monoid_->size()))
{
    validation_ = monoid_->validate(cutoff_);
    if (!validation_.passed()) {
        const auto& v = validation_.violations().front();
        std::string w;
        for (const auto& s : v.witness) w += (w.empty() ? "" : ", ") + s;
        throw StructureError("denominator monoid rejected: " + v.check + " fails at (" + w + ")");
    }
    if (monoid_->commuting()) model_ = std::make_shared<SkewLaurentWba>(monoid_, cutoff_, power_bound_);
}

std::shared_ptr<const SkewLaurentWba> Localization::wba() const
{
    if (!model_) throw StructureError("no Laurent model: the generators do not commute");
    return model_;
}

Fraction Localization::frac_add(const Fraction& a, const Fraction& b) const
{
    const Wba& h = host();
    Element g = monoid_->evaluate(a.den), hh = monoid_->evaluate(b.den);
    LinearMap ginv = monoid_->action().word_inverse(a.den);
    Element num = mul(h, a.num, ginv(hh)) + mul(h, b.num, g);
    return {num, concat(b.den, a.den)};
}

Fraction Localization::frac_mul(const Fraction& a, const Fraction& b) const
{
    LinearMap ginv = monoid_->action().word_inverse(a.den);
    return {mul(host(), a.num, ginv(b.num)), concat(b.den, a.den)};
}

FracEq Localization::frac_eq(const Fraction& a, const Fraction& b) const
{
    try {
        Element g = monoid_->evaluate(a.den), hh = monoid_->evaluate(b.den);
        LinearMap ginv = monoid_->action().word_inverse(a.den);
        Element z = mul(host(), a.num, ginv(hh)) - mul(host(), b.num, g);
        switch (monoid_->annihilated(z)) {
        case Annihilation::yes: return FracEq::equal;
        case Annihilation::no: return FracEq::not_equal;
        case Annihilation::unknown: return FracEq::indeterminate;
        }
    } catch (const DegreeOverflow&) {
    }
    return FracEq::indeterminate;
}

FracTensor Localization::frac_delta(const Fraction& a) const
{
    FracTensor out;
    for (const auto& [k, c] : delta(host(), a.num))
        out.push_back({c, {Element::basis(k[0]), a.den}, {Element::basis(k[1]), a.den}});
    return out;
}

Scalar Localization::frac_counit(const Fraction& a) const { return counit(host(), a.num); }

Fraction Localization::canonicalize(const Fraction& a) const
{
    if (!monoid_->action().central) return a;
    const Wba& h = host();
    Fraction out = a;
    while (!out.den.empty() && !out.num.is_zero()) {
        const Element& g = monoid_->generators().at(static_cast<std::size_t>(out.den.back()));
        const unsigned wx = weight(h, out.num), wg = weight(h, g);
        if (h.graded() && wg > wx) break;
        std::vector<BasisId> cands;
        std::vector<Vec> cols;
        for (BasisId b : h.basis(h.graded() ? wx - wg : kUnbounded)) {
            cands.push_back(b);
            cols.push_back(global_vec(mul(h, Element::basis(b), g)));
        }
        auto sol = solve_linear(cols, global_vec(out.num));
        if (!sol) break;
        Element x;
        for (std::size_t i = 0; i < cands.size(); ++i) x.add(cands[i], (*sol)[i]);
        out.num = x;
        out.den.pop_back();
    }
    if (out.num.is_zero()) out.den.clear();
    return out;
}

Element Localization::to_laurent(const Fraction& a) const
{
    auto model = wba();
    const std::size_t k = monoid_->size();
    std::vector<unsigned> count(k, 0);
    for (int g : a.den) ++count.at(static_cast<std::size_t>(g));
    unsigned n = a.den.empty() ? 0 : *std::max_element(count.begin(), count.end());
    Word complement;
    for (std::size_t i = 0; i < k; ++i) complement.insert(complement.end(), n - count[i], static_cast<int>(i));
    return model->normalize(mul(host(), a.num, monoid_->evaluate(complement)), n);
}

Tensor2 Localization::to_laurent(const FracTensor& t) const
{
    Tensor2 out;
    for (const auto& term : t) {
        Tensor2 piece = tensor(to_laurent(term.left), to_laurent(term.right));
        out.add_scaled(piece, term.coeff);
    }
    return out;
}

Fraction Localization::to_fraction(const Element& x) const
{
    auto model = wba();
    unsigned top = 0;
    for (const auto& [b, c] : x) top = std::max(top, model->representative(b).second);
    Word d;
    for (std::size_t i = 0; i < monoid_->size(); ++i) d.push_back(static_cast<int>(i));
    Element num;
    for (const auto& [b, c] : x) {
        auto [y, n] = model->representative(b);
        Element p = Element::basis(y);
        for (unsigned i = n; i < top; ++i) p = mul(host(), p, model->denominator());
        num.add_scaled(p, c);
    }
    Word den;
    for (unsigned i = 0; i < top; ++i) den = concat(den, d);
    return {num, den};
}

std::vector<std::size_t> Localization::stabilization() const
{
    std::vector<std::size_t> out;
    if (!model_ || host().graded()) return out;
    Echelon span;
    for (unsigned b = 0; b <= power_bound_; ++b) {
        for (const auto& w : words_of_length(monoid_->size(), b))
            for (BasisId x : host().basis()) {
                try {
                    span.insert(global_vec(to_laurent({Element::basis(x), w})));
                } catch (const DegreeOverflow&) {
                }
            }
        out.push_back(span.rank());
    }
    return out;
}

std::map<Grade, std::size_t> Localization::dimension_table() const
{
    std::map<Grade, std::size_t> t;
    if (!model_) return t;
    for (std::uint32_t b = 0; b < model_->num_blocks(); ++b) t[model_->block_grade(b)] += model_->block_dim(b);
    return t;
}

nlohmann::json Localization::report_json() const
{
    nlohmann::json j;
    j["generators"] = monoid_->names();
    j["strategy"] = monoid_->strategy().to_json();
    j["cutoff"] = host().graded() ? nlohmann::json(cutoff_) : nlohmann::json(nullptr);
    j["power_bound"] = power_bound_;
    j["validation"] = validation_.to_json();
    j["materialized"] = materialized();
    if (model_) {
        nlohmann::json table = nlohmann::json::array();
        for (const auto& [g, n] : dimension_table()) table.push_back({g.first, g.second, n});
        j["dimension_table"] = table;
        j["dimension"] = model_->graded() ? nlohmann::json(nullptr) : nlohmann::json(model_->dimension());
        nlohmann::json ker = nlohmann::json::array();
        unsigned top = host().graded() ? std::min(cutoff_, host().cutoff()) : 0;
        for (unsigned d = 0; d <= top; ++d) ker.push_back(model_->kernel_dimension(d));
        j["phi_kernel_dimensions"] = ker;
        j["stabilization"] = stabilization();
        j["notes"] = model_->notes();
    }
    return j;
}

Localization localize(MonoidPtr monoid, unsigned cutoff, unsigned power_bound)
{
    return Localization(std::move(monoid), cutoff, power_bound);
}

Localization laurent_model(WbaPtr host, const Element& g, unsigned cutoff, const std::string& name,
                           AnnihilatorStrategy strategy)
{
    const Wba& h = *host;
    const unsigned cut = h.graded() ? std::min(cutoff, h.cutoff()) : kUnbounded;
    Report central = check_central(h, g, cut);
    if (!central.passed()) {
        const auto& v = central.violations().front();
        throw StructureError("laurent_model: " + format(h, g) + " is not central (fails against " +
                             v.witness.front() + ")");
    }
    std::vector<Element> powers{h.unit_element()};
    const unsigned wg = weight(h, g);
    for (unsigned k = 1; k <= 8; ++k) {
        if (h.graded() && k * wg > cut) break;
        Element p = mul(h, powers.back(), g);
        for (std::size_t m = 0; m < powers.size(); ++m)
            if (powers[m] == p)
                throw StructureError("laurent_model: " + format(h, g) + " has finite order (g^" + std::to_string(k) +
                                     " = g^" + std::to_string(m) + ")");
        powers.push_back(p);
    }
    auto monoid = std::make_shared<DenominatorMonoid>(std::move(host), std::vector<Element>{g},
                                                      std::vector<std::string>{name}, ConjugationAction::identity(1),
                                                      std::move(strategy));
    return Localization(monoid, cutoff);
}

// ---------------------------------------------------------------- checks

Report check_laurent_fraction_maps(const Localization& loc)
{
    Report rep("laurent-fraction");
    auto model = loc.wba();
    const Wba& l = *model;
    for (BasisId b : l.basis()) {
        Element x = Element::basis(b);
        Element back;
        std::string err;
        try {
            back = loc.to_laurent(loc.to_fraction(x));
        } catch (const DegreeOverflow& e) {
            err = e.what();
        }
        rep.expect(err.empty() && back == x, "to_laurent(to_fraction(b)) = b", {l.basis_label(b)},
                   [&] { return err.empty() ? format(l, back) : err; }, [&] { return format(l, x); });
    }
    const Wba& h = loc.host();
    const unsigned cut = h.graded() ? std::min(loc.cutoff(), h.cutoff()) : kUnbounded;
    std::size_t skipped = 0;
    for (std::size_t i = 0; i < loc.monoid().size(); ++i)
        for (BasisId x : h.basis(cut)) {
            Fraction a{Element::basis(x), {static_cast<int>(i)}};
            Element lx;
            try {
                lx = loc.to_laurent(a);
            } catch (const DegreeOverflow&) {
                continue;
            }
            FracEq eq = loc.frac_eq(loc.to_fraction(lx), a);
            if (eq == FracEq::indeterminate) {
                ++skipped;
                continue;
            }
            rep.expect(eq == FracEq::equal, "to_fraction(to_laurent(x/g)) ~ x/g",
                       {h.basis_label(x), loc.monoid().names()[i]}, [&] { return to_string(eq); },
                       [] { return std::string("equal"); });
        }
    Word all;
    for (std::size_t i = 0; i < loc.monoid().size(); ++i) all.push_back(static_cast<int>(i));
    Element x1 = model->x_power(1), inv = loc.to_laurent({h.unit_element(), all});
    rep.expect(x1 == inv, "X = 1/D", {"X"}, [&] { return format(l, inv); }, [&] { return format(l, x1); });
    if (skipped) rep.note(std::to_string(skipped) + " fractions skipped: equality test leaves the cutoff");
    return rep;
}

Report check_fraction_coalgebra(const Localization& loc, std::size_t pairs, std::uint64_t seed)
{
    Report rep("fraction-coalgebra");
    auto model = loc.wba();
    const Wba& h = loc.host();
    const auto& m = loc.monoid();
    const unsigned cut = h.graded() ? std::min(loc.cutoff(), h.cutoff()) : kUnbounded;
    const auto basis = h.basis(cut);
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    auto small = [&] { return Scalar(static_cast<long>(std::uniform_int_distribution<int>(1, 5)(rng)) *
                                     (pick(2) ? 1 : -1)); };
    auto random_word = [&](unsigned max_len) {
        Word w(pick(max_len + 1));
        for (int& g : w) g = static_cast<int>(pick(m.size()));
        return w;
    };

    std::size_t done = 0;
    for (std::size_t attempt = 0; done < pairs && attempt < 50 * pairs; ++attempt) {
        Element x;
        const std::size_t terms = 1 + pick(3);
        BasisId first = basis[pick(basis.size())];
        for (std::size_t t = 0; t < terms; ++t) {
            BasisId b = basis[pick(basis.size())];
            if (h.graded() && h.weight(b) != h.weight(first)) continue;
            x.add(b, small());
        }
        if (x.is_zero()) continue;
        Fraction a{x, random_word(2)};
        Word c = random_word(2);
        Fraction b;
        try {
            Element num = mul(h, x, m.evaluate(c));
            const unsigned wn = weight(h, num);
            auto ker = model->kernel_basis(h.graded() ? wn : 0);
            if (!ker.empty() && pick(2)) num.add_scaled(ker[pick(ker.size())], small());
            b = {num, concat(a.den, c)};

            FracEq eq = loc.frac_eq(a, b);
            if (eq == FracEq::indeterminate) continue;
            Element la = loc.to_laurent(a), lb = loc.to_laurent(b);
            Tensor2 da = loc.to_laurent(loc.frac_delta(a)), db = loc.to_laurent(loc.frac_delta(b));
            Tensor2 dl = delta(*model, la);
            Scalar ea = loc.frac_counit(a), eb = loc.frac_counit(b);
            const std::vector<std::string> w{format(h, a.num) + " / " + m.word_label(a.den),
                                             format(h, b.num) + " / " + m.word_label(b.den)};
            rep.expect(eq == FracEq::equal, "frac_eq on equivalent representatives", w,
                       [&] { return to_string(eq); }, [] { return std::string("equal"); });
            rep.expect(la == lb, "equivalent fractions have equal normal forms", w, [&] { return format(*model, la); },
                       [&] { return format(*model, lb); });
            rep.expect(da == db, "Delta well defined on fractions", w, [&] { return format(*model, da); },
                       [&] { return format(*model, db); });
            rep.expect(da == dl, "Delta of fractions matches the Laurent model", w,
                       [&] { return format(*model, da); }, [&] { return format(*model, dl); });
            rep.expect(ea == eb, "eps well defined on fractions", w, [&] { return ea.to_string(); },
                       [&] { return eb.to_string(); });
            ++done;
        } catch (const DegreeOverflow&) {
            continue;
        }
    }
    rep.expect(done >= pairs, "enough equivalent pairs sampled", {std::to_string(pairs)},
               [&] { return std::to_string(done); }, [&] { return std::to_string(pairs); });
    rep.note(std::to_string(done) + " equivalent pairs checked");
    return rep;
}

Report check_ore(const DenominatorMonoid& monoid, const std::vector<Element>& samples, unsigned cutoff)
{
    Report rep("ore");
    const Wba& h = monoid.host();
    const unsigned cut = h.graded() ? std::min(cutoff, h.cutoff()) : kUnbounded;
    std::size_t annihilated = 0;
    for (std::size_t i = 0; i < monoid.size(); ++i) {
        const Element& g = monoid.generators()[i];
        const LinearMap& inv = monoid.action().inverse[i];
        const unsigned wg = weight(h, g);
        const std::string gl = monoid.names()[i];
        for (const auto& x : samples) {
            if (h.graded() && weight(h, x) + wg > cut) continue;
            // (S1) with b = I_g^{-1}(x), t = g
            Element lhs = mul(h, g, inv(x));
            Element rhs = mul(h, x, g);
            rep.expect(lhs == rhs, "(S1) g I_g^{-1}(x) = x g", {gl, format(h, x)}, [&] { return format(h, lhs); },
                       [&] { return format(h, rhs); });
        }
        if (h.graded() && 2 * wg > cut) continue;
        // (S2): every a with g a = 0 satisfies a t = 0 for t = I_g^{-1}(g)
        Echelon images;
        const auto dom = h.basis(h.graded() ? cut - wg : kUnbounded);
        for (std::size_t j = 0; j < dom.size(); ++j)
            images.insert(global_vec(mul(h, g, Element::basis(dom[j]))), Vec::basis(j));
        Element t = inv(g);
        for (const auto& k : images.kernel()) {
            Element a;
            for (const auto& [j, c] : k) a.add(dom[j], c);
            if (h.graded() && weight(h, a) + weight(h, t) > cut) continue;
            ++annihilated;
            Element at = mul(h, a, t);
            rep.expect(at.is_zero(), "(S2) g a = 0 implies a I_g^{-1}(g) = 0", {gl, format(h, a)},
                       [&] { return format(h, at); }, [] { return std::string("0"); });
        }
    }
    rep.note(std::to_string(annihilated) + " annihilated pairs tested for (S2)");
    return rep;
}

UniversalMap universal_map(const Localization& loc, const Wba& target, const LinearMap& psi, unsigned cutoff,
                           const std::optional<Element>& psi_d_inverse)
{
    auto model = loc.wba();
    const Wba& h = loc.host();
    Report rep("universal-map");
    rep.merge(check_homomorphism(h, target, psi, cutoff, "psi"));

    Element pd = psi(model->denominator());
    Element y;
    const Element one = target.unit_element();
    if (psi_d_inverse) {
        y = *psi_d_inverse;
    } else {
        std::vector<BasisId> cands;
        std::vector<Vec> cols;
        for (BasisId b : target.basis(target.graded() ? std::min(cutoff, target.cutoff()) : kUnbounded)) {
            try {
                Vec v;
                for (const auto& [k, c] : mul(target, Element::basis(b), pd)) v.add(2 * key64(k), c);
                for (const auto& [k, c] : mul(target, pd, Element::basis(b))) v.add(2 * key64(k) + 1, c);
                cands.push_back(b);
                cols.push_back(std::move(v));
            } catch (const DegreeOverflow&) {
            }
        }
        Vec rhs;
        for (const auto& [k, c] : one) {
            rhs.add(2 * key64(k), c);
            rhs.add(2 * key64(k) + 1, c);
        }
        auto sol = solve_linear(cols, rhs);
        if (!sol) throw StructureError("universal_map: psi(D) is not invertible in " + target.name());
        for (std::size_t i = 0; i < cands.size(); ++i) y.add(cands[i], (*sol)[i]);
    }
    Element l = mul(target, y, pd), r = mul(target, pd, y);
    rep.expect(l == one && r == one, "psi(D)^{-1} psi(D) = 1 = psi(D) psi(D)^{-1}", {format(target, pd)},
               [&] { return format(target, l) + " ; " + format(target, r); }, [&] { return format(target, one); });

    const auto* mp = model.get();
    LinearMap sigma = LinearMap::memoized([mp, psi, y, &target](BasisId b) {
        auto [x, n] = mp->representative(b);
        Element v = psi(Element::basis(x));
        for (unsigned i = 0; i < n; ++i) v = mul(target, v, y);
        return v;
    });

    const unsigned cut = h.graded() ? std::min(cutoff, h.cutoff()) : kUnbounded;
    LinearMap phi = model->phi_map();
    for (BasisId x : h.basis(cut)) {
        Element a = sigma(phi(Element::basis(x))), b = psi(Element::basis(x));
        rep.expect(a == b, "sigma o phi = psi", {h.basis_label(x)}, [&] { return format(target, a); },
                   [&] { return format(target, b); });
    }
    rep.merge(check_homomorphism(*model, target, sigma, cutoff, "sigma"));
    return {sigma, rep};
}

}  // namespace wbafrac
