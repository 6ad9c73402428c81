#include "wbafrac/graded.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace wbafrac {

// ---------------------------------------------------------------- graphs

bool DirectedGraph::has_edge(unsigned from, unsigned to) const
{
    return std::find(edges.begin(), edges.end(), std::make_pair(from, to)) != edges.end();
}

DirectedGraph DirectedGraph::linear(unsigned level)
{
    if (level < 3) throw InvalidArgument("level must be at least 3");
    DirectedGraph g;
    g.vertices = level - 1;
    for (unsigned v = 0; v + 1 < g.vertices; ++v) {
        g.edges.emplace_back(v, v + 1);
        g.edges.emplace_back(v + 1, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

DirectedGraph DirectedGraph::from_json(const nlohmann::json& j)
{
    DirectedGraph g;
    g.vertices = j.at("vertices").get<unsigned>();
    for (const auto& e : j.at("edges")) g.edges.emplace_back(e.at(0).get<unsigned>(), e.at(1).get<unsigned>());
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

nlohmann::json DirectedGraph::to_json() const
{
    nlohmann::json e = nlohmann::json::array();
    for (const auto& [a, b] : edges) e.push_back({a, b});
    return {{"vertices", vertices}, {"edges", e}};
}

std::vector<Path> enumerate_paths(const DirectedGraph& g, unsigned m)
{
    std::vector<std::vector<unsigned>> next(g.vertices);
    for (const auto& [a, b] : g.edges) {
        if (a >= g.vertices || b >= g.vertices) throw InvalidArgument("edge endpoint out of range");
        next[a].push_back(b);
    }
    for (auto& n : next) std::sort(n.begin(), n.end());

    std::vector<Path> paths;
    for (unsigned v = 0; v < g.vertices; ++v) paths.push_back({v});
    for (unsigned k = 0; k < m; ++k) {
        std::vector<Path> longer;
        for (const auto& p : paths)
            for (unsigned w : next[p.back()]) {
                Path q = p;
                q.push_back(w);
                longer.push_back(std::move(q));
            }
        paths = std::move(longer);
    }
    return paths;
}

std::string path_label(const Path& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

// ---------------------------------------------------------------- H[G]

GraphWba::GraphWba(DirectedGraph graph, unsigned cutoff, const CycloField& field)
    : graph_(std::move(graph)), cutoff_(cutoff), field_(&field)
{
    std::set<std::pair<unsigned, unsigned>> seen;
    for (const auto& e : graph_.edges)
        if (!seen.insert(e).second) throw InvalidArgument("multigraphs are not supported");
    for (unsigned m = 0; m <= cutoff_; ++m) {
        paths_.push_back(enumerate_paths(graph_, m));
        std::map<Path, std::size_t> idx;
        for (std::size_t i = 0; i < paths_.back().size(); ++i) idx.emplace(paths_.back()[i], i);
        index_.push_back(std::move(idx));
    }
}

std::size_t GraphWba::path_index(const Path& p) const
{
    if (p.empty() || p.size() > cutoff_ + 1) throw InvalidArgument("path length out of range");
    auto it = index_[p.size() - 1].find(p);
    if (it == index_[p.size() - 1].end()) throw InvalidArgument("not a path: " + path_label(p));
    return it->second;
}

BasisId GraphWba::pair(const Path& p, const Path& q) const
{
    if (p.size() != q.size()) throw InvalidArgument("paths of different length");
    auto m = static_cast<std::uint32_t>(p.size() - 1);
    return {m, static_cast<std::uint32_t>(path_index(p) * paths_[m].size() + path_index(q))};
}

std::pair<Path, Path> GraphWba::split(BasisId b) const
{
    const auto& ps = paths_.at(b.block);
    return {ps.at(b.index / ps.size()), ps.at(b.index % ps.size())};
}

std::uint32_t GraphWba::block_dim(std::uint32_t block) const
{
    auto n = static_cast<std::uint32_t>(paths_.at(block).size());
    return n * n;
}

std::string GraphWba::basis_label(BasisId b) const
{
    auto [p, q] = split(b);
    return "[" + path_label(p) + "|" + path_label(q) + "]";
}

Element GraphWba::unit() const
{
    Element u;
    for (std::uint32_t i = 0; i < block_dim(0); ++i) u.add({0, i}, one());
    return u;
}

Element GraphWba::mul_basis(BasisId a, BasisId b) const
{
    check_weight(a, b);
    auto [p, q] = split(a);
    auto [r, s] = split(b);
    if (p.back() != r.front() || q.back() != s.front()) return {};
    p.insert(p.end(), r.begin() + 1, r.end());
    q.insert(q.end(), s.begin() + 1, s.end());
    return Element::term(pair(p, q), one());
}

Tensor2 GraphWba::delta_basis(BasisId a) const
{
    auto [p, q] = split(a);
    Tensor2 out;
    for (const auto& r : paths_[a.block]) out.add({pair(p, r), pair(r, q)}, one());
    return out;
}

Scalar GraphWba::counit_basis(BasisId a) const
{
    auto [p, q] = split(a);
    return p == q ? one() : zero();
}

std::optional<std::vector<BasisId>> GraphWba::factorization(BasisId b) const
{
    if (b.block == 0) return std::nullopt;
    auto [p, q] = split(b);
    std::vector<BasisId> letters;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) letters.push_back(pair({p[k], p[k + 1]}, {q[k], q[k + 1]}));
    return letters;
}

std::vector<int> GraphWba::homogeneous_key(BasisId b) const
{
    auto [p, q] = split(b);
    return {static_cast<int>(p.front()), static_cast<int>(p.back()), static_cast<int>(q.front()),
            static_cast<int>(q.back())};
}

// ---------------------------------------------------------------- free algebras

FreeAlgebraWba::FreeAlgebraWba(std::string name, std::vector<Letter> letters, unsigned cutoff,
                               const CycloField& field)
    : name_(std::move(name)), letters_(std::move(letters)), cutoff_(cutoff), field_(&field)
{
    if (letters_.empty()) throw InvalidArgument("free algebra needs at least one letter");
    std::size_t key_len = letters_[0].key.size();
    for (const auto& l : letters_) {
        if (l.key.size() != key_len) throw InvalidArgument("letter keys of different length");
        for (const auto& [i, j, c] : l.delta)
            if (i >= letters_.size() || j >= letters_.size()) throw InvalidArgument("letter out of range");
    }
    std::uint64_t d = 1;
    for (unsigned k = 0; k <= cutoff_; ++k) {
        if (d > (1u << 24)) throw InvalidArgument("free algebra too large at this cutoff");
        dims_.push_back(static_cast<std::uint32_t>(d));
        d *= letters_.size();
    }
}

std::uint32_t FreeAlgebraWba::block_dim(std::uint32_t block) const { return dims_.at(block); }

BasisId FreeAlgebraWba::word_id(const std::vector<unsigned>& word) const
{
    if (word.size() > cutoff_) throw DegreeOverflow("word longer than cutoff of " + name_);
    std::uint32_t idx = 0;
    for (unsigned l : word) {
        if (l >= letters_.size()) throw InvalidArgument("letter out of range");
        idx = idx * static_cast<std::uint32_t>(letters_.size()) + l;
    }
    return {static_cast<std::uint32_t>(word.size()), idx};
}

std::vector<unsigned> FreeAlgebraWba::word(BasisId b) const
{
    std::vector<unsigned> w(b.block);
    std::uint32_t idx = b.index;
    for (std::size_t k = w.size(); k-- > 0;) {
        w[k] = idx % letters_.size();
        idx /= static_cast<std::uint32_t>(letters_.size());
    }
    return w;
}

std::string FreeAlgebraWba::basis_label(BasisId b) const
{
    if (b.block == 0) return "1";
    std::string s;
    for (unsigned l : word(b)) s += letters_[l].label;
    return s;
}

Element FreeAlgebraWba::mul_basis(BasisId a, BasisId b) const
{
    check_weight(a, b);
    auto w = word(a);
    auto v = word(b);
    w.insert(w.end(), v.begin(), v.end());
    return Element::term(word_id(w), one());
}

Tensor2 FreeAlgebraWba::delta_basis(BasisId a) const
{
    std::map<std::pair<std::vector<unsigned>, std::vector<unsigned>>, Scalar> acc{{{{}, {}}, one()}};
    for (unsigned l : word(a)) {
        std::map<std::pair<std::vector<unsigned>, std::vector<unsigned>>, Scalar> next;
        for (const auto& [k, c] : acc)
            for (const auto& [i, j, v] : letters_[l].delta) {
                auto key = k;
                key.first.push_back(i);
                key.second.push_back(j);
                auto [it, ins] = next.emplace(key, c * v);
                if (!ins) it->second += c * v;
            }
        acc = std::move(next);
    }
    Tensor2 out;
    for (const auto& [k, c] : acc) out.add({word_id(k.first), word_id(k.second)}, c);
    return out;
}

Scalar FreeAlgebraWba::counit_basis(BasisId a) const
{
    Scalar c = one();
    for (unsigned l : word(a)) c *= letters_[l].counit;
    return c;
}

std::optional<std::vector<BasisId>> FreeAlgebraWba::factorization(BasisId b) const
{
    std::vector<BasisId> out;
    for (unsigned l : word(b)) out.push_back({1, l});
    return out;
}

std::vector<int> FreeAlgebraWba::homogeneous_key(BasisId b) const
{
    std::vector<int> key(letters_[0].key.size(), 0);
    for (unsigned l : word(b))
        for (std::size_t i = 0; i < key.size(); ++i) key[i] += letters_[l].key[i];
    return key;
}

std::shared_ptr<FreeAlgebraWba> free_matrix_bialgebra(unsigned n, unsigned cutoff, const CycloField& field)
{
    if (n == 0) throw InvalidArgument("matrix size must be positive");
    std::vector<FreeAlgebraWba::Letter> letters;
    for (unsigned p = 0; p < n; ++p)
        for (unsigned q = 0; q < n; ++q) {
            FreeAlgebraWba::Letter l;
            if (n == 2)
                l.label = std::string(1, static_cast<char>('a' + 2 * p + q));
            else
                l.label = "t" + std::to_string(p + 1) + std::to_string(q + 1);
            for (unsigned k = 0; k < n; ++k) l.delta.emplace_back(p * n + k, k * n + q, Scalar::one(field));
            l.counit = p == q ? Scalar::one(field) : Scalar::zero(field);
            l.key.assign(2 * n, 0);
            l.key[p] = 1;
            l.key[n + q] = 1;
            letters.push_back(std::move(l));
        }
    return std::make_shared<FreeAlgebraWba>("M(" + std::to_string(n) + ")", std::move(letters), cutoff, field);
}

std::shared_ptr<FreeAlgebraWba> radford_tensor_algebra(unsigned cutoff)
{
    FreeAlgebraWba::Letter u{"u", {{0, 0, Scalar(1)}, {1, 1, Scalar(-1)}}, Scalar(1), {}};
    FreeAlgebraWba::Letter i{"i", {{0, 1, Scalar(1)}, {1, 0, Scalar(1)}}, Scalar(0), {}};
    return std::make_shared<FreeAlgebraWba>("T(V)", std::vector<FreeAlgebraWba::Letter>{u, i}, cutoff);
}

// ---------------------------------------------------------------- quotients

GradedQuotient::GradedQuotient(WbaPtr free, std::vector<Element> relations, std::string name)
    : free_(std::move(free)), relations_(std::move(relations)), name_(std::move(name)), field_(&free_->field())
{
    if (!free_->graded()) throw InvalidArgument("graded quotient needs a graded free model");
    for (std::uint32_t b = 0; b < free_->num_blocks(); ++b)
        if (free_->block_weight(b) != b) throw InvalidArgument("free model must have one block per degree");
    for (const auto& rel : relations_)
        for (const auto& [b, c] : rel) {
            if (b.block != 2) throw InvalidArgument("relations must be homogeneous of degree two");
            field_ = &join_fields(*field_, c.field());
        }
    for (const auto& rel : relations_) {
        std::set<std::vector<int>> keys;
        for (const auto& [b, c] : rel) keys.insert(free_->homogeneous_key(b));
        if (keys.size() > 1) use_keys_ = false;
    }
    build();
}

void GradedQuotient::insert(std::uint32_t degree, const Element& v)
{
    std::map<std::vector<int>, Vec> parts;
    for (const auto& [b, c] : v) {
        auto key = use_keys_ ? free_->homogeneous_key(b) : std::vector<int>{};
        parts[key].add(b.index, c);
    }
    if (parts.size() > 1) throw StructureError("ideal element is not homogeneous for the multigrading");
    for (const auto& [key, vec] : parts) slices_[degree].parts[key].insert(vec);
}

void GradedQuotient::build()
{
    std::uint32_t top = free_->num_blocks();
    slices_.resize(top);
    auto h0 = free_->block_basis(0);
    auto h1 = top > 1 ? free_->block_basis(1) : std::vector<BasisId>{};
    for (std::uint32_t d = 2; d < top; ++d) {
        if (d == 2) {
            for (const auto& rel : relations_)
                for (auto u : h0)
                    for (auto w : h0) {
                        Element v = mul(*free_, {Element::basis(u), rel, Element::basis(w)});
                        if (!v.is_zero()) insert(d, v);
                    }
        } else {
            for (const auto& v : ideal_basis(d - 1))
                for (auto e : h1) {
                    Element x = Element::basis(e);
                    Element l = mul(*free_, x, v);
                    if (!l.is_zero()) insert(d, l);
                    Element r = mul(*free_, v, x);
                    if (!r.is_zero()) insert(d, r);
                }
        }
    }
    for (std::uint32_t d = 0; d < top; ++d) {
        auto& s = slices_[d];
        std::vector<bool> pivot(free_->block_dim(d), false);
        for (const auto& [key, e] : s.parts)
            for (const auto& [col, row] : e.rows()) pivot[col] = true;
        for (std::uint32_t i = 0; i < pivot.size(); ++i)
            if (!pivot[i]) {
                s.position.emplace(i, static_cast<std::uint32_t>(s.standard.size()));
                s.standard.push_back(i);
            }
    }
}

std::vector<Element> GradedQuotient::ideal_basis(unsigned degree) const
{
    std::vector<Element> out;
    if (degree >= slices_.size()) return out;
    for (const auto& [key, e] : slices_[degree].parts)
        for (const auto& [col, row] : e.rows()) {
            Element x;
            for (const auto& [i, c] : row.vec) x.add({degree, static_cast<std::uint32_t>(i)}, c);
            out.push_back(std::move(x));
        }
    return out;
}

std::size_t GradedQuotient::ideal_dimension(unsigned degree) const
{
    std::size_t n = 0;
    if (degree >= slices_.size()) return 0;
    for (const auto& [key, e] : slices_[degree].parts) n += e.rank();
    return n;
}

Element GradedQuotient::reduce(const Element& x) const
{
    std::map<std::pair<std::uint32_t, std::vector<int>>, Vec> parts;
    for (const auto& [b, c] : x) {
        if (b.block >= slices_.size()) throw DegreeOverflow("element beyond cutoff of " + name_);
        auto key = use_keys_ ? free_->homogeneous_key(b) : std::vector<int>{};
        parts[{b.block, key}].add(b.index, c);
    }
    Element out;
    for (const auto& [dk, v] : parts) {
        const auto& s = slices_[dk.first];
        auto it = s.parts.find(dk.second);
        Vec res = it == s.parts.end() ? v : it->second.residual(v);
        for (const auto& [i, c] : res) out.add({dk.first, s.position.at(static_cast<std::uint32_t>(i))}, c);
    }
    return out;
}

BasisId GradedQuotient::representative(BasisId b) const { return {b.block, slices_.at(b.block).standard.at(b.index)}; }

Element GradedQuotient::lift(const Element& x) const
{
    Element out;
    for (const auto& [b, c] : x) out.add(representative(b), c);
    return out;
}

std::uint32_t GradedQuotient::block_dim(std::uint32_t block) const
{
    return static_cast<std::uint32_t>(slices_.at(block).standard.size());
}

std::string GradedQuotient::basis_label(BasisId b) const { return free_->basis_label(representative(b)); }

Element GradedQuotient::unit() const { return reduce(free_->unit()); }

Element GradedQuotient::mul_basis(BasisId a, BasisId b) const
{
    check_weight(a, b);
    {
        std::lock_guard lock(cache_mutex_);
        auto it = mul_cache_.find({a, b});
        if (it != mul_cache_.end()) return it->second;
    }
    Element v = reduce(free_->mul_basis(representative(a), representative(b)));
    std::lock_guard lock(cache_mutex_);
    return mul_cache_.emplace(std::make_pair(a, b), std::move(v)).first->second;
}

Tensor2 GradedQuotient::delta_basis(BasisId a) const
{
    {
        std::lock_guard lock(cache_mutex_);
        auto it = delta_cache_.find(a);
        if (it != delta_cache_.end()) return it->second;
    }
    Tensor2 t = free_->delta_basis(representative(a));
    t = apply_left(t, [&](BasisId b) { return reduce(Element::basis(b)); });
    t = apply_right(t, [&](BasisId b) { return reduce(Element::basis(b)); });
    std::lock_guard lock(cache_mutex_);
    return delta_cache_.emplace(a, std::move(t)).first->second;
}

Scalar GradedQuotient::counit_basis(BasisId a) const { return free_->counit_basis(representative(a)); }

std::optional<std::vector<BasisId>> GradedQuotient::factorization(BasisId b) const
{
    auto f = free_->factorization(representative(b));
    if (!f) return std::nullopt;
    std::vector<BasisId> out;
    for (auto l : *f) {
        auto it = slices_.at(l.block).position.find(l.index);
        if (it == slices_[l.block].position.end()) return std::nullopt;
        out.push_back({l.block, it->second});
    }
    return out;
}

Report GradedQuotient::coideal_test(unsigned max_degree) const
{
    Report rep("coideal");
    auto red = [&](BasisId b) { return reduce(Element::basis(b)); };
    for (unsigned d = 0; d <= max_degree && d < slices_.size(); ++d)
        for (const auto& v : ideal_basis(d)) {
            Tensor2 t = apply_right(apply_left(delta(*free_, v), red), red);
            std::string w = format(*free_, v);
            rep.expect(t.is_zero(), "Delta(I) in ker(pi (x) pi)", {w}, [&] { return format(*this, t); },
                       [] { return "0"; });
            Scalar e = counit(*free_, v);
            rep.expect(e.is_zero(), "eps(I) = 0", {w}, [&] { return e.to_string(); }, [] { return "0"; });
        }
    return rep;
}

// ---------------------------------------------------------------- RTT data

const CycloField& level_field(unsigned level)
{
    if (level < 3) throw InvalidArgument("level must be at least 3");
    return CycloField::get(8 * level);
}

Scalar rtt_coefficient(unsigned level, const Path& j, const Path& l, const CycloField& field)
{
    if (j.size() != 3 || l.size() != 3) throw InvalidArgument("RTT coefficients are indexed by paths of length two");
    // zeta = zeta_{8r}, q = zeta^4, q^(k/2) = zeta^(2k)
    auto qhalf = [&](long k) { return Scalar::zeta_power(field, 2 * k); };
    Scalar q = qhalf(2);
    auto qint = [&](long n) { return quantum_integer(n, q); };
    if (field.conductor() != 8 * level) throw FieldMismatch("RTT coefficients of level r live over Q(zeta_8r)");
    long v = j[0];
    if (l[0] != j[0]) return Scalar::zero(field);
    if (j[0] == j[2] && l[0] == l[2]) {
        long sj = static_cast<long>(j[1]) - v;
        long sl = static_cast<long>(l[1]) - v;
        if (sj == sl) return Scalar(field, Rational(-sj)) * qhalf(-1) * q.pow(sj * (v + 1)) / qint(v + 1);
        if (sj == -1 && sl == 1) return qhalf(-1) * qint(v) * qint(v + 2) / qint(v + 1).pow(2);
        return qhalf(-1);
    }
    if (j == l) return qhalf(-3);
    return Scalar::zero(field);
}

std::vector<Element> rtt_relations(const GraphWba& h, unsigned level, const Scalar& scale)
{
    const auto& two = h.paths(2);
    std::vector<std::vector<Scalar>> r(two.size(), std::vector<Scalar>(two.size()));
    for (std::size_t a = 0; a < two.size(); ++a)
        for (std::size_t b = 0; b < two.size(); ++b) r[a][b] = scale * rtt_coefficient(level, two[a], two[b], h.field());
    std::vector<Element> out;
    for (std::size_t j = 0; j < two.size(); ++j)
        for (std::size_t l = 0; l < two.size(); ++l) {
            Element rel;
            for (std::size_t i = 0; i < two.size(); ++i) {
                rel.add(h.pair(two[j], two[i]), r[i][l]);
                rel.add(h.pair(two[i], two[l]), -r[j][i]);
            }
            if (!rel.is_zero()) out.push_back(std::move(rel));
        }
    return out;
}

Element quantum_determinant(const GraphWba& h, unsigned level)
{
    const auto& field = h.field();
    if (field.conductor() != 8 * level) throw FieldMismatch("determinant of level r lives over Q(zeta_8r)");
    Scalar q = Scalar::zeta_power(field, 4);
    Scalar inv_sqrt2 = sqrt_two(field).inverse();
    unsigned top = level - 2;
    auto alpha = [&](unsigned j) { return j == 0 || j == top ? Scalar::one(field) : inv_sqrt2; };
    auto qint = [&](long n) { return quantum_integer(n, q); };
    auto valid = [&](const Path& p) {
        for (unsigned v : p)
            if (v > top) return false;
        return h.graph().has_edge(p[0], p[1]) && h.graph().has_edge(p[1], p[2]);
    };
    Element det;
    auto add = [&](const Path& p, const Path& r, const Scalar& c) {
        if (valid(p) && valid(r)) det.add(h.pair(p, r), c);
    };
    for (unsigned j = 0; j <= top; ++j)
        for (unsigned l = 0; l <= top; ++l) {
            Scalar a = alpha(j) * alpha(l);
            Path up_j{j, j + 1, j}, up_l{l, l + 1, l};
            Path down_j{j, j - 1, j}, down_l{l, l - 1, l};
            long J = j, L = l;
            add(up_j, up_l, a * qint(L + 1) / qint(J + 1));
            if (j > 0 && l > 0) add(down_j, down_l, a * qint(L) / qint(J));
            if (j > 0) add(down_j, up_l, -a * qint(L + 1) / qint(J));
            if (l > 0) add(up_j, down_l, -a * qint(L) / qint(J + 1));
        }
    return det;
}

Report check_central(const Wba& q, const Element& x, unsigned cutoff)
{
    Report rep("central");
    unsigned w = weight(q, x);
    if (w > cutoff) throw DegreeOverflow("element weight exceeds cutoff");
    for (auto e : q.basis(cutoff - w)) {
        Element eb = Element::basis(e);
        Element l = mul(q, x, eb);
        Element r = mul(q, eb, x);
        rep.expect(l == r, "x e == e x", {q.basis_label(e)}, [&] { return format(q, l); },
                   [&] { return format(q, r); });
    }
    return rep;
}

}  // namespace wbafrac
