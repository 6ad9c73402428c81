#pragma once

// Weak bialgebras given by structure constants on an explicit basis.
//
// The basis is split into blocks. A finite-dimensional algebra uses a single
// block; graded algebras use one block per degree (or per multidegree), each
// with a weight, and are materialized up to a weight cutoff. Products whose
// weight would exceed the cutoff throw DegreeOverflow.

#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wbafrac/element.hpp"
#include "wbafrac/report.hpp"

namespace wbafrac {

inline constexpr unsigned kUnbounded = std::numeric_limits<unsigned>::max() / 4;

/// Position in a two-index dimension table: (numerator degree, denominator power).
using Grade = std::pair<int, int>;

class Wba {
public:
    virtual ~Wba() = default;

    virtual std::string name() const = 0;
    virtual const CycloField& field() const = 0;

    virtual std::uint32_t num_blocks() const = 0;
    virtual std::uint32_t block_dim(std::uint32_t block) const = 0;
    virtual unsigned block_weight(std::uint32_t /*block*/) const { return 0; }
    virtual Grade block_grade(std::uint32_t block) const { return {static_cast<int>(block_weight(block)), 0}; }
    /// Largest weight whose products are materialized; kUnbounded for finite-dimensional algebras.
    virtual unsigned cutoff() const { return kUnbounded; }

    virtual std::string basis_label(BasisId b) const = 0;
    virtual Element unit() const = 0;
    virtual Element mul_basis(BasisId a, BasisId b) const = 0;
    virtual Tensor2 delta_basis(BasisId a) const = 0;
    virtual Scalar counit_basis(BasisId a) const = 0;

    /// For algebras generated in weight one: a word of weight-one basis vectors
    /// whose product is this basis vector.
    virtual std::optional<std::vector<BasisId>> factorization(BasisId /*b*/) const { return std::nullopt; }
    /// A multigrading respected by products and by the relations of a presentation.
    virtual std::vector<int> homogeneous_key(BasisId /*b*/) const { return {}; }

    bool graded() const { return cutoff() != kUnbounded; }
    unsigned weight(BasisId b) const { return block_weight(b.block); }
    std::size_t dimension() const;  // total materialized dimension
    std::vector<BasisId> basis(unsigned max_weight = kUnbounded) const;
    std::vector<BasisId> block_basis(std::uint32_t block) const;
    std::vector<std::uint32_t> blocks_of_weight(unsigned w) const;
    std::optional<BasisId> find_label(const std::string& label) const;

    /// Delta(1), computed once.
    const Tensor2& delta_unit() const;
    const Element& unit_element() const;

    Scalar zero() const { return Scalar::zero(field()); }
    Scalar one() const { return Scalar::one(field()); }

protected:
    void check_weight(BasisId a, BasisId b) const;

private:
    mutable std::once_flag unit_once_;
    mutable Element unit_cache_;
    mutable Tensor2 delta_unit_cache_;
};

using WbaPtr = std::shared_ptr<const Wba>;

unsigned weight(const Wba& h, const Element& x);

Element mul(const Wba& h, const Element& x, const Element& y);
Element mul(const Wba& h, const std::vector<Element>& factors);
Tensor2 mul(const Wba& h, const Tensor2& x, const Tensor2& y);
Tensor2 delta(const Wba& h, const Element& x);
Tensor3 delta2(const Wba& h, const Element& x);
Scalar counit(const Wba& h, const Element& x);
Element power(const Wba& h, const Element& x, unsigned n);

/// eps_s(x) = 1' eps(x 1'')
Element counital_source(const Wba& h, const Element& x);
/// eps_t(x) = eps(1' x) 1''
Element counital_target(const Wba& h, const Element& x);

enum class GroupLike { neither, right, left, both };
std::string to_string(GroupLike g);
GroupLike is_group_like(const Wba& h, const Element& g);

class LinearMap {
public:
    using Fn = std::function<Element(BasisId)>;

    LinearMap();  // identity
    explicit LinearMap(Fn fn, bool identity = false);

    static LinearMap identity() { return LinearMap(); }
    /// Caches images; the wrapped function is evaluated once per basis vector.
    static LinearMap memoized(Fn fn);

    Element operator()(BasisId b) const;
    Element operator()(const Element& x) const;
    bool is_identity() const { return identity_; }

    /// (*this) o inner
    LinearMap after(const LinearMap& inner) const;

private:
    std::shared_ptr<const Fn> fn_;
    bool identity_ = true;
};

Tensor2 apply(const LinearMap& f, const LinearMap& g, const Tensor2& t);

std::string format(const Wba& h, const Element& x);
std::string format(const Wba& h, const Tensor2& t);
std::string format(const Wba& h, const Tensor3& t);

/// Def. 2.1 in full: algebra, coalgebra, multiplicativity of Delta, the two
/// weak counit laws and the two weak unit laws, on all basis tuples of total
/// weight <= cutoff.
Report check_wba_axioms(const Wba& h, unsigned cutoff);

/// Idempotency of eps_s and eps_t, commutation of their images, and the
/// bialgebra criterion eps_s == eta o eps.
Report check_counital_maps(const Wba& h, unsigned cutoff);
bool is_bialgebra(const Wba& h, unsigned cutoff);

/// The three antipode equations on each listed basis vector. S may throw
/// InvalidArgument for basis vectors outside its domain.
Report check_antipode(const Wba& h, const LinearMap& s, const std::vector<BasisId>& elements);

/// Algebra and coalgebra homomorphism checks of f : a -> b on basis tuples up to cutoff.
Report check_homomorphism(const Wba& a, const Wba& b, const LinearMap& f, unsigned cutoff,
                          const std::string& suite = "homomorphism");

/// A WBA stored as explicit tables.
class TableWba : public Wba {
public:
    struct Block {
        unsigned weight = 0;
        Grade grade{0, 0};
        std::vector<std::string> labels;
    };

    TableWba(std::string name, const CycloField& field, std::vector<Block> blocks, unsigned cutoff = kUnbounded);

    void set_unit(Element u) { unit_ = std::move(u); }
    void set_mul(BasisId a, BasisId b, Element v);
    void set_delta(BasisId a, Tensor2 v);
    void set_counit(BasisId a, Scalar v);
    void set_factorization(BasisId b, std::vector<BasisId> letters) { factorization_[b] = std::move(letters); }

    std::string name() const override { return name_; }
    const CycloField& field() const override { return *field_; }
    std::uint32_t num_blocks() const override { return static_cast<std::uint32_t>(blocks_.size()); }
    std::uint32_t block_dim(std::uint32_t block) const override;
    unsigned block_weight(std::uint32_t block) const override;
    Grade block_grade(std::uint32_t block) const override;
    unsigned cutoff() const override { return cutoff_; }
    std::string basis_label(BasisId b) const override;
    Element unit() const override { return unit_; }
    Element mul_basis(BasisId a, BasisId b) const override;
    Tensor2 delta_basis(BasisId a) const override;
    Scalar counit_basis(BasisId a) const override;
    std::optional<std::vector<BasisId>> factorization(BasisId b) const override;

private:
    std::string name_;
    const CycloField* field_;
    std::vector<Block> blocks_;
    unsigned cutoff_;
    Element unit_;
    std::map<std::pair<BasisId, BasisId>, Element> mul_;
    std::map<BasisId, Tensor2> delta_;
    std::map<BasisId, Scalar> counit_;
    std::map<BasisId, std::vector<BasisId>> factorization_;
};

/// Copies all structure constants of h with weight <= cutoff into tables.
std::shared_ptr<TableWba> materialize(const Wba& h, unsigned cutoff);

nlohmann::json to_json(const Wba& h, unsigned cutoff);
std::shared_ptr<TableWba> wba_from_json(const nlohmann::json& j);

/// H1 (x) H2 with componentwise structure. Blocks are pairs of factor blocks
/// whose weights sum to at most min(cutoff1, cutoff2).
class TensorWba : public Wba {
public:
    TensorWba(WbaPtr left, WbaPtr right);

    const Wba& left() const { return *left_; }
    const Wba& right() const { return *right_; }
    WbaPtr left_ptr() const { return left_; }
    WbaPtr right_ptr() const { return right_; }

    BasisId pair(BasisId a, BasisId b) const;
    std::pair<BasisId, BasisId> split(BasisId x) const;
    Element embed(const Element& a, const Element& b) const;  // a (x) b
    /// (f (x) g) as a map on this algebra.
    LinearMap tensor_map(const LinearMap& f, const LinearMap& g) const;

    std::string name() const override;
    const CycloField& field() const override { return *field_; }
    std::uint32_t num_blocks() const override { return static_cast<std::uint32_t>(blocks_.size()); }
    std::uint32_t block_dim(std::uint32_t block) const override;
    unsigned block_weight(std::uint32_t block) const override;
    Grade block_grade(std::uint32_t block) const override;
    unsigned cutoff() const override { return cutoff_; }
    std::string basis_label(BasisId b) const override;
    Element unit() const override;
    Element mul_basis(BasisId a, BasisId b) const override;
    Tensor2 delta_basis(BasisId a) const override;
    Scalar counit_basis(BasisId a) const override;
    std::vector<int> homogeneous_key(BasisId b) const override;

private:
    WbaPtr left_, right_;
    const CycloField* field_;
    unsigned cutoff_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> blocks_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> block_index_;
};

WbaPtr tensor_wba(WbaPtr left, WbaPtr right);

}  // namespace wbafrac
