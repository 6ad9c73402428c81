#pragma once

// Graded WBAs presented by generators in degree one: the graph WBA H[G] of a
// finite directed graph, free algebras with multiplicative coproducts, and
// their quotients by homogeneous degree-two relations.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "wbafrac/linalg.hpp"
#include "wbafrac/wba.hpp"

namespace wbafrac {

struct DirectedGraph {
    unsigned vertices = 0;
    std::vector<std::pair<unsigned, unsigned>> edges;  // (tau, sigma) = (first vertex, next vertex)

    bool has_edge(unsigned from, unsigned to) const;
    /// The graph 0 <-> 1 <-> ... <-> r-2 attached to level r.
    static DirectedGraph linear(unsigned level);
    static DirectedGraph from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

/// A path written as its vertex sequence (i_0, ..., i_m); tau = i_0, sigma = i_m.
using Path = std::vector<unsigned>;

/// All paths of length m, sorted lexicographically.
std::vector<Path> enumerate_paths(const DirectedGraph& g, unsigned m);
std::string path_label(const Path& p);

/// H[G] materialized up to a degree cutoff. Block m holds the pairs [p|q]_m,
/// index = (position of p) * |G^m| + (position of q).
class GraphWba : public Wba {
public:
    GraphWba(DirectedGraph graph, unsigned cutoff, const CycloField& field = CycloField::rationals());

    const DirectedGraph& graph() const { return graph_; }
    const std::vector<Path>& paths(unsigned m) const { return paths_.at(m); }
    std::size_t path_index(const Path& p) const;
    BasisId pair(const Path& p, const Path& q) const;
    std::pair<Path, Path> split(BasisId b) const;

    std::string name() const override { return "H[G]"; }
    const CycloField& field() const override { return *field_; }
    std::uint32_t num_blocks() const override { return cutoff_ + 1; }
    std::uint32_t block_dim(std::uint32_t block) const override;
    unsigned block_weight(std::uint32_t block) const override { return block; }
    unsigned cutoff() const override { return cutoff_; }
    std::string basis_label(BasisId b) const override;
    Element unit() const override;
    Element mul_basis(BasisId a, BasisId b) const override;
    Tensor2 delta_basis(BasisId a) const override;
    Scalar counit_basis(BasisId a) const override;
    std::optional<std::vector<BasisId>> factorization(BasisId b) const override;
    std::vector<int> homogeneous_key(BasisId b) const override;

private:
    DirectedGraph graph_;
    unsigned cutoff_;
    const CycloField* field_;
    std::vector<std::vector<Path>> paths_;
    std::vector<std::map<Path, std::size_t>> index_;
};

/// Free algebra on n letters; block d holds the n^d words of length d
/// (index = base-n digits, first letter most significant). Delta and eps are
/// the multiplicative extensions of their values on letters.
class FreeAlgebraWba : public Wba {
public:
    struct Letter {
        std::string label;
        std::vector<std::tuple<unsigned, unsigned, Scalar>> delta;  // sum c * (letter i) (x) (letter j)
        Scalar counit;
        std::vector<int> key;
    };

    FreeAlgebraWba(std::string name, std::vector<Letter> letters, unsigned cutoff,
                   const CycloField& field = CycloField::rationals());

    std::size_t letters() const { return letters_.size(); }
    BasisId word_id(const std::vector<unsigned>& word) const;
    std::vector<unsigned> word(BasisId b) const;

    std::string name() const override { return name_; }
    const CycloField& field() const override { return *field_; }
    std::uint32_t num_blocks() const override { return cutoff_ + 1; }
    std::uint32_t block_dim(std::uint32_t block) const override;
    unsigned block_weight(std::uint32_t block) const override { return block; }
    unsigned cutoff() const override { return cutoff_; }
    std::string basis_label(BasisId b) const override;
    Element unit() const override { return Element::basis({0, 0}); }
    Element mul_basis(BasisId a, BasisId b) const override;
    Tensor2 delta_basis(BasisId a) const override;
    Scalar counit_basis(BasisId a) const override;
    std::optional<std::vector<BasisId>> factorization(BasisId b) const override;
    std::vector<int> homogeneous_key(BasisId b) const override;

private:
    std::string name_;
    std::vector<Letter> letters_;
    unsigned cutoff_;
    const CycloField* field_;
    std::vector<std::uint32_t> dims_;
};

/// Free algebra on t_pq (1 <= p,q <= n) with Delta(t_pq) = sum_k t_pk (x) t_kq, eps(t_pq) = delta_pq.
/// For n = 2 the letters are named a, b, c, d.
std::shared_ptr<FreeAlgebraWba> free_matrix_bialgebra(unsigned n, unsigned cutoff,
                                                      const CycloField& field = CycloField::rationals());

/// T(V) on V = span{u, i} with Delta(u) = u (x) u - i (x) i, Delta(i) = u (x) i + i (x) u.
std::shared_ptr<FreeAlgebraWba> radford_tensor_algebra(unsigned cutoff);

/// H/I for a graded H generated in degree one over its degree-zero part and
/// I generated by homogeneous degree-two relations. The basis of each degree
/// consists of the free basis vectors that are not pivots of the ideal slice.
class GradedQuotient : public Wba {
public:
    GradedQuotient(WbaPtr free, std::vector<Element> relations, std::string name);

    const Wba& free() const { return *free_; }
    WbaPtr free_ptr() const { return free_; }
    const std::vector<Element>& relations() const { return relations_; }

    /// Image of a free element in the quotient basis.
    Element reduce(const Element& x) const;
    /// The free basis vector standing for a quotient basis vector.
    BasisId representative(BasisId b) const;
    Element lift(const Element& x) const;
    std::size_t ideal_dimension(unsigned degree) const;
    /// Basis of the ideal slice in one degree, as free elements.
    std::vector<Element> ideal_basis(unsigned degree) const;

    /// Delta(I) in ker(pi (x) pi) and eps(I) = 0, degree by degree.
    Report coideal_test(unsigned max_degree) const;

    std::string name() const override { return name_; }
    const CycloField& field() const override { return *field_; }
    std::uint32_t num_blocks() const override { return free_->num_blocks(); }
    std::uint32_t block_dim(std::uint32_t block) const override;
    unsigned block_weight(std::uint32_t block) const override { return free_->block_weight(block); }
    unsigned cutoff() const override { return free_->cutoff(); }
    std::string basis_label(BasisId b) const override;
    Element unit() const override;
    Element mul_basis(BasisId a, BasisId b) const override;
    Tensor2 delta_basis(BasisId a) const override;
    Scalar counit_basis(BasisId a) const override;
    std::optional<std::vector<BasisId>> factorization(BasisId b) const override;
    std::vector<int> homogeneous_key(BasisId b) const override { return free_->homogeneous_key(representative(b)); }

private:
    struct Slice {
        std::map<std::vector<int>, Echelon> parts;  // one echelon per homogeneous key
        std::vector<std::uint32_t> standard;         // free indices kept as quotient basis
        std::map<std::uint32_t, std::uint32_t> position;
    };

    void build();
    void insert(std::uint32_t degree, const Element& v);
    Element reduce_block(std::uint32_t degree, const Vec& v) const;

    WbaPtr free_;
    std::vector<Element> relations_;
    std::string name_;
    const CycloField* field_;
    bool use_keys_ = true;
    std::vector<Slice> slices_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<BasisId, BasisId>, Element> mul_cache_;
    mutable std::map<BasisId, Tensor2> delta_cache_;
};

/// Coefficient R_{j;l} of the RTT relations for level r (paths of length two).
Scalar rtt_coefficient(unsigned level, const Path& j, const Path& l, const CycloField& field);
/// The field Q(zeta_{8r}) used for level r.
const CycloField& level_field(unsigned level);

/// sum_i [j|i] R_{i;l} - sum_i R_{j;i} [i|l] for all pairs of length-two paths (zero relations dropped).
std::vector<Element> rtt_relations(const GraphWba& h, unsigned level, const Scalar& scale);
inline std::vector<Element> rtt_relations(const GraphWba& h, unsigned level)
{
    return rtt_relations(h, level, Scalar::one(h.field()));
}

/// The quantum determinant of level r as a degree-two element of H[G].
Element quantum_determinant(const GraphWba& h, unsigned level);

/// x e - e x reduces to zero for every basis vector e of degree <= cutoff - deg(x).
Report check_central(const Wba& q, const Element& x, unsigned cutoff);

}  // namespace wbafrac
