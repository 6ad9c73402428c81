#pragma once

// Right rings of fractions H[G^-1] for a monoid G of almost central
// group-like elements.
//
// Fractions are pairs (numerator, denominator word). For pairwise commuting
// generators the localization is also materialized as a skew Laurent model:
// with D = g_1 ... g_k and X = 1/D, every element is a sum of x X^n, and the
// block (d, n) holds H_d modulo (K_d + H_{d-e} D) for n > 0 (modulo K_d for
// n = 0), where e = deg D and K = ker(phi) is found with the annihilator
// strategy. Products use X^n y = I_D^{-n}(y) X^n.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "wbafrac/coquasi.hpp"
#include "wbafrac/linalg.hpp"
#include "wbafrac/wba.hpp"

namespace wbafrac {

using Word = std::vector<int>;

struct AnnihilatorStrategy {
    enum class Kind { declared_regular, finite_test_set, bounded_search };

    Kind kind = Kind::declared_regular;
    std::vector<Word> test_words;  // finite_test_set
    unsigned limit = 4;            // bounded_search: all words up to this length

    static AnnihilatorStrategy declared_regular() { return {}; }
    static AnnihilatorStrategy finite(std::vector<Word> words) { return {Kind::finite_test_set, std::move(words), 0}; }
    static AnnihilatorStrategy bounded(unsigned limit) { return {Kind::bounded_search, {}, limit}; }

    std::string name() const;
    nlohmann::json to_json() const;
};

enum class Annihilation { yes, no, unknown };

class DenominatorMonoid {
public:
    DenominatorMonoid(WbaPtr host, std::vector<Element> generators, std::vector<std::string> names,
                      ConjugationAction action, AnnihilatorStrategy strategy);

    const Wba& host() const { return *host_; }
    WbaPtr host_ptr() const { return host_; }
    const std::vector<Element>& generators() const { return generators_; }
    const std::vector<std::string>& names() const { return names_; }
    const ConjugationAction& action() const { return action_; }
    const AnnihilatorStrategy& strategy() const { return strategy_; }
    std::size_t size() const { return generators_.size(); }

    Element evaluate(const Word& word) const;
    std::string word_label(const Word& word) const;
    /// Elements t tried when asking whether z t = 0 for some t in G.
    std::vector<Word> test_words() const;
    Annihilation annihilated(const Element& z) const;
    bool commuting() const;

    /// Group-likeness and almost centrality of the generators and, for a
    /// declared-regular strategy, injectivity of left and right
    /// multiplication by each generator on every materialized slice.
    Report validate(unsigned cutoff, unsigned word_bound = 8) const;

private:
    WbaPtr host_;
    std::vector<Element> generators_;
    std::vector<std::string> names_;
    ConjugationAction action_;
    AnnihilatorStrategy strategy_;
};

using MonoidPtr = std::shared_ptr<const DenominatorMonoid>;

struct Fraction {
    Element num;
    Word den;
};

nlohmann::json to_json(const Fraction& f);
Fraction fraction_from_json(const nlohmann::json& j);

enum class FracEq { equal, not_equal, indeterminate };
std::string to_string(FracEq e);

struct FracTensorTerm {
    Scalar coeff;
    Fraction left, right;
};
using FracTensor = std::vector<FracTensorTerm>;

class SkewLaurentWba : public Wba {
public:
    SkewLaurentWba(MonoidPtr monoid, unsigned cutoff, unsigned power_bound);

    const DenominatorMonoid& monoid() const { return *monoid_; }
    const Element& denominator() const { return d_; }
    /// x X^n written in the basis of this algebra.
    Element normalize(const Element& x, unsigned n) const;
    Element phi(const Element& x) const { return normalize(x, 0); }
    LinearMap phi_map() const;
    /// X^n = 1 / D^n
    Element x_power(unsigned n) const;
    /// The host element x and power n with b = x X^n.
    std::pair<BasisId, unsigned> representative(BasisId b) const;
    std::size_t kernel_dimension(unsigned weight) const;
    std::vector<Element> kernel_basis(unsigned weight) const;
    bool power_blocks_empty() const { return power_blocks_empty_; }
    unsigned power_bound() const { return power_bound_; }
    std::vector<std::string> notes() const { return notes_; }

    std::string name() const override;
    const CycloField& field() const override { return monoid_->host().field(); }
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

private:
    struct Slice {
        std::vector<BasisId> basis;
        std::map<BasisId, std::size_t> column;
        Echelon kernel;   // K_d
        Echelon shifted;  // K_d + H_{d-e} D, tags index the slice of weight d - e
        std::vector<std::size_t> standard[2];  // free columns for n = 0 and n > 0
        std::map<std::size_t, std::uint32_t> position[2];
    };
    struct Block {
        unsigned d, n;
    };

    Vec to_vec(unsigned d, const Element& x) const;
    Element from_vec(unsigned d, const Vec& v) const;

    MonoidPtr monoid_;
    unsigned power_bound_;
    unsigned cutoff_;
    unsigned host_top_;  // largest host weight used
    unsigned e_;
    bool power_blocks_empty_ = false;
    Element d_;
    LinearMap d_inverse_;  // I_D^{-1}
    std::vector<Slice> slices_;
    std::vector<Block> blocks_;
    std::map<std::pair<unsigned, unsigned>, std::uint32_t> block_index_;
    std::vector<std::string> notes_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<BasisId, BasisId>, Element> mul_cache_;
};

class Localization {
public:
    /// Validates the monoid (StructureError naming the violated condition on
    /// failure) and materializes the Laurent model when the generators commute.
    /// power_bound 0 means 2 * (number of generators).
    Localization(MonoidPtr monoid, unsigned cutoff, unsigned power_bound = 0);

    const DenominatorMonoid& monoid() const { return *monoid_; }
    MonoidPtr monoid_ptr() const { return monoid_; }
    const Wba& host() const { return monoid_->host(); }
    unsigned cutoff() const { return cutoff_; }
    const Report& validation() const { return validation_; }
    bool materialized() const { return model_ != nullptr; }
    /// Throws StructureError when the generators do not commute.
    std::shared_ptr<const SkewLaurentWba> wba() const;

    Fraction frac_add(const Fraction& a, const Fraction& b) const;
    Fraction frac_mul(const Fraction& a, const Fraction& b) const;
    FracEq frac_eq(const Fraction& a, const Fraction& b) const;
    FracTensor frac_delta(const Fraction& a) const;
    Scalar frac_counit(const Fraction& a) const;
    /// Cancels a trailing generator g of the denominator whenever the
    /// numerator is x' g (central actions only).
    Fraction canonicalize(const Fraction& a) const;

    Element to_laurent(const Fraction& a) const;
    Tensor2 to_laurent(const FracTensor& t) const;
    Fraction to_fraction(const Element& x) const;

    /// dim span{x / w : |w| <= b} for b = 0 .. power bound (finite hosts).
    std::vector<std::size_t> stabilization() const;
    std::map<Grade, std::size_t> dimension_table() const;
    nlohmann::json report_json() const;

private:
    MonoidPtr monoid_;
    unsigned cutoff_;
    unsigned power_bound_;
    Report validation_;
    std::shared_ptr<const SkewLaurentWba> model_;
};

Localization localize(MonoidPtr monoid, unsigned cutoff, unsigned power_bound = 0);

/// H[X]/(gX - 1) for a central group-like g of infinite order.
Localization laurent_model(WbaPtr host, const Element& g, unsigned cutoff, const std::string& name = "g",
                           AnnihilatorStrategy strategy = AnnihilatorStrategy::declared_regular());

/// from_laurent(to_laurent) on the Laurent basis and frac_eq(to_fraction(to_laurent(x/g)), x/g) on generators.
Report check_laurent_fraction_maps(const Localization& loc);

/// Delta and eps of equivalent fractions agree; pairs are x/w against
/// (x c + k)/(w c) for random words c and kernel elements k.
Report check_fraction_coalgebra(const Localization& loc, std::size_t pairs, std::uint64_t seed);

/// (S1) g I_g^{-1}(x) = x g on samples; (S2) a I_g^{-1}(g) = 0 whenever g a = 0.
Report check_ore(const DenominatorMonoid& monoid, const std::vector<Element>& samples, unsigned cutoff);

struct UniversalMap {
    LinearMap sigma;
    Report report;
};

/// sigma(x X^n) = psi(x) psi(D)^{-n}; psi(D)^{-1} is supplied or solved for.
UniversalMap universal_map(const Localization& loc, const Wba& target, const LinearMap& psi, unsigned cutoff,
                           const std::optional<Element>& psi_d_inverse = std::nullopt);

}  // namespace wbafrac
