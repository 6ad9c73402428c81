#pragma once

// Universal r-forms, their weak convolution inverses, and the conjugation
// automorphisms I_g(x) = rbar(x' (x) g) x'' r(x''' (x) g).

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "wbafrac/wba.hpp"

namespace wbafrac {

class RForm {
public:
    virtual ~RForm() = default;
    virtual const Wba& host() const = 0;
    virtual Scalar r(BasisId x, BasisId y) const = 0;
    virtual Scalar rbar(BasisId x, BasisId y) const = 0;
    virtual std::string mode() const = 0;
};

using RFormPtr = std::shared_ptr<const RForm>;

/// Bilinear evaluation of r (or of rbar when bar is set).
Scalar rform_eval(const RForm& form, const Element& x, const Element& y, bool bar = false);

using PairTable = std::map<std::pair<BasisId, BasisId>, Scalar>;

/// Values listed on basis pairs; unlisted pairs are zero.
class TableRForm : public RForm {
public:
    TableRForm(WbaPtr host, PairTable r, PairTable rbar);

    const Wba& host() const override { return *host_; }
    Scalar r(BasisId x, BasisId y) const override;
    Scalar rbar(BasisId x, BasisId y) const override;
    std::string mode() const override { return "table-complete"; }

private:
    WbaPtr host_;
    PairTable r_, rbar_;
};

/// r(x (x) y) = eps(xy), valid on every commutative WBA; rbar = r.
RFormPtr commutative_rform(WbaPtr host);

/// Copies the values of form on all basis pairs of a finite-dimensional host.
RFormPtr tabulate(WbaPtr host, const RForm& form);

/// Extension from values on pairs of generators to all of H via
///   r(xy (x) z) = r(y (x) z') r(x (x) z''),     r(x (x) yz) = r(x' (x) y) r(x'' (x) z),
///   rbar(xy (x) z) = rbar(x (x) z') rbar(y (x) z''), rbar(x (x) yz) = rbar(x' (x) z) rbar(x'' (x) y).
/// The host must supply factorization() and have its unit as a basis vector.
class RecursiveRForm : public RForm {
public:
    enum class Route { left_first, right_first };

    RecursiveRForm(WbaPtr host, PairTable r_gen, PairTable rbar_gen, Route route = Route::left_first);

    const Wba& host() const override { return *host_; }
    Scalar r(BasisId x, BasisId y) const override { return eval(x, y, false); }
    Scalar rbar(BasisId x, BasisId y) const override { return eval(x, y, true); }
    std::string mode() const override { return "recursive-from-degree-1"; }
    Route route() const { return route_; }

private:
    Scalar eval(BasisId x, BasisId y, bool bar) const;
    Scalar eval_el(const Element& x, const Element& y, bool bar) const;
    Scalar compute(BasisId x, BasisId y, bool bar) const;
    std::vector<BasisId> word(BasisId b) const;
    Element product(const std::vector<BasisId>& letters, std::size_t from, std::size_t to) const;

    WbaPtr host_;
    PairTable gen_[2];
    Route route_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<BasisId, BasisId>, Scalar> memo_[2];
};

/// r((a (x) b) (x) (c (x) d)) = r1(a (x) c) r2(b (x) d) on a TensorWba.
class TensorRForm : public RForm {
public:
    TensorRForm(std::shared_ptr<const TensorWba> host, RFormPtr left, RFormPtr right);

    const Wba& host() const override { return *host_; }
    Scalar r(BasisId x, BasisId y) const override;
    Scalar rbar(BasisId x, BasisId y) const override;
    std::string mode() const override { return "tensor"; }

private:
    std::shared_ptr<const TensorWba> host_;
    RFormPtr left_, right_;
};

/// Def. 2.3 (all five conditions), the twelve identities of Prop. 3.4 and,
/// for each supplied group-like, the four identities of Prop. 3.5.
Report check_coquasi(const RForm& form, unsigned cutoff, const std::vector<Element>& group_likes = {});

/// Compares two evaluation routes of recursive r-forms on all basis pairs up to cutoff.
Report check_route_independence(const RForm& a, const RForm& b, unsigned cutoff);

enum class Direction { forward, inverse };

/// I_g(x) or I_g^{-1}(x). Throws StructureError if g is not group-like.
Element conjugation(const RForm& form, const Element& g, const Element& x, Direction dir = Direction::forward);

/// I_g and I_g^{-1} as memoized linear maps.
std::pair<LinearMap, LinearMap> conjugation_maps(RFormPtr form, const Element& g);

/// A monoid homomorphism g -> I_g given on generators.
struct ConjugationAction {
    std::vector<LinearMap> forward;
    std::vector<LinearMap> inverse;
    bool central = false;

    static ConjugationAction identity(std::size_t generators);
    static ConjugationAction from_rform(RFormPtr form, const std::vector<Element>& generators);

    /// I_w for a word w = g_{w0} g_{w1} ...: I_{w0} o I_{w1} o ...
    LinearMap word_map(const std::vector<int>& word) const;
    /// (I_w)^{-1} = ... o I_{w1}^{-1} o I_{w0}^{-1}
    LinearMap word_inverse(const std::vector<int>& word) const;
};

struct AlmostCentralOptions {
    unsigned cutoff = 3;
    unsigned word_bound = 8;  // longest generator word searched for (C2)
};

/// Group-likeness of the generators, (C1) on basis vectors, (C2) by word
/// search, and that every I_g is a WBA automorphism with the given inverse.
Report check_almost_central(const Wba& h, const std::vector<Element>& generators, const ConjugationAction& action,
                            const AlmostCentralOptions& options = {});

/// Evaluates a generator word in h (empty word gives the unit).
Element evaluate_word(const Wba& h, const std::vector<Element>& generators, const std::vector<int>& word);

}  // namespace wbafrac
