#pragma once

// Named examples: constructors plus descriptors listing which suites each
// example is expected to pass.

#include <map>
#include <optional>
#include <memory>
#include <string>
#include <vector>

#include "wbafrac/coquasi.hpp"
#include "wbafrac/graded.hpp"
#include "wbafrac/localization.hpp"

namespace wbafrac {

struct SweedlerExample {
    std::shared_ptr<TableWba> wba;
    RFormPtr rform;
    Element one, f, y, fy;
    /// S(f) = f, S(y) = -fy, S(fy) = y
    LinearMap antipode;
    /// S(f) = f, S(y) = y extended anti-multiplicatively: S(fy) = S(y)S(f) = yf = -fy
    LinearMap printed_antipode;
};

/// Sweedler's four-dimensional Hopf algebra on {1, f, y, fy} with the r-form
/// r(f (x) f) = -1, r(y (x) y) = alpha extended from the generators.
SweedlerExample sweedler(const Scalar& alpha = Scalar(1));

/// The monoid algebra of (Z/4, *) on {0bar, 1bar, 2bar, 3bar}.
std::shared_ptr<TableWba> h4();

struct Mq2Example {
    std::shared_ptr<GradedQuotient> wba;
    RFormPtr rform;
    Element det;
    Scalar q;
    unsigned level;
};

/// M_q(2) over Q(zeta_8r) with q = zeta^4: a, b, c, d modulo
/// ba = qab, ca = qac, db = qbd, dc = qcd, bc = cb, ad - da = (q^-1 - q) bc.
Mq2Example mq2(unsigned level = 3, unsigned cutoff = 3);

struct MhatExample {
    std::shared_ptr<GraphWba> free;
    std::shared_ptr<GradedQuotient> wba;
    Element det;
    unsigned level;
};

/// H[G]/I for the level-r graph and the RTT relations.
MhatExample mhatq2(unsigned level = 3, unsigned cutoff = 3);

std::shared_ptr<FreeAlgebraWba> radford_tensor(unsigned cutoff = 3);

/// Parameters passed as key=value strings; unknown keys are rejected by the builders.
using Params = std::map<std::string, std::string>;

/// A catalog object ready for checking: the WBA, optional r-form, named
/// elements (group-likes first), and default denominator monoids.
struct Example {
    std::string name;
    std::string description;
    Params params;
    unsigned cutoff = kUnbounded;  // checking cutoff; kUnbounded for finite-dimensional hosts
    WbaPtr wba;
    RFormPtr rform;
    std::vector<std::pair<std::string, Element>> elements;
    std::vector<std::pair<std::string, Element>> group_likes;
    /// Denominator sets by name; "default" is used when none is requested.
    std::map<std::string, std::shared_ptr<const DenominatorMonoid>> monoids;
    /// Monoids kept for reference that validation is expected to reject.
    std::vector<std::string> rejected_monoids;
    /// Conjugation automorphisms (I_g, I_g^{-1}) of non-central group-likes, by element name.
    std::map<std::string, std::pair<LinearMap, LinearMap>> conjugations;
    std::vector<std::string> central_elements;
    std::shared_ptr<const GradedQuotient> quotient;
    std::optional<LinearMap> antipode;
    std::vector<BasisId> antipode_domain;  // basis vectors on which the antipode is checked
    std::shared_ptr<const Localization> laurent;  // set for Laurent-model examples
    std::vector<std::string> manifest;           // suites expected to pass
    std::vector<std::string> expected_failures;  // suites expected to fail, with reasons in notes
    std::vector<std::string> notes;

    const Element& element(const std::string& name) const;
    bool has_element(const std::string& name) const;
};

struct ExampleDescriptor {
    std::string name;
    std::string summary;
    Params defaults;
    std::vector<std::string> manifest;
};

const std::vector<ExampleDescriptor>& catalog_descriptors();
/// Throws InvalidArgument for unknown names or parameters.
Example build_example(const std::string& name, const Params& params = {});

/// A monoid generated by named elements of an example, with the conjugation
/// action taken from the example's r-form (identity when all generators are
/// central) and the given strategy.
std::shared_ptr<const DenominatorMonoid> monoid_from_names(const Example& ex, const std::vector<std::string>& names,
                                                           const AnnihilatorStrategy& strategy);

}  // namespace wbafrac
