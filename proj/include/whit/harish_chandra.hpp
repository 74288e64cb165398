#pragma once

#include <utility>
#include <vector>

#include "whit/levi.hpp"
#include "whit/pbw.hpp"
#include "whit/rational.hpp"
#include "whit/rootdata.hpp"

namespace whit {

// Elements of U(h) are ordinary PBW elements whose monomials touch only
// the h slots.  Evaluating one at a weight is a ring homomorphism.
bool is_h_only(const UEA& U, const UEA::Elt& e);
Rat eval_h(const UEA& U, const UEA::Elt& e, const Weight& lam);

// Twisted projection along n-bar U(g) + U(g) ker eta: a normal monomial
// y^I h^J x^K contributes eta(x^K) h^J when I = 0 and nothing otherwise.
UEA::Elt pi_eta_project(const UEA& U, const EtaCharacter& eta,
                        const UEA::Elt& e);
// The same with eta = 0: the pure U(h) component.
UEA::Elt pi_zero(const UEA& U, const UEA::Elt& e);

// An element central in the Levi carrying the given simple support.
// Construction checks centrality against every generator of that Levi and
// refuses the element otherwise.
struct CenterElement {
  UEA::Elt element;
  int degree = 0;
  std::vector<int> support;  // simple indices of the Levi scope
};

// Center generators for the Levi cut out by the datum: one degree-1
// element per z-basis vector, then per connected component of pi_eta a
// quadratic invariant (integer-normalized), plus the cubic invariant when
// the component has type A2.  Components of other types are out of scope.
std::vector<CenterElement> center_generators(const UEA& U,
                                             const LeviDatum& levi);

// chi^lambda: the pure-h part of a center element evaluated at lambda.
// On Levi center elements the eta-twisted projection gives the same
// value, because a weight-zero normal monomial with x content also
// carries y content.
Rat chi_eval(const UEA& U, const Weight& lam, const CenterElement& z);

// h-eigenweights with multiplicity of the quotient of U(h) by the ideal
// generated by the pure-h parts of the generators minus their chi values.
// Computed by exact elimination on a degree-truncated monomial basis with
// a stabilization check; eigenvalue candidates come from the dot orbit of
// lambda under the scope's Weyl subgroup.  Refuses non-semisimple or
// undersized outcomes rather than guessing.
std::vector<std::pair<Weight, int>> v_lambda(
    const UEA& U, const WeylGroup& W, const LeviDatum& scope,
    const Weight& lam, const std::vector<CenterElement>& gens);

}  // namespace whit
