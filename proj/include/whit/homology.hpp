#pragma once

#include <utility>
#include <vector>

#include "whit/costandard.hpp"
#include "whit/levi.hpp"
#include "whit/pbw.hpp"
#include "whit/rootdata.hpp"

namespace whit {

// h-eigenweights with multiplicity of the n-bar coinvariants of
// M(lambda, eta) computed inside a depth window, together with whether the
// list agreed with the one at the next depth.
struct HomologyReport {
  std::vector<std::pair<Weight, int>> weights;  // sorted by coordinates
  int depth = 0;
  bool stabilized = false;
};

// H_0(n-bar, M(lambda, eta)) at the given depth: the box classes modulo
// the span of y_a times every class that stays inside the box, with the
// h action diagonalized on the survivors.  Eigenvalue candidates come
// from the W_eta dot orbit of lambda; a collision or an unexpected
// eigenvalue throws SingularWeightError.
HomologyReport coinvariants(const UEA& U, const WeylGroup& W,
                            const LeviDatum& levi, const EtaCharacter& eta,
                            const Weight& lam, int depth);

// Solutions of (x_alpha - eta(x_alpha)) phi = 0 for every simple alpha
// inside a truncated dual.  The equations are imposed on every window
// coordinate whose evaluation needs no values outside the window, so the
// answer is the space of window restrictions of genuine solutions.
struct WhittakerVectorReport {
  int dimension = 0;
  bool z_homogeneous = false;  // every solution supported in one z-weight
  RatVec z_weight;             // that weight, when z_homogeneous
};

WhittakerVectorReport whittaker_vectors(const UEA& U, const LeviDatum& levi,
                                        const EtaCharacter& eta,
                                        const TruncatedDual& dual);

}  // namespace whit
