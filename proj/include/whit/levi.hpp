#pragma once

#include <map>
#include <vector>

#include "whit/rational.hpp"
#include "whit/rootdata.hpp"

namespace whit {

// Character of the nilpotent radical.  Only the simple root vectors can
// carry a nonzero value; every other positive root vector lies in the
// derived algebra of n, where any character vanishes.
struct EtaCharacter {
  RatVec values;            // value on x_{alpha_i}, indexed by simple index
  std::vector<int> pi_eta;  // simple indices with nonzero value, ascending
};

// values may omit simple indices (treated as zero) but must not mention
// anything else; throws ValidationError on an out-of-range key.
EtaCharacter make_character(const RootSystem& rs,
                            const std::map<int, Rat>& values);

// The Levi decomposition induced by eta: the sub-root-system on pi_eta,
// its complement inside the positive roots, the parabolic Weyl data, and
// the center z of the Levi as a space of h-coordinate vectors.
struct LeviDatum {
  std::vector<int> pi_eta;          // simple indices, ascending
  std::vector<int> sigma_eta_plus;  // positive-root indices inside the Levi
  std::vector<int> n_complement;    // remaining positive-root indices
  ParabolicData w_eta;
  // Basis of {H in h : alpha(H) = 0 for alpha in pi_eta}, one primitive
  // integer coefficient vector (on h_1..h_r) per free direction.
  std::vector<IntVec> z_basis;
};

LeviDatum make_levi(const RootSystem& rs, const WeylGroup& W,
                    const EtaCharacter& eta);

// eta(x_a)^k for a positive root index a: zero unless a is simple and
// carries a nonzero value, except that k = 0 always gives 1.
Rat eta_power(const RootSystem& rs, const EtaCharacter& eta, int a, int k);

// Product of eta_power over a full x-exponent vector (size npos).
Rat eta_on_monomial(const RootSystem& rs, const EtaCharacter& eta,
                    const std::vector<int>& kexp);

// Restriction of a weight to z, as values on z_basis in order.
RatVec z_weight(const RootSystem& rs, const LeviDatum& levi,
                const Weight& lam);

// Partial order on z-restrictions: nu <= mu iff mu - nu is a nonnegative
// rational combination of the restrictions of the complement roots.
bool z_leq(const RootSystem& rs, const LeviDatum& levi, const RatVec& nu,
           const RatVec& mu);

}  // namespace whit
