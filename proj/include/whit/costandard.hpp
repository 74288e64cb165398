#pragma once

#include <map>
#include <vector>

#include "whit/levi.hpp"
#include "whit/pairing.hpp"
#include "whit/pbw.hpp"
#include "whit/rootdata.hpp"

namespace whit {

// Finite shadow of the graded dual of the Verma module M(w . lambda):
// the span of the functionals dual to the weight monomials y^I v inside a
// shaped window.  The full costandard module is the eta-twisted n-finite
// part of the full linear dual; no finite window can represent that part
// literally (its members have unbounded support), so this object carries
// the restriction of the theory to the window and every consumer states
// its answer relative to the depth.
struct TruncatedDual {
  Weight wlam;
  int depth = 0;
  std::vector<Mono> basis;  // window monomials, ascending monomial order
  std::map<Mono, int> index;
};

// A functional in window coordinates.  exact records whether the coords
// are those of the true functional on the full module: the h and x
// actions preserve that, the y action can push support past the window
// and clears the flag.
struct DualVector {
  RatVec coords;
  bool exact = true;
};

// The window for the dual side, budgeted so that its z-weight slice counts
// match the free-class counts of M(lambda, eta) truncated to the same
// depth.  Complement exponents are bounded by depth; with p = depth minus
// the complement content, each Levi component of type A1 keeps exponents
// below 2(p+1) on its single root and a component of type A2 keeps a box
// with side lengths p+1, p+2, p+3 over its three roots, which counts
// |W_comp| times the number of y monomials of degree at most p in either
// case.  Both shapes are downward closed and closed under the support
// moves of the x action, so the x generators act on the window exactly.
std::vector<Mono> dual_window(const UEA& U, const LeviDatum& levi, int depth);

// w must lie in the eta Weyl subgroup.
TruncatedDual costandard_truncated(const UEA& U, const WeylGroup& W,
                                   const LeviDatum& levi,
                                   const EtaCharacter& eta, const Weight& lam,
                                   int w, int depth);

// (u . f)(m) = f(tau(u) m), with f extended by zero outside the window.
DualVector act_dual(const UEA& U, const TruncatedDual& dual, const UEA::Elt& u,
                    const DualVector& f);

// z-restriction of the h-weight of a window monomial.
RatVec dual_z_weight(const UEA& U, const LeviDatum& levi,
                     const TruncatedDual& dual, const Mono& m);

// The pairing map into the dual: phi_w(v) sends a Verma window monomial m
// to <v omega, m>.  These coordinates are exact for every window slot.
DualVector phi_w(const UEA& U, const UEA::Elt& v, const PairingSpec& spec,
                 const TruncatedDual& dual);

// Per-z-weight dimension table of M(lambda, eta) against the dual window,
// both truncated to the same depth budget.  The module side counts free
// classes y^I h^E with complement content at most depth and each Levi
// component ball of y degree at most depth minus that content; the dual
// side counts window monomials.  equal is the exact comparison, slice by
// slice; the tables are truncation shadows, not full characters.
struct CharacterCompareReport {
  std::vector<RatVec> slice_keys;  // descending z-order, i.e. ascending drop
  std::vector<long> module_dims;
  std::vector<long> dual_dims;
  bool equal = false;
  int depth = 0;
};

CharacterCompareReport character_compare(const UEA& U, const WeylGroup& W,
                                         const LeviDatum& levi,
                                         const EtaCharacter& eta,
                                         const Weight& lam, int w, int depth);

// True when the window dual carries a one-dimensional space of eta
// Whittaker vectors sitting at the z-restriction of lambda, the truncated
// image of "the socle contains the Whittaker vector of weight lambda".
bool socle_check(const UEA& U, const WeylGroup& W, const LeviDatum& levi,
                 const EtaCharacter& eta, const Weight& lam, int w, int depth);

// True when every pair w, y in the eta Weyl subgroup gives the same slice
// table and the kernels of phi_w and phi_y agree on the depth-d free
// classes as exact row spaces.  Both kernels equal the radical up to the
// window, so agreement is the computable image of the claim that the
// costandard module does not depend on the choice of w.
bool w_independence(const UEA& U, const WeylGroup& W, const LeviDatum& levi,
                    const EtaCharacter& eta, const Weight& lam, int depth);

}  // namespace whit
