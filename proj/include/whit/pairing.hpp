#pragma once

#include <vector>

#include "whit/levi.hpp"
#include "whit/linalg.hpp"
#include "whit/pbw.hpp"
#include "whit/reps.hpp"
#include "whit/rootdata.hpp"

namespace whit {

// Everything needed to evaluate the contravariant pairing between
// M(lambda, eta) and the Verma module M(w . lambda).  w has to come from
// the eta Weyl subgroup; other elements change the central character on
// the Verma side and no pairing exists.
struct PairingSpec {
  Weight lam;
  EtaCharacter eta;
  LeviDatum levi;
  int w = 0;      // Weyl element index inside levi.w_eta.subgroup
  Weight wlam;    // w . lambda
  bool regular = true;  // lambda + rho regular for the full system
};

PairingSpec make_pairing_spec(const RootSystem& rs, const WeylGroup& W,
                              const Weight& lam, const EtaCharacter& eta,
                              int w);

// <u omega, u' v> = ((w.lambda) o pi_eta)(tau(u') u).  Both arguments are
// representatives: u acts on the Whittaker vector of M(lambda, eta), uprime
// on the highest weight vector of M(w . lambda).  Pure function of its
// arguments, safe to evaluate concurrently on a shared UEA.
Rat pair_w(const UEA& U, const UEA::Elt& u, const UEA::Elt& uprime,
           const PairingSpec& spec);

// Exact Gram matrix of one z-weight slice.  Rows are the free classes of
// the box whose z-weight is nu and whose y degree stays within depth;
// columns are the Verma monomials y^I v with |I| <= depth whose h-weight
// restricts to nu on z.
struct GramReport {
  std::vector<Mono> rows;
  std::vector<Mono> cols;
  Matrix entries;
  int rank = 0;
  RatVec nu;
  int depth = 0;
};

// The box must belong to the same lambda and eta as the spec and reach at
// least the requested depth.  nu has to lie below lambda on z.  With
// parallel set the entry loop fans out over OpenMP threads; the result is
// identical to the serial one because every entry is computed
// independently in exact arithmetic.
GramReport gram(const UEA& U, const WhittakerBox& box, const PairingSpec& spec,
                const RatVec& nu, int depth, bool parallel = false);

// Outcome of hunting for a Verma-side witness that pairs nonzero against
// a representative.  No witness up to the depth bound never claims radical
// membership, only absence of evidence inside the window.
struct RadicalVerdict {
  bool witness_found = false;
  int depth = 0;
  Mono witness{};  // meaningful when witness_found
  Rat value;       // pairing against the witness
};

// Scans Verma monomials y^I v with |I| <= depth in the monomial order and
// stops at the first nonzero pairing.
RadicalVerdict radical_probe(const UEA& U, const UEA::Elt& v,
                             const PairingSpec& spec, int depth);

// 1 when mu lies on the W_eta dot orbit of lambda, which by the pairing
// classification is exactly when a nonzero contravariant pairing with the
// Verma family of mu exists; 0 otherwise.  The answer is cross-checked
// against the coinvariant weights computed at the given depth, and a
// disagreement throws TheoremCheckError.  Requires lambda + rho regular.
int classify(const UEA& U, const WeylGroup& W, const Weight& lam,
             const EtaCharacter& eta, const Weight& mu, int depth);

}  // namespace whit
