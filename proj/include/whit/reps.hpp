#pragma once

#include <map>
#include <vector>

#include "whit/harish_chandra.hpp"
#include "whit/levi.hpp"
#include "whit/linalg.hpp"
#include "whit/pbw.hpp"
#include "whit/rational.hpp"
#include "whit/rootdata.hpp"

namespace whit {

// Element of the Verma module M(mu): a finite combination of y^I v_mu.
// Monomials use only the y slots of the ambient UEA.
struct VermaElement {
  Weight mu;
  std::map<Mono, Rat> coeffs;
};

VermaElement verma_vector(const Weight& mu);

// Left action of u on v, computed by straightening u y^I and letting the
// h and x tails hit the highest weight vector.
VermaElement act_verma(const UEA& U, const UEA::Elt& u, const VermaElement& v);

// All monomials y^I v_mu of weight target, i.e. with sum I_a alpha_a equal
// to mu - target.  Empty when the difference is not a nonnegative integer
// combination of simple roots.
std::vector<VermaElement> weight_basis_verma(const UEA& U, const Weight& mu,
                                             const Weight& target);

// Annihilator generators of the cyclic vector: x_a for every positive root
// and h_i - mu(h_i).
std::vector<UEA::Elt> annihilator_gens_verma(const UEA& U, const Weight& mu);

// Projection along the x relations x_a w = eta(x_a) w: every normal
// monomial y^I h^J x^K collapses to eta(x^K) y^I h^J.  This kills the right
// ideal U(g) ker eta exactly, so it computes in the Whittaker module with
// no truncation loss.
UEA::Elt red_x(const UEA& U, const EtaCharacter& eta, const UEA::Elt& e);

// Terms of an x-free element whose z-weight equals nu, where the class of
// y^I h^J w has z-weight lambda|_z minus the restriction of sum I_a alpha_a.
UEA::Elt z_component(const UEA& U, const LeviDatum& levi, const Weight& lam,
                     const UEA::Elt& e, const RatVec& nu);

// Shifted annihilator generators of the Whittaker vector: x_a - eta(x_a)
// and z - chi(z) over the center generators of the eta Levi.
std::vector<UEA::Elt> annihilator_gens_whittaker(const UEA& U,
                                                 const LeviDatum& levi,
                                                 const EtaCharacter& eta,
                                                 const Weight& lam);

// Monomial basis of the W_eta coinvariant algebra on the Levi Cartan:
// h^E over the simple coroots of each diagram component, with exponents
// below the fundamental degrees of the component (A1 gives {1, h}, A2
// gives exponents below (2, 3)).  Exactly |W_eta| monomials.
std::vector<UEA::Elt> free_basis_bw(const UEA& U, const ParabolicData& par);

// Largest h exponent sum over the coinvariant basis: the smallest box
// height that holds every free class.
int coinvariant_h_depth(const UEA& U, const ParabolicData& par);

// Finite window on M(lambda, eta).  Elements are represented lazily as
// members of U(g) applied to the cyclic vector; reduce maps a representative
// to its canonical form on the free classes y^I h^E inside the box
// |I| <= dy, |J| <= dh.  The relation span is the image under red_x of the
// left ideal generated by the shifted center, closed by saturation under
// the simple Chevalley generators inside an enlarged working window; the
// construction certifies itself against the rank law
// |W_eta| * #{I : |I| <= dy} and grows the window margins until the law
// holds, so a successful constructor means canonical forms are exact.
class WhittakerBox {
 public:
  WhittakerBox(const UEA& U, const LeviDatum& levi, const EtaCharacter& eta,
               const Weight& lam, int dy, int dh);

  const Weight& lambda() const { return lam_; }
  const EtaCharacter& character() const { return eta_; }
  const LeviDatum& levi() const { return levi_; }
  int dy() const { return dy_; }
  int dh() const { return dh_; }

  // Free classes inside the box, ascending in the monomial order.
  const std::vector<Mono>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  // Canonical form of a representative.  Throws TruncationOverflowError
  // when the representative or its reduced form leaves the box.
  UEA::Elt reduce(const UEA::Elt& rep) const;

  // reduce(u * rep): the module action followed by normalization.
  UEA::Elt act(const UEA::Elt& u, const UEA::Elt& rep) const;

  bool is_zero(const UEA::Elt& rep) const;

 private:
  bool build(const std::vector<CenterElement>& gens, int my, int mh);

  const UEA* U_;
  LeviDatum levi_;
  EtaCharacter eta_;
  Weight lam_;
  int dy_ = 0;
  int dh_ = 0;
  std::vector<Mono> cols_;        // working window, descending order
  std::map<Mono, int> col_index_;
  SparseRref rr_;
  std::vector<Mono> basis_;       // free in-box columns, ascending
};

}  // namespace whit
