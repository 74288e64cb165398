#pragma once

#include <map>
#include <utility>
#include <vector>

#include "whit/rootdata.hpp"

namespace whit {

// One term c * g of a Lie algebra element written in the Chevalley generator
// basis.  sroot != 0 names the root vector x_sroot, with sroot = +(a+1) for
// positive root a and -(a+1) for its negative; sroot == 0 names the Cartan
// element h_hidx.
struct GenTerm {
  long coef = 0;
  int sroot = 0;
  int hidx = 0;
};
using GenElt = std::vector<GenTerm>;

// Chevalley basis {x_u, h_i} with integer structure constants
// [x_u, x_v] = N(u,v) x_{u+v}.  Signs are fixed by making every extraspecial
// pair positive (the decomposition of each composite root whose first member
// is least in the canonical root order); every other constant follows from
// antisymmetry, the flip under negating both arguments, and the rotation rule
// for zero-sum triples.  The constructor derives the table and then verifies
// it: every |N(u,v)| must equal one plus the length of the descending root
// string, and the Jacobi identity must hold on every generator triple.  Any
// failure is a SignInconsistencyError.
class ChevalleyBasis {
 public:
  explicit ChevalleyBasis(const RootSystem& rs);

  const RootSystem& roots() const { return *rs_; }

  // N(u,v) for signed roots u, v whose sum is again a root.
  long n_const(int u, int v) const;

  // [x_u, x_v]: N(u,v) x_{u+v} when u+v is a root, the coroot of u in the
  // h basis when v == -u, zero otherwise.
  GenElt bracket_roots(int u, int v) const;
  // [h_i, x_v] = v(h_i) x_v.
  GenElt bracket_h_root(int i, int v) const;
  // Bracket of two generators handed over as unit GenTerms.
  GenElt bracket(const GenTerm& a, const GenTerm& b) const;

  // Negative control for the verifier: copies the table, flips one derived
  // entry without repropagating, and reports whether verification rejects the
  // corrupted table.  Requires a type with at least one composite root.
  static bool corrupted_table_rejected(const RootSystem& rs);

 private:
  ChevalleyBasis() = default;
  void derive();
  void verify() const;
  long string_down(int u, int v) const;  // #{k >= 1 : v - k u is a root}
  long norm(int u) const;                // (|u|, |u|)

  const RootSystem* rs_ = nullptr;
  std::map<std::pair<int, int>, long> table_;  // (u, v) -> N(u,v), all pairs
};

}  // namespace whit
