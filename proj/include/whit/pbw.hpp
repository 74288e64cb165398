#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "whit/chevalley.hpp"
#include "whit/rational.hpp"
#include "whit/rootdata.hpp"

namespace whit {

// Exponent vector of a normally ordered monomial y^I h^J x^K.  Slots run
// left to right in the written order of the factors: slot n-1-a holds the
// exponent of y_a (higher roots stand further left), slot n+i holds h_i,
// slot n+r+a holds x_a, with n = npos and r = rank.  Unused high slots stay
// zero, so the array's lexicographic order is a fixed monomial order.
using Mono = std::array<std::uint8_t, 16>;

std::string mono_str(const Mono& m, const RootSystem& rs);

// U(g) in the PBW basis over the Chevalley generators.  Elements are finite
// rational combinations of normal monomials; multiplication straightens out
// of order products with the generator swap table.  The table is built once
// in the constructor, so a const UEA is safe to share across threads.
class UEA {
 public:
  UEA(const RootSystem& rs, const ChevalleyBasis& cb);

  using Elt = std::map<Mono, Rat>;

  const RootSystem& roots() const { return *rs_; }
  const ChevalleyBasis& chevalley() const { return *cb_; }

  int nslots() const { return 2 * n_ + r_; }
  int slot_y(int a) const { return n_ - 1 - a; }
  int slot_h(int i) const { return n_ + i; }
  int slot_x(int a) const { return n_ + r_ + a; }
  bool is_y_slot(int s) const { return s < n_; }
  bool is_h_slot(int s) const { return s >= n_ && s < n_ + r_; }
  bool is_x_slot(int s) const { return s >= n_ + r_; }
  // Positive root index of a y or x slot.
  int root_of_slot(int s) const { return s < n_ ? n_ - 1 - s : s - n_ - r_; }

  Mono one() const { return Mono{}; }
  Elt scalar(const Rat& c) const;
  Elt gen(int slot) const;

  Elt add(Elt a, const Elt& b) const;
  Elt scale(Elt a, const Rat& c) const;
  Elt mul_gen(const Elt& e, int slot) const;  // e * generator
  Elt mul(const Elt& a, const Elt& b) const;

  // Transpose antiautomorphism: fixes h, swaps x_a with y_a.  On a normal
  // monomial it just exchanges the I and K blocks.
  Elt tau(const Elt& e) const;
  Mono tau_mono(const Mono& m) const;

  // Adjoint weight of a monomial, sum over (K_a - I_a) alpha_a, in
  // simple-root coordinates.
  IntVec ad_weight(const Mono& m) const;
  long deg_y(const Mono& m) const;
  long deg_x(const Mono& m) const;
  long deg_total(const Mono& m) const;

  std::string str(const Elt& e) const;

  // Term count guard for runaway products; WHIT_TERM_CAP overrides.
  std::size_t term_cap() const { return term_cap_; }
  void set_term_cap(std::size_t cap) { term_cap_ = cap; }

 private:
  void mono_times_gen(Elt& out, const Mono& m, const Rat& c, int s) const;
  void add_term(Elt& out, const Mono& m, const Rat& c) const;

  const RootSystem* rs_;
  const ChevalleyBasis* cb_;
  int n_ = 0;
  int r_ = 0;
  std::size_t term_cap_ = 0;
  // swap_[p][q] for p > q: [g_p, g_q] as (slot, coefficient) pairs.
  std::vector<std::vector<std::vector<std::pair<int, long>>>> swap_;
};

}  // namespace whit
