#pragma once

#include <map>
#include <string>
#include <vector>

#include "whit/rational.hpp"

namespace whit {

// Root combinatorics for the small finite types handled here: A1, A1xA1,
// A2, B2 (alpha1 long, alpha2 short), A3.
//
// Conventions, fixed once and used everywhere:
//  * cartan[i][j] = <alpha_j, alpha_i-vee> = alpha_j(h_i).
//  * Weights are exact rational coordinate vectors in the fundamental-weight
//    basis, so lambda[i] = lambda(h_i).
//  * Positive roots are sorted by height, and within a height level so that
//    roots supported on earlier simple roots come first; indices into that
//    list are the canonical root indices (y[k]/x[k] in the CLI grammar are
//    1-based positions in it).
//  * rho has every fundamental coordinate equal to 1.

using CartanMatrix = std::vector<IntVec>;
using Weight = RatVec;

struct Root {
  IntVec simple;   // coordinates in the simple-root basis
  IntVec fund;     // alpha(h_j) for each j
  IntVec coroot;   // alpha-vee expanded in {alpha_i-vee}; integral for these types
  long height = 0;
  long half_norm = 0;  // (alpha,alpha)/2 with short roots normalized to 1
};

class RootSystem {
 public:
  static RootSystem build(const std::string& type);

  const std::string& type() const { return type_; }
  int rank() const { return rank_; }
  int npos() const { return static_cast<int>(pos_.size()); }
  const std::vector<Root>& positives() const { return pos_; }
  const Root& pos(int a) const { return pos_.at(a); }
  const CartanMatrix& cartan() const { return cartan_; }
  const IntVec& symmetrizer() const { return sym_; }

  // Signed index of a vector in the simple-root basis: +(k+1) when it is
  // positive root k, -(k+1) when its negative is, 0 when it is not a root.
  int signed_index(const IntVec& simple_coords) const;

  Weight rho() const { return Weight(rank_, Rat(1)); }

  // lambda(h_alpha) for positive root a.
  Rat eval_on_coroot(const Weight& lam, int a) const;

  // (alpha_a, alpha_b) for positive roots, in the short-root=2 normalization.
  long pairing_pos(int a, int b) const;

  bool is_simple_pos(int a) const { return pos_[a].height == 1; }
  // Simple index of a height-one positive root.
  int simple_index_of(int a) const;
  // Root index of simple root i.
  int pos_index_of_simple(int i) const { return simple_to_pos_.at(i); }

  // True when every coordinate of lam_plus_rho pairs nonzero with every
  // positive coroot.
  bool regular(const Weight& lam_plus_rho) const;

 private:
  std::string type_;
  int rank_ = 0;
  CartanMatrix cartan_;
  IntVec sym_;  // d_i = (alpha_i, alpha_i)/2
  std::vector<Root> pos_;
  std::map<IntVec, int> index_;  // simple coords -> positive index
  std::vector<int> simple_to_pos_;
};

// Weyl group enumerated by breadth-first search over products of simple
// reflections.  Each element stores its canonical reduced word: the
// lexicographically least among its shortest words.
struct WeylElt {
  std::vector<int> word;          // simple indices, 0-based
  std::vector<IntVec> mat;        // action on fundamental coords, row-major
  int length() const { return static_cast<int>(word.size()); }
};

class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs);

  int size() const { return static_cast<int>(elts_.size()); }
  const WeylElt& elt(int w) const { return elts_.at(w); }
  int identity() const { return 0; }
  int longest() const { return longest_; }
  int simple(int i) const { return simple_elt_.at(i); }

  int mult(int a, int b) const;  // index of elt(a)*elt(b)
  int inverse(int a) const;
  int from_word(const std::vector<int>& word) const;
  int find(const std::vector<IntVec>& mat) const;

  Weight act(int w, const Weight& lam) const;
  // w . lambda = w(lambda + rho) - rho
  Weight dot(int w, const Weight& lam) const;

  const RootSystem& roots() const { return *rs_; }

 private:
  const RootSystem* rs_;
  std::vector<WeylElt> elts_;
  std::map<std::vector<IntVec>, int> lookup_;
  std::vector<int> simple_elt_;
  int longest_ = 0;
};

// Standard parabolic data for a subset Theta of simple indices: the subgroup
// W_Theta, and the left cosets W_Theta * w with their unique shortest and
// longest members.
struct ParabolicCoset {
  std::vector<int> members;  // element indices, sorted by (length, word)
  int shortest = 0;
  int longest = 0;
};

struct ParabolicData {
  std::vector<int> theta;      // sorted simple indices
  std::vector<int> subgroup;   // element indices of W_Theta, sorted by (length, word)
  int longest_sub = 0;         // w^Theta
  std::vector<ParabolicCoset> cosets;
};

ParabolicData parabolic(const RootSystem& rs, const WeylGroup& W,
                        std::vector<int> theta);

// Positive roots whose support lies inside theta (the Levi's positive roots).
std::vector<int> positive_roots_supported_on(const RootSystem& rs,
                                             const std::vector<int>& theta);

// The unique mu in the W_Theta dot-orbit of lambda with <mu + rho, alpha-vee>
// strictly positive for every alpha in the Levi's positive roots.  Requires
// lambda + rho regular for the full system; throws SingularWeightError
// otherwise.
Weight dominant_representative(const RootSystem& rs, const WeylGroup& W,
                               const ParabolicData& par, const Weight& lam);

std::string weight_str(const Weight& w);
std::string word_str(const std::vector<int>& word);  // "e" or "s1s2..."

}  // namespace whit
