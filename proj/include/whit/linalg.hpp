#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "whit/rational.hpp"

namespace whit {

// Dense exact matrices, stored by rows.
using Matrix = std::vector<RatVec>;

Matrix mat_identity(int d);
Matrix mat_mul(const Matrix& a, const Matrix& b);
RatVec mat_vec(const Matrix& a, const RatVec& v);
Rat det(Matrix m);

// Reduced row echelon form: pivot entries 1, pivot columns cleared above and
// below, zero rows dropped, pivot columns strictly increasing.  The result
// is the unique RREF of the row space, so it doubles as a canonical form.
struct Rref {
  Matrix rows;
  std::vector<int> pivots;
};
Rref rref(Matrix m);

// Canonical nullspace basis of the equation system m x = 0: one vector per
// free column in increasing column order, with a 1 in its free slot.
std::vector<RatVec> nullspace(const Matrix& m, int ncols);

bool same_row_space(const Matrix& a, const Matrix& b);

// Coordinates of target in the span of the given vectors, if it lies there.
std::optional<RatVec> solve_in_span(const std::vector<RatVec>& span,
                                    const RatVec& target);

// Incremental exact row reduction over integer-indexed columns in ascending
// order.  The basis is kept fully back-substituted, so at any moment it is
// the unique RREF of every row added so far; insertion order cannot change
// the final state.
class SparseRref {
 public:
  using SRow = std::vector<std::pair<int, Rat>>;  // sorted by column index

  // Reduce r against the basis; a surviving remainder becomes a new pivot
  // row.  Returns true when the rank grew.
  bool add_row(SRow r);
  SRow reduce(SRow r) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  bool has_pivot(int col) const { return pivot_row_.count(col) != 0; }
  // Pivot column -> basis row, ascending by pivot.
  const std::map<int, int>& pivot_rows() const { return pivot_row_; }
  const SRow& row(int k) const { return rows_[k]; }

 private:
  std::vector<SRow> rows_;
  std::map<int, int> pivot_row_;
};

// Coefficients c_0..c_d of det(tI - M), ascending, computed by the
// Faddeev-LeVerrier recurrence.
RatVec char_poly(const Matrix& m);

Rat poly_eval(const RatVec& coeffs, const Rat& t);
// The unique polynomial of degree < #points through the given (t, value)
// pairs, as ascending coefficients.  Points must have distinct t.
RatVec poly_interpolate(const std::vector<std::pair<Rat, Rat>>& points);

// Multiplicity of each candidate as a root, found by repeated exact
// synthetic division; residual_degree == 0 means the candidates account for
// the full factorization.
struct LinearFactorization {
  std::vector<std::pair<Rat, int>> multiplicities;  // candidate order kept
  int residual_degree = 0;
};
LinearFactorization factor_linear(RatVec poly,
                                  const std::vector<Rat>& candidates);

// Simultaneous eigenspace decomposition of commuting matrices, refined one
// matrix at a time.  candidates[i] lists the allowed eigenvalues of mats[i];
// if at any stage the restriction fails to split into those eigenspaces the
// decomposition does not exist over Q and SingularWeightError is thrown.
struct JointEigen {
  struct Space {
    RatVec value;                // one eigenvalue per matrix
    std::vector<RatVec> basis;   // ambient coordinates
  };
  std::vector<Space> spaces;
};
JointEigen joint_eigen(const std::vector<Matrix>& mats,
                       const std::vector<std::vector<Rat>>& candidates);

}  // namespace whit
