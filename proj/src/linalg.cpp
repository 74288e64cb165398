#include "whit/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "whit/error.hpp"

namespace whit {

namespace {

int ncols_of(const Matrix& m) {
  return m.empty() ? 0 : static_cast<int>(m[0].size());
}

Rat trace(const Matrix& m) {
  Rat t(0);
  for (size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

int poly_degree(const RatVec& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d > 0 && p[d] == 0) --d;
  return d;
}

// Divide p by (t - c), assuming c is a root; ascending coefficients.
RatVec synthetic_divide(const RatVec& p, const Rat& c) {
  int d = poly_degree(p);
  RatVec q(d, Rat(0));
  Rat carry(0);
  for (int k = d; k >= 1; --k) {
    q[k - 1] = p[k] + carry;
    carry = q[k - 1] * c;
  }
  return q;
}

}  // namespace

Matrix mat_identity(int d) {
  Matrix m(d, RatVec(d, Rat(0)));
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  int nr = static_cast<int>(a.size());
  int mid = ncols_of(a);
  int nc = ncols_of(b);
  Matrix out(nr, RatVec(nc, Rat(0)));
  for (int i = 0; i < nr; ++i)
    for (int k = 0; k < mid; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < nc; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

RatVec mat_vec(const Matrix& a, const RatVec& v) {
  RatVec out(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

Rat det(Matrix m) {
  int d = static_cast<int>(m.size());
  Rat out(1);
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      out = -out;
    }
    out *= m[col][col];
    for (int r = col + 1; r < d; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (int j = col; j < d; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return out;
}

Rref rref(Matrix m) {
  int nr = static_cast<int>(m.size());
  int nc = ncols_of(m);
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < nc && row < nr; ++col) {
    int piv = -1;
    for (int r = row; r < nr; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    Rat lead = m[row][col];
    for (int j = col; j < nc; ++j) m[row][j] /= lead;
    for (int r = 0; r < nr; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int j = col; j < nc; ++j) m[r][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return {std::move(m), std::move(pivots)};
}

std::vector<RatVec> nullspace(const Matrix& m, int ncols) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<RatVec> out;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(ncols, Rat(0));
    v[f] = 1;
    for (size_t k = 0; k < r.rows.size(); ++k) v[r.pivots[k]] = -r.rows[k][f];
    out.push_back(std::move(v));
  }
  return out;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
  Rref ra = rref(a);
  Rref rb = rref(b);
  return ra.pivots == rb.pivots && ra.rows == rb.rows;
}

std::optional<RatVec> solve_in_span(const std::vector<RatVec>& span,
                                    const RatVec& target) {
  int k = static_cast<int>(span.size());
  int dim = static_cast<int>(target.size());
  Matrix aug(dim, RatVec(k + 1, Rat(0)));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < k; ++j) aug[i][j] = span[j][i];
    aug[i][k] = target[i];
  }
  Rref r = rref(aug);
  RatVec coords(k, Rat(0));
  for (size_t row = 0; row < r.rows.size(); ++row) {
    if (r.pivots[row] == k) return std::nullopt;
    coords[r.pivots[row]] = r.rows[row][k];
  }
  // free coordinates stay zero; recheck in case the span is dependent
  RatVec built(dim, Rat(0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < dim; ++i) built[i] += coords[j] * span[j][i];
  if (built != target) return std::nullopt;
  return coords;
}

SparseRref::SRow SparseRref::reduce(SRow r) const {
  bool changed = true;
  while (changed && !r.empty()) {
    changed = false;
    for (size_t k = 0; k < r.size(); ++k) {
      auto it = pivot_row_.find(r[k].first);
      if (it == pivot_row_.end()) continue;
      const SRow& basis = rows_[it->second];
      Rat f = r[k].second;
      SRow next;
      size_t a = 0, b = 0;
      while (a < r.size() || b < basis.size()) {
        if (b == basis.size() || (a < r.size() && r[a].first < basis[b].first)) {
          next.push_back(r[a++]);
        } else if (a == r.size() || basis[b].first < r[a].first) {
          next.push_back({basis[b].first, -f * basis[b].second});
          ++b;
        } else {
          Rat v = r[a].second - f * basis[b].second;
          if (v != 0) next.push_back({r[a].first, v});
          ++a;
          ++b;
        }
      }
      r = std::move(next);
      changed = true;
      break;
    }
  }
  return r;
}

bool SparseRref::add_row(SRow r) {
  r = reduce(std::move(r));
  if (r.empty()) return false;
  Rat lead = r[0].second;
  for (auto& [col, v] : r) v /= lead;
  int piv = r[0].first;
  // back-substitute the new pivot column out of the existing basis
  for (auto& basis : rows_) {
    Rat f(0);
    for (const auto& [col, v] : basis)
      if (col == piv) {
        f = v;
        break;
      }
    if (f == 0) continue;
    SRow next;
    size_t a = 0, b = 0;
    while (a < basis.size() || b < r.size()) {
      if (b == r.size() ||
          (a < basis.size() && basis[a].first < r[b].first)) {
        next.push_back(basis[a++]);
      } else if (a == basis.size() || r[b].first < basis[a].first) {
        next.push_back({r[b].first, -f * r[b].second});
        ++b;
      } else {
        Rat v = basis[a].second - f * r[b].second;
        if (v != 0) next.push_back({basis[a].first, v});
        ++a;
        ++b;
      }
    }
    basis = std::move(next);
  }
  pivot_row_[piv] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

RatVec char_poly(const Matrix& m) {
  int d = static_cast<int>(m.size());
  RatVec c(d + 1, Rat(0));
  c[d] = 1;
  if (d == 0) return c;
  Matrix n = m;
  c[d - 1] = -trace(n);
  for (int k = 2; k <= d; ++k) {
    for (int i = 0; i < d; ++i) n[i][i] += c[d - k + 1];
    n = mat_mul(m, n);
    c[d - k] = -trace(n) / k;
  }
  return c;
}

Rat poly_eval(const RatVec& coeffs, const Rat& t) {
  Rat out(0);
  for (size_t k = coeffs.size(); k-- > 0;) out = out * t + coeffs[k];
  return out;
}

RatVec poly_interpolate(const std::vector<std::pair<Rat, Rat>>& points) {
  int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw ValidationError("interpolation points must have distinct t");
  // full product prod (t - t_j), ascending
  RatVec prod{Rat(1)};
  for (const auto& [t, y] : points) {
    RatVec next(prod.size() + 1, Rat(0));
    for (size_t k = 0; k < prod.size(); ++k) {
      next[k + 1] += prod[k];
      next[k] -= t * prod[k];
    }
    prod = std::move(next);
  }
  RatVec out(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    RatVec li = synthetic_divide(prod, points[i].first);
    Rat denom = poly_eval(li, points[i].first);
    Rat scale = points[i].second / denom;
    for (int k = 0; k < n; ++k) out[k] += scale * li[k];
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

LinearFactorization factor_linear(RatVec poly,
                                  const std::vector<Rat>& candidates) {
  LinearFactorization out;
  for (const Rat& c : candidates) {
    int mult = 0;
    while (poly_degree(poly) >= 1 && poly_eval(poly, c) == 0) {
      poly = synthetic_divide(poly, c);
      ++mult;
    }
    out.multiplicities.push_back({c, mult});
  }
  out.residual_degree = poly_degree(poly);
  return out;
}

JointEigen joint_eigen(const std::vector<Matrix>& mats,
                       const std::vector<std::vector<Rat>>& candidates) {
  if (mats.empty()) throw ValidationError("joint_eigen needs matrices");
  int d = static_cast<int>(mats[0].size());
  JointEigen out;
  {
    JointEigen::Space whole;
    for (int i = 0; i < d; ++i) {
      RatVec e(d, Rat(0));
      e[i] = 1;
      whole.basis.push_back(std::move(e));
    }
    if (d > 0) out.spaces.push_back(std::move(whole));
  }
  for (size_t mi = 0; mi < mats.size(); ++mi) {
    const Matrix& h = mats[mi];
    std::vector<JointEigen::Space> next;
    for (JointEigen::Space& sp : out.spaces) {
      int k = static_cast<int>(sp.basis.size());
      // restriction of h to the space, columns in basis coordinates
      Matrix r(k, RatVec(k, Rat(0)));
      for (int j = 0; j < k; ++j) {
        auto coords = solve_in_span(sp.basis, mat_vec(h, sp.basis[j]));
        if (!coords)
          throw ValidationError(
              "joint_eigen: matrices do not commute on the current space");
        for (int i = 0; i < k; ++i) r[i][j] = (*coords)[i];
      }
      LinearFactorization f = factor_linear(char_poly(r), candidates[mi]);
      if (f.residual_degree != 0)
        throw SingularWeightError(
            "eigenvalue outside the candidate set; decomposition is not "
            "defined over the rationals");
      int covered = 0;
      for (const auto& [val, mult] : f.multiplicities) {
        if (mult == 0) continue;
        Matrix shifted = r;
        for (int i = 0; i < k; ++i) shifted[i][i] -= val;
        std::vector<RatVec> kern = nullspace(shifted, k);
        if (static_cast<int>(kern.size()) != mult)
          throw SingularWeightError(
              "restriction is not diagonalizable; eigenspace is smaller "
              "than the root multiplicity");
        JointEigen::Space child;
        child.value = sp.value;
        child.value.push_back(val);
        for (const RatVec& kc : kern) {
          RatVec lifted(d, Rat(0));
          for (int j = 0; j < k; ++j)
            for (int i = 0; i < d; ++i) lifted[i] += kc[j] * sp.basis[j][i];
          child.basis.push_back(std::move(lifted));
        }
        covered += static_cast<int>(kern.size());
        next.push_back(std::move(child));
      }
      if (covered != k)
        throw SingularWeightError("joint eigenspaces do not fill the space");
    }
    out.spaces = std::move(next);
  }
  std::sort(out.spaces.begin(), out.spaces.end(),
            [](const JointEigen::Space& a, const JointEigen::Space& b) {
              return a.value < b.value;
            });
  return out;
}

}  // namespace whit
