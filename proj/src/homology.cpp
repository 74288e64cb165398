#include "whit/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "whit/error.hpp"
#include "whit/linalg.hpp"
#include "whit/reps.hpp"

namespace whit {

namespace {

std::vector<std::pair<Weight, int>> weights_at(const UEA& U,
                                               const WeylGroup& W,
                                               const LeviDatum& levi,
                                               const EtaCharacter& eta,
                                               const Weight& lam, int d) {
  const RootSystem& rs = U.roots();
  int dh = coinvariant_h_depth(U, levi.w_eta);
  WhittakerBox box(U, levi, eta, lam, d, dh);
  const std::vector<Mono>& basis = box.basis();
  const int n = static_cast<int>(basis.size());
  std::map<Mono, int> idx;
  for (int i = 0; i < n; ++i) idx[basis[i]] = i;

  // Quotient columns ordered so the y-heavy classes take the pivots and
  // the h-only classes come out free.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    long ya = U.deg_y(basis[a]), yb = U.deg_y(basis[b]);
    if (ya != yb) return ya > yb;
    return basis[a] < basis[b];
  });
  std::vector<int> col_of(n);
  for (int k = 0; k < n; ++k) col_of[order[k]] = k;

  auto to_row = [&](const UEA::Elt& e) {
    SparseRref::SRow r;
    for (const auto& [m, c] : e) r.push_back({col_of[idx.at(m)], c});
    std::sort(r.begin(), r.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
  };

  SparseRref q;
  for (int a = 0; a < rs.npos(); ++a) {
    UEA::Elt ya = U.gen(U.slot_y(a));
    for (const Mono& b : basis) {
      if (U.deg_y(b) + 1 > d) continue;
      q.add_row(to_row(box.reduce(U.mul(ya, UEA::Elt{{b, Rat(1)}}))));
    }
  }

  std::vector<int> free_cols;
  for (int k = 0; k < n; ++k)
    if (!q.has_pivot(k)) free_cols.push_back(k);
  const int dim = static_cast<int>(free_cols.size());
  std::map<int, int> slot_of;
  for (int k = 0; k < dim; ++k) slot_of[free_cols[k]] = k;

  const int r = rs.rank();
  std::vector<Matrix> mats;
  for (int i = 0; i < r; ++i) {
    Matrix mi(dim, RatVec(dim, Rat(0)));
    for (int j = 0; j < dim; ++j) {
      const Mono& b = basis[order[free_cols[j]]];
      UEA::Elt img =
          box.reduce(U.mul(U.gen(U.slot_h(i)), UEA::Elt{{b, Rat(1)}}));
      for (const auto& [col, v] : q.reduce(to_row(img)))
        mi[slot_of.at(col)][j] = v;
    }
    mats.push_back(std::move(mi));
  }

  std::vector<std::vector<Rat>> candidates(r);
  for (int i = 0; i < r; ++i) {
    std::set<Rat> vals;
    for (int w : levi.w_eta.subgroup) vals.insert(W.dot(w, lam)[i]);
    candidates[i].assign(vals.begin(), vals.end());
  }
  JointEigen je = joint_eigen(mats, candidates);

  std::vector<std::pair<Weight, int>> out;
  for (const JointEigen::Space& sp : je.spaces)
    out.push_back({sp.value, static_cast<int>(sp.basis.size())});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

HomologyReport coinvariants(const UEA& U, const WeylGroup& W,
                            const LeviDatum& levi, const EtaCharacter& eta,
                            const Weight& lam, int depth) {
  if (depth < 0) throw ValidationError("coinvariants need depth >= 0");
  HomologyReport rep;
  rep.depth = depth;
  rep.weights = weights_at(U, W, levi, eta, lam, depth);
  rep.stabilized = weights_at(U, W, levi, eta, lam, depth + 1) == rep.weights;
  return rep;
}

WhittakerVectorReport whittaker_vectors(const UEA& U, const LeviDatum& levi,
                                        const EtaCharacter& eta,
                                        const TruncatedDual& dual) {
  const RootSystem& rs = U.roots();
  WhittakerVectorReport rep;
  const int n = static_cast<int>(dual.basis.size());
  if (n == 0) return rep;

  // One equation per window coordinate whose evaluation stays inside the
  // window: ((x_alpha - eta_alpha) phi)(m) = phi(y_alpha m) - eta_alpha
  // phi(m).
  Matrix rows;
  for (int i = 0; i < rs.rank(); ++i) {
    UEA::Elt ya = U.gen(U.slot_y(rs.pos_index_of_simple(i)));
    for (int j = 0; j < n; ++j) {
      VermaElement moved = act_verma(
          U, ya, VermaElement{dual.wlam, {{dual.basis[j], Rat(1)}}});
      RatVec row(n, Rat(0));
      bool inside = true;
      for (const auto& [m, c] : moved.coeffs) {
        auto it = dual.index.find(m);
        if (it == dual.index.end()) {
          inside = false;
          break;
        }
        row[it->second] += c;
      }
      if (!inside) continue;
      row[j] -= eta.values[i];
      rows.push_back(std::move(row));
    }
  }

  std::vector<RatVec> sols = nullspace(rows, n);
  rep.dimension = static_cast<int>(sols.size());
  if (rep.dimension == 0) return rep;

  bool first = true;
  RatVec common;
  bool homogeneous = true;
  for (const RatVec& s : sols)
    for (int j = 0; j < n; ++j) {
      if (s[j] == 0) continue;
      RatVec zw = dual_z_weight(U, levi, dual, dual.basis[j]);
      if (first) {
        common = zw;
        first = false;
      } else if (zw != common) {
        homogeneous = false;
      }
    }
  rep.z_homogeneous = homogeneous;
  if (homogeneous) rep.z_weight = common;
  return rep;
}

}  // namespace whit
