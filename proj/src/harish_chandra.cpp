#include "whit/harish_chandra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "whit/error.hpp"
#include "whit/linalg.hpp"

namespace whit {

namespace {

Matrix small_inverse(const Matrix& m) {
  int d = static_cast<int>(m.size());
  Matrix aug(d, RatVec(2 * d, Rat(0)));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) aug[i][j] = m[i][j];
    aug[i][d + i] = 1;
  }
  Rref r = rref(aug);
  if (static_cast<int>(r.rows.size()) < d)
    throw ValidationError("singular pairing matrix");
  Matrix inv(d, RatVec(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) inv[i][j] = r.rows[i][d + j];
  return inv;
}

std::vector<std::vector<int>> diagram_components(const RootSystem& rs,
                                                 const std::vector<int>& pi) {
  std::vector<std::vector<int>> out;
  std::set<int> left(pi.begin(), pi.end());
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (size_t k = 0; k < comp.size(); ++k)
      for (auto it = left.begin(); it != left.end();)
        if (rs.cartan()[comp[k]][*it] != 0) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Scale to integer coefficients with content one and a positive leading
// coefficient.
void normalize_integer(UEA::Elt& e) {
  if (e.empty()) return;
  mpz_class l(1);
  for (const auto& [m, c] : e) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                                       c.get_den().get_mpz_t());
  mpz_class g(0);
  for (auto& [m, c] : e) {
    c *= Rat(l);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
  }
  Rat scale = Rat(1) / Rat(g);
  if (e.begin()->second < 0) scale = -scale;
  for (auto& [m, c] : e) c *= scale;
}

int element_degree(const UEA& U, const UEA::Elt& e) {
  long d = 0;
  for (const auto& [m, c] : e) d = std::max(d, U.deg_total(m));
  return static_cast<int>(d);
}

UEA::Elt quad_invariant(const UEA& U, const std::vector<int>& comp) {
  const RootSystem& rs = U.roots();
  int k = static_cast<int>(comp.size());
  // pairing of the component coroots
  Matrix m(k, RatVec(k, Rat(0)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      long p = rs.pairing_pos(rs.pos_index_of_simple(comp[i]),
                              rs.pos_index_of_simple(comp[j]));
      m[i][j] = rat_of(p, rs.symmetrizer()[comp[i]] *
                              rs.symmetrizer()[comp[j]]);
    }
  Matrix minv = small_inverse(m);
  UEA::Elt e;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (minv[i][j] == 0) continue;
      Mono mono{};
      mono[U.slot_h(comp[i])]++;
      mono[U.slot_h(comp[j])]++;
      e[mono] += minv[i][j];
    }
  for (int a : positive_roots_supported_on(rs, comp)) {
    Rat d(rs.pos(a).half_norm);
    Mono yx{};
    yx[U.slot_y(a)] = 1;
    yx[U.slot_x(a)] = 1;
    e[yx] += 2 * d;
    for (int i = 0; i < rs.rank(); ++i) {
      if (rs.pos(a).coroot[i] == 0) continue;
      Mono h{};
      h[U.slot_h(i)] = 1;
      e[h] += d * Rat(rs.pos(a).coroot[i]);
    }
  }
  for (auto it = e.begin(); it != e.end();)
    it = (it->second == 0) ? e.erase(it) : std::next(it);
  normalize_integer(e);
  return e;
}

// Cubic invariant of an A2 component, via the trace form on the defining
// three-dimensional representation: sum over i,j,k of F_ij F_jk F_ki with
// the diagonal F's taken traceless.
UEA::Elt cubic_invariant(const UEA& U, const std::vector<int>& comp) {
  const RootSystem& rs = U.roots();
  int s = comp[0], t = comp[1];
  int a1 = rs.pos_index_of_simple(s);
  int a2 = rs.pos_index_of_simple(t);
  IntVec sum = rs.pos(a1).simple;
  for (int i = 0; i < rs.rank(); ++i) sum[i] += rs.pos(a2).simple[i];
  int a12 = rs.signed_index(sum) - 1;

  auto hcomb = [&](long cs, long ct) {
    UEA::Elt e;
    Mono ms{};
    ms[U.slot_h(s)] = 1;
    e[ms] = rat_of(cs, 3);
    Mono mt{};
    mt[U.slot_h(t)] = 1;
    e[mt] += rat_of(ct, 3);
    for (auto it = e.begin(); it != e.end();)
      it = (it->second == 0) ? e.erase(it) : std::next(it);
    return e;
  };
  std::vector<std::vector<UEA::Elt>> F(3, std::vector<UEA::Elt>(3));
  F[0][1] = U.gen(U.slot_x(a1));
  F[1][2] = U.gen(U.slot_x(a2));
  F[0][2] = U.gen(U.slot_x(a12));
  F[1][0] = U.gen(U.slot_y(a1));
  F[2][1] = U.gen(U.slot_y(a2));
  F[2][0] = U.gen(U.slot_y(a12));
  F[0][0] = hcomb(2, 1);
  F[1][1] = hcomb(-1, 1);
  F[2][2] = hcomb(-1, -2);

  UEA::Elt c3;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        c3 = U.add(std::move(c3), U.mul(F[i][j], U.mul(F[j][k], F[k][i])));
  normalize_integer(c3);
  return c3;
}

void check_central(const UEA& U, const LeviDatum& levi, const UEA::Elt& e) {
  auto commutes = [&](int slot) {
    UEA::Elt g = U.gen(slot);
    return U.add(U.mul(g, e), U.scale(U.mul(e, g), -1)).empty();
  };
  for (int i = 0; i < U.roots().rank(); ++i)
    if (!commutes(U.slot_h(i)))
      throw TheoremCheckError("center candidate fails to commute with h");
  for (int a : levi.sigma_eta_plus)
    if (!commutes(U.slot_x(a)) || !commutes(U.slot_y(a)))
      throw TheoremCheckError(
          "center candidate fails to commute with a Levi root vector");
}

IntVec h_exponents(const UEA& U, const Mono& m) {
  IntVec j(U.roots().rank(), 0);
  for (int i = 0; i < U.roots().rank(); ++i) j[i] = m[U.slot_h(i)];
  return j;
}

}  // namespace

bool is_h_only(const UEA& U, const UEA::Elt& e) {
  for (const auto& [m, c] : e)
    for (int s = 0; s < U.nslots(); ++s)
      if (m[s] != 0 && !U.is_h_slot(s)) return false;
  return true;
}

Rat eval_h(const UEA& U, const UEA::Elt& e, const Weight& lam) {
  if (!is_h_only(U, e))
    throw ValidationError("evaluation requires an element of U(h)");
  Rat out(0);
  for (const auto& [m, c] : e) {
    Rat term = c;
    for (int i = 0; i < U.roots().rank(); ++i)
      for (int p = 0; p < m[U.slot_h(i)]; ++p) term *= lam[i];
    out += term;
  }
  return out;
}

UEA::Elt pi_eta_project(const UEA& U, const EtaCharacter& eta,
                        const UEA::Elt& e) {
  const RootSystem& rs = U.roots();
  UEA::Elt out;
  for (const auto& [m, c] : e) {
    if (U.deg_y(m) != 0) continue;
    Rat f = c;
    for (int a = 0; a < rs.npos() && f != 0; ++a)
      f *= eta_power(rs, eta, a, m[U.slot_x(a)]);
    if (f == 0) continue;
    Mono h{};
    for (int i = 0; i < rs.rank(); ++i) h[U.slot_h(i)] = m[U.slot_h(i)];
    out[h] += f;
    if (out[h] == 0) out.erase(h);
  }
  return out;
}

UEA::Elt pi_zero(const UEA& U, const UEA::Elt& e) {
  EtaCharacter zero;
  zero.values.assign(U.roots().rank(), Rat(0));
  return pi_eta_project(U, zero, e);
}

std::vector<CenterElement> center_generators(const UEA& U,
                                             const LeviDatum& levi) {
  const RootSystem& rs = U.roots();
  std::vector<CenterElement> out;
  for (const IntVec& zb : levi.z_basis) {
    UEA::Elt e;
    for (int i = 0; i < rs.rank(); ++i) {
      if (zb[i] == 0) continue;
      Mono m{};
      m[U.slot_h(i)] = 1;
      e[m] = zb[i];
    }
    out.push_back({std::move(e), 1, levi.pi_eta});
  }
  for (const std::vector<int>& comp : diagram_components(rs, levi.pi_eta)) {
    bool a2_type = comp.size() == 2 &&
                   rs.cartan()[comp[0]][comp[1]] == -1 &&
                   rs.cartan()[comp[1]][comp[0]] == -1;
    if (comp.size() > 1 && !a2_type) {
      std::ostringstream os;
      os << "no center generators implemented for a component of "
         << comp.size() << " simple roots of this shape in " << rs.type();
      throw UnsupportedScopeError(os.str());
    }
    UEA::Elt quad = quad_invariant(U, comp);
    out.push_back({quad, element_degree(U, quad), levi.pi_eta});
    if (a2_type) {
      UEA::Elt cubic = cubic_invariant(U, comp);
      out.push_back({cubic, element_degree(U, cubic), levi.pi_eta});
    }
  }
  for (const CenterElement& z : out) check_central(U, levi, z.element);
  return out;
}

Rat chi_eval(const UEA& U, const Weight& lam, const CenterElement& z) {
  return eval_h(U, pi_zero(U, z.element), lam);
}

std::vector<std::pair<Weight, int>> v_lambda(
    const UEA& U, const WeylGroup& W, const LeviDatum& scope,
    const Weight& lam, const std::vector<CenterElement>& gens) {
  const RootSystem& rs = U.roots();
  int r = rs.rank();
  Weight lr = lam;
  for (int i = 0; i < r; ++i) lr[i] += 1;
  for (int a : scope.sigma_eta_plus)
    if (rs.eval_on_coroot(lr, a) == 0)
      throw SingularWeightError(
          "lambda + rho is singular for the scope; the quotient weights "
          "are not distinct");

  // shifted pure-h generator polynomials as exponent-vector maps
  struct HPoly {
    std::map<IntVec, Rat> terms;
    int deg = 0;
  };
  std::vector<HPoly> qs;
  int maxdeg = 1;
  for (const CenterElement& z : gens) {
    UEA::Elt p = pi_zero(U, z.element);
    Rat chi = eval_h(U, p, lam);
    HPoly q;
    for (const auto& [m, c] : p) {
      IntVec j = h_exponents(U, m);
      q.terms[j] += c;
      q.deg = std::max(q.deg, static_cast<int>(U.deg_total(m)));
    }
    q.terms[IntVec(r, 0)] -= chi;
    for (auto it = q.terms.begin(); it != q.terms.end();)
      it = (it->second == 0) ? q.terms.erase(it) : std::next(it);
    if (q.terms.empty())
      throw ValidationError("a center generator reduced to a constant");
    maxdeg = std::max(maxdeg, q.deg);
    qs.push_back(std::move(q));
  }

  int nsub = static_cast<int>(scope.w_eta.subgroup.size());
  int cap = nsub * maxdeg + 2;

  struct Engine {
    std::vector<IntVec> monos;     // column order: degree then lex, descending
    std::map<IntVec, int> col;
    SparseRref rr;
    std::set<IntVec> free_set;
  };
  auto build = [&](int D) {
    Engine eng;
    IntVec cur(r, 0);
    std::function<void(int, int)> emit = [&](int pos, int used) {
      if (pos == r) {
        eng.monos.push_back(cur);
        return;
      }
      for (int v = 0; v + used <= D; ++v) {
        cur[pos] = v;
        emit(pos + 1, used + v);
      }
      cur[pos] = 0;
    };
    emit(0, 0);
    std::sort(eng.monos.begin(), eng.monos.end(),
              [](const IntVec& a, const IntVec& b) {
                long da = 0, db = 0;
                for (long v : a) da += v;
                for (long v : b) db += v;
                if (da != db) return da > db;
                return a > b;
              });
    for (size_t k = 0; k < eng.monos.size(); ++k) eng.col[eng.monos[k]] = k;
    for (const HPoly& q : qs) {
      for (const IntVec& shift : eng.monos) {
        long sdeg = 0;
        for (long v : shift) sdeg += v;
        if (sdeg + q.deg > D) continue;
        SparseRref::SRow row;
        for (const auto& [j, c] : q.terms) {
          IntVec tgt = j;
          for (int i = 0; i < r; ++i) tgt[i] += shift[i];
          row.push_back({eng.col.at(tgt), c});
        }
        std::sort(row.begin(), row.end());
        eng.rr.add_row(std::move(row));
      }
    }
    for (size_t k = 0; k < eng.monos.size(); ++k)
      if (!eng.rr.has_pivot(static_cast<int>(k)))
        eng.free_set.insert(eng.monos[k]);
    return eng;
  };

  Engine eng = build(maxdeg);
  bool stable = false;
  for (int D = maxdeg + 1; D <= cap; ++D) {
    Engine next = build(D);
    if (next.free_set == eng.free_set) {
      eng = std::move(next);
      stable = true;
      break;
    }
    eng = std::move(next);
  }
  if (!stable)
    throw ResourceLimitError("quotient basis did not stabilize in degree");
  int dim = static_cast<int>(eng.free_set.size());
  if (dim != nsub) {
    std::ostringstream os;
    os << "quotient dimension " << dim << " does not match the scope Weyl "
       << "order " << nsub;
    throw TheoremCheckError(os.str());
  }

  // standard monomials, ascending by degree then lex
  std::vector<IntVec> basis(eng.free_set.begin(), eng.free_set.end());
  std::sort(basis.begin(), basis.end(),
            [](const IntVec& a, const IntVec& b) {
              long da = 0, db = 0;
              for (long v : a) da += v;
              for (long v : b) db += v;
              if (da != db) return da < db;
              return a < b;
            });
  std::map<int, int> row_of_col;
  for (int k = 0; k < dim; ++k) row_of_col[eng.col.at(basis[k])] = k;

  std::vector<Matrix> mats;
  for (int i = 0; i < r; ++i) {
    Matrix mi(dim, RatVec(dim, Rat(0)));
    for (int j = 0; j < dim; ++j) {
      IntVec tgt = basis[j];
      tgt[i] += 1;
      auto it = eng.col.find(tgt);
      if (it == eng.col.end())
        throw ResourceLimitError("quotient action left the truncation");
      for (const auto& [colidx, v] :
           eng.rr.reduce({{it->second, Rat(1)}}))
        mi[row_of_col.at(colidx)][j] = v;
    }
    mats.push_back(std::move(mi));
  }

  std::vector<std::vector<Rat>> candidates(r);
  for (int i = 0; i < r; ++i) {
    std::set<Rat> vals;
    for (int w : scope.w_eta.subgroup) vals.insert(W.dot(w, lam)[i]);
    candidates[i].assign(vals.begin(), vals.end());
  }
  JointEigen je = joint_eigen(mats, candidates);

  std::vector<std::pair<Weight, int>> out;
  for (const JointEigen::Space& sp : je.spaces)
    out.push_back({sp.value, static_cast<int>(sp.basis.size())});
  return out;
}

}  // namespace whit
