#include "whit/costandard.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "whit/error.hpp"
#include "whit/homology.hpp"
#include "whit/linalg.hpp"
#include "whit/reps.hpp"

namespace whit {

namespace {

// Connected components of the eta support in the Dynkin diagram, each with
// the positive roots it carries.
std::vector<std::vector<int>> levi_components(const RootSystem& rs,
                                              const LeviDatum& levi) {
  std::vector<std::vector<int>> comps;
  std::vector<int> seen(rs.rank(), 0);
  for (int s : levi.pi_eta) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      comp.push_back(t);
      for (int u : levi.pi_eta)
        if (!seen[u] && rs.cartan()[t][u] != 0) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  return comps;
}

// Exponent widths on the component's positive roots for Levi budget p:
// an A1 component keeps 2(p+1) powers of its root, an A2 component the
// box with sides p+1, p+2, p+3, both of cardinality |W_comp| times the
// number of component monomials of degree at most p.
std::vector<std::pair<int, long>> component_widths(const RootSystem& rs,
                                                   const std::vector<int>& comp,
                                                   long p) {
  std::vector<int> roots = positive_roots_supported_on(rs, comp);
  std::sort(roots.begin(), roots.end());
  if (comp.size() == 1) return {{roots[0], 2 * (p + 1)}};
  if (comp.size() == 2 &&
      rs.cartan()[comp[0]][comp[1]] * rs.cartan()[comp[1]][comp[0]] == 1) {
    std::vector<std::pair<int, long>> w;
    for (size_t k = 0; k < roots.size(); ++k)
      w.push_back({roots[k], p + 1 + static_cast<long>(k)});
    return w;
  }
  throw UnsupportedScopeError(
      "dual windows implemented for products of A1 and A2 components only");
}

RatVec rest_of_root(const RootSystem& rs, const LeviDatum& levi, int a) {
  RatVec r(levi.z_basis.size(), Rat(0));
  for (size_t k = 0; k < levi.z_basis.size(); ++k)
    for (int i = 0; i < rs.rank(); ++i)
      r[k] += Rat(levi.z_basis[k][i]) * Rat(rs.pos(a).fund[i]);
  return r;
}

}  // namespace

std::vector<Mono> dual_window(const UEA& U, const LeviDatum& levi, int depth) {
  const RootSystem& rs = U.roots();
  if (depth < 0) throw ValidationError("dual window needs depth >= 0");
  std::vector<std::vector<int>> comps = levi_components(rs, levi);

  // Complement exponents first, each carrying its remaining Levi budget.
  std::vector<Mono> partial{Mono{}};
  for (int a : levi.n_complement) {
    std::vector<Mono> next;
    for (const Mono& m : partial) {
      long used = 0;
      for (int b : levi.n_complement) used += m[U.slot_y(b)];
      for (long e = 0; used + e <= depth; ++e) {
        Mono ext = m;
        ext[U.slot_y(a)] = static_cast<std::uint8_t>(e);
        next.push_back(ext);
      }
    }
    partial.swap(next);
  }

  std::vector<Mono> out;
  for (const Mono& m : partial) {
    long k = 0;
    for (int b : levi.n_complement) k += m[U.slot_y(b)];
    std::vector<Mono> shaped{m};
    for (const auto& comp : comps)
      for (auto [root, width] : component_widths(rs, comp, depth - k)) {
        std::vector<Mono> next;
        for (const Mono& s : shaped)
          for (long e = 0; e < width; ++e) {
            Mono ext = s;
            ext[U.slot_y(root)] = static_cast<std::uint8_t>(e);
            next.push_back(ext);
          }
        shaped.swap(next);
      }
    out.insert(out.end(), shaped.begin(), shaped.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

TruncatedDual costandard_truncated(const UEA& U, const WeylGroup& W,
                                   const LeviDatum& levi,
                                   const EtaCharacter& eta, const Weight& lam,
                                   int w, int depth) {
  (void)eta;
  const auto& sub = levi.w_eta.subgroup;
  if (std::find(sub.begin(), sub.end(), w) == sub.end())
    throw ValidationError("w lies outside the eta Weyl subgroup");
  TruncatedDual dual;
  dual.wlam = W.dot(w, lam);
  dual.depth = depth;
  dual.basis = dual_window(U, levi, depth);
  for (int j = 0; j < static_cast<int>(dual.basis.size()); ++j)
    dual.index[dual.basis[j]] = j;
  return dual;
}

DualVector act_dual(const UEA& U, const TruncatedDual& dual, const UEA::Elt& u,
                    const DualVector& f) {
  const int n = static_cast<int>(dual.basis.size());
  if (static_cast<int>(f.coords.size()) != n)
    throw ValidationError("functional has the wrong number of coordinates");
  DualVector out;
  out.coords.assign(n, Rat(0));
  out.exact = f.exact;
  for (const auto& [m, c] : u)
    if (U.deg_y(m) > 0) out.exact = false;

  UEA::Elt tu = U.tau(u);
  for (int j = 0; j < n; ++j) {
    VermaElement moved =
        act_verma(U, tu, VermaElement{dual.wlam, {{dual.basis[j], Rat(1)}}});
    Rat val(0);
    for (const auto& [m, c] : moved.coeffs) {
      auto it = dual.index.find(m);
      if (it != dual.index.end()) val += c * f.coords[it->second];
    }
    out.coords[j] = val;
  }
  return out;
}

RatVec dual_z_weight(const UEA& U, const LeviDatum& levi,
                     const TruncatedDual& dual, const Mono& m) {
  const RootSystem& rs = U.roots();
  RatVec nu = z_weight(rs, levi, dual.wlam);
  for (int a = 0; a < rs.npos(); ++a) {
    int e = m[U.slot_y(a)];
    if (e == 0) continue;
    RatVec r = rest_of_root(rs, levi, a);
    for (size_t k = 0; k < nu.size(); ++k) nu[k] -= Rat(e) * r[k];
  }
  return nu;
}

DualVector phi_w(const UEA& U, const UEA::Elt& v, const PairingSpec& spec,
                 const TruncatedDual& dual) {
  DualVector out;
  out.exact = true;
  out.coords.reserve(dual.basis.size());
  for (const Mono& m : dual.basis)
    out.coords.push_back(pair_w(U, v, UEA::Elt{{m, Rat(1)}}, spec));
  return out;
}

CharacterCompareReport character_compare(const UEA& U, const WeylGroup& W,
                                         const LeviDatum& levi,
                                         const EtaCharacter& eta,
                                         const Weight& lam, int w, int depth) {
  const RootSystem& rs = U.roots();
  TruncatedDual dual = costandard_truncated(U, W, levi, eta, lam, w, depth);

  std::map<RatVec, long> dual_table;
  for (const Mono& m : dual.basis) dual_table[dual_z_weight(U, levi, dual, m)]++;

  // Module side: free classes y^I h^E with the same budget split, counted
  // per complement exponent.  The per-component ball of Levi y monomials
  // times the coinvariant box matches the widths of the dual window.
  std::vector<std::vector<int>> comps = levi_components(rs, levi);
  long artin = static_cast<long>(levi.w_eta.subgroup.size());
  RatVec lamz = z_weight(rs, levi, lam);

  std::vector<Mono> partial{Mono{}};
  for (int a : levi.n_complement) {
    std::vector<Mono> next;
    for (const Mono& m : partial) {
      long used = 0;
      for (int b : levi.n_complement) used += m[U.slot_y(b)];
      for (long e = 0; used + e <= depth; ++e) {
        Mono ext = m;
        ext[U.slot_y(a)] = static_cast<std::uint8_t>(e);
        next.push_back(ext);
      }
    }
    partial.swap(next);
  }

  std::map<RatVec, long> module_table;
  for (const Mono& m : partial) {
    long k = 0;
    RatVec nu = lamz;
    for (int b : levi.n_complement) {
      int e = m[U.slot_y(b)];
      k += e;
      if (e == 0) continue;
      RatVec r = rest_of_root(rs, levi, b);
      for (size_t t = 0; t < nu.size(); ++t) nu[t] -= Rat(e) * r[t];
    }
    long count = artin;
    long p = depth - k;
    for (const auto& comp : comps) {
      // Number of monomials of degree at most p over the component roots:
      // C(p + nroots, nroots), accumulated multiplicatively.
      long nroots =
          static_cast<long>(positive_roots_supported_on(rs, comp).size());
      long ball = 1;
      for (long t = 1; t <= nroots; ++t) ball = ball * (p + t) / t;
      count *= ball;
    }
    module_table[nu] += count;
  }

  CharacterCompareReport rep;
  rep.depth = depth;
  std::map<RatVec, long> keys = module_table;
  for (const auto& [nu, cnt] : dual_table) keys.emplace(nu, 0);
  rep.equal = true;
  for (auto it = keys.rbegin(); it != keys.rend(); ++it) {
    const RatVec& nu = it->first;
    long mdim = module_table.count(nu) ? module_table.at(nu) : 0;
    long ddim = dual_table.count(nu) ? dual_table.at(nu) : 0;
    rep.slice_keys.push_back(nu);
    rep.module_dims.push_back(mdim);
    rep.dual_dims.push_back(ddim);
    if (mdim != ddim) rep.equal = false;
  }
  return rep;
}

bool socle_check(const UEA& U, const WeylGroup& W, const LeviDatum& levi,
                 const EtaCharacter& eta, const Weight& lam, int w, int depth) {
  TruncatedDual dual = costandard_truncated(U, W, levi, eta, lam, w, depth);
  WhittakerVectorReport wv = whittaker_vectors(U, levi, eta, dual);
  return wv.dimension == 1 && wv.z_homogeneous &&
         wv.z_weight == z_weight(U.roots(), levi, lam);
}

bool w_independence(const UEA& U, const WeylGroup& W, const LeviDatum& levi,
                    const EtaCharacter& eta, const Weight& lam, int depth) {
  const RootSystem& rs = U.roots();
  const auto& sub = levi.w_eta.subgroup;
  if (sub.size() <= 1) return true;

  int dh = coinvariant_h_depth(U, levi.w_eta);
  WhittakerBox box(U, levi, eta, lam, depth, dh);
  const std::vector<Mono>& basis = box.basis();
  const int nb = static_cast<int>(basis.size());

  std::vector<std::map<RatVec, long>> tables;
  std::vector<Matrix> kernels;
  for (int w : sub) {
    PairingSpec spec = make_pairing_spec(rs, W, lam, eta, w);
    TruncatedDual dual = costandard_truncated(U, W, levi, eta, lam, w, depth);
    std::map<RatVec, long> table;
    for (const Mono& m : dual.basis)
      table[dual_z_weight(U, levi, dual, m)]++;
    tables.push_back(std::move(table));

    const int n = static_cast<int>(dual.basis.size());
    Matrix pt(n, RatVec(nb, Rat(0)));
    for (int i = 0; i < nb; ++i) {
      DualVector f = phi_w(U, UEA::Elt{{basis[i], Rat(1)}}, spec, dual);
      for (int j = 0; j < n; ++j) pt[j][i] = f.coords[j];
    }
    Matrix ker = nullspace(pt, nb);
    kernels.push_back(std::move(ker));
  }

  for (size_t i = 1; i < tables.size(); ++i) {
    if (tables[i] != tables[0]) return false;
    if (kernels[i].size() != kernels[0].size()) return false;
    if (!kernels[0].empty() && !same_row_space(kernels[i], kernels[0]))
      return false;
  }
  return true;
}

}  // namespace whit
