#include "whit/pairing.hpp"

#include <algorithm>
#include <vector>

#include "whit/error.hpp"
#include "whit/harish_chandra.hpp"
#include "whit/homology.hpp"

namespace whit {

namespace {

// z-restriction of the weight of y^I h^E omega (or y^I v): the h block
// never moves the z-weight.
RatVec z_of_mono(const UEA& U, const LeviDatum& levi, const RatVec& top,
                 const Mono& m) {
  const RootSystem& rs = U.roots();
  RatVec nu = top;
  for (int a = 0; a < rs.npos(); ++a) {
    int e = m[U.slot_y(a)];
    if (e == 0) continue;
    for (size_t k = 0; k < levi.z_basis.size(); ++k) {
      Rat r(0);
      for (int i = 0; i < rs.rank(); ++i)
        r += Rat(levi.z_basis[k][i]) * Rat(rs.pos(a).fund[i]);
      nu[k] -= Rat(e) * r;
    }
  }
  return nu;
}

std::vector<Mono> y_monomials_up_to(const UEA& U, int depth) {
  std::vector<Mono> out{Mono{}};
  for (int a = 0; a < U.roots().npos(); ++a) {
    std::vector<Mono> next;
    for (const Mono& m : out) {
      long used = U.deg_y(m);
      for (long e = 0; used + e <= depth; ++e) {
        Mono ext = m;
        ext[U.slot_y(a)] = static_cast<std::uint8_t>(e);
        next.push_back(ext);
      }
    }
    out.swap(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PairingSpec make_pairing_spec(const RootSystem& rs, const WeylGroup& W,
                              const Weight& lam, const EtaCharacter& eta,
                              int w) {
  PairingSpec spec;
  spec.lam = lam;
  spec.eta = eta;
  spec.levi = make_levi(rs, W, eta);
  const auto& sub = spec.levi.w_eta.subgroup;
  if (std::find(sub.begin(), sub.end(), w) == sub.end())
    throw ValidationError("w lies outside the eta Weyl subgroup");
  spec.w = w;
  spec.wlam = W.dot(w, lam);
  Weight lam_rho = lam;
  for (auto& c : lam_rho) c += 1;
  spec.regular = rs.regular(lam_rho);
  return spec;
}

Rat pair_w(const UEA& U, const UEA::Elt& u, const UEA::Elt& uprime,
           const PairingSpec& spec) {
  UEA::Elt prod = U.mul(U.tau(uprime), u);
  return eval_h(U, pi_eta_project(U, spec.eta, prod), spec.wlam);
}

GramReport gram(const UEA& U, const WhittakerBox& box, const PairingSpec& spec,
                const RatVec& nu, int depth, bool parallel) {
  const RootSystem& rs = U.roots();
  if (box.lambda() != spec.lam ||
      box.character().values != spec.eta.values)
    throw ValidationError("box and pairing spec disagree on the module");
  if (depth < 0 || depth > box.dy())
    throw ValidationError("gram depth outside the box");
  if (nu.size() != spec.levi.z_basis.size())
    throw ValidationError("slice has the wrong number of z coordinates");
  RatVec lamz = z_weight(rs, spec.levi, spec.lam);
  if (!z_leq(rs, spec.levi, nu, lamz))
    throw ValidationError("slice does not sit below lambda on z");

  GramReport rep;
  rep.nu = nu;
  rep.depth = depth;
  for (const Mono& b : box.basis())
    if (U.deg_y(b) <= depth && z_of_mono(U, spec.levi, lamz, b) == nu)
      rep.rows.push_back(b);
  RatVec wz = z_weight(rs, spec.levi, spec.wlam);
  for (const Mono& m : y_monomials_up_to(U, depth))
    if (z_of_mono(U, spec.levi, wz, m) == nu) rep.cols.push_back(m);

  const int nr = static_cast<int>(rep.rows.size());
  const int nc = static_cast<int>(rep.cols.size());
  rep.entries.assign(nr, RatVec(nc, Rat(0)));

  auto entry = [&](int r, int c) {
    return pair_w(U, UEA::Elt{{rep.rows[r], Rat(1)}},
                  UEA::Elt{{rep.cols[c], Rat(1)}}, spec);
  };
#if defined(WHIT_HAVE_OPENMP)
  if (parallel) {
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (int r = 0; r < nr; ++r)
      for (int c = 0; c < nc; ++c) rep.entries[r][c] = entry(r, c);
  } else {
    for (int r = 0; r < nr; ++r)
      for (int c = 0; c < nc; ++c) rep.entries[r][c] = entry(r, c);
  }
#else
  (void)parallel;
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c) rep.entries[r][c] = entry(r, c);
#endif

  rep.rank = (nr == 0 || nc == 0)
                 ? 0
                 : static_cast<int>(rref(rep.entries).pivots.size());
  return rep;
}

RadicalVerdict radical_probe(const UEA& U, const UEA::Elt& v,
                             const PairingSpec& spec, int depth) {
  RadicalVerdict verdict;
  verdict.depth = depth;
  for (const Mono& m : y_monomials_up_to(U, depth)) {
    Rat val = pair_w(U, v, UEA::Elt{{m, Rat(1)}}, spec);
    if (val != 0) {
      verdict.witness_found = true;
      verdict.witness = m;
      verdict.value = val;
      return verdict;
    }
  }
  return verdict;
}

int classify(const UEA& U, const WeylGroup& W, const Weight& lam,
             const EtaCharacter& eta, const Weight& mu, int depth) {
  const RootSystem& rs = U.roots();
  Weight lam_rho = lam;
  for (auto& c : lam_rho) c += 1;
  if (!rs.regular(lam_rho))
    throw SingularWeightError("classification needs lambda + rho regular");
  LeviDatum levi = make_levi(rs, W, eta);

  bool on_orbit = false;
  for (int w : levi.w_eta.subgroup)
    if (W.dot(w, lam) == mu) {
      on_orbit = true;
      break;
    }

  HomologyReport h = coinvariants(U, W, levi, eta, lam, depth);
  bool in_homology = false;
  for (const auto& [wt, mult] : h.weights)
    if (wt == mu && mult > 0) in_homology = true;
  if (in_homology != on_orbit)
    throw TheoremCheckError(
        "pairing classification and coinvariant weights disagree");
  return on_orbit ? 1 : 0;
}

}  // namespace whit
