#include "whit/levi.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "whit/error.hpp"
#include "whit/linalg.hpp"

namespace whit {

EtaCharacter make_character(const RootSystem& rs,
                            const std::map<int, Rat>& values) {
  EtaCharacter eta;
  eta.values.assign(rs.rank(), Rat(0));
  for (const auto& [i, v] : values) {
    if (i < 0 || i >= rs.rank()) {
      std::ostringstream os;
      os << "eta value keyed by " << i << ", but " << rs.type() << " has "
         << rs.rank() << " simple roots";
      throw ValidationError(os.str());
    }
    eta.values[i] = v;
  }
  for (int i = 0; i < rs.rank(); ++i)
    if (eta.values[i] != 0) eta.pi_eta.push_back(i);
  return eta;
}

LeviDatum make_levi(const RootSystem& rs, const WeylGroup& W,
                    const EtaCharacter& eta) {
  LeviDatum levi;
  levi.pi_eta = eta.pi_eta;
  levi.sigma_eta_plus = positive_roots_supported_on(rs, levi.pi_eta);
  std::vector<bool> inside(rs.npos(), false);
  for (int a : levi.sigma_eta_plus) inside[a] = true;
  for (int a = 0; a < rs.npos(); ++a)
    if (!inside[a]) levi.n_complement.push_back(a);
  levi.w_eta = parabolic(rs, W, levi.pi_eta);

  // z is cut out by alpha_j(H) = 0 for j in pi_eta; with H = sum c_i h_i
  // that reads sum_i c_i <alpha_j, alpha_i-vee> = 0.
  Matrix rows;
  for (int j : levi.pi_eta) {
    RatVec row(rs.rank(), Rat(0));
    for (int i = 0; i < rs.rank(); ++i) row[i] = rs.cartan()[i][j];
    rows.push_back(std::move(row));
  }
  for (const RatVec& v : nullspace(rows, rs.rank())) {
    // clear denominators, reduce to primitive, make the first entry positive
    long lcm = 1;
    for (const Rat& c : v)
      lcm = std::lcm(lcm, static_cast<long>(c.get_den().get_si()));
    IntVec zb(rs.rank(), 0);
    long g = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      Rat scaled = v[i] * lcm;
      zb[i] = static_cast<long>(scaled.get_num().get_si());
      g = std::gcd(g, zb[i]);
    }
    for (long& c : zb) c /= g;
    for (long c : zb) {
      if (c == 0) continue;
      if (c < 0)
        for (long& x : zb) x = -x;
      break;
    }
    levi.z_basis.push_back(std::move(zb));
  }
  return levi;
}

Rat eta_power(const RootSystem& rs, const EtaCharacter& eta, int a, int k) {
  if (k == 0) return Rat(1);
  if (!rs.is_simple_pos(a)) return Rat(0);
  Rat base = eta.values[rs.simple_index_of(a)];
  Rat out(1);
  for (int t = 0; t < k; ++t) out *= base;
  return out;
}

Rat eta_on_monomial(const RootSystem& rs, const EtaCharacter& eta,
                    const std::vector<int>& kexp) {
  Rat out(1);
  for (int a = 0; a < rs.npos(); ++a) {
    out *= eta_power(rs, eta, a, kexp[a]);
    if (out == 0) return out;
  }
  return out;
}

RatVec z_weight(const RootSystem& rs, const LeviDatum& levi,
                const Weight& lam) {
  RatVec out;
  for (const IntVec& zb : levi.z_basis) {
    Rat val(0);
    for (int i = 0; i < rs.rank(); ++i) val += lam[i] * Rat(zb[i]);
    out.push_back(val);
  }
  return out;
}

bool z_leq(const RootSystem& rs, const LeviDatum& levi, const RatVec& nu,
           const RatVec& mu) {
  int dim = static_cast<int>(levi.z_basis.size());
  RatVec diff(dim, Rat(0));
  bool zero = true;
  for (int b = 0; b < dim; ++b) {
    diff[b] = mu[b] - nu[b];
    if (diff[b] != 0) zero = false;
  }
  if (zero) return true;

  // restrictions of the complement roots to z
  std::vector<RatVec> cols;
  for (int a : levi.n_complement) {
    RatVec col(dim, Rat(0));
    for (int b = 0; b < dim; ++b)
      for (int i = 0; i < rs.rank(); ++i)
        col[b] += Rat(levi.z_basis[b][i]) * Rat(rs.pos(a).fund[i]);
    cols.push_back(std::move(col));
  }
  // diff lies in the cone iff some independent subset expresses it with
  // nonnegative coefficients; subsets are few, so scan them all.
  int k = static_cast<int>(cols.size());
  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<RatVec> span;
    for (int j = 0; j < k; ++j)
      if (mask & (1 << j)) span.push_back(cols[j]);
    auto coords = solve_in_span(span, diff);
    if (!coords) continue;
    bool ok = true;
    for (const Rat& c : *coords)
      if (c < 0) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace whit
