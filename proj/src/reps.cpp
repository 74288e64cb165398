#include "whit/reps.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

#include "whit/error.hpp"

namespace whit {

namespace {

Rat rat_pow(const Rat& base, int e) {
  Rat r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

long deg_h_block(const UEA& U, const Mono& m) {
  long d = 0;
  for (int i = 0; i < U.roots().rank(); ++i) d += m[U.slot_h(i)];
  return d;
}

// Ascending monomial order on x-free monomials, h block first.  Reducing
// against pivots chosen descending in this order eliminates high h powers,
// so the surviving free classes are y monomials times low h exponents.
bool xfree_less(const UEA& U, const Mono& a, const Mono& b) {
  long ha = deg_h_block(U, a), hb = deg_h_block(U, b);
  if (ha != hb) return ha < hb;
  int r = U.roots().rank(), n = U.roots().npos();
  for (int i = 0; i < r; ++i)
    if (a[U.slot_h(i)] != b[U.slot_h(i)]) return a[U.slot_h(i)] < b[U.slot_h(i)];
  long ya = U.deg_y(a), yb = U.deg_y(b);
  if (ya != yb) return ya < yb;
  for (int s = 0; s < n; ++s)
    if (a[s] != b[s]) return a[s] < b[s];
  return false;
}

void strip_zeros(UEA::Elt& e) {
  for (auto it = e.begin(); it != e.end();)
    it = (it->second == 0) ? e.erase(it) : std::next(it);
}

// All x-free monomials with y degree at most ymax and h degree at most hmax.
std::vector<Mono> window_monomials(const UEA& U, int ymax, int hmax) {
  int n = U.roots().npos(), r = U.roots().rank();
  std::vector<Mono> ys{Mono{}};
  for (int s = 0; s < n; ++s) {
    std::vector<Mono> next;
    for (const Mono& m : ys) {
      long used = U.deg_y(m);
      for (int e = 0; used + e <= ymax; ++e) {
        Mono ext = m;
        ext[s] = static_cast<std::uint8_t>(e);
        next.push_back(ext);
      }
    }
    ys.swap(next);
  }
  std::vector<Mono> out;
  std::vector<Mono> hs{Mono{}};
  for (int i = 0; i < r; ++i) {
    std::vector<Mono> next;
    for (const Mono& m : hs) {
      long used = deg_h_block(U, m);
      for (int e = 0; used + e <= hmax; ++e) {
        Mono ext = m;
        ext[U.slot_h(i)] = static_cast<std::uint8_t>(e);
        next.push_back(ext);
      }
    }
    hs.swap(next);
  }
  for (const Mono& ym : ys)
    for (const Mono& hm : hs) {
      Mono m = ym;
      for (int i = 0; i < r; ++i) m[U.slot_h(i)] = hm[U.slot_h(i)];
      out.push_back(m);
    }
  return out;
}

long count_y_monomials(int npos, int dy) {
  // C(dy + npos, npos)
  long num = 1, den = 1;
  for (int k = 1; k <= npos; ++k) {
    num *= dy + k;
    den *= k;
  }
  return num / den;
}

}  // namespace

VermaElement verma_vector(const Weight& mu) {
  return VermaElement{mu, {{Mono{}, Rat(1)}}};
}

VermaElement act_verma(const UEA& U, const UEA::Elt& u, const VermaElement& v) {
  VermaElement out{v.mu, {}};
  UEA::Elt prod = U.mul(u, v.coeffs);
  int r = U.roots().rank();
  for (const auto& [m, c] : prod) {
    if (U.deg_x(m) > 0) continue;
    Rat s = c;
    Mono ym = m;
    for (int i = 0; i < r; ++i) {
      s *= rat_pow(v.mu[i], m[U.slot_h(i)]);
      ym[U.slot_h(i)] = 0;
    }
    if (s != 0) out.coeffs[ym] += s;
  }
  strip_zeros(out.coeffs);
  return out;
}

std::vector<VermaElement> weight_basis_verma(const UEA& U, const Weight& mu,
                                             const Weight& target) {
  const RootSystem& rs = U.roots();
  int r = rs.rank(), n = rs.npos();
  Weight delta(r);
  for (int i = 0; i < r; ++i) delta[i] = mu[i] - target[i];

  // Solve delta = sum_j k_j alpha_j in fundamental coordinates.
  std::vector<RatVec> span;
  for (int j = 0; j < r; ++j) {
    const Root& al = rs.pos(rs.pos_index_of_simple(j));
    RatVec row(r);
    for (int i = 0; i < r; ++i) row[i] = Rat(al.fund[i]);
    span.push_back(row);
  }
  auto coords = solve_in_span(span, delta);
  if (!coords) return {};
  IntVec k(r);
  for (int j = 0; j < r; ++j) {
    const Rat& c = (*coords)[j];
    if (c.get_den() != 1 || c < 0) return {};
    k[j] = c.get_num().get_si();
  }

  std::vector<Mono> monos;
  Mono cur{};
  IntVec rem = k;
  auto fits = [&](int a, int e) {
    for (int i = 0; i < r; ++i)
      if (e * rs.pos(a).simple[i] > rem[i]) return false;
    return true;
  };
  std::function<void(int)> emit = [&](int a) {
    if (a < 0) {
      for (int i = 0; i < r; ++i)
        if (rem[i] != 0) return;
      monos.push_back(cur);
      return;
    }
    for (int e = 0; fits(a, e); ++e) {
      for (int i = 0; i < r; ++i) rem[i] -= e * rs.pos(a).simple[i];
      cur[U.slot_y(a)] = static_cast<std::uint8_t>(e);
      emit(a - 1);
      cur[U.slot_y(a)] = 0;
      for (int i = 0; i < r; ++i) rem[i] += e * rs.pos(a).simple[i];
    }
  };
  emit(n - 1);
  std::sort(monos.begin(), monos.end());

  std::vector<VermaElement> out;
  for (const Mono& m : monos)
    out.push_back(VermaElement{mu, {{m, Rat(1)}}});
  return out;
}

std::vector<UEA::Elt> annihilator_gens_verma(const UEA& U, const Weight& mu) {
  std::vector<UEA::Elt> out;
  for (int a = 0; a < U.roots().npos(); ++a)
    out.push_back(U.gen(U.slot_x(a)));
  for (int i = 0; i < U.roots().rank(); ++i)
    out.push_back(U.add(U.gen(U.slot_h(i)), U.scalar(-mu[i])));
  return out;
}

UEA::Elt red_x(const UEA& U, const EtaCharacter& eta, const UEA::Elt& e) {
  const RootSystem& rs = U.roots();
  int n = rs.npos();
  UEA::Elt out;
  std::vector<int> kexp(n);
  for (const auto& [m, c] : e) {
    for (int a = 0; a < n; ++a) kexp[a] = m[U.slot_x(a)];
    Rat f = eta_on_monomial(rs, eta, kexp);
    if (f == 0) continue;
    Mono ym = m;
    for (int a = 0; a < n; ++a) ym[U.slot_x(a)] = 0;
    out[ym] += c * f;
  }
  strip_zeros(out);
  return out;
}

UEA::Elt z_component(const UEA& U, const LeviDatum& levi, const Weight& lam,
                     const UEA::Elt& e, const RatVec& nu) {
  const RootSystem& rs = U.roots();
  int n = rs.npos();
  int dz = static_cast<int>(levi.z_basis.size());
  if (static_cast<int>(nu.size()) != dz)
    throw ValidationError("z weight has the wrong number of coordinates");
  RatVec lamz = z_weight(rs, levi, lam);
  UEA::Elt out;
  for (const auto& [m, c] : e) {
    if (U.deg_x(m) > 0)
      throw ValidationError("z_component expects an x-free element");
    bool keep = true;
    for (int k = 0; k < dz && keep; ++k) {
      Rat val = lamz[k];
      for (int a = 0; a < n; ++a) {
        if (m[U.slot_y(a)] == 0) continue;
        long rest = 0;
        for (int i = 0; i < rs.rank(); ++i)
          rest += levi.z_basis[k][i] * rs.pos(a).fund[i];
        val -= Rat(static_cast<long>(m[U.slot_y(a)])) * Rat(rest);
      }
      keep = (val == nu[k]);
    }
    if (keep) out[m] = c;
  }
  return out;
}

std::vector<UEA::Elt> annihilator_gens_whittaker(const UEA& U,
                                                 const LeviDatum& levi,
                                                 const EtaCharacter& eta,
                                                 const Weight& lam) {
  std::vector<UEA::Elt> out;
  for (int a = 0; a < U.roots().npos(); ++a)
    out.push_back(U.add(U.gen(U.slot_x(a)),
                        U.scalar(-eta_power(U.roots(), eta, a, 1))));
  for (const CenterElement& z : center_generators(U, levi))
    out.push_back(U.add(z.element, U.scalar(-chi_eval(U, lam, z))));
  return out;
}

std::vector<UEA::Elt> free_basis_bw(const UEA& U, const ParabolicData& par) {
  const RootSystem& rs = U.roots();
  // Connected components of the support inside the Dynkin diagram.
  std::vector<std::vector<int>> comps;
  std::vector<int> seen(rs.rank(), 0);
  for (int s : par.theta) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      comp.push_back(t);
      for (int u : par.theta)
        if (!seen[u] && rs.cartan()[t][u] != 0) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }

  // Exponent boxes from the fundamental degrees of each component.
  std::vector<std::pair<int, int>> box;  // (simple index, exponent bound)
  for (const auto& comp : comps) {
    if (comp.size() == 1) {
      box.push_back({comp[0], 2});
    } else if (comp.size() == 2 &&
               rs.cartan()[comp[0]][comp[1]] * rs.cartan()[comp[1]][comp[0]] ==
                   1) {
      box.push_back({comp[0], 2});
      box.push_back({comp[1], 3});
    } else {
      throw UnsupportedScopeError(
          "coinvariant basis implemented for products of A1 and A2 "
          "components only");
    }
  }

  std::vector<Mono> monos{Mono{}};
  for (auto [i, bound] : box) {
    std::vector<Mono> next;
    for (const Mono& m : monos)
      for (int e = 0; e < bound; ++e) {
        Mono ext = m;
        ext[U.slot_h(i)] = static_cast<std::uint8_t>(e);
        next.push_back(ext);
      }
    monos.swap(next);
  }
  std::sort(monos.begin(), monos.end());
  std::vector<UEA::Elt> out;
  for (const Mono& m : monos) out.push_back(UEA::Elt{{m, Rat(1)}});
  return out;
}

int coinvariant_h_depth(const UEA& U, const ParabolicData& par) {
  long top = 0;
  for (const UEA::Elt& b : free_basis_bw(U, par))
    for (const auto& [m, c] : b)
      top = std::max(top, U.deg_total(m) - U.deg_y(m) - U.deg_x(m));
  return static_cast<int>(top);
}

WhittakerBox::WhittakerBox(const UEA& U, const LeviDatum& levi,
                           const EtaCharacter& eta, const Weight& lam, int dy,
                           int dh)
    : U_(&U), levi_(levi), eta_(eta), lam_(lam), dy_(dy), dh_(dh) {
  if (dy < 0 || dh < 0)
    throw ValidationError("truncation depths must be nonnegative");
  auto gens = center_generators(U, levi);
  long gy = 1, gh = 1;
  for (const CenterElement& z : gens)
    for (const auto& [m, c] : z.element) {
      gy = std::max(gy, U.deg_y(m));
      gh = std::max(gh, deg_h_block(U, m));
    }
  for (int attempt = 0; attempt < 3; ++attempt) {
    int my = static_cast<int>(gy) + attempt;
    int mh = static_cast<int>(gh) + 1 + 2 * attempt;
    if (build(gens, my, mh)) return;
  }
  throw ResourceLimitError(
      "relation saturation failed to certify the free rank law; the "
      "truncation margins did not close the ideal");
}

bool WhittakerBox::build(const std::vector<CenterElement>& gens, int my,
                         int mh) {
  const UEA& U = *U_;
  cols_ = window_monomials(U, dy_ + my, dh_ + mh);
  std::sort(cols_.begin(), cols_.end(),
            [&U](const Mono& a, const Mono& b) { return xfree_less(U, b, a); });
  col_index_.clear();
  for (int i = 0; i < static_cast<int>(cols_.size()); ++i)
    col_index_[cols_[i]] = i;
  rr_ = SparseRref();

  std::queue<UEA::Elt> work;
  auto push_row = [&](const UEA::Elt& v) {
    if (v.empty()) return;
    SparseRref::SRow r;
    for (const auto& [m, c] : v) {
      auto it = col_index_.find(m);
      if (it == col_index_.end()) return;  // escapes the window: drop
      r.push_back({it->second, c});
    }
    std::sort(r.begin(), r.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!rr_.add_row(r)) return;
    const SparseRref::SRow& added = rr_.row(rr_.rank() - 1);
    UEA::Elt back;
    for (const auto& [col, c] : added) back[cols_[col]] = c;
    work.push(std::move(back));
  };

  for (const CenterElement& z : gens)
    push_row(red_x(U, eta_,
                   U.add(z.element, U.scalar(-chi_eval(U, lam_, z)))));

  std::vector<UEA::Elt> mults;
  for (int i = 0; i < U.roots().rank(); ++i) {
    int a = U.roots().pos_index_of_simple(i);
    mults.push_back(U.gen(U.slot_y(a)));
    mults.push_back(U.gen(U.slot_h(i)));
    mults.push_back(U.gen(U.slot_x(a)));
  }
  while (!work.empty()) {
    UEA::Elt v = std::move(work.front());
    work.pop();
    for (const UEA::Elt& g : mults) push_row(red_x(U, eta_, U.mul(g, v)));
  }

  long law = static_cast<long>(levi_.w_eta.subgroup.size()) *
             count_y_monomials(U.roots().npos(), dy_);
  long free_in = 0;
  basis_.clear();
  for (int i = static_cast<int>(cols_.size()) - 1; i >= 0; --i) {
    if (rr_.has_pivot(i) || U.deg_y(cols_[i]) > dy_) continue;
    ++free_in;
    if (deg_h_block(U, cols_[i]) <= dh_) basis_.push_back(cols_[i]);
  }
  if (free_in != law) return false;
  if (static_cast<long>(basis_.size()) != law)
    throw TruncationOverflowError(
        "free classes need h exponents beyond the requested depth");
  return true;
}

UEA::Elt WhittakerBox::reduce(const UEA::Elt& rep) const {
  const UEA& U = *U_;
  UEA::Elt v = red_x(U, eta_, rep);
  SparseRref::SRow r;
  for (const auto& [m, c] : v) {
    auto it = col_index_.find(m);
    if (it == col_index_.end())
      throw TruncationOverflowError(
          "representative leaves the reduction window");
    r.push_back({it->second, c});
  }
  std::sort(r.begin(), r.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRref::SRow rem = rr_.reduce(r);
  UEA::Elt out;
  for (const auto& [col, c] : rem) {
    const Mono& m = cols_[col];
    if (U.deg_y(m) > dy_ || deg_h_block(U, m) > dh_)
      throw TruncationOverflowError("reduced class leaves the box");
    out[m] = c;
  }
  return out;
}

UEA::Elt WhittakerBox::act(const UEA::Elt& u, const UEA::Elt& rep) const {
  return reduce(U_->mul(u, rep));
}

bool WhittakerBox::is_zero(const UEA::Elt& rep) const {
  return reduce(rep).empty();
}

}  // namespace whit
