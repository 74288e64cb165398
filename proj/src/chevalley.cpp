#include "whit/chevalley.hpp"

#include <cstdlib>
#include <sstream>

#include "whit/error.hpp"

// Structure constant derivation.  Every constant reduces to one attached to
// a positive special pair (alpha, beta), alpha < beta in the canonical root
// order, through three rules:
//   R1  N(v,u) = -N(u,v)
//   R2  N(-u,-v) = -N(u,v)
//   R3  for u+v+w = 0:  N(u,v)/(w,w) = N(v,w)/(u,u) = N(w,u)/(v,v)
// The extraspecial pair of a composite root (its decomposition with least
// first member) is set to +(p+1); the other special pairs of the same root
// follow by expanding [[x_a, x_b], y_beta] with the Jacobi identity, which
// only consumes constants of lower-height sums.  The finished table is then
// checked wholesale: magnitudes against root strings, Jacobi on all
// generator triples.

namespace whit {

namespace {

IntVec signed_coords(const RootSystem& rs, int u) {
  IntVec c = rs.pos(std::abs(u) - 1).simple;
  if (u < 0)
    for (long& v : c) v = -v;
  return c;
}

int sroot_sum(const RootSystem& rs, int u, int v) {
  IntVec s = signed_coords(rs, u);
  const IntVec t = signed_coords(rs, v);
  for (size_t i = 0; i < s.size(); ++i) s[i] += t[i];
  return rs.signed_index(s);
}

using Combo = std::map<std::pair<int, int>, long>;

void accumulate(Combo& into, const GenElt& terms, long scale) {
  for (const GenTerm& t : terms) {
    long c = into[{t.sroot, t.hidx}] += scale * t.coef;
    if (c == 0) into.erase({t.sroot, t.hidx});
  }
}

}  // namespace

ChevalleyBasis::ChevalleyBasis(const RootSystem& rs) : rs_(&rs) {
  derive();
  verify();
}

long ChevalleyBasis::norm(int u) const {
  return 2 * rs_->pos(std::abs(u) - 1).half_norm;
}

long ChevalleyBasis::string_down(int u, int v) const {
  IntVec cur = signed_coords(*rs_, v);
  const IntVec step = signed_coords(*rs_, u);
  long p = 0;
  while (true) {
    for (size_t i = 0; i < cur.size(); ++i) cur[i] -= step[i];
    if (rs_->signed_index(cur) == 0) break;
    ++p;
  }
  return p;
}

namespace {

// N(u,v) for an arbitrary pair with root sum, reading only positive special
// pairs out of the table; used while the table is still being filled.
long reduce_constant(const RootSystem& rs,
                     const std::map<std::pair<int, int>, long>& table, int u,
                     int v) {
  int s = sroot_sum(rs, u, v);
  if (s < 0) return -reduce_constant(rs, table, -u, -v);
  if (u > 0 && v > 0) {
    auto it = table.find({u, v});
    if (it != table.end()) return it->second;
    return -table.at({v, u});
  }
  if (u < 0) return -reduce_constant(rs, table, v, u);
  // u > 0, v < 0, s > 0: rotate the triple (u, v, -s) and flip the two
  // negatives, landing on the positive pair (-v, s) with sum u.
  long num = -2 * rs.pos(s - 1).half_norm * reduce_constant(rs, table, -v, s);
  long den = 2 * rs.pos(u - 1).half_norm;
  if (num % den != 0)
    throw SignInconsistencyError("structure constant reduction left a "
                                 "fraction at (" +
                                 std::to_string(u) + "," + std::to_string(v) +
                                 ")");
  return num / den;
}

}  // namespace

void ChevalleyBasis::derive() {
  const RootSystem& rs = *rs_;
  for (int g = 0; g < rs.npos(); ++g) {
    if (rs.pos(g).height == 1) continue;
    std::vector<std::pair<int, int>> decomp;
    for (int a = 0; a < rs.npos(); ++a) {
      IntVec d = rs.pos(g).simple;
      for (size_t i = 0; i < d.size(); ++i) d[i] -= rs.pos(a).simple[i];
      int sb = rs.signed_index(d);
      if (sb <= 0) continue;
      int b = sb - 1;
      if (a < b) decomp.push_back({a, b});
    }
    if (decomp.empty())
      throw SignInconsistencyError("composite root with no decomposition");
    auto [ea, eb] = decomp.front();
    table_[{ea + 1, eb + 1}] = string_down(ea + 1, eb + 1) + 1;
    for (size_t k = 1; k < decomp.size(); ++k) {
      auto [al, be] = decomp[k];
      long rhs = 0;
      int d1 = sroot_sum(rs, ea + 1, -(be + 1));
      if (d1 != 0)
        rhs += reduce_constant(rs, table_, ea + 1, -(be + 1)) *
               reduce_constant(rs, table_, d1, eb + 1);
      int d2 = sroot_sum(rs, eb + 1, -(be + 1));
      if (d2 != 0)
        rhs += reduce_constant(rs, table_, eb + 1, -(be + 1)) *
               reduce_constant(rs, table_, ea + 1, d2);
      long num = rhs * 2 * rs.pos(g).half_norm;
      long den = 2 * rs.pos(al).half_norm * table_.at({ea + 1, eb + 1});
      if (num == 0 || num % den != 0)
        throw SignInconsistencyError("special pair derivation failed for "
                                     "roots " +
                                     std::to_string(al + 1) + "+" +
                                     std::to_string(be + 1));
      table_[{al + 1, be + 1}] = num / den;
    }
  }
  for (int u = -rs.npos(); u <= rs.npos(); ++u)
    for (int v = -rs.npos(); v <= rs.npos(); ++v) {
      if (u == 0 || v == 0 || u + v == 0) continue;
      if (sroot_sum(rs, u, v) == 0) continue;
      long val = reduce_constant(rs, table_, u, v);
      table_[{u, v}] = val;
    }
}

void ChevalleyBasis::verify() const {
  const RootSystem& rs = *rs_;
  size_t expected = 0;
  for (int u = -rs.npos(); u <= rs.npos(); ++u)
    for (int v = -rs.npos(); v <= rs.npos(); ++v) {
      if (u == 0 || v == 0 || u + v == 0) continue;
      if (sroot_sum(rs, u, v) == 0) continue;
      ++expected;
      auto it = table_.find({u, v});
      if (it == table_.end())
        throw SignInconsistencyError("missing structure constant");
      if (std::abs(it->second) != string_down(u, v) + 1)
        throw SignInconsistencyError(
            "structure constant magnitude violates its root string at (" +
            std::to_string(u) + "," + std::to_string(v) + ")");
    }
  if (table_.size() != expected)
    throw SignInconsistencyError("structure constant table has spurious "
                                 "entries");

  std::vector<GenTerm> gens;
  for (int a = 1; a <= rs.npos(); ++a) {
    gens.push_back(GenTerm{1, a, 0});
    gens.push_back(GenTerm{1, -a, 0});
  }
  for (int i = 0; i < rs.rank(); ++i) gens.push_back(GenTerm{1, 0, i});

  auto bracket_combo = [&](const Combo& x, const Combo& y) {
    Combo out;
    for (const auto& [kx, cx] : x)
      for (const auto& [ky, cy] : y)
        accumulate(out, bracket(GenTerm{1, kx.first, kx.second},
                                GenTerm{1, ky.first, ky.second}),
                   cx * cy);
    return out;
  };

  for (const GenTerm& a : gens)
    for (const GenTerm& b : gens)
      for (const GenTerm& c : gens) {
        Combo ca{{{a.sroot, a.hidx}, 1}};
        Combo cb{{{b.sroot, b.hidx}, 1}};
        Combo cc{{{c.sroot, c.hidx}, 1}};
        Combo j = bracket_combo(ca, bracket_combo(cb, cc));
        for (const auto& [k, v] : bracket_combo(cb, bracket_combo(cc, ca))) {
          long t = j[k] += v;
          if (t == 0) j.erase(k);
        }
        for (const auto& [k, v] : bracket_combo(cc, bracket_combo(ca, cb))) {
          long t = j[k] += v;
          if (t == 0) j.erase(k);
        }
        if (!j.empty())
          throw SignInconsistencyError("Jacobi identity fails on a generator "
                                       "triple");
      }
}

long ChevalleyBasis::n_const(int u, int v) const { return table_.at({u, v}); }

GenElt ChevalleyBasis::bracket_roots(int u, int v) const {
  GenElt out;
  if (u + v == 0) {
    const Root& r = rs_->pos(std::abs(u) - 1);
    long sign = u > 0 ? 1 : -1;
    for (int i = 0; i < rs_->rank(); ++i)
      if (r.coroot[i] != 0) out.push_back(GenTerm{sign * r.coroot[i], 0, i});
    return out;
  }
  int s = sroot_sum(*rs_, u, v);
  if (s == 0) return out;
  out.push_back(GenTerm{table_.at({u, v}), s, 0});
  return out;
}

GenElt ChevalleyBasis::bracket_h_root(int i, int v) const {
  long f = rs_->pos(std::abs(v) - 1).fund[i] * (v > 0 ? 1 : -1);
  GenElt out;
  if (f != 0) out.push_back(GenTerm{f, v, 0});
  return out;
}

GenElt ChevalleyBasis::bracket(const GenTerm& a, const GenTerm& b) const {
  GenElt out;
  if (a.sroot == 0 && b.sroot == 0) return out;
  if (a.sroot == 0)
    out = bracket_h_root(a.hidx, b.sroot);
  else if (b.sroot == 0) {
    out = bracket_h_root(b.hidx, a.sroot);
    for (GenTerm& t : out) t.coef = -t.coef;
  } else {
    out = bracket_roots(a.sroot, b.sroot);
  }
  long scale = a.coef * b.coef;
  for (GenTerm& t : out) t.coef *= scale;
  return out;
}

bool ChevalleyBasis::corrupted_table_rejected(const RootSystem& rs) {
  ChevalleyBasis good(rs);
  if (good.table_.empty())
    throw ValidationError("type " + rs.type() +
                          " has no composite roots; nothing to corrupt");
  ChevalleyBasis bad;
  bad.rs_ = good.rs_;
  bad.table_ = good.table_;
  bad.table_.begin()->second = -bad.table_.begin()->second;
  try {
    bad.verify();
  } catch (const SignInconsistencyError&) {
    return true;
  }
  return false;
}

}  // namespace whit
