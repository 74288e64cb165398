#include "whit/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "whit/error.hpp"

namespace whit {

std::string rat_str(const Rat& q) { return q.get_str(); }

Rat rat_parse(const std::string& s) {
  // ^[+-]?digits(/digits)?$ with nonzero denominator
  size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  size_t num_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_start) throw ValidationError("malformed rational '" + s + "'");
  if (i < s.size()) {
    if (s[i] != '/') throw ValidationError("malformed rational '" + s + "'");
    ++i;
    size_t den_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_start || i != s.size())
      throw ValidationError("malformed rational '" + s + "'");
  }
  Rat q;
  if (q.set_str(s, 10) != 0) throw ValidationError("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw ValidationError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string ratvec_str(const RatVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_str(v[i]);
  }
  return out + ")";
}

std::string weight_str(const Weight& w) { return ratvec_str(w); }

std::string word_str(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string out;
  for (int i : word) out += "s" + std::to_string(i + 1);
  return out;
}

namespace {

CartanMatrix cartan_for(const std::string& type, int& rank) {
  if (type == "A1") {
    rank = 1;
    return {{2}};
  }
  if (type == "A1xA1") {
    rank = 2;
    return {{2, 0}, {0, 2}};
  }
  if (type == "A2") {
    rank = 2;
    return {{2, -1}, {-1, 2}};
  }
  if (type == "B2") {
    // alpha1 long, alpha2 short
    rank = 2;
    return {{2, -1}, {-2, 2}};
  }
  if (type == "A3") {
    rank = 3;
    return {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  }
  throw NonFiniteTypeError("unsupported Cartan type '" + type +
                           "' (expected A1, A1xA1, A2, B2, A3)");
}

// Minimal positive integers d with d_i * a_ij = d_j * a_ji.
IntVec symmetrize(const CartanMatrix& a) {
  int r = static_cast<int>(a.size());
  std::vector<Rat> d(r, Rat(0));
  for (int start = 0; start < r; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < r; ++j) {
        if (j == i || a[i][j] == 0) continue;
        Rat want = d[i] * Rat(a[i][j]) / Rat(a[j][i]);
        if (d[j] == 0) {
          d[j] = want;
          stack.push_back(j);
        } else if (d[j] != want) {
          throw SignInconsistencyError("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  // Scale each connected component so entries are integers with gcd 1 and the
  // short roots get d = 1.
  mpz_class lcm_den = 1;
  for (auto& x : d) lcm_den = lcm(lcm_den, x.get_den());
  IntVec out(r);
  mpz_class g = 0;
  for (int i = 0; i < r; ++i) {
    mpz_class v = d[i].get_num() * (lcm_den / d[i].get_den());
    g = gcd(g, v);
    out[i] = v.get_si();
  }
  for (auto& v : out) v /= g.get_si();
  return out;
}

}  // namespace

RootSystem RootSystem::build(const std::string& type) {
  RootSystem rs;
  rs.type_ = type;
  rs.cartan_ = cartan_for(type, rs.rank_);
  rs.sym_ = symmetrize(rs.cartan_);
  int r = rs.rank_;

  // Generate positive roots from the simple ones by extending root strings:
  // beta + alpha_i is a root iff q = p - <beta, alpha_i-vee> is positive,
  // where p counts how far the string continues below beta.
  std::set<IntVec> roots;
  for (int i = 0; i < r; ++i) {
    IntVec e(r, 0);
    e[i] = 1;
    roots.insert(e);
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& beta : std::vector<IntVec>(roots.begin(), roots.end())) {
      for (int i = 0; i < r; ++i) {
        long pair = 0;
        for (int j = 0; j < r; ++j) pair += rs.cartan_[i][j] * beta[j];
        // Root strings never pass through zero, and for positive beta the
        // descending string stays positive, so counting inside the positive
        // set is enough.
        long p = 0;
        IntVec down = beta;
        for (;;) {
          down[i] -= 1;
          if (!roots.count(down)) break;
          ++p;
        }
        if (p - pair >= 1) {
          IntVec up = beta;
          up[i] += 1;
          if (!roots.count(up)) {
            roots.insert(up);
            grew = true;
          }
        }
      }
    }
  }

  std::vector<IntVec> sorted(roots.begin(), roots.end());
  std::sort(sorted.begin(), sorted.end(), [](const IntVec& a, const IntVec& b) {
    long ha = std::accumulate(a.begin(), a.end(), 0L);
    long hb = std::accumulate(b.begin(), b.end(), 0L);
    if (ha != hb) return ha < hb;
    return a > b;  // earlier simple support first within a height level
  });

  for (const auto& m : sorted) {
    Root root;
    root.simple = m;
    root.height = std::accumulate(m.begin(), m.end(), 0L);
    root.fund.assign(r, 0);
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i) root.fund[j] += rs.cartan_[j][i] * m[i];
    long norm = 0;  // (alpha, alpha)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) norm += m[i] * m[j] * rs.sym_[i] * rs.cartan_[i][j];
    if (norm % 2 != 0) throw SignInconsistencyError("odd root norm");
    root.half_norm = norm / 2;
    root.coroot.assign(r, 0);
    for (int i = 0; i < r; ++i) {
      long num = m[i] * rs.sym_[i];
      if (num % root.half_norm != 0)
        throw SignInconsistencyError("non-integral coroot coordinate");
      root.coroot[i] = num / root.half_norm;
    }
    rs.index_[m] = static_cast<int>(rs.pos_.size());
    rs.pos_.push_back(std::move(root));
  }

  rs.simple_to_pos_.assign(r, -1);
  for (int a = 0; a < rs.npos(); ++a)
    if (rs.pos_[a].height == 1) rs.simple_to_pos_[rs.simple_index_of(a)] = a;
  return rs;
}

int RootSystem::signed_index(const IntVec& coords) const {
  auto it = index_.find(coords);
  if (it != index_.end()) return it->second + 1;
  IntVec neg(coords.size());
  for (size_t i = 0; i < coords.size(); ++i) neg[i] = -coords[i];
  it = index_.find(neg);
  if (it != index_.end()) return -(it->second + 1);
  return 0;
}

Rat RootSystem::eval_on_coroot(const Weight& lam, int a) const {
  const Root& root = pos_.at(a);
  Rat out = 0;
  for (int i = 0; i < rank_; ++i) out += lam[i] * Rat(root.coroot[i]);
  return out;
}

long RootSystem::pairing_pos(int a, int b) const {
  const IntVec& m = pos_.at(a).simple;
  const IntVec& n = pos_.at(b).simple;
  long out = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) out += m[i] * n[j] * sym_[i] * cartan_[i][j];
  return out;
}

int RootSystem::simple_index_of(int a) const {
  const Root& root = pos_.at(a);
  if (root.height != 1)
    throw ValidationError("root index does not name a simple root");
  for (int i = 0; i < rank_; ++i)
    if (root.simple[i] == 1) return i;
  throw ValidationError("corrupt simple root");
}

bool RootSystem::regular(const Weight& lam_plus_rho) const {
  for (int a = 0; a < npos(); ++a)
    if (eval_on_coroot(lam_plus_rho, a) == 0) return false;
  return true;
}

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(&rs) {
  int r = rs.rank();
  auto ident = [&] {
    std::vector<IntVec> m(r, IntVec(r, 0));
    for (int i = 0; i < r; ++i) m[i][i] = 1;
    return m;
  };
  // Reflection matrices on fundamental coordinates:
  // (s_i lam)_j = lam_j - lam_i * alpha_i(h_j).
  std::vector<std::vector<IntVec>> refl(r);
  for (int i = 0; i < r; ++i) {
    refl[i] = ident();
    int a = rs.pos_index_of_simple(i);
    for (int j = 0; j < r; ++j) refl[i][j][i] -= rs.pos(a).fund[j];
  }

  auto matmul = [&](const std::vector<IntVec>& x, const std::vector<IntVec>& y) {
    std::vector<IntVec> out(r, IntVec(r, 0));
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k)
        for (int j = 0; j < r; ++j) out[i][j] += x[i][k] * y[k][j];
    return out;
  };

  elts_.push_back(WeylElt{{}, ident()});
  lookup_[elts_[0].mat] = 0;
  size_t level_begin = 0;
  while (level_begin < elts_.size()) {
    size_t level_end = elts_.size();
    for (size_t e = level_begin; e < level_end; ++e) {
      for (int i = 0; i < r; ++i) {
        auto m = matmul(elts_[e].mat, refl[i]);
        if (lookup_.count(m)) continue;
        WeylElt next;
        next.word = elts_[e].word;
        next.word.push_back(i);
        next.mat = m;
        lookup_[next.mat] = static_cast<int>(elts_.size());
        elts_.push_back(std::move(next));
      }
    }
    level_begin = level_end;
  }

  simple_elt_.assign(r, -1);
  for (int i = 0; i < r; ++i) simple_elt_[i] = lookup_.at(refl[i]);
  longest_ = static_cast<int>(elts_.size()) - 1;
  // BFS order guarantees the last element has maximal length; confirm it is
  // the unique one.
  for (int e = 0; e + 1 < static_cast<int>(elts_.size()); ++e)
    if (elts_[e].length() == elts_.back().length())
      throw SignInconsistencyError("longest element is not unique");
}

int WeylGroup::mult(int a, int b) const {
  int r = rs_->rank();
  const auto& x = elts_.at(a).mat;
  const auto& y = elts_.at(b).mat;
  std::vector<IntVec> out(r, IntVec(r, 0));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k)
      for (int j = 0; j < r; ++j) out[i][j] += x[i][k] * y[k][j];
  return lookup_.at(out);
}

int WeylGroup::inverse(int a) const {
  for (int b = 0; b < size(); ++b)
    if (mult(a, b) == 0) return b;
  throw SignInconsistencyError("group element without inverse");
}

int WeylGroup::from_word(const std::vector<int>& word) const {
  int w = 0;
  for (int i : word) {
    if (i < 0 || i >= rs_->rank())
      throw ValidationError("reduced word letter out of range");
    w = mult(w, simple_elt_[i]);
  }
  return w;
}

int WeylGroup::find(const std::vector<IntVec>& mat) const {
  auto it = lookup_.find(mat);
  if (it == lookup_.end()) throw ValidationError("matrix is not a Weyl element");
  return it->second;
}

Weight WeylGroup::act(int w, const Weight& lam) const {
  int r = rs_->rank();
  const auto& m = elts_.at(w).mat;
  Weight out(r, Rat(0));
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) out[j] += Rat(m[j][k]) * lam[k];
  return out;
}

Weight WeylGroup::dot(int w, const Weight& lam) const {
  int r = rs_->rank();
  Weight shifted(r);
  for (int i = 0; i < r; ++i) shifted[i] = lam[i] + 1;
  Weight out = act(w, shifted);
  for (int i = 0; i < r; ++i) out[i] -= 1;
  return out;
}

ParabolicData parabolic(const RootSystem& rs, const WeylGroup& W,
                        std::vector<int> theta) {
  std::sort(theta.begin(), theta.end());
  theta.erase(std::unique(theta.begin(), theta.end()), theta.end());
  for (int i : theta)
    if (i < 0 || i >= rs.rank())
      throw ValidationError("parabolic subset index out of range");

  ParabolicData par;
  par.theta = theta;
  // A parabolic element's canonical reduced word only uses letters in theta.
  std::set<int> letters(theta.begin(), theta.end());
  for (int e = 0; e < W.size(); ++e) {
    bool inside = true;
    for (int i : W.elt(e).word)
      if (!letters.count(i)) {
        inside = false;
        break;
      }
    if (inside) par.subgroup.push_back(e);
  }
  par.longest_sub = par.subgroup.back();
  for (int e : par.subgroup)
    if (e != par.longest_sub &&
        W.elt(e).length() == W.elt(par.longest_sub).length())
      throw SignInconsistencyError("parabolic longest element is not unique");

  std::vector<char> seen(W.size(), 0);
  for (int w = 0; w < W.size(); ++w) {
    if (seen[w]) continue;
    ParabolicCoset coset;
    std::set<int> members;
    for (int u : par.subgroup) members.insert(W.mult(u, w));
    coset.members.assign(members.begin(), members.end());
    for (int m : coset.members) seen[m] = 1;
    coset.shortest = coset.members.front();  // BFS index order = (length, word)
    int best = coset.members.front();
    int ties = 0;
    for (int m : coset.members) {
      if (W.elt(m).length() > W.elt(best).length()) best = m, ties = 0;
      else if (m != best && W.elt(m).length() == W.elt(best).length()) ++ties;
    }
    if (ties) throw SignInconsistencyError("coset longest element is not unique");
    coset.longest = best;
    par.cosets.push_back(std::move(coset));
  }
  return par;
}

std::vector<int> positive_roots_supported_on(const RootSystem& rs,
                                             const std::vector<int>& theta) {
  std::vector<char> in_theta(rs.rank(), 0);
  for (int i : theta) in_theta[i] = 1;
  std::vector<int> out;
  for (int a = 0; a < rs.npos(); ++a) {
    bool ok = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (rs.pos(a).simple[i] != 0 && !in_theta[i]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(a);
  }
  return out;
}

Weight dominant_representative(const RootSystem& rs, const WeylGroup& W,
                               const ParabolicData& par, const Weight& lam) {
  Weight lam_rho(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) lam_rho[i] = lam[i] + 1;
  if (!rs.regular(lam_rho))
    throw SingularWeightError("lambda + rho is singular");

  std::vector<int> levi_pos = positive_roots_supported_on(rs, par.theta);
  bool found = false;
  Weight result;
  for (int u : par.subgroup) {
    Weight mu = W.dot(u, lam);
    Weight mu_rho(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) mu_rho[i] = mu[i] + 1;
    bool dominant = true;
    for (int a : levi_pos)
      if (rs.eval_on_coroot(mu_rho, a) <= 0) {
        dominant = false;
        break;
      }
    if (dominant) {
      if (found) throw SingularWeightError("dominant representative is not unique");
      found = true;
      result = mu;
    }
  }
  if (!found) throw SingularWeightError("no dominant representative in the orbit");
  return result;
}

}  // namespace whit
