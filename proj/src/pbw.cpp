#include "whit/pbw.hpp"

#include <cstdlib>
#include <string>

#include "whit/error.hpp"

namespace whit {

namespace {

std::size_t term_cap_from_env() {
  const char* s = std::getenv("WHIT_TERM_CAP");
  if (s == nullptr || *s == '\0') return 4000000;
  char* end = nullptr;
  unsigned long v = std::strtoul(s, &end, 10);
  if (end == nullptr || *end != '\0' || v == 0)
    throw ValidationError("WHIT_TERM_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

}  // namespace

std::string mono_str(const Mono& m, const RootSystem& rs) {
  const int n = rs.npos();
  const int r = rs.rank();
  std::string out;
  auto append = [&](char kind, int onebased, int exp) {
    if (exp == 0) return;
    if (!out.empty()) out += ' ';
    out += kind;
    out += '[' + std::to_string(onebased) + ']';
    if (exp > 1) out += '^' + std::to_string(exp);
  };
  for (int s = 0; s < n; ++s) append('y', n - s, m[s]);
  for (int i = 0; i < r; ++i) append('h', i + 1, m[n + i]);
  for (int a = 0; a < n; ++a) append('x', a + 1, m[n + r + a]);
  return out.empty() ? "1" : out;
}

UEA::UEA(const RootSystem& rs, const ChevalleyBasis& cb)
    : rs_(&rs), cb_(&cb), n_(rs.npos()), r_(rs.rank()),
      term_cap_(term_cap_from_env()) {
  auto term_of_slot = [&](int s) {
    GenTerm g{1, 0, 0};
    if (is_y_slot(s))
      g.sroot = -(root_of_slot(s) + 1);
    else if (is_x_slot(s))
      g.sroot = root_of_slot(s) + 1;
    else
      g.hidx = s - n_;
    return g;
  };
  auto slot_of_term = [&](const GenTerm& t) {
    if (t.sroot > 0) return slot_x(t.sroot - 1);
    if (t.sroot < 0) return slot_y(-t.sroot - 1);
    return slot_h(t.hidx);
  };
  swap_.resize(nslots());
  for (int p = 0; p < nslots(); ++p) {
    swap_[p].resize(p);
    for (int q = 0; q < p; ++q)
      for (const GenTerm& t : cb_->bracket(term_of_slot(p), term_of_slot(q)))
        swap_[p][q].push_back({slot_of_term(t), t.coef});
  }
}

UEA::Elt UEA::scalar(const Rat& c) const {
  Elt e;
  if (c != 0) e[Mono{}] = c;
  return e;
}

UEA::Elt UEA::gen(int slot) const {
  Mono m{};
  m[slot] = 1;
  Elt e;
  e[m] = 1;
  return e;
}

void UEA::add_term(Elt& out, const Mono& m, const Rat& c) const {
  if (c == 0) return;
  auto [it, fresh] = out.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) out.erase(it);
  }
  if (out.size() > term_cap_)
    throw ResourceLimitError("element exceeds the term cap of " +
                             std::to_string(term_cap_) +
                             " monomials (WHIT_TERM_CAP raises it)");
}

UEA::Elt UEA::add(Elt a, const Elt& b) const {
  for (const auto& [m, c] : b) add_term(a, m, c);
  return a;
}

UEA::Elt UEA::scale(Elt a, const Rat& c) const {
  if (c == 0) return Elt{};
  for (auto& [m, v] : a) v *= c;
  return a;
}

void UEA::mono_times_gen(Elt& out, const Mono& m, const Rat& c, int s) const {
  int t = -1;
  for (int i = nslots() - 1; i >= 0; --i)
    if (m[i] != 0) {
      t = i;
      break;
    }
  if (t <= s) {
    Mono m2 = m;
    if (m2[s] == 255)
      throw ResourceLimitError("monomial exponent overflows its slot");
    ++m2[s];
    add_term(out, m2, c);
    return;
  }
  Mono mp = m;
  --mp[t];
  Elt left;
  mono_times_gen(left, mp, c, s);
  for (const auto& [m1, c1] : left) mono_times_gen(out, m1, c1, t);
  for (const auto& [slot2, coef] : swap_[t][s])
    mono_times_gen(out, mp, c * coef, slot2);
}

UEA::Elt UEA::mul_gen(const Elt& e, int slot) const {
  Elt out;
  for (const auto& [m, c] : e) mono_times_gen(out, m, c, slot);
  return out;
}

UEA::Elt UEA::mul(const Elt& a, const Elt& b) const {
  Elt out;
  for (const auto& [m2, c2] : b) {
    Elt cur = a;
    for (int s = 0; s < nslots(); ++s)
      for (int k = 0; k < m2[s]; ++k) cur = mul_gen(cur, s);
    for (const auto& [m, c] : cur) add_term(out, m, c * c2);
  }
  return out;
}

Mono UEA::tau_mono(const Mono& m) const {
  Mono t = m;
  for (int a = 0; a < n_; ++a) {
    t[slot_y(a)] = m[slot_x(a)];
    t[slot_x(a)] = m[slot_y(a)];
  }
  return t;
}

UEA::Elt UEA::tau(const Elt& e) const {
  Elt out;
  for (const auto& [m, c] : e) out[tau_mono(m)] = c;
  return out;
}

IntVec UEA::ad_weight(const Mono& m) const {
  IntVec w(rs_->rank(), 0);
  for (int a = 0; a < n_; ++a) {
    long d = static_cast<long>(m[slot_x(a)]) - static_cast<long>(m[slot_y(a)]);
    if (d == 0) continue;
    const IntVec& sc = rs_->pos(a).simple;
    for (int i = 0; i < rs_->rank(); ++i) w[i] += d * sc[i];
  }
  return w;
}

long UEA::deg_y(const Mono& m) const {
  long d = 0;
  for (int a = 0; a < n_; ++a) d += m[slot_y(a)];
  return d;
}

long UEA::deg_x(const Mono& m) const {
  long d = 0;
  for (int a = 0; a < n_; ++a) d += m[slot_x(a)];
  return d;
}

long UEA::deg_total(const Mono& m) const {
  long d = 0;
  for (int s = 0; s < nslots(); ++s) d += m[s];
  return d;
}

std::string UEA::str(const Elt& e) const {
  if (e.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : e) {
    const bool neg = c < 0;
    const Rat mag = neg ? Rat(-c) : c;
    std::string ms = mono_str(m, *rs_);
    std::string base;
    if (ms == "1")
      base = rat_str(mag);
    else if (mag == 1)
      base = ms;
    else
      base = rat_str(mag) + " " + ms;
    if (out.empty())
      out = (neg ? "-" : "") + base;
    else
      out += (neg ? " - " : " + ") + base;
  }
  return out;
}

}  // namespace whit
