#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "whit/error.hpp"
#include "whit/levi.hpp"

using namespace whit;

namespace {

Weight random_weight(std::mt19937& rng, int rank) {
  Weight lam;
  for (int i = 0; i < rank; ++i)
    lam.push_back(rat_of(static_cast<long>(rng() % 13) - 6,
                         1 + static_cast<long>(rng() % 3)));
  return lam;
}

// All eta supports for a given rank, as 0/1 value maps.
std::vector<std::map<int, Rat>> all_supports(int rank) {
  std::vector<std::map<int, Rat>> out;
  for (int mask = 0; mask < (1 << rank); ++mask) {
    std::map<int, Rat> v;
    for (int i = 0; i < rank; ++i)
      if (mask & (1 << i)) v[i] = 1;
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("characters live on the simple roots") {
  RootSystem a2 = RootSystem::build("A2");
  EtaCharacter zero = make_character(a2, {});
  CHECK(zero.pi_eta.empty());
  EtaCharacter e1 = make_character(a2, {{0, Rat(1)}});
  CHECK(e1.pi_eta == std::vector<int>{0});
  CHECK(e1.values == RatVec{Rat(1), Rat(0)});
  EtaCharacter mixed = make_character(a2, {{0, rat_of(-2, 3)}, {1, Rat(0)}});
  CHECK(mixed.pi_eta == std::vector<int>{0});

  RootSystem a1 = RootSystem::build("A1");
  EtaCharacter nondeg = make_character(a1, {{0, Rat(1)}});
  CHECK(static_cast<int>(nondeg.pi_eta.size()) == a1.rank());

  CHECK_THROWS_AS(make_character(a1, {{1, Rat(1)}}), ValidationError);
  CHECK_THROWS_AS(make_character(a2, {{-1, Rat(1)}}), ValidationError);
}

TEST_CASE("eta on monomials is the multiplicative extension") {
  RootSystem a1 = RootSystem::build("A1");
  EtaCharacter e = make_character(a1, {{0, Rat(1)}});
  CHECK(eta_on_monomial(a1, e, {0}) == 1);
  CHECK(eta_on_monomial(a1, e, {3}) == 1);

  RootSystem a2 = RootSystem::build("A2");
  EtaCharacter e10 = make_character(a2, {{0, Rat(1)}});
  // exponent on the non-simple root alpha1+alpha2 kills the value
  CHECK(eta_on_monomial(a2, e10, {2, 0, 1}) == 0);
  CHECK(eta_on_monomial(a2, e10, {2, 0, 0}) == 1);
  CHECK(eta_on_monomial(a2, e10, {0, 1, 0}) == 0);

  RootSystem b2 = RootSystem::build("B2");
  EtaCharacter eb = make_character(b2, {{0, Rat(2)}, {1, rat_of(-1, 3)}});
  std::mt19937 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> k1(b2.npos()), k2(b2.npos()), sum(b2.npos());
    for (int a = 0; a < b2.npos(); ++a) {
      k1[a] = rng() % 3;
      k2[a] = rng() % 3;
      sum[a] = k1[a] + k2[a];
    }
    CHECK(eta_on_monomial(b2, eb, sum) ==
          eta_on_monomial(b2, eb, k1) * eta_on_monomial(b2, eb, k2));
  }
  CHECK(eta_on_monomial(b2, eb, {1, 2, 0, 0}) == Rat(2) * rat_of(1, 9));
}

TEST_CASE("levi datum partitions the positive roots") {
  for (const char* type : {"A1", "A2", "B2", "A1xA1", "A3"}) {
    RootSystem rs = RootSystem::build(type);
    WeylGroup W(rs);
    for (const auto& vals : all_supports(rs.rank())) {
      EtaCharacter eta = make_character(rs, vals);
      LeviDatum levi = make_levi(rs, W, eta);
      CHECK(levi.pi_eta == eta.pi_eta);
      std::set<int> seen(levi.sigma_eta_plus.begin(),
                         levi.sigma_eta_plus.end());
      for (int a : levi.n_complement) CHECK(seen.insert(a).second);
      CHECK(static_cast<int>(seen.size()) == rs.npos());
      CHECK(static_cast<int>(levi.z_basis.size()) ==
            rs.rank() - static_cast<int>(levi.pi_eta.size()));
      for (const IntVec& zb : levi.z_basis) {
        long g = 0;
        long lead = 0;
        for (long c : zb) {
          g = std::gcd(g, c);
          if (lead == 0) lead = c;
        }
        CHECK(g == 1);
        CHECK(lead > 0);
        // every Levi root vanishes on z
        for (int a : levi.sigma_eta_plus) {
          Rat val(0);
          for (int i = 0; i < rs.rank(); ++i)
            val += Rat(zb[i]) * Rat(rs.pos(a).fund[i]);
          CHECK(val == 0);
        }
      }
      CHECK(levi.w_eta.theta == eta.pi_eta);
    }
  }
}

TEST_CASE("frozen z bases") {
  RootSystem a2 = RootSystem::build("A2");
  WeylGroup wa2(a2);
  CHECK(make_levi(a2, wa2, make_character(a2, {{0, Rat(1)}})).z_basis ==
        std::vector<IntVec>{{1, 2}});
  CHECK(make_levi(a2, wa2, make_character(a2, {{1, Rat(1)}})).z_basis ==
        std::vector<IntVec>{{2, 1}});

  RootSystem b2 = RootSystem::build("B2");
  WeylGroup wb2(b2);
  CHECK(make_levi(b2, wb2, make_character(b2, {{0, Rat(1)}})).z_basis ==
        std::vector<IntVec>{{1, 1}});
  CHECK(make_levi(b2, wb2, make_character(b2, {{1, Rat(1)}})).z_basis ==
        std::vector<IntVec>{{2, 1}});

  RootSystem a1 = RootSystem::build("A1");
  WeylGroup wa1(a1);
  CHECK(make_levi(a1, wa1, make_character(a1, {{0, Rat(1)}})).z_basis.empty());
  CHECK(make_levi(a1, wa1, make_character(a1, {})).z_basis ==
        std::vector<IntVec>{{1}});
}

TEST_CASE("z weights are invariant under the parabolic dot action") {
  std::mt19937 rng(53);
  for (const char* type : {"A2", "B2", "A1xA1", "A3"}) {
    RootSystem rs = RootSystem::build(type);
    WeylGroup W(rs);
    for (const auto& vals : all_supports(rs.rank())) {
      EtaCharacter eta = make_character(rs, vals);
      LeviDatum levi = make_levi(rs, W, eta);
      for (int trial = 0; trial < 6; ++trial) {
        Weight lam = random_weight(rng, rs.rank());
        RatVec base = z_weight(rs, levi, lam);
        for (int w : levi.w_eta.subgroup)
          CHECK(z_weight(rs, levi, W.dot(w, lam)) == base);
      }
    }
  }
}

TEST_CASE("frozen z weight values") {
  RootSystem a2 = RootSystem::build("A2");
  WeylGroup W(a2);
  LeviDatum levi = make_levi(a2, W, make_character(a2, {{0, Rat(1)}}));
  Weight lam{Rat(2), Rat(3)};
  CHECK(z_weight(a2, levi, lam) == RatVec{Rat(8)});
  // s1 . (2,3) = (-4,6) restricts to the same value
  CHECK(z_weight(a2, levi, {Rat(-4), Rat(6)}) == RatVec{Rat(8)});
  // eta = 0 restricts to the weight itself
  LeviDatum full = make_levi(a2, W, make_character(a2, {}));
  CHECK(z_weight(a2, full, lam) == lam);
}

TEST_CASE("partial order on z restrictions") {
  RootSystem a2 = RootSystem::build("A2");
  WeylGroup W(a2);
  LeviDatum levi = make_levi(a2, W, make_character(a2, {{0, Rat(1)}}));
  CHECK(z_leq(a2, levi, {Rat(5)}, {Rat(8)}));
  CHECK(z_leq(a2, levi, {Rat(5)}, {Rat(5)}));
  CHECK(!z_leq(a2, levi, {Rat(8)}, {Rat(5)}));
  CHECK(z_leq(a2, levi, {rat_of(15, 2)}, {Rat(8)}));

  RootSystem aa = RootSystem::build("A1xA1");
  WeylGroup Waa(aa);
  LeviDatum free_z = make_levi(aa, Waa, make_character(aa, {}));
  CHECK(z_leq(aa, free_z, {Rat(0), Rat(0)}, {Rat(2), Rat(2)}));
  CHECK(!z_leq(aa, free_z, {Rat(0), Rat(0)}, {Rat(2), Rat(-2)}));
  CHECK(!z_leq(aa, free_z, {Rat(2), Rat(-2)}, {Rat(0), Rat(0)}));

  RootSystem a1 = RootSystem::build("A1");
  WeylGroup Wa1(a1);
  LeviDatum none = make_levi(a1, Wa1, make_character(a1, {{0, Rat(1)}}));
  CHECK(z_leq(a1, none, {}, {}));
}
