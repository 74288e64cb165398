#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "whit/error.hpp"

namespace whit {

// All arithmetic in this project is exact.  Rat is GMP's rational; note that
// mpq_class never canonicalizes a numerator/denominator pair on its own, so
// construction from two integers must go through rat_of.  The helpers below
// also pin down one serialization ("p/q", q > 0, lowest terms, bare "p" when
// q == 1) so outputs are byte-identical across runs.
using Rat = mpq_class;

inline Rat rat_of(long n) { return Rat(n); }

inline Rat rat_of(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& q);

// Accepts "p", "p/q", optional leading '-'.  Throws ValidationError with a
// position-free message; the expression parser adds its own positions.
Rat rat_parse(const std::string& s);

// Integer vectors show up all over root combinatorics.
using IntVec = std::vector<long>;
using RatVec = std::vector<Rat>;

std::string ratvec_str(const RatVec& v);

inline bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace whit
