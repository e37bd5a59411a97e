#pragma once

#include <gmpxx.h>

#include <string>

#include "covhom/error.hpp"

namespace covhom {

// Exact rational scalar used throughout.  mpq_class keeps values canonical
// after arithmetic; only the two-argument constructor needs an explicit
// canonicalize, which rat() takes care of.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) fail("DivisionByZero", "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

inline long rat_to_long(const Rat& q) {
  if (!rat_is_integer(q) || !q.get_num().fits_slong_p())
    fail_guard("InternalCheckFailed", "expected a small integer, got " + q.get_str());
  return q.get_num().get_si();
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace covhom
