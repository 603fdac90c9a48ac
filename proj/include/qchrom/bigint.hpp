#pragma once

#include <gmpxx.h>

#include <string>

#include "qchrom/errors.hpp"

namespace qchrom {

// Exact arbitrary-precision arithmetic for everything on the certification
// path. A multinomial like (3l; l,l,l) overflows 64 bits near l = 7, so no
// fixed-width integer appears anywhere downstream of these aliases.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string dec(const Int& v) { return v.get_str(); }

inline Int int_from_dec(const std::string& s) {
  try {
    return Int(s, 10);
  } catch (const std::invalid_argument&) {
    throw parameter_error("not a decimal integer: '" + s + "'");
  }
}

// ceil(a / b), b > 0.
inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const Int& d, const Int& a) {
  return d != 0 && mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Quotient known to be exact; throws invariant_violation otherwise.
inline Int exact_div(const Int& a, const Int& d, const char* what = "quotient") {
  if (!divides(d, a)) {
    throw invariant_violation(std::string(what) + " is not an integer: " +
                              dec(a) + " / " + dec(d));
  }
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Int abs_int(const Int& a) {
  Int r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

}  // namespace qchrom
