#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "symdet/errors.hpp"

namespace symdet {

// Every mu/nu/F/Q/weight value is exact; they outgrow 64 bits around m = 4.
using Count = mpz_class;
using SignedCount = mpz_class;

inline Count pow_u(std::uint64_t base, std::uint64_t exp) {
  Count r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return r;
}

// Division in the closed formulas is provably exact; an inexact quotient means
// a transcription bug, so it aborts instead of rounding.
inline SignedCount exact_div(const SignedCount& num, const SignedCount& den,
                             const char* what) {
  if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    fail(errc::inexact_division, std::string(what) + ": " + num.get_str() +
                                     " not divisible by " + den.get_str());
  SignedCount r;
  mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

}  // namespace symdet
