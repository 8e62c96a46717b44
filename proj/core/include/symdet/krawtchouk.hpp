#pragma once

#include "symdet/bigint.hpp"
#include "symdet/gf.hpp"
#include "symdet/guard.hpp"

namespace symdet {

// Generalized Krawtchouk polynomial value F_r^(m)(s): with n = floor(m/2) and
// c = q^(m-1) for even m, q^m for odd m,
//   F = sum_{j=0}^{r} (-1)^(r-j) q^((r-j)(r-j-1)) [n-j over n-r] [n-s over j] c^j
// over the q^2-Gaussian binomials. Returns 0 whenever r or s falls outside
// [0, n]; downstream weight formulas rely on that vanishing (including
// F_{-1} := 0).
SignedCount kraw_F(const Field& f, int m, int r, int s);

// Brute-force |Omega_s|: the number of skew-symmetric m x m matrices of rank
// exactly 2s. Equals kraw_F(m, s, 0).
Count skew_rank_count(const Field& f, int m, int s, const GuardPolicy& g);

}  // namespace symdet
