#pragma once

#include "symdet/bigint.hpp"
#include "symdet/gf.hpp"
#include "symdet/symmat.hpp"

namespace symdet {

// Gaussian binomial [n over k] in base q^2:
// prod_{i=0}^{k-1} (q^{2n} - q^{2i}) / (q^{2k} - q^{2i}).
// 0 outside 0 <= k <= n, 1 at k = 0. Numerator and denominator are multiplied
// out fully and divided once, exactly.
Count gauss2(const Field& f, int n, int k);

// Number of symmetric m x m matrices of rank 2r+1:
// (1/q^r) prod_{i=0}^{2r} (q^m - q^i) / prod_{i=0}^{r-1} (q^{2r} - q^{2i}).
Count mu_odd(const Field& f, int m, int r);

// Number of symmetric m x m matrices of rank 2r and type tau:
// ((q^r + tau)/2) prod_{i=0}^{2r-1} (q^m - q^i) / prod_{i=0}^{r-1} (q^{2r} - q^{2i}).
// r = 0 gives 1 for tau = +1 and 0 for tau = -1.
Count mu_even_typed(const Field& f, int m, int r, int tau);

// Number of symmetric m x m matrices of rank r (both types merged).
Count mu(const Field& f, int m, int r);

// Stratum size for a (rank, type) pair.
Count mu_rt(const Field& f, int m, const RankType& s);

// |X_{<=t}| = sum_{r=0}^{t} mu_r(m), the code length nu_m(t).
Count nu(const Field& f, int m, int t);

}  // namespace symdet
