#pragma once

#include <map>
#include <vector>

#include "symdet/bigint.hpp"
#include "symdet/gf.hpp"
#include "symdet/guard.hpp"
#include "symdet/skew.hpp"
#include "symdet/symmat.hpp"
#include "symdet/weights.hpp"

namespace symdet {

// Distribution of a pairing value over one stratum: counts[c] is the number
// of stratum members whose pairing against the fixed reference matrix equals
// the element with enc c. Off-zero counts must be flat (that flatness is what
// lets exact counting stand in for complex character sums); char_sum is the
// resulting n_0 - n_nonzero.
struct TraceDistribution {
  std::vector<Count> counts;

  Count total() const;
  SignedCount char_sum() const;
};

enum class BruteMode { full, representative };

// Exhaustive rank/type tally of all q^{m(m+1)/2} symmetric matrices.
std::map<RankType, Count> census(const Field& f, int m, const GuardPolicy& g);

// Distribution of Tr(A.B) over B in one stratum. Throws
// UniformityViolation if the off-zero counts are not flat.
TraceDistribution trace_distribution(const Field& f, int m,
                                     const RankType& stratum,
                                     const SymMatrix& a, const GuardPolicy& g);

// One scan of the whole space, tallying every stratum at once; returned in
// strata(m) order.
std::vector<TraceDistribution> trace_distributions_all(const Field& f, int m,
                                                       const SymMatrix& a,
                                                       const GuardPolicy& g);

// Ground-truth weight table. full mode scans every codeword matrix B and
// asserts that each stratum carries a single weight; representative mode
// scans one diagonal representative per stratum and attaches the mu
// multiplicities.
WeightTable brute_weight_table(const Field& f, int m, int t, BruteMode mode,
                               const GuardPolicy& g);

// Distribution of the skew pairing over Omega_r = skew matrices of rank 2r.
TraceDistribution skew_pair_distribution(const Field& f, int m, int r,
                                         const SkewMatrix& a,
                                         const GuardPolicy& g);

// One scan tallying all skew ranks at once; index s holds the distribution
// over Omega_s, 0 <= s <= floor(m/2).
std::vector<TraceDistribution> skew_pair_distributions_all(
    const Field& f, int m, const SkewMatrix& a, const GuardPolicy& g);

}  // namespace symdet
