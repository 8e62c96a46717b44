#pragma once

#include "symdet/bigint.hpp"
#include "symdet/gf.hpp"
#include "symdet/symmat.hpp"

namespace symdet {

// Q-number Q_{k,eps}(i,tau) of the symmetric-matrix association scheme: the
// character sum over the row stratum X_{k,eps} evaluated against any matrix
// of the column stratum X_{i,tau}. Exact integer; the /2 branches divide the
// full numerator once and must come out exact.
SignedCount q_number(const Field& f, int m, const RankType& row,
                     const RankType& col);

}  // namespace symdet
