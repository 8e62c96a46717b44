#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "symdet/bigint.hpp"
#include "symdet/gf.hpp"
#include "symdet/symmat.hpp"

namespace symdet {

struct WeightRow {
  int k = 0;
  int tau = 1;
  Count weight;
  Count multiplicity;
};

// Full weight distribution of the code of length nu_m(t) and dimension
// m(m+1)/2: one row per (k, tau) stratum in display order (the zero row
// first), the aggregated enumerator with equal weights merged, and the
// minimum distances of the affine code and its projective quotient.
struct WeightTable {
  std::uint64_t q = 0;
  int m = 0;
  int t = 0;
  Count length;
  int dimension = 0;
  std::vector<WeightRow> rows;
  std::vector<std::pair<Count, Count>> aggregated;  // (weight, multiplicity)
  Count min_distance;
  Count projective_length;
  Count projective_min_distance;
};

// Restricted weight w_k^tau(r, m): how many rank-r matrices A have
// Tr(BA) != 0 for B in stratum (k, tau). Zero when k = 0 or r = 0.
Count restricted_weight(const Field& f, int m, int k, int tau, int r);

// Full codeword weight W_k^tau(t, m) by the closed forms (split on the
// parity of t). With cross_check set it also recomputes the value as
// sum_{r<=t} restricted_weight and aborts on disagreement.
Count weight(const Field& f, int m, int t, int k, int tau,
             bool cross_check = false);

WeightTable weight_distribution(const Field& f, int m, int t);

// Minimum distance: W_1 for even t, W_2^{+1} for odd t, always verified
// against the minimum over all strata (which is the returned value).
Count min_distance(const Field& f, int m, int t);

Count projective_length(const Field& f, int m, int t);
Count min_distance_projective(const Field& f, int m, int t);

// Number of A in X_{<=t} whose delta-partial k-trace
// a_11 + ... + a_{k-1,k-1} + delta a_kk equals alpha. The functional is
// Tr(G A) for G = diag(1,...,1,delta,0,...,0), so the answer follows from
// W_k^tau(t, m) with tau = type of G.
Count partial_trace_count(const Field& f, int m, int t, int k, Felem delta,
                          Felem alpha);

// {"q","m","t","length","dimension","rows","aggregated","min_distance",
//  "projective"} with every potentially large integer as a decimal string.
nlohmann::ordered_json weight_table_json(const WeightTable& wt);

// CSV: "weight,multiplicity" header plus one aggregated pair per line.
std::string weight_table_csv(const WeightTable& wt);

}  // namespace symdet
