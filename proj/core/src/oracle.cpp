#include "symdet/oracle.hpp"

#include <cmath>
#include <string>

#include "symdet/combinat.hpp"
#include "symdet/errors.hpp"

namespace symdet {

namespace {

void check_uniform(const TraceDistribution& d, const std::string& what) {
  for (std::size_t c = 2; c < d.counts.size(); ++c)
    if (d.counts[c] != d.counts[1])
      fail(errc::uniformity_violation,
           what + ": count at value 1 is " + d.counts[1].get_str() +
               " but at value " + std::to_string(c) + " is " +
               d.counts[c].get_str());
}

double dpow(std::uint64_t q, std::size_t n) {
  return std::pow(static_cast<double>(q), static_cast<double>(n));
}

}  // namespace

Count TraceDistribution::total() const {
  Count acc = 0;
  for (const Count& c : counts) acc += c;
  return acc;
}

SignedCount TraceDistribution::char_sum() const {
  return counts[0] - counts[1];
}

std::map<RankType, Count> census(const Field& f, int m, const GuardPolicy& g) {
  std::map<RankType, Count> tally;
  for (const RankType& s : strata(m)) tally[s] = 0;
  for_each_sym(f, m, g,
               [&](const SymMatrix& a) { ++tally[rank_type(f, a)]; });
  return tally;
}

TraceDistribution trace_distribution(const Field& f, int m,
                                     const RankType& stratum,
                                     const SymMatrix& a, const GuardPolicy& g) {
  if (!valid_stratum(m, stratum))
    fail(errc::range_error, "trace_distribution: no stratum " +
                                stratum_name(stratum) +
                                " for m = " + std::to_string(m));
  if (a.m != m) fail(errc::size_mismatch, "reference matrix has wrong size");
  TraceDistribution d;
  d.counts.assign(f.q(), 0);
  for_each_sym(f, m, g, [&](const SymMatrix& b) {
    if (rank_type(f, b) == stratum) ++d.counts[trace_pair(f, a, b).v];
  });
  check_uniform(d, "trace_distribution over " + stratum_name(stratum));
  return d;
}

std::vector<TraceDistribution> trace_distributions_all(const Field& f, int m,
                                                       const SymMatrix& a,
                                                       const GuardPolicy& g) {
  if (a.m != m) fail(errc::size_mismatch, "reference matrix has wrong size");
  const std::vector<RankType> all = strata(m);
  std::map<RankType, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = i;
  std::vector<TraceDistribution> out(all.size());
  for (auto& d : out) d.counts.assign(f.q(), 0);
  for_each_sym(f, m, g, [&](const SymMatrix& b) {
    ++out[index[rank_type(f, b)]].counts[trace_pair(f, a, b).v];
  });
  for (std::size_t i = 0; i < all.size(); ++i)
    check_uniform(out[i], "trace_distribution over " + stratum_name(all[i]));
  return out;
}

WeightTable brute_weight_table(const Field& f, int m, int t, BruteMode mode,
                               const GuardPolicy& g) {
  if (t < 1 || t > m)
    fail(errc::range_error, "brute_weight_table: t = " + std::to_string(t) +
                                " outside [1, " + std::to_string(m) + "]");
  const std::size_t dim = static_cast<std::size_t>(m) * (m + 1) / 2;
  const std::vector<RankType> all = strata(m);

  std::vector<SymMatrix> points = enumerate_rank_at_most(f, m, t, g);
  const double npoints = static_cast<double>(points.size());

  std::map<RankType, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = i;
  std::vector<Count> stratum_weight(all.size(), 0);
  std::vector<Count> stratum_mult(all.size(), 0);
  std::vector<bool> seen(all.size(), false);

  auto point_weight = [&](const SymMatrix& b) {
    Count w = 0;
    for (const SymMatrix& a : points)
      if (trace_pair(f, b, a) != f.zero()) ++w;
    return w;
  };

  if (mode == BruteMode::full) {
    g.check_ops(dpow(f.q(), dim) * npoints, "full weight table scan");
    for_each_sym(f, m, g, [&](const SymMatrix& b) {
      const std::size_t i = index[rank_type(f, b)];
      const Count w = point_weight(b);
      if (!seen[i]) {
        stratum_weight[i] = w;
        seen[i] = true;
      } else if (stratum_weight[i] != w) {
        fail(errc::stratum_weight_violation,
             "stratum " + stratum_name(all[i]) + " carries weights " +
                 stratum_weight[i].get_str() + " and " + w.get_str());
      }
      ++stratum_mult[i];
    });
  } else {
    g.check_ops(npoints * static_cast<double>(all.size()),
                "representative weight table scan");
    for (std::size_t i = 0; i < all.size(); ++i) {
      const SymMatrix b = representative(f, m, all[i].rank, all[i].type);
      stratum_weight[i] = point_weight(b);
      stratum_mult[i] = mu_rt(f, m, all[i]);
      seen[i] = true;
    }
  }

  WeightTable wt;
  wt.q = f.q();
  wt.m = m;
  wt.t = t;
  wt.length = static_cast<unsigned long>(points.size());
  wt.dimension = static_cast<int>(dim);
  for (std::size_t i = 0; i < all.size(); ++i)
    wt.rows.push_back(
        {all[i].rank, all[i].type, stratum_weight[i], stratum_mult[i]});

  std::map<Count, Count> agg;
  for (const WeightRow& row : wt.rows) agg[row.weight] += row.multiplicity;
  bool have_min = false;
  for (auto& [w, mult] : agg) {
    wt.aggregated.emplace_back(w, mult);
    if (w != 0 && !have_min) {
      wt.min_distance = w;
      have_min = true;
    }
  }
  wt.projective_length =
      exact_div(wt.length - 1, Count(f.q() - 1), "brute projective length");
  wt.projective_min_distance = exact_div(wt.min_distance, Count(f.q() - 1),
                                         "brute projective min distance");
  return wt;
}

TraceDistribution skew_pair_distribution(const Field& f, int m, int r,
                                         const SkewMatrix& a,
                                         const GuardPolicy& g) {
  if (r < 0 || 2 * r > m)
    fail(errc::range_error, "skew_pair_distribution: rank 2*" +
                                std::to_string(r) + " does not fit in m = " +
                                std::to_string(m));
  if (a.m != m) fail(errc::size_mismatch, "reference matrix has wrong size");
  TraceDistribution d;
  d.counts.assign(f.q(), 0);
  for_each_skew(f, m, g, [&](const SkewMatrix& b) {
    if (skew_rank(f, b) == 2 * r) ++d.counts[skew_pair(f, a, b).v];
  });
  check_uniform(d, "skew_pair_distribution over rank " + std::to_string(2 * r));
  return d;
}

std::vector<TraceDistribution> skew_pair_distributions_all(
    const Field& f, int m, const SkewMatrix& a, const GuardPolicy& g) {
  if (a.m != m) fail(errc::size_mismatch, "reference matrix has wrong size");
  const int n = m / 2;
  std::vector<TraceDistribution> out(n + 1);
  for (auto& d : out) d.counts.assign(f.q(), 0);
  for_each_skew(f, m, g, [&](const SkewMatrix& b) {
    ++out[skew_rank(f, b) / 2].counts[skew_pair(f, a, b).v];
  });
  for (int s = 0; s <= n; ++s)
    check_uniform(out[s],
                  "skew_pair_distribution over rank " + std::to_string(2 * s));
  return out;
}

}  // namespace symdet
