#include "symdet/weights.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "symdet/combinat.hpp"
#include "symdet/errors.hpp"
#include "symdet/krawtchouk.hpp"

namespace symdet {

namespace {

void check_stratum(const char* what, int m, int k, int tau) {
  if (!valid_stratum(m, {k, tau}))
    fail(errc::range_error, std::string(what) + ": no stratum (" +
                                std::to_string(k) + ", " + std::to_string(tau) +
                                ") for m = " + std::to_string(m));
}

void check_t(const char* what, int m, int t, int lo) {
  if (t < lo || t > m)
    fail(errc::range_error, std::string(what) + ": t = " + std::to_string(t) +
                                " outside [" + std::to_string(lo) + ", " +
                                std::to_string(m) + "]");
}

Count qm1_over_q(const Field& f, const SignedCount& inner, const char* what) {
  const std::uint64_t q = f.q();
  return exact_div(SignedCount((q - 1) * inner), SignedCount(q), what);
}

}  // namespace

Count restricted_weight(const Field& f, int m, int k, int tau, int r) {
  check_stratum("restricted_weight", m, k, tau);
  if (r < 0 || r > m)
    fail(errc::range_error,
         "restricted_weight: r = " + std::to_string(r) + " outside [0, " +
             std::to_string(m) + "]");
  if (k == 0 || r == 0) return 0;
  const std::uint64_t q = f.q();
  const int l = k / 2;
  if (r % 2 == 1) {
    const int rr = (r - 1) / 2;
    const Count base = mu_odd(f, m, rr);
    const Count qpow = pow_u(q, 2 * static_cast<std::uint64_t>(rr));
    if (k % 2 == 1)
      return qm1_over_q(f, base + qpow * kraw_F(f, m - 1, rr, l),
                        "restricted_weight odd/odd");
    return qm1_over_q(
        f,
        base + qpow * kraw_F(f, m - 1, rr, l - 1) -
            tau * pow_u(q, static_cast<std::uint64_t>(m - l + 2 * rr)) *
                kraw_F(f, m - 2, rr, l - 1),
        "restricted_weight even/odd");
  }
  const int rr = r / 2;
  const Count base = mu(f, m, r);
  const Count qpow = pow_u(q, 2 * static_cast<std::uint64_t>(rr));
  if (k % 2 == 1)
    return qm1_over_q(f, base - qpow * kraw_F(f, m - 1, rr, l),
                      "restricted_weight odd/even");
  return qm1_over_q(
      f,
      base - qpow * kraw_F(f, m - 1, rr, l - 1) +
          tau * pow_u(q, static_cast<std::uint64_t>(m - l + 2 * rr - 2)) *
              kraw_F(f, m - 2, rr - 1, l - 1),
      "restricted_weight even/even");
}

Count weight(const Field& f, int m, int t, int k, int tau, bool cross_check) {
  check_stratum("weight", m, k, tau);
  check_t("weight", m, t, 0);
  Count w;
  if (k == 0) {
    w = 0;
  } else {
    const std::uint64_t q = f.q();
    const Count total = nu(f, m, t);
    if (t % 2 == 0) {
      const int u = t / 2;
      const int arg = (k % 2 == 1) ? k / 2 : k / 2 - 1;
      w = qm1_over_q(f,
                     total - pow_u(q, static_cast<std::uint64_t>(t)) *
                                 kraw_F(f, m - 1, u, arg),
                     "weight even t");
    } else {
      const int u = (t - 1) / 2;
      if (k % 2 == 1) {
        w = qm1_over_q(f, total, "weight odd t, odd k");
      } else {
        const int l = k / 2;
        const Count w1 = qm1_over_q(f, total, "weight odd t, base");
        w = w1 - tau * qm1_over_q(
                           f,
                           pow_u(q, static_cast<std::uint64_t>(m - l + 2 * u)) *
                               kraw_F(f, m - 2, u, l - 1),
                           "weight odd t, even k");
      }
    }
  }
  if (cross_check) {
    Count acc = 0;
    for (int r = 1; r <= t; ++r) acc += restricted_weight(f, m, k, tau, r);
    if (acc != w)
      fail(errc::cross_check_mismatch,
           "weight(" + std::to_string(m) + "," + std::to_string(t) + "," +
               std::to_string(k) + "," + std::to_string(tau) +
               "): closed form " + w.get_str() + " vs stratified sum " +
               acc.get_str());
  }
  return w;
}

WeightTable weight_distribution(const Field& f, int m, int t) {
  check_t("weight_distribution", m, t, 1);
  WeightTable wt;
  wt.q = f.q();
  wt.m = m;
  wt.t = t;
  wt.length = nu(f, m, t);
  wt.dimension = m * (m + 1) / 2;
  for (const RankType& s : strata(m))
    wt.rows.push_back(
        {s.rank, s.type, weight(f, m, t, s.rank, s.type), mu_rt(f, m, s)});

  std::map<Count, Count> agg;
  for (const WeightRow& row : wt.rows) agg[row.weight] += row.multiplicity;
  for (auto& [w, mult] : agg) wt.aggregated.emplace_back(w, mult);

  wt.min_distance = min_distance(f, m, t);
  wt.projective_length = projective_length(f, m, t);
  wt.projective_min_distance = min_distance_projective(f, m, t);
  return wt;
}

Count min_distance(const Field& f, int m, int t) {
  check_t("min_distance", m, t, 1);
  Count best;
  bool have = false;
  for (const RankType& s : strata(m)) {
    if (s.rank == 0) continue;
    Count w = weight(f, m, t, s.rank, s.type);
    if (!have || w < best) {
      best = w;
      have = true;
    }
  }
  // designated stratum per the parity of t; m = 1 has no rank-2 stratum, so
  // only the argmin applies there
  if (t % 2 == 0 || m < 2) {
    if (t % 2 == 0) {
      const Count w1 = weight(f, m, t, 1, 0);
      if (w1 != best)
        fail(errc::cross_check_mismatch,
             "min_distance: W_1 = " + w1.get_str() + " but stratum minimum " +
                 best.get_str());
    }
  } else {
    const Count w2 = weight(f, m, t, 2, 1);
    if (w2 != best)
      fail(errc::cross_check_mismatch,
           "min_distance: W_2^{+1} = " + w2.get_str() +
               " but stratum minimum " + best.get_str());
  }
  return best;
}

Count projective_length(const Field& f, int m, int t) {
  check_t("projective_length", m, t, 1);
  return exact_div(nu(f, m, t) - 1, Count(f.q() - 1), "projective_length");
}

Count min_distance_projective(const Field& f, int m, int t) {
  return exact_div(min_distance(f, m, t), Count(f.q() - 1),
                   "projective min_distance");
}

Count partial_trace_count(const Field& f, int m, int t, int k, Felem delta,
                          Felem alpha) {
  if (k < 1 || k > m)
    fail(errc::range_error, "partial_trace_count: k = " + std::to_string(k) +
                                " outside [1, " + std::to_string(m) + "]");
  check_t("partial_trace_count", m, t, 0);
  if (delta == f.zero())
    fail(errc::range_error, "partial_trace_count: delta must be nonzero");
  SymMatrix g = sym_zero(m);
  for (int i = 0; i + 1 < k; ++i) g.set(i, i, f.one());
  g.set(k - 1, k - 1, delta);
  const int tau = rank_type(f, g).type;
  const Count w = weight(f, m, t, k, tau);
  if (alpha == f.zero()) return nu(f, m, t) - w;
  return exact_div(w, Count(f.q() - 1), "partial_trace_count");
}

nlohmann::ordered_json weight_table_json(const WeightTable& wt) {
  nlohmann::ordered_json j;
  j["q"] = wt.q;
  j["m"] = wt.m;
  j["t"] = wt.t;
  j["length"] = wt.length.get_str();
  j["dimension"] = wt.dimension;
  j["rows"] = nlohmann::ordered_json::array();
  for (const WeightRow& row : wt.rows)
    j["rows"].push_back({{"k", row.k},
                         {"tau", row.tau},
                         {"weight", row.weight.get_str()},
                         {"multiplicity", row.multiplicity.get_str()}});
  j["aggregated"] = nlohmann::ordered_json::array();
  for (const auto& [w, mult] : wt.aggregated)
    j["aggregated"].push_back(
        {{"weight", w.get_str()}, {"multiplicity", mult.get_str()}});
  j["min_distance"] = wt.min_distance.get_str();
  j["projective"] = {{"length", wt.projective_length.get_str()},
                     {"min_distance", wt.projective_min_distance.get_str()}};
  return j;
}

std::string weight_table_csv(const WeightTable& wt) {
  std::ostringstream os;
  os << "weight,multiplicity\n";
  for (const auto& [w, mult] : wt.aggregated)
    os << w.get_str() << ',' << mult.get_str() << '\n';
  return os.str();
}

}  // namespace symdet
