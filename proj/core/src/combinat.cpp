#include "symdet/combinat.hpp"

#include <string>

#include "symdet/errors.hpp"

namespace symdet {

namespace {

void check_rank_range(const char* what, int m, int rank) {
  if (rank < 0 || rank > m)
    fail(errc::range_error, std::string(what) + ": rank " +
                                std::to_string(rank) + " outside [0, " +
                                std::to_string(m) + "]");
}

}  // namespace

Count gauss2(const Field& f, int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k == 0) return 1;
  const std::uint64_t q = f.q();
  Count num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= pow_u(q, 2 * static_cast<std::uint64_t>(n)) - pow_u(q, 2 * static_cast<std::uint64_t>(i));
    den *= pow_u(q, 2 * static_cast<std::uint64_t>(k)) - pow_u(q, 2 * static_cast<std::uint64_t>(i));
  }
  return exact_div(num, den, "gauss2");
}

Count mu_odd(const Field& f, int m, int r) {
  if (r < 0) fail(errc::range_error, "mu_odd: negative r");
  check_rank_range("mu_odd", m, 2 * r + 1);
  const std::uint64_t q = f.q();
  Count num = 1;
  for (int i = 0; i <= 2 * r; ++i)
    num *= pow_u(q, static_cast<std::uint64_t>(m)) - pow_u(q, static_cast<std::uint64_t>(i));
  Count den = pow_u(q, static_cast<std::uint64_t>(r));
  for (int i = 0; i < r; ++i)
    den *= pow_u(q, 2 * static_cast<std::uint64_t>(r)) - pow_u(q, 2 * static_cast<std::uint64_t>(i));
  return exact_div(num, den, "mu_odd");
}

Count mu_even_typed(const Field& f, int m, int r, int tau) {
  if (r < 0) fail(errc::range_error, "mu_even_typed: negative r");
  if (tau != 1 && tau != -1)
    fail(errc::range_error, "mu_even_typed: tau must be +1 or -1");
  check_rank_range("mu_even_typed", m, 2 * r);
  const std::uint64_t q = f.q();
  Count num = pow_u(q, static_cast<std::uint64_t>(r)) + tau;
  for (int i = 0; i < 2 * r; ++i)
    num *= pow_u(q, static_cast<std::uint64_t>(m)) - pow_u(q, static_cast<std::uint64_t>(i));
  Count den = 2;
  for (int i = 0; i < r; ++i)
    den *= pow_u(q, 2 * static_cast<std::uint64_t>(r)) - pow_u(q, 2 * static_cast<std::uint64_t>(i));
  return exact_div(num, den, "mu_even_typed");
}

Count mu(const Field& f, int m, int r) {
  check_rank_range("mu", m, r);
  if (r % 2 == 1) return mu_odd(f, m, (r - 1) / 2);
  return mu_even_typed(f, m, r / 2, 1) + mu_even_typed(f, m, r / 2, -1);
}

Count mu_rt(const Field& f, int m, const RankType& s) {
  if (!valid_stratum(m, s))
    fail(errc::range_error,
         "mu_rt: no stratum " + stratum_name(s) + " for m = " + std::to_string(m));
  if (s.rank % 2 == 1) return mu_odd(f, m, (s.rank - 1) / 2);
  return mu_even_typed(f, m, s.rank / 2, s.type);
}

Count nu(const Field& f, int m, int t) {
  if (t < 0 || t > m)
    fail(errc::range_error, "nu: t = " + std::to_string(t) + " outside [0, " +
                                std::to_string(m) + "]");
  Count acc = 0;
  for (int r = 0; r <= t; ++r) acc += mu(f, m, r);
  return acc;
}

}  // namespace symdet
