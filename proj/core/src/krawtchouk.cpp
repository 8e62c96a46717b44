#include "symdet/krawtchouk.hpp"

#include <string>

#include "symdet/combinat.hpp"
#include "symdet/errors.hpp"
#include "symdet/skew.hpp"

namespace symdet {

SignedCount kraw_F(const Field& f, int m, int r, int s) {
  if (m < 0) fail(errc::range_error, "kraw_F: negative m");
  const int n = m / 2;
  if (r < 0 || r > n || s < 0 || s > n) return 0;
  const std::uint64_t q = f.q();
  const Count c = (m == 0) ? Count(1)
                           : pow_u(q, static_cast<std::uint64_t>(m % 2 == 0 ? m - 1 : m));
  SignedCount acc = 0;
  for (int j = 0; j <= r; ++j) {
    const int d = r - j;
    SignedCount term = pow_u(q, static_cast<std::uint64_t>(d) * (d - 1));
    term *= gauss2(f, n - j, n - r);
    term *= gauss2(f, n - s, j);
    Count cj;
    mpz_pow_ui(cj.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(j));
    term *= cj;
    if (d % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

Count skew_rank_count(const Field& f, int m, int s, const GuardPolicy& g) {
  if (m < 0 || s < 0)
    fail(errc::range_error, "skew_rank_count: negative argument");
  Count total = 0;
  for_each_skew(f, m, g, [&](const SkewMatrix& a) {
    if (skew_rank(f, a) == 2 * s) ++total;
  });
  return total;
}

}  // namespace symdet
