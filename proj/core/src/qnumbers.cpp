#include "symdet/qnumbers.hpp"

#include <string>

#include "symdet/combinat.hpp"
#include "symdet/errors.hpp"
#include "symdet/krawtchouk.hpp"

namespace symdet {

SignedCount q_number(const Field& f, int m, const RankType& row,
                     const RankType& col) {
  if (!valid_stratum(m, row) || !valid_stratum(m, col))
    fail(errc::range_error, "q_number: invalid strata " + stratum_name(row) +
                                " / " + stratum_name(col) +
                                " for m = " + std::to_string(m));
  const int k = row.rank, eps = row.type;
  const int i = col.rank, tau = col.type;
  if (k == 0) return 1;
  if (i == 0) return mu_rt(f, m, row);

  const std::uint64_t q = f.q();
  if (k % 2 == 1) {
    const int r = (k - 1) / 2;
    if (i % 2 == 1) {
      const int s = (i - 1) / 2;
      return -(pow_u(q, 2 * static_cast<std::uint64_t>(r)) *
               kraw_F(f, m - 1, r, s));
    }
    const int s = i / 2;
    return -(pow_u(q, 2 * static_cast<std::uint64_t>(r)) *
             kraw_F(f, m - 1, r, s - 1)) +
           tau * pow_u(q, static_cast<std::uint64_t>(m - s + 2 * r)) *
               kraw_F(f, m - 2, r, s - 1);
  }

  const int r = k / 2;
  if (i % 2 == 1) {
    const int s = (i - 1) / 2;
    SignedCount num = pow_u(q, 2 * static_cast<std::uint64_t>(r)) *
                          kraw_F(f, m - 1, r, s) +
                      eps * pow_u(q, static_cast<std::uint64_t>(r)) *
                          kraw_F(f, m, r, s);
    return exact_div(num, 2, "q_number even/odd half");
  }
  const int s = i / 2;
  SignedCount num = pow_u(q, 2 * static_cast<std::uint64_t>(r)) *
                        kraw_F(f, m - 1, r, s - 1) -
                    tau * pow_u(q, static_cast<std::uint64_t>(m - s + 2 * r - 2)) *
                        kraw_F(f, m - 2, r - 1, s - 1) +
                    eps * pow_u(q, static_cast<std::uint64_t>(r)) *
                        kraw_F(f, m, r, s);
  return exact_div(num, 2, "q_number even/even half");
}

}  // namespace symdet
