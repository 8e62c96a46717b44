#include "symdet/skew.hpp"

#include <cmath>
#include <string>

#include "symdet/errors.hpp"
#include "symdet/linalg.hpp"

namespace symdet {

std::size_t SkewMatrix::upper_index(int m, int i, int j) {
  // row i holds m-1-i entries starting at columns i+1..m-1
  return static_cast<std::size_t>(i) * (m - 1) - static_cast<std::size_t>(i) * (i - 1) / 2 +
         static_cast<std::size_t>(j - i - 1);
}

Felem SkewMatrix::get(const Field& f, int i, int j) const {
  if (i == j) return f.zero();
  if (i < j) return strict_upper[upper_index(m, i, j)];
  return f.neg(strict_upper[upper_index(m, j, i)]);
}

SkewMatrix skew_zero(int m) {
  return {m, std::vector<Felem>(static_cast<std::size_t>(m) * (m - 1) / 2)};
}

SkewMatrix skew_from_upper(int m, std::vector<Felem> entries) {
  const std::size_t want = static_cast<std::size_t>(m) * (m - 1) / 2;
  if (entries.size() != want)
    fail(errc::length_mismatch,
         "strict upper triangle for m=" + std::to_string(m) + " needs " +
             std::to_string(want) + " entries, got " +
             std::to_string(entries.size()));
  return {m, std::move(entries)};
}

int skew_rank(const Field& f, const SkewMatrix& a) {
  const int m = a.m;
  std::vector<Felem> dense(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      dense[static_cast<std::size_t>(i) * m + j] = a.get(f, i, j);
  return matrix_rank(f, dense, m, m);
}

SkewMatrix skew_representative(const Field& f, int m, int s) {
  if (s < 0 || 2 * s > m)
    fail(errc::range_error, "skew rank 2*" + std::to_string(s) +
                                " does not fit in m = " + std::to_string(m));
  SkewMatrix a = skew_zero(m);
  for (int b = 0; b < s; ++b)
    a.strict_upper[SkewMatrix::upper_index(m, 2 * b, 2 * b + 1)] = f.one();
  return a;
}

Felem skew_pair(const Field& f, const SkewMatrix& a, const SkewMatrix& b) {
  if (a.m != b.m)
    fail(errc::size_mismatch, "skew_pair of mismatched sizes");
  Felem acc = f.zero();
  for (std::size_t i = 0; i < a.strict_upper.size(); ++i)
    acc = f.add(acc, f.mul(a.strict_upper[i], b.strict_upper[i]));
  return acc;
}

void for_each_skew(const Field& f, int m, const GuardPolicy& g,
                   const std::function<void(const SkewMatrix&)>& fn) {
  const std::size_t len = static_cast<std::size_t>(m) * (m - 1) / 2;
  g.check_enum(std::pow(static_cast<double>(f.q()), static_cast<double>(len)),
               "skew matrix space scan");
  const std::uint32_t top = static_cast<std::uint32_t>(f.q()) - 1;
  SkewMatrix a = skew_zero(m);
  while (true) {
    fn(a);
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (a.strict_upper[i].v < top) {
        ++a.strict_upper[i].v;
        break;
      }
      a.strict_upper[i].v = 0;
      if (i == 0) return;
    }
    if (len == 0) return;
  }
}

}  // namespace symdet
