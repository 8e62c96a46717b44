#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "symdet/gf.hpp"
#include "symdet/guard.hpp"

namespace symdet {

// Skew-symmetric m x m matrix: zero diagonal, a_ji = -a_ij, stored by the
// strict upper triangle in row-major order. Skew ranks are even in odd
// characteristic.
struct SkewMatrix {
  int m = 0;
  std::vector<Felem> strict_upper;

  static std::size_t upper_index(int m, int i, int j);  // needs i < j
  Felem get(const Field& f, int i, int j) const;
  friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;
};

SkewMatrix skew_zero(int m);
SkewMatrix skew_from_upper(int m, std::vector<Felem> entries);

int skew_rank(const Field& f, const SkewMatrix& a);

// Block-diagonal [[0,1],[-1,0]] repeated s times: the canonical rank-2s
// representative.
SkewMatrix skew_representative(const Field& f, int m, int s);

// The pairing sum_{i<j} a_ij b_ij used by the Krawtchouk character sums.
Felem skew_pair(const Field& f, const SkewMatrix& a, const SkewMatrix& b);

// All q^{m(m-1)/2} skew matrices in lexicographic order of the strict upper
// triangle. The callback receives a reused buffer.
void for_each_skew(const Field& f, int m, const GuardPolicy& g,
                   const std::function<void(const SkewMatrix&)>& fn);

}  // namespace symdet
