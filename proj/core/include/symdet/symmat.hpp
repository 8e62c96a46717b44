#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "symdet/gf.hpp"
#include "symdet/guard.hpp"

namespace symdet {

// Classification of a symmetric matrix: type is +1 (hyperbolic) or -1
// (elliptic) for even rank, 0 for odd rank; the zero matrix is (0, +1).
struct RankType {
  int rank = 0;
  int type = 1;
  friend bool operator==(const RankType&, const RankType&) = default;
  friend auto operator<=>(const RankType&, const RankType&) = default;
};

// All strata for size m in display order: rank ascending, +1 before -1.
std::vector<RankType> strata(int m);
bool valid_stratum(int m, const RankType& s);
std::string stratum_name(const RankType& s);  // "k:tau", e.g. "2:-1"

// Symmetric m x m matrix stored by its upper triangle in row-major order
// (x_11, x_12, ..., x_1m, x_22, ..., x_mm). Entries below the diagonal are
// the mirrored ones by definition.
struct SymMatrix {
  int m = 0;
  std::vector<Felem> upper;

  static std::size_t upper_index(int m, int i, int j);  // needs i <= j
  Felem get(int i, int j) const;
  void set(int i, int j, Felem v);
  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;
};

SymMatrix sym_zero(int m);
SymMatrix sym_from_upper(int m, std::vector<Felem> entries);

// "m enc enc ..." with upper-triangle encodings in order.
std::string serialize(const SymMatrix& a);

// Tr(A.B) via the closed form sum(a_ii b_ii) + 2 sum_{i<j}(a_ij b_ij).
Felem trace_pair(const Field& f, const SymMatrix& a, const SymMatrix& b);

// Congruence diagonalization with deterministic pivoting: lowest-index
// nonzero diagonal entry first; if the remaining diagonal is all zero, add
// row/column j to row/column i for the lexicographically first nonzero
// off-diagonal a_ij, which creates the diagonal entry 2 a_ij. For rank 2s the
// type is legendre((-1)^s * product of diagonal pivots).
RankType rank_type(const Field& f, const SymMatrix& a);

// diag(1,...,1,delta,0,...,0) of rank k whose rank_type is (k, tau);
// delta is 1 or the lowest-enc non-square, with 1 canonical for odd k.
SymMatrix representative(const Field& f, int m, int k, int tau);

// Visits all q^{m(m+1)/2} matrices in lexicographic order of their
// upper-triangle encodings (first entry most significant). The callback
// receives a reused buffer; copy it to keep it.
void for_each_sym(const Field& f, int m, const GuardPolicy& g,
                  const std::function<void(const SymMatrix&)>& fn);

std::vector<SymMatrix> enumerate_sym(const Field& f, int m,
                                     const GuardPolicy& g);

// The ordered subsequence of enumerate_sym with rank <= t; its length is
// nu_m(t).
std::vector<SymMatrix> enumerate_rank_at_most(const Field& f, int m, int t,
                                              const GuardPolicy& g);

}  // namespace symdet
