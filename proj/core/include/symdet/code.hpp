#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symdet/bigint.hpp"
#include "symdet/gf.hpp"
#include "symdet/guard.hpp"
#include "symdet/symmat.hpp"

namespace symdet {

// Generator matrix of the evaluation code: row per basis monomial x_ij in
// upper-triangle order, column per evaluation point A in enumeration order,
// entry x_ij(A) = a_ij. The factor 2 of the trace correspondence lives in
// the B_f conversion, not here.
struct GeneratorMatrix {
  std::uint64_t q = 0;
  int m = 0;
  int t = 0;
  int rows = 0;
  std::size_t cols = 0;
  bool projective = false;
  std::vector<Felem> entries;  // row-major rows x cols
  std::vector<SymMatrix> column_labels;

  Felem at(int r, std::size_t c) const { return entries[r * cols + c]; }
};

GeneratorMatrix build_generator(const Field& f, int m, int t,
                                const GuardPolicy& g);

// Same matrix with the zero column dropped and one column kept per scalar
// class: the representative whose first nonzero label entry has enc 1.
GeneratorMatrix projective_generator(const Field& f, int m, int t,
                                     const GuardPolicy& g);

// Hamming weight of the codeword sum(coeffs[r] * row_r), straight from the
// matrix entries.
Count codeword_weight(const Field& f, const GeneratorMatrix& gm,
                      const std::vector<Felem>& coeffs);

int generator_rank(const Field& f, const GeneratorMatrix& gm);

// Text format: "q m t rows cols" / "p e modulus-enc" / entry rows / one
// label line per column unless labels is false.
std::string format_generator(const Field& f, const GeneratorMatrix& gm,
                             bool labels);
void write_generator(const Field& f, const GeneratorMatrix& gm,
                     const std::string& path, bool labels);

}  // namespace symdet
