#pragma once

#include <vector>

#include "symdet/gf.hpp"

namespace symdet {

// Rank of a dense row-major matrix over GF(q) by row echelon reduction.
// The buffer is clobbered.
int matrix_rank(const Field& f, std::vector<Felem>& a, int rows, int cols);

}  // namespace symdet
