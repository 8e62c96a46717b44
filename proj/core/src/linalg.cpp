#include "symdet/linalg.hpp"

namespace symdet {

int matrix_rank(const Field& f, std::vector<Felem>& a, int rows, int cols) {
  const Felem z = f.zero();
  auto at = [&](int i, int j) -> Felem& {
    return a[static_cast<std::size_t>(i) * cols + j];
  };
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (at(r, col) != z) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = col; c < cols; ++c) std::swap(at(piv, c), at(rank, c));
    const Felem inv_p = f.inv(at(rank, col));
    for (int r = rank + 1; r < rows; ++r) {
      const Felem factor = f.mul(at(r, col), inv_p);
      if (factor == z) continue;
      for (int c = col; c < cols; ++c)
        at(r, c) = f.sub(at(r, c), f.mul(factor, at(rank, c)));
    }
    ++rank;
  }
  return rank;
}

}  // namespace symdet
