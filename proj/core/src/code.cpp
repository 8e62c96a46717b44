#include "symdet/code.hpp"

#include <fstream>
#include <sstream>

#include "symdet/errors.hpp"
#include "symdet/linalg.hpp"

namespace symdet {

namespace {

GeneratorMatrix from_points(const Field& f, int m, int t,
                            std::vector<SymMatrix> points, bool projective) {
  GeneratorMatrix gm;
  gm.q = f.q();
  gm.m = m;
  gm.t = t;
  gm.rows = m * (m + 1) / 2;
  gm.cols = points.size();
  gm.projective = projective;
  gm.entries.resize(static_cast<std::size_t>(gm.rows) * gm.cols);
  for (std::size_t c = 0; c < gm.cols; ++c)
    for (int r = 0; r < gm.rows; ++r)
      gm.entries[static_cast<std::size_t>(r) * gm.cols + c] =
          points[c].upper[r];
  gm.column_labels = std::move(points);
  return gm;
}

void check_t_range(int m, int t) {
  if (t < 1 || t > m)
    fail(errc::range_error, "t = " + std::to_string(t) + " outside [1, " +
                                std::to_string(m) + "]");
}

}  // namespace

GeneratorMatrix build_generator(const Field& f, int m, int t,
                                const GuardPolicy& g) {
  check_t_range(m, t);
  return from_points(f, m, t, enumerate_rank_at_most(f, m, t, g), false);
}

GeneratorMatrix projective_generator(const Field& f, int m, int t,
                                     const GuardPolicy& g) {
  check_t_range(m, t);
  std::vector<SymMatrix> points = enumerate_rank_at_most(f, m, t, g);
  std::vector<SymMatrix> kept;
  for (SymMatrix& a : points) {
    Felem first = f.zero();
    for (Felem x : a.upper)
      if (x != f.zero()) {
        first = x;
        break;
      }
    if (first == f.one()) kept.push_back(std::move(a));
  }
  return from_points(f, m, t, std::move(kept), true);
}

Count codeword_weight(const Field& f, const GeneratorMatrix& gm,
                      const std::vector<Felem>& coeffs) {
  if (coeffs.size() != static_cast<std::size_t>(gm.rows))
    fail(errc::length_mismatch,
         "codeword needs " + std::to_string(gm.rows) + " coefficients, got " +
             std::to_string(coeffs.size()));
  Count w = 0;
  for (std::size_t c = 0; c < gm.cols; ++c) {
    Felem acc = f.zero();
    for (int r = 0; r < gm.rows; ++r)
      acc = f.add(acc, f.mul(coeffs[r], gm.at(r, c)));
    if (acc != f.zero()) ++w;
  }
  return w;
}

int generator_rank(const Field& f, const GeneratorMatrix& gm) {
  std::vector<Felem> buf = gm.entries;
  return matrix_rank(f, buf, gm.rows, static_cast<int>(gm.cols));
}

std::string format_generator(const Field& f, const GeneratorMatrix& gm,
                             bool labels) {
  std::ostringstream os;
  os << gm.q << ' ' << gm.m << ' ' << gm.t << ' ' << gm.rows << ' ' << gm.cols
     << '\n';
  os << f.p() << ' ' << f.e() << ' ' << f.modulus_enc() << '\n';
  for (int r = 0; r < gm.rows; ++r) {
    for (std::size_t c = 0; c < gm.cols; ++c) {
      if (c) os << ' ';
      os << gm.at(r, c).v;
    }
    os << '\n';
  }
  if (labels)
    for (const SymMatrix& a : gm.column_labels) os << serialize(a) << '\n';
  return os.str();
}

void write_generator(const Field& f, const GeneratorMatrix& gm,
                     const std::string& path, bool labels) {
  std::ofstream out(path);
  if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
  out << format_generator(f, gm, labels);
  if (!out) fail(errc::io_error, "write to " + path + " failed");
}

}  // namespace symdet
