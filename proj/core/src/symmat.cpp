#include "symdet/symmat.hpp"

#include <cmath>
#include <sstream>

#include "symdet/errors.hpp"

namespace symdet {

std::vector<RankType> strata(int m) {
  std::vector<RankType> out;
  out.push_back({0, 1});
  for (int r = 1; r <= m; ++r) {
    if (r % 2 == 1) {
      out.push_back({r, 0});
    } else {
      out.push_back({r, 1});
      out.push_back({r, -1});
    }
  }
  return out;
}

bool valid_stratum(int m, const RankType& s) {
  if (s.rank < 0 || s.rank > m) return false;
  if (s.rank == 0) return s.type == 1;
  if (s.rank % 2 == 1) return s.type == 0;
  return s.type == 1 || s.type == -1;
}

std::string stratum_name(const RankType& s) {
  return std::to_string(s.rank) + ":" + std::to_string(s.type);
}

std::size_t SymMatrix::upper_index(int m, int i, int j) {
  return static_cast<std::size_t>(i) * m - static_cast<std::size_t>(i) * (i - 1) / 2 +
         static_cast<std::size_t>(j - i);
}

Felem SymMatrix::get(int i, int j) const {
  if (i > j) std::swap(i, j);
  return upper[upper_index(m, i, j)];
}

void SymMatrix::set(int i, int j, Felem v) {
  if (i > j) std::swap(i, j);
  upper[upper_index(m, i, j)] = v;
}

SymMatrix sym_zero(int m) {
  return {m, std::vector<Felem>(static_cast<std::size_t>(m) * (m + 1) / 2)};
}

SymMatrix sym_from_upper(int m, std::vector<Felem> entries) {
  const std::size_t want = static_cast<std::size_t>(m) * (m + 1) / 2;
  if (entries.size() != want)
    fail(errc::length_mismatch,
         "upper triangle for m=" + std::to_string(m) + " needs " +
             std::to_string(want) + " entries, got " +
             std::to_string(entries.size()));
  return {m, std::move(entries)};
}

std::string serialize(const SymMatrix& a) {
  std::ostringstream os;
  os << a.m;
  for (Felem x : a.upper) os << ' ' << x.v;
  return os.str();
}

Felem trace_pair(const Field& f, const SymMatrix& a, const SymMatrix& b) {
  if (a.m != b.m)
    fail(errc::size_mismatch, "trace_pair of " + std::to_string(a.m) + "x" +
                                  std::to_string(a.m) + " with " +
                                  std::to_string(b.m) + "x" +
                                  std::to_string(b.m));
  const Felem two = f.from_int(2);
  Felem acc = f.zero();
  std::size_t idx = 0;
  for (int i = 0; i < a.m; ++i) {
    acc = f.add(acc, f.mul(a.upper[idx], b.upper[idx]));
    ++idx;
    for (int j = i + 1; j < a.m; ++j, ++idx)
      acc = f.add(acc, f.mul(two, f.mul(a.upper[idx], b.upper[idx])));
  }
  return acc;
}

RankType rank_type(const Field& f, const SymMatrix& a) {
  const int m = a.m;
  std::vector<Felem> M(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) M[static_cast<std::size_t>(i) * m + j] = a.get(i, j);
  auto at = [&](int i, int j) -> Felem& {
    return M[static_cast<std::size_t>(i) * m + j];
  };

  const Felem z = f.zero();
  int rank = 0;
  Felem disc = f.one();
  for (int pos = 0; pos < m; ++pos) {
    int piv = -1;
    for (int i = pos; i < m; ++i)
      if (at(i, i) != z) {
        piv = i;
        break;
      }
    if (piv < 0) {
      int oi = -1, oj = -1;
      for (int i = pos; i < m && oi < 0; ++i)
        for (int j = i + 1; j < m; ++j)
          if (at(i, j) != z) {
            oi = i;
            oj = j;
            break;
          }
      if (oi < 0) break;
      for (int c = 0; c < m; ++c) at(oi, c) = f.add(at(oi, c), at(oj, c));
      for (int r = 0; r < m; ++r) at(r, oi) = f.add(at(r, oi), at(r, oj));
      piv = oi;
    }
    if (piv != pos) {
      for (int c = 0; c < m; ++c) std::swap(at(piv, c), at(pos, c));
      for (int r = 0; r < m; ++r) std::swap(at(r, piv), at(r, pos));
    }
    const Felem d = at(pos, pos);
    for (int r = pos + 1; r < m; ++r) {
      const Felem factor = f.div(at(r, pos), d);
      if (factor == z) continue;
      for (int c = 0; c < m; ++c)
        at(r, c) = f.sub(at(r, c), f.mul(factor, at(pos, c)));
      for (int r2 = 0; r2 < m; ++r2)
        at(r2, r) = f.sub(at(r2, r), f.mul(factor, at(r2, pos)));
    }
    disc = f.mul(disc, d);
    ++rank;
  }

  if (rank == 0) return {0, 1};
  if (rank % 2 == 1) return {rank, 0};
  const int s = rank / 2;
  const Felem signed_disc = (s % 2 == 1) ? f.neg(disc) : disc;
  return {rank, f.legendre(signed_disc)};
}

SymMatrix representative(const Field& f, int m, int k, int tau) {
  if (!valid_stratum(m, {k, tau}))
    fail(errc::invalid_rank_type_pair,
         "no stratum (" + std::to_string(k) + ", " + std::to_string(tau) +
             ") for m = " + std::to_string(m));
  SymMatrix g = sym_zero(m);
  if (k == 0) return g;
  for (int i = 0; i + 1 < k; ++i) g.set(i, i, f.one());
  g.set(k - 1, k - 1, f.one());
  if (rank_type(f, g).type != tau) {
    g.set(k - 1, k - 1, f.lowest_nonsquare());
    if (rank_type(f, g).type != tau)
      fail(errc::invalid_rank_type_pair,
           "no diagonal representative for (" + std::to_string(k) + ", " +
               std::to_string(tau) + ")");
  }
  return g;
}

void for_each_sym(const Field& f, int m, const GuardPolicy& g,
                  const std::function<void(const SymMatrix&)>& fn) {
  const std::size_t len = static_cast<std::size_t>(m) * (m + 1) / 2;
  g.check_enum(std::pow(static_cast<double>(f.q()), static_cast<double>(len)),
               "symmetric matrix space scan");
  const std::uint32_t top = static_cast<std::uint32_t>(f.q()) - 1;
  SymMatrix a = sym_zero(m);
  while (true) {
    fn(a);
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (a.upper[i].v < top) {
        ++a.upper[i].v;
        break;
      }
      a.upper[i].v = 0;
      if (i == 0) return;
    }
    if (len == 0) return;
  }
}

std::vector<SymMatrix> enumerate_sym(const Field& f, int m,
                                     const GuardPolicy& g) {
  std::vector<SymMatrix> out;
  for_each_sym(f, m, g, [&](const SymMatrix& a) { out.push_back(a); });
  return out;
}

std::vector<SymMatrix> enumerate_rank_at_most(const Field& f, int m, int t,
                                              const GuardPolicy& g) {
  if (t < 0 || t > m)
    fail(errc::range_error, "t = " + std::to_string(t) + " outside [0, " +
                                std::to_string(m) + "]");
  std::vector<SymMatrix> out;
  for_each_sym(f, m, g, [&](const SymMatrix& a) {
    if (rank_type(f, a).rank <= t) out.push_back(a);
  });
  return out;
}

}  // namespace symdet
