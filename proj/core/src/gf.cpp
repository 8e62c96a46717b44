#include "symdet/gf.hpp"

#include <string>

#include "symdet/errors.hpp"

namespace symdet {

namespace {

constexpr std::uint64_t kMaxQ = 1ULL << 16;
constexpr std::uint64_t kAddTableMaxQ = 512;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Poly = std::vector<std::uint32_t>;  // little-endian coefficients

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly digits(std::uint64_t v, std::uint64_t p, std::size_t n) {
  Poly d(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
  return d;
}

std::uint64_t undigits(const Poly& d, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// Remainder of a modulo the monic polynomial b, both over GF(p).
Poly poly_rem(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i < db; ++i) {
        std::uint64_t sub = (static_cast<std::uint64_t>(b[i]) * lead) % p;
        a[i + shift] =
            static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

bool divides(const Poly& g, const Poly& f, std::uint64_t p) {
  return poly_rem(f, g, p).empty();
}

// Trial division by every monic polynomial of degree 1..e/2; sufficient and
// cheap at the degrees in scope (p^(e/2) <= sqrt(q) <= 256).
bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t e = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= e; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = digits(c, p, d);
      g.push_back(1);
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

Poly lowest_irreducible(std::uint64_t p, std::uint64_t e) {
  std::uint64_t count = 1;
  for (std::uint64_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly f = digits(c, p, e);
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
  }
  fail(errc::degree_out_of_range, "no irreducible polynomial found");
}

// Product of two elements written as coefficient vectors, reduced modulo the
// field modulus. Used only while building the log/exp tables.
std::uint64_t raw_mul(std::uint64_t a, std::uint64_t b, const Poly& mod,
                      std::uint64_t p, std::uint64_t e) {
  Poly pa = digits(a, p, e), pb = digits(b, p, e);
  Poly prod(2 * e - 1, 0);
  for (std::size_t i = 0; i < e; ++i) {
    if (pa[i] == 0) continue;
    for (std::size_t j = 0; j < e; ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p);
  }
  Poly rem = poly_rem(std::move(prod), mod, p);
  return undigits(rem, p);
}

std::uint64_t digit_add(std::uint64_t a, std::uint64_t b, std::uint64_t p,
                        std::uint64_t e) {
  std::uint64_t r = 0, scale = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    r += ((a % p + b % p) % p) * scale;
    scale *= p;
    a /= p;
    b /= p;
  }
  return r;
}

}  // namespace

Field::Field(std::uint64_t p, std::uint64_t e) : p_(p), e_(e) {
  if (p % 2 == 0) fail(errc::even_characteristic, "p = " + std::to_string(p));
  if (!is_prime(p)) fail(errc::non_prime, "p = " + std::to_string(p));
  if (e < 1) fail(errc::degree_out_of_range, "e = " + std::to_string(e));
  q_ = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    q_ *= p;
    if (q_ > kMaxQ)
      fail(errc::degree_out_of_range,
           "q = " + std::to_string(p) + "^" + std::to_string(e) +
               " exceeds " + std::to_string(kMaxQ));
  }
  mod_ = (e == 1) ? Poly{0, 1} : lowest_irreducible(p, e);
  mod_enc_ = undigits(mod_, p);
  build_tables();
}

Field Field::from_order(std::uint64_t q) {
  if (q < 2) fail(errc::non_prime, "q = " + std::to_string(q));
  if (q % 2 == 0) fail(errc::even_characteristic, "q = " + std::to_string(q));
  std::uint64_t p = q;
  for (std::uint64_t d = 3; d * d <= q; d += 2)
    if (q % d == 0) {
      p = d;
      break;
    }
  std::uint64_t e = 0, rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1)
    fail(errc::non_prime, "q = " + std::to_string(q) + " is not a prime power");
  return Field(p, e);
}

void Field::build_tables() {
  neg_.assign(q_, 0);
  if (e_ == 1) {
    for (std::uint64_t a = 0; a < q_; ++a)
      neg_[a] = static_cast<std::uint32_t>((q_ - a) % q_);
  } else {
    for (std::uint64_t a = 0; a < q_; ++a) {
      std::uint64_t r = 0, scale = 1, x = a;
      for (std::uint64_t i = 0; i < e_; ++i) {
        r += ((p_ - x % p_) % p_) * scale;
        scale *= p_;
        x /= p_;
      }
      neg_[a] = static_cast<std::uint32_t>(r);
    }
  }

  if (e_ > 1 && q_ <= kAddTableMaxQ) {
    add_.assign(q_ * q_, 0);
    for (std::uint64_t a = 0; a < q_; ++a)
      for (std::uint64_t b = 0; b <= a; ++b) {
        auto s = static_cast<std::uint32_t>(digit_add(a, b, p_, e_));
        add_[a * q_ + b] = s;
        add_[b * q_ + a] = s;
      }
  }

  log_.assign(q_, 0);
  exp2_.assign(2 * (q_ - 1), 0);
  for (std::uint64_t g = 2; g < q_; ++g) {
    std::uint64_t x = 1, steps = 0;
    do {
      x = raw_mul(x, g, mod_, p_, e_);
      ++steps;
    } while (x != 1);
    if (steps != q_ - 1) continue;
    x = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
      exp2_[i] = static_cast<std::uint32_t>(x);
      exp2_[i + (q_ - 1)] = exp2_[i];
      log_[x] = static_cast<std::uint32_t>(i);
      x = raw_mul(x, g, mod_, p_, e_);
    }
    return;
  }
  fail(errc::degree_out_of_range, "no multiplicative generator found");
}

Felem Field::element(std::uint64_t enc) const {
  if (enc >= q_)
    fail(errc::range_error,
         "element encoding " + std::to_string(enc) + " out of [0, " +
             std::to_string(q_) + ")");
  return {static_cast<std::uint32_t>(enc)};
}

Felem Field::from_int(std::int64_t v) const {
  std::int64_t m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return {static_cast<std::uint32_t>(r)};
}

std::vector<std::uint32_t> Field::coeffs(Felem a) const {
  return digits(a.v, p_, e_);
}

Felem Field::add(Felem a, Felem b) const {
  if (e_ == 1) {
    std::uint64_t s = static_cast<std::uint64_t>(a.v) + b.v;
    if (s >= q_) s -= q_;
    return {static_cast<std::uint32_t>(s)};
  }
  if (!add_.empty()) return {add_[static_cast<std::size_t>(a.v) * q_ + b.v]};
  return {static_cast<std::uint32_t>(digit_add(a.v, b.v, p_, e_))};
}

Felem Field::neg(Felem a) const { return {neg_[a.v]}; }

Felem Field::inv(Felem a) const {
  if (a.v == 0) fail(errc::division_by_zero, "inv(0)");
  return pow(a, q_ - 2);
}

Felem Field::pow(Felem a, std::uint64_t k) const {
  if (k == 0) return one();
  if (a.v == 0) return zero();
  std::uint64_t red = k % (q_ - 1);
  if (red == 0) return one();
  return {exp2_[(static_cast<std::uint64_t>(log_[a.v]) * red) % (q_ - 1)]};
}

int Field::legendre(Felem a) const {
  if (a.v == 0) return 0;
  return pow(a, (q_ - 1) / 2) == one() ? 1 : -1;
}

Felem Field::lowest_nonsquare() const {
  for (std::uint64_t enc = 2; enc < q_; ++enc)
    if (legendre({static_cast<std::uint32_t>(enc)}) == -1)
      return {static_cast<std::uint32_t>(enc)};
  fail(errc::range_error, "no non-square found");
}

std::vector<Felem> Field::elements() const {
  std::vector<Felem> out;
  out.reserve(q_);
  for (std::uint64_t enc = 0; enc < q_; ++enc)
    out.push_back({static_cast<std::uint32_t>(enc)});
  return out;
}

}  // namespace symdet
