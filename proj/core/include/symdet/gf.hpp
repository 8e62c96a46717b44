#pragma once

#include <cstdint>
#include <vector>

namespace symdet {

// A field element, stored as its canonical integer encoding: the element
// sum(c_i * x^i) has enc = sum(c_i * p^i), so enc ranges over [0, q).
struct Felem {
  std::uint32_t v = 0;
  friend bool operator==(Felem, Felem) = default;
  friend auto operator<=>(Felem, Felem) = default;
};

// GF(p^e) for odd p, q = p^e <= 2^16. The modulus is the lowest monic
// irreducible polynomial of degree e in enc order, which makes encodings
// reproducible across runs and implementations given (p, e). Immutable after
// construction; safe to share across threads.
class Field {
 public:
  Field(std::uint64_t p, std::uint64_t e);
  static Field from_order(std::uint64_t q);

  std::uint64_t p() const { return p_; }
  std::uint64_t e() const { return e_; }
  std::uint64_t q() const { return q_; }

  // Monic modulus coefficients, little-endian, size e+1; {0,1} (i.e. x) when
  // e = 1. modulus_enc folds them into one integer including the leading 1.
  const std::vector<std::uint32_t>& modulus() const { return mod_; }
  std::uint64_t modulus_enc() const { return mod_enc_; }

  Felem zero() const { return {0}; }
  Felem one() const { return {1}; }
  Felem element(std::uint64_t enc) const;
  Felem from_int(std::int64_t v) const;  // image of an integer in GF(p)
  std::vector<std::uint32_t> coeffs(Felem a) const;

  Felem add(Felem a, Felem b) const;
  Felem sub(Felem a, Felem b) const { return add(a, neg(b)); }
  Felem neg(Felem a) const;
  Felem mul(Felem a, Felem b) const {
    if (a.v == 0 || b.v == 0) return {0};
    return {exp2_[log_[a.v] + log_[b.v]]};
  }
  Felem inv(Felem a) const;
  Felem div(Felem a, Felem b) const { return mul(a, inv(b)); }
  Felem pow(Felem a, std::uint64_t k) const;

  // Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
  int legendre(Felem a) const;
  Felem lowest_nonsquare() const;

  // All q elements in increasing enc order, starting with 0.
  std::vector<Felem> elements() const;

 private:
  std::uint64_t p_, e_, q_;
  std::vector<std::uint32_t> mod_;
  std::uint64_t mod_enc_ = 0;
  std::vector<std::uint32_t> log_;   // log_[enc] for enc != 0
  std::vector<std::uint32_t> exp2_;  // doubled exp table, index < 2(q-1)
  std::vector<std::uint32_t> neg_;   // negation by enc
  std::vector<std::uint32_t> add_;   // full addition table when small enough

  void build_tables();
};

}  // namespace symdet
