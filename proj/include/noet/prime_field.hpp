#ifndef NOET_PRIME_FIELD_HPP
#define NOET_PRIME_FIELD_HPP

#include <cstdint>
#include <string>

#include "noet/errors.hpp"
#include "noet/rational.hpp"

namespace noet {

bool is_prime_u64(uint64_t n);

// Arithmetic in F_p for a machine-word prime p. Elements are plain
// uint64_t residues in [0, p); the field object owns the modulus.
class PrimeField {
 public:
  explicit PrimeField(uint64_t p) : p_(p) {
    if (!is_prime_u64(p)) fail("NotPrime", std::to_string(p) + " is not prime");
  }

  uint64_t p() const { return p_; }

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1 % p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const {
    if (a == 0) fail("ZeroInverse", "inverse of 0 mod " + std::to_string(p_));
    return pow(a, p_ - 2);
  }

  // Image of an exact rational under Q -> F_p; the denominator must be
  // invertible mod p.
  uint64_t reduce(const Rational& r) const {
    uint64_t den = reduce_int(r.denominator());
    if (den == 0)
      fail("DomainMismatch",
           "denominator of " + r.to_string() + " vanishes mod " + std::to_string(p_));
    return mul(reduce_int(r.numerator()), inv(den));
  }

  uint64_t reduce_int(const Int& n) const {
    Int m = n % Int(static_cast<unsigned long>(p_));
    if (m < 0) m += Int(static_cast<unsigned long>(p_));
    return m.get_ui();
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  uint64_t p_;
};

// Residue with its modulus attached; the element form used at API
// boundaries and in reports.
struct PrimeFieldElement {
  uint64_t residue;
  uint64_t p;
};

inline PrimeFieldElement fp_inverse(const PrimeFieldElement& a) {
  PrimeField f(a.p);
  return {f.inv(a.residue), a.p};
}

}  // namespace noet

#endif
