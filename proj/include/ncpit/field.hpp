#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "ncpit/error.hpp"
#include "ncpit/rng.hpp"

namespace ncpit {

// Miller-Rabin style probabilistic primality via GMP; error < 4^-64.
bool is_probable_prime(const mpz_class& n);

// Smallest probable prime strictly greater than n.
mpz_class next_prime_above(const mpz_class& n);

// Prime field with arbitrary-precision modulus. Elements are canonical
// residues in [0, modulus); every operation returns a canonical value.
// Context style: the field object carries the modulus, elements are plain
// mpz_class values.
class PrimeField {
 public:
  using Elem = mpz_class;

  explicit PrimeField(mpz_class modulus);

  const mpz_class& modulus() const { return p_; }

  Elem zero() const { return mpz_class(0); }
  Elem one() const { return p_ == 1 ? mpz_class(0) : mpz_class(1); }

  Elem add(const Elem& a, const Elem& b) const {
    mpz_class r = a + b;
    if (r >= p_) r -= p_;
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    mpz_class r = a - b;
    if (r < 0) r += p_;
    return r;
  }
  Elem neg(const Elem& a) const { return a == 0 ? mpz_class(0) : mpz_class(p_ - a); }
  Elem mul(const Elem& a, const Elem& b) const {
    mpz_class r = a * b;
    r %= p_;
    return r;
  }
  Elem inv(const Elem& a) const;

  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  // Reduce an arbitrary integer to its canonical residue.
  Elem from_integer(const mpz_class& v) const {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return r;
  }

  // Uniform over [0, p) (or [1, p) with nonzero set). Deterministic given
  // the rng state.
  Elem sample(Rng& rng, bool nonzero = false) const {
    if (nonzero) return 1 + rng.below(p_ - 1);
    return rng.below(p_);
  }

  // True when the modulus fits the 64-bit fast path (p < 2^62).
  bool fits_u64() const { return fits_u64_; }
  std::uint64_t modulus_u64() const;

 private:
  mpz_class p_;
  bool fits_u64_ = false;
};

// Fast fixed-width path for moduli below 2^62 (products fit __uint128_t).
// Same arithmetic contract as PrimeField; used in trial-evaluation hot loops.
class PrimeField64 {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField64(const PrimeField& field);

  std::uint64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return p_ == 1 ? 0 : 1; }

  Elem add(Elem a, Elem b) const {
    std::uint64_t r = a + b;  // no overflow: a, b < 2^62
    return r >= p_ ? r - p_ : r;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Elem inv(Elem a) const;

  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }

  Elem from_integer(const mpz_class& v) const {
    mpz_class r = v % mpz_class(static_cast<unsigned long>(p_));
    if (r < 0) r += mpz_class(static_cast<unsigned long>(p_));
    return r.get_ui();
  }

  Elem sample(Rng& rng, bool nonzero = false) const {
    if (nonzero) return 1 + rng.below_u64(p_ - 1);
    return rng.below_u64(p_);
  }

 private:
  std::uint64_t p_;
};

}  // namespace ncpit
