#include "ncpit/field.hpp"

namespace ncpit {

bool is_probable_prime(const mpz_class& n) {
  if (n < 2) return false;
  // 64 rounds: composite acceptance probability below 4^-64.
  return mpz_probab_prime_p(n.get_mpz_t(), 64) != 0;
}

mpz_class next_prime_above(const mpz_class& n) {
  mpz_class p;
  mpz_nextprime(p.get_mpz_t(), n.get_mpz_t());
  while (!is_probable_prime(p)) mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  return p;
}

PrimeField::PrimeField(mpz_class modulus) : p_(std::move(modulus)) {
  if (p_ < 2) fail(Errc::NotPrime, "field modulus must be >= 2, got " + p_.get_str());
  if (!is_probable_prime(p_)) fail(Errc::NotPrime, "field modulus is not prime: " + p_.get_str());
  fits_u64_ = p_ < (mpz_class(1) << 62);
}

std::uint64_t PrimeField::modulus_u64() const {
  if (!fits_u64_) fail(Errc::Config, "modulus exceeds the 64-bit fast path");
  return mpz_get_ui(p_.get_mpz_t());
}

PrimeField::Elem PrimeField::inv(const Elem& a) const {
  if (a == 0) fail(Errc::Config, "inverse of zero");
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t()) == 0)
    fail(Errc::Config, "element not invertible");
  return r;
}

PrimeField64::PrimeField64(const PrimeField& field) : p_(field.modulus_u64()) {}

PrimeField64::Elem PrimeField64::inv(Elem a) const {
  if (a == 0) fail(Errc::Config, "inverse of zero");
  // Fermat: a^(p-2) mod p.
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace ncpit
