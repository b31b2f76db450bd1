#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "ncpit/error.hpp"

namespace ncpit {

// Minimal ring context: a value type plus the operations every evaluator in
// the library needs. PrimeField, PrimeField64 and CommPolyRing model it.
template <typename R>
concept Ring = requires(const R& r, const typename R::Elem& a, const typename R::Elem& b,
                        const mpz_class& n) {
  typename R::Elem;
  { r.zero() } -> std::same_as<typename R::Elem>;
  { r.one() } -> std::same_as<typename R::Elem>;
  { r.add(a, b) } -> std::same_as<typename R::Elem>;
  { r.sub(a, b) } -> std::same_as<typename R::Elem>;
  { r.mul(a, b) } -> std::same_as<typename R::Elem>;
  { r.neg(a) } -> std::same_as<typename R::Elem>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { r.equal(a, b) } -> std::same_as<bool>;
  { r.from_integer(n) } -> std::same_as<typename R::Elem>;
};

// Dense square matrix over a ring. Dimensions here stay tiny (at most
// log2(sparsity) + 1), so no sparsity tricks.
template <Ring R>
class Matrix {
 public:
  using Elem = typename R::Elem;

  Matrix(const R& ring, std::uint32_t dim) : dim_(dim), e_(std::size_t(dim) * dim, ring.zero()) {
    if (dim == 0) fail(Errc::Config, "matrix dimension must be positive");
  }

  static Matrix identity(const R& ring, std::uint32_t dim) {
    Matrix m(ring, dim);
    for (std::uint32_t i = 0; i < dim; ++i) m.at(i, i) = ring.one();
    return m;
  }

  static Matrix scalar(const R& ring, std::uint32_t dim, const Elem& c) {
    Matrix m(ring, dim);
    for (std::uint32_t i = 0; i < dim; ++i) m.at(i, i) = c;
    return m;
  }

  std::uint32_t dim() const { return dim_; }

  Elem& at(std::uint32_t i, std::uint32_t j) { return e_[std::size_t(i) * dim_ + j]; }
  const Elem& at(std::uint32_t i, std::uint32_t j) const { return e_[std::size_t(i) * dim_ + j]; }

 private:
  std::uint32_t dim_;
  std::vector<Elem> e_;
};

template <Ring R>
Matrix<R> mat_add(const R& ring, const Matrix<R>& a, const Matrix<R>& b) {
  if (a.dim() != b.dim()) fail(Errc::DimMismatch, "mat_add: dimension mismatch");
  Matrix<R> r(ring, a.dim());
  for (std::uint32_t i = 0; i < a.dim(); ++i)
    for (std::uint32_t j = 0; j < a.dim(); ++j) r.at(i, j) = ring.add(a.at(i, j), b.at(i, j));
  return r;
}

// Standard product; operand order preserved (entries need not commute as a
// ring of matrices, and callers evaluate noncommutative words with it).
template <Ring R>
Matrix<R> mat_mul(const R& ring, const Matrix<R>& a, const Matrix<R>& b) {
  if (a.dim() != b.dim()) fail(Errc::DimMismatch, "mat_mul: dimension mismatch");
  const std::uint32_t n = a.dim();
  Matrix<R> r(ring, n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t k = 0; k < n; ++k) {
      const auto& aik = a.at(i, k);
      if (ring.is_zero(aik)) continue;
      for (std::uint32_t j = 0; j < n; ++j)
        r.at(i, j) = ring.add(r.at(i, j), ring.mul(aik, b.at(k, j)));
    }
  return r;
}

template <Ring R>
Matrix<R> mat_scale(const R& ring, const typename R::Elem& c, const Matrix<R>& a) {
  Matrix<R> r(ring, a.dim());
  for (std::uint32_t i = 0; i < a.dim(); ++i)
    for (std::uint32_t j = 0; j < a.dim(); ++j) r.at(i, j) = ring.mul(c, a.at(i, j));
  return r;
}

// a^e by repeated squaring; a^0 is the identity.
template <Ring R>
Matrix<R> mat_pow(const R& ring, Matrix<R> a, std::uint64_t e) {
  Matrix<R> r = Matrix<R>::identity(ring, a.dim());
  while (e != 0) {
    if (e & 1) r = mat_mul(ring, r, a);
    e >>= 1;
    if (e != 0) a = mat_mul(ring, a, a);
  }
  return r;
}

template <Ring R>
bool mat_is_zero(const R& ring, const Matrix<R>& a) {
  for (std::uint32_t i = 0; i < a.dim(); ++i)
    for (std::uint32_t j = 0; j < a.dim(); ++j)
      if (!ring.is_zero(a.at(i, j))) return false;
  return true;
}

template <Ring R>
bool mat_equal(const R& ring, const Matrix<R>& a, const Matrix<R>& b) {
  if (a.dim() != b.dim()) return false;
  for (std::uint32_t i = 0; i < a.dim(); ++i)
    for (std::uint32_t j = 0; j < a.dim(); ++j)
      if (!ring.equal(a.at(i, j), b.at(i, j))) return false;
  return true;
}

}  // namespace ncpit
