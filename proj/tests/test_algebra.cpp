#include "doctest.h"

#include <cmath>

#include "ncpit/commpoly.hpp"
#include "ncpit/field.hpp"
#include "ncpit/matrix.hpp"
#include "test_support.hpp"

using namespace ncpit;
using namespace ncpit::testing;

TEST_CASE("field construction accepts primes, rejects composites") {
  CHECK(PrimeField(2).modulus() == 2);
  CHECK(PrimeField(101).fits_u64());

  mpz_class m61 = (mpz_class(1) << 61) - 1;
  PrimeField mersenne(m61);  // primality established by the field's own test
  CHECK(mersenne.fits_u64());
  CHECK(mersenne.modulus_u64() == 0x1FFFFFFFFFFFFFFFULL);

  CHECK(thrown_code([&] { PrimeField((mpz_class(1) << 61) - 2); }) == Errc::NotPrime);
  CHECK(thrown_code([&] { PrimeField(1); }) == Errc::NotPrime);
  CHECK(thrown_code([&] { PrimeField(91); }) == Errc::NotPrime);  // 7 * 13
  CHECK(thrown_code([&] { PrimeField(0); }) == Errc::NotPrime);
}

TEST_CASE("next_prime_above returns a prime strictly above the floor") {
  mpz_class p = next_prime_above(mpz_class(1) << 61);
  CHECK(p > (mpz_class(1) << 61));
  CHECK(is_probable_prime(p));
}

TEST_CASE("sampling: size-2 field nonzero draw is always 1") {
  PrimeField f2(2);
  Rng rng(7);
  for (int i = 0; i < 32; ++i) CHECK(f2.sample(rng, true) == 1);
}

TEST_CASE("sampling is deterministic given the rng state") {
  PrimeField f(101);
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(f.sample(a) == f.sample(b));
}

TEST_CASE("fast and big field paths consume the stream identically") {
  PrimeField big((mpz_class(1) << 61) - 1);
  PrimeField64 fast(big);
  Rng a(9001), b(9001);
  for (int i = 0; i < 200; ++i) {
    mpz_class va = big.sample(a);
    std::uint64_t vb = fast.sample(b);
    CHECK(va == mpz_class(vb));
  }
}

TEST_CASE("sample frequencies stay within 5 sigma of uniform (p=101, 1e5 draws)") {
  PrimeField64 f(PrimeField(101));
  Rng rng(123456789);
  const int n = 100000;
  std::vector<int> count(101, 0);
  for (int i = 0; i < n; ++i) ++count[f.sample(rng)];
  const double mean = double(n) / 101.0;
  const double sigma = std::sqrt(double(n) * (1.0 / 101.0) * (100.0 / 101.0));
  for (int r = 0; r < 101; ++r) {
    CHECK(count[r] > mean - 5 * sigma);
    CHECK(count[r] < mean + 5 * sigma);
  }
}

TEST_CASE("field axioms on random samples") {
  PrimeField big((mpz_class(1) << 61) - 1);
  PrimeField64 fast(big);
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    auto a = fast.sample(rng, true);
    CHECK(fast.mul(a, fast.inv(a)) == fast.one());
    auto b = fast.sample(rng), c = fast.sample(rng);
    CHECK(fast.mul(a, fast.add(b, c)) == fast.add(fast.mul(a, b), fast.mul(a, c)));
    // big-field path agrees entrywise
    mpz_class ba(static_cast<unsigned long>(a)), bb(static_cast<unsigned long>(b)),
        bc(static_cast<unsigned long>(c));
    CHECK(big.mul(ba, big.add(bb, bc)) == mpz_class(fast.mul(a, fast.add(b, c))));
    CHECK(big.inv(ba) == mpz_class(fast.inv(a)));
  }
}

TEST_CASE("commpoly: cancellation, products, coefficient queries") {
  // xi1 -> var id 1, y01 -> var id 2 (ids are opaque here)
  CommPoly xi1 = CommPoly::variable(1);
  CommPoly y01 = CommPoly::variable(2);

  CHECK(((xi1 + y01) + (-xi1)) == y01);
  CHECK((xi1 * xi1) == CommPoly::monomial(CommMonomial::var(1, 2), 1));

  CommPoly prod = (xi1 + y01) * (xi1 - y01);
  CommPoly expected =
      CommPoly::monomial(CommMonomial::var(1, 2), 1) - CommPoly::monomial(CommMonomial::var(2, 2), 1);
  CHECK(prod == expected);

  CHECK(CommPoly::zero().coeff(CommMonomial::unit()) == 0);
  CHECK(prod.coeff(CommMonomial::var(1, 2)) == 1);
  CHECK(prod.coeff(CommMonomial::var(1).times(CommMonomial::var(2))) == 0);
}

TEST_CASE("commpoly: no zero coefficients are ever stored") {
  Rng rng(77);
  for (int i = 0; i < 200; ++i) {
    CommPoly p = random_commpoly(rng, 3, 6, 3);
    CommPoly q = random_commpoly(rng, 3, 6, 3);
    for (const auto& op : {p + q, p - q, p * q, p - p}) {
      for (const auto& [m, c] : op.terms()) CHECK(c != 0);
    }
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("commpoly arithmetic agrees with the naive term-list reference") {
  Rng rng(31337);
  for (int i = 0; i < 150; ++i) {
    CommPoly p = random_commpoly(rng, 4, 8, 3);
    CommPoly q = random_commpoly(rng, 4, 8, 3);
    CHECK((p + q) == ref_to_commpoly(ref_add(ref_of(p), ref_of(q))));
    CHECK((p * q) == ref_to_commpoly(ref_mul(ref_of(p), ref_of(q))));
  }
}

TEST_CASE("commpoly add/mul are commutative and associative on random triples") {
  Rng rng(2024);
  for (int i = 0; i < 60; ++i) {
    CommPoly a = random_commpoly(rng, 3, 5, 2);
    CommPoly b = random_commpoly(rng, 3, 5, 2);
    CommPoly c = random_commpoly(rng, 3, 5, 2);
    CHECK((a + b) == (b + a));
    CHECK((a * b) == (b * a));
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * (b + c)) == (a * b + a * c));
  }
}

TEST_CASE("commpoly print/parse round-trip is the identity") {
  CHECK(CommPoly::zero().to_string() == "0");
  CHECK(CommPoly::parse("0").is_zero());

  CommPoly prod = (CommPoly::variable(1) + CommPoly::variable(2)) *
                  (CommPoly::variable(1) - CommPoly::variable(2));
  CHECK(prod.to_string() == "1 * v1^2 + -1 * v2^2");
  CHECK(CommPoly::parse(prod.to_string()) == prod);

  Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    CommPoly p = random_commpoly(rng, 4, 8, 4);
    CHECK(CommPoly::parse(p.to_string()) == p);
  }
}

TEST_CASE("matrix: identity is neutral, nilpotent squares to zero") {
  PrimeField64 f(PrimeField(101));
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    auto a = random_matrix(f, 3, rng);
    CHECK(mat_equal(f, mat_mul(f, a, Matrix<PrimeField64>::identity(f, 3)), a));
    CHECK(mat_equal(f, mat_mul(f, Matrix<PrimeField64>::identity(f, 3), a), a));
  }

  Matrix<PrimeField64> nil(f, 2);
  nil.at(0, 1) = 1;
  CHECK(mat_is_zero(f, mat_mul(f, nil, nil)));
}

TEST_CASE("matrix: products of upper-triangular matrices stay upper-triangular") {
  PrimeField64 f(PrimeField(101));
  Rng rng(13);
  for (int iter = 0; iter < 50; ++iter) {
    Matrix<PrimeField64> a(f, 4), b(f, 4);
    for (std::uint32_t i = 0; i < 4; ++i)
      for (std::uint32_t j = i; j < 4; ++j) {
        a.at(i, j) = f.sample(rng);
        b.at(i, j) = f.sample(rng);
      }
    auto c = mat_mul(f, a, b);
    for (std::uint32_t i = 0; i < 4; ++i)
      for (std::uint32_t j = 0; j < i; ++j) CHECK(f.is_zero(c.at(i, j)));
  }
}

TEST_CASE("matrix multiplication is associative on random triples (dim <= 4)") {
  PrimeField64 f(PrimeField(101));
  Rng rng(17);
  for (std::uint32_t dim = 1; dim <= 4; ++dim) {
    for (int iter = 0; iter < 10; ++iter) {
      auto a = random_matrix(f, dim, rng);
      auto b = random_matrix(f, dim, rng);
      auto c = random_matrix(f, dim, rng);
      CHECK(mat_equal(f, mat_mul(f, mat_mul(f, a, b), c), mat_mul(f, a, mat_mul(f, b, c))));
    }
  }
}

TEST_CASE("mat_pow: base cases and agreement with the naive fold") {
  PrimeField64 f(PrimeField(101));
  Rng rng(19);
  auto a = random_matrix(f, 3, rng);
  CHECK(mat_equal(f, mat_pow(f, a, 0), Matrix<PrimeField64>::identity(f, 3)));
  CHECK(mat_equal(f, mat_pow(f, a, 1), a));
  CHECK(mat_equal(f, mat_pow(f, a, 5), naive_mat_pow(f, a, 5)));
  for (std::uint64_t e = 0; e <= 8; ++e) {
    auto b = random_matrix(f, 3, rng);
    CHECK(mat_equal(f, mat_pow(f, b, e), naive_mat_pow(f, b, e)));
  }
}

TEST_CASE("matrix dimension mismatch is rejected") {
  PrimeField64 f(PrimeField(101));
  Matrix<PrimeField64> a(f, 2), b(f, 3);
  CHECK(thrown_code([&] { mat_mul(f, a, b); }) == Errc::DimMismatch);
  CHECK(thrown_code([&] { mat_add(f, a, b); }) == Errc::DimMismatch);
}

TEST_CASE("matrix arithmetic works over the symbolic ring") {
  CommPolyRing ring;
  Matrix<CommPolyRing> a(ring, 2), b(ring, 2);
  a.at(0, 0) = CommPoly::variable(1);
  a.at(0, 1) = CommPoly::variable(2);
  a.at(1, 1) = CommPoly::variable(3);
  b.at(0, 0) = CommPoly::variable(3);
  b.at(1, 0) = CommPoly::variable(1);
  auto c = mat_mul(ring, a, b);
  CHECK(c.at(0, 0) == CommPoly::variable(1) * CommPoly::variable(3) +
                          CommPoly::variable(2) * CommPoly::variable(1));
  CHECK(c.at(1, 0) == CommPoly::variable(3) * CommPoly::variable(1));
  CHECK(c.at(0, 1).is_zero());
}
