#include "doctest.h"

#include <set>

#include "ncpit/autmat.hpp"
#include "ncpit/field.hpp"
#include "test_support.hpp"

using namespace ncpit;
using namespace ncpit::testing;

namespace {

CommPoly xi(std::uint32_t j) { return CommPoly::variable(nfavars::xi(j)); }
CommPoly y(std::uint32_t b, std::uint32_t j) { return CommPoly::variable(nfavars::y(b, j)); }

// Symbolic product of the matrices selected by a bivariate word.
Matrix<CommPolyRing> word_product(const CommPolyRing& ring,
                                  const SubstitutionMatrices<CommPolyRing>& sm, const Word& w) {
  Matrix<CommPolyRing> acc = Matrix<CommPolyRing>::identity(ring, sm.mx0.dim());
  for (std::uint32_t s : w.symbols) acc = mat_mul(ring, acc, s == 0 ? sm.mx0 : sm.mx1);
  return acc;
}

}  // namespace

TEST_CASE("substitution matrices at K=1 match the displayed pattern") {
  CommPolyRing ring;
  auto sm = build_substitution_matrices(ring, symbolic_assignment(1));
  CHECK(sm.mx0.dim() == 2);
  CHECK(sm.mx0.at(0, 0) == xi(1));
  CHECK(sm.mx0.at(0, 1) == y(0, 1));
  CHECK(sm.mx0.at(1, 0).is_zero());
  CHECK(sm.mx0.at(1, 1) == xi(2));
  CHECK(sm.mx1.at(0, 0) == xi(1));
  CHECK(sm.mx1.at(0, 1) == y(1, 1));
  CHECK(sm.mx1.at(1, 1) == xi(2));

  // product mx0 * mx1: [[xi1^2, xi1 y11 + y01 xi2], [0, xi2^2]]
  auto prod = mat_mul(ring, sm.mx0, sm.mx1);
  CHECK(prod.at(0, 0) == xi(1) * xi(1));
  CHECK(prod.at(0, 1) == xi(1) * y(1, 1) + y(0, 1) * xi(2));
  CHECK(prod.at(1, 0).is_zero());
  CHECK(prod.at(1, 1) == xi(2) * xi(2));
}

TEST_CASE("K=0 degenerates to 1x1 matrices [xi1]") {
  CommPolyRing ring;
  auto sm = build_substitution_matrices(ring, symbolic_assignment(0));
  CHECK(sm.mx0.dim() == 1);
  CHECK(sm.mx0.at(0, 0) == xi(1));
  CHECK(sm.mx1.at(0, 0) == xi(1));
}

TEST_CASE("random assignment: arity, determinism, frozen transcript") {
  PrimeField f(101);
  PrimeField64 f64(f);

  Rng r0(1);
  auto a0 = random_assignment(0, f64, r0);
  CHECK(a0.xi.size() == 1);
  CHECK(a0.y0.empty());
  CHECK(a0.y1.empty());

  Rng ra(7), rb(7);
  auto x = random_assignment(4, f64, ra);
  auto y2 = random_assignment(4, f64, rb);
  CHECK(x.xi == y2.xi);
  CHECK(x.y0 == y2.y0);
  CHECK(x.y1 == y2.y1);

  // golden transcript: seed 2025, K=3, p=101 (3K+1 = 10 values)
  Rng rg(2025);
  auto g = random_assignment(3, f64, rg);
  CHECK(g.xi == std::vector<std::uint64_t>{55, 66, 36, 0});
  CHECK(g.y0 == std::vector<std::uint64_t>{78, 21, 97});
  CHECK(g.y1 == std::vector<std::uint64_t>{99, 25, 34});

  // the arbitrary-precision path consumes the stream identically
  Rng rbig(2025);
  auto gb = random_assignment(3, f, rbig);
  for (std::size_t i = 0; i < 4; ++i) CHECK(gb.xi[i] == mpz_class(g.xi[i]));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(gb.y0[i] == mpz_class(g.y0[i]));
    CHECK(gb.y1[i] == mpz_class(g.y1[i]));
  }
}

TEST_CASE("symbolic assignment: 3K+1 fresh distinct variables") {
  auto a1 = symbolic_assignment(1);
  std::set<std::string> names;
  for (const auto& p : {a1.xi[0], a1.xi[1], a1.y0[0], a1.y1[0]})
    names.insert(p.to_string(nfavars::names()));
  CHECK(names.size() == 4);

  for (std::uint32_t k = 0; k <= 16; ++k) {
    auto a = symbolic_assignment(k);
    std::set<VarId> ids;
    for (const auto& p : a.xi) ids.insert(p.terms().begin()->first.factors()[0].first);
    for (const auto& p : a.y0) ids.insert(p.terms().begin()->first.factors()[0].first);
    for (const auto& p : a.y1) ids.insert(p.terms().begin()->first.factors()[0].first);
    CHECK(ids.size() == 3 * std::size_t(k) + 1);
  }
}

TEST_CASE("encoded variable matrices: scalar case and the three one-step paths") {
  CommPolyRing ring;

  // n=1, K=0: N_1 = [xi1^3] (the encoding x0 x1 x0 collapses to a cube)
  auto sm0 = build_substitution_matrices(ring, symbolic_assignment(0));
  auto n0 = encoded_variable_matrices(ring, sm0, 1);
  REQUIRE(n0.size() == 1);
  CHECK(n0[0].at(0, 0) == xi(1) * xi(1) * xi(1));

  // K=1, n=1: the (q0,q1) entry of N_1 lists the three one-step paths
  auto sm1 = build_substitution_matrices(ring, symbolic_assignment(1));
  auto n1 = encoded_variable_matrices(ring, sm1, 1);
  CHECK(n1[0].at(0, 1) ==
        xi(1) * xi(1) * y(0, 1) + xi(1) * y(1, 1) * xi(2) + y(0, 1) * xi(2) * xi(2));
  CHECK(n1[0].at(0, 0) == xi(1) * xi(1) * xi(1));
  CHECK(n1[0].at(1, 1) == xi(2) * xi(2) * xi(2));
  CHECK(n1[0].at(1, 0).is_zero());
}

TEST_CASE("encoded matrices equal the word products of the encoding") {
  CommPolyRing ring;
  for (std::uint32_t k = 0; k <= 2; ++k) {
    auto sm = build_substitution_matrices(ring, symbolic_assignment(k));
    auto enc = encoded_variable_matrices(ring, sm, 3);
    for (std::uint32_t i = 1; i <= 3; ++i) {
      Word w = encode_word(make_zword({i}));
      CHECK(mat_equal(ring, enc[i - 1], word_product(ring, sm, w)));
    }
  }
}

TEST_CASE("homomorphism cross-check: encode-then-eval equals eval-at-encoded-matrices") {
  CommPolyRing ring;
  Rng rng(606);
  for (int iter = 0; iter < 30; ++iter) {
    std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below_u64(3));
    auto f = random_zpoly(rng, n, 3, 4);
    std::uint32_t k = static_cast<std::uint32_t>(rng.below_u64(3));

    auto sm = build_substitution_matrices(ring, symbolic_assignment(k));
    std::vector<Matrix<CommPolyRing>> xs{sm.mx0, sm.mx1};
    auto lhs = ncpoly_eval(ring, encode_bivariate(f), std::span<const Matrix<CommPolyRing>>(xs));

    auto encoded = encoded_variable_matrices(ring, sm, n);
    auto rhs = ncpoly_eval(ring, f, std::span<const Matrix<CommPolyRing>>(encoded));

    CHECK(mat_equal(ring, lhs, rhs));
  }
}

TEST_CASE("path-sum semantics: exhaustive check against the enumeration oracle") {
  CommPolyRing ring;
  for (std::uint32_t k = 0; k <= 3; ++k) {
    auto sm = build_substitution_matrices(ring, symbolic_assignment(k));
    for (std::uint32_t d = 0; d <= 6; ++d) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << d); ++bits) {
        Word w{Alphabet::X, {}};
        for (std::uint32_t p = 0; p < d; ++p)
          w.symbols.push_back((bits >> p) & 1 ? 1u : 0u);
        auto prod = word_product(ring, sm, w);
        SparseNCPoly single(Alphabet::X, 2);
        single.add_term(w, 1);
        for (std::uint32_t j = 0; j <= k; ++j)
          CHECK(prod.at(0, j) == oracle_nfa_entry(single, j));
      }
    }
  }
}

TEST_CASE("block monomials xi_J are distinct across distinct index sets") {
  // the xi part of a path monomial determines the step positions uniquely
  for (std::uint32_t d = 1; d <= 6; ++d) {
    for (std::uint32_t k = 0; k <= std::min(d, 3u); ++k) {
      Word w{Alphabet::X, std::vector<std::uint32_t>(d, 0)};
      std::set<std::vector<std::uint64_t>> xi_profiles;
      std::size_t subset_count = 0;
      for_each_subset(d, k, [&](const std::vector<std::uint32_t>& steps) {
        ++subset_count;
        CommMonomial m = oracle_path_monomial(w, steps);
        std::vector<std::uint64_t> profile;
        for (std::uint32_t j = 1; j <= k + 1; ++j)
          profile.push_back(m.exponent_of(nfavars::xi(j)));
        xi_profiles.insert(profile);
      });
      CHECK(xi_profiles.size() == subset_count);
    }
  }
}

TEST_CASE("products of substitution matrices stay upper-triangular") {
  PrimeField f((mpz_class(1) << 61) - 1);
  PrimeField64 f64(f);
  Rng rng(11);
  for (int iter = 0; iter < 20; ++iter) {
    std::uint32_t k = static_cast<std::uint32_t>(rng.below_u64(4));
    auto a = random_assignment(k, f64, rng);
    auto sm = build_substitution_matrices(f64, a);
    Matrix<PrimeField64> acc = Matrix<PrimeField64>::identity(f64, k + 1);
    for (int step = 0; step < 8; ++step) {
      acc = mat_mul(f64, acc, rng.below_u64(2) == 0 ? sm.mx0 : sm.mx1);
      for (std::uint32_t i = 0; i < k + 1; ++i)
        for (std::uint32_t j = 0; j < i; ++j) CHECK(f64.is_zero(acc.at(i, j)));
    }
  }
}

TEST_CASE("NFA variable names round-trip through the CommPoly text format") {
  auto a = symbolic_assignment(2);
  auto sm = build_substitution_matrices(CommPolyRing{}, a);
  auto prod = mat_mul(CommPolyRing{}, sm.mx0, sm.mx1);
  for (std::uint32_t i = 0; i < 3; ++i)
    for (std::uint32_t j = 0; j < 3; ++j) {
      std::string s = prod.at(i, j).to_string(nfavars::names());
      CHECK(CommPoly::parse(s, nfavars::names()) == prod.at(i, j));
    }
  CHECK(xi(1).to_string(nfavars::names()) == "1 * xi1");
  CHECK(y(0, 2).to_string(nfavars::names()) == "1 * y02");
  CHECK(y(1, 12).to_string(nfavars::names()) == "1 * y112");
}
