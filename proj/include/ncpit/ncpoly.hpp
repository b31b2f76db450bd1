#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ncpit/error.hpp"
#include "ncpit/matrix.hpp"

namespace ncpit {

// Alphabet of a free word: z-variables z1..zn, or the bivariate pair x0/x1.
enum class Alphabet : std::uint8_t { Z, X };

// Free word over an alphabet. Symbols are variable ids: 1..n for the
// z-alphabet, 0 or 1 for the bivariate one. Positions are 1-indexed.
struct Word {
  Alphabet alphabet = Alphabet::Z;
  std::vector<std::uint32_t> symbols;

  std::size_t degree() const { return symbols.size(); }

  std::uint32_t at(std::size_t pos_1based) const {
    if (pos_1based == 0 || pos_1based > symbols.size())
      fail(Errc::Config, "word position out of range");
    return symbols[pos_1based - 1];
  }

  bool operator==(const Word& o) const {
    return alphabet == o.alphabet && symbols == o.symbols;
  }
  // Graded order: shorter words first, then lexicographic.
  bool operator<(const Word& o) const {
    if (symbols.size() != o.symbols.size()) return symbols.size() < o.symbols.size();
    return symbols < o.symbols;
  }

  std::string str() const;  // e.g. "z1 z2" or "x0 x1"
};

Word make_zword(std::initializer_list<std::uint32_t> symbols);
Word make_xword(std::initializer_list<std::uint32_t> symbols);

// Sparse noncommutative polynomial: canonical word -> coefficient map with
// exact integer coefficients (field use sites reduce via from_integer).
class SparseNCPoly {
 public:
  SparseNCPoly(Alphabet alphabet, std::uint32_t nvars);

  static SparseNCPoly zero(Alphabet alphabet, std::uint32_t nvars) {
    return SparseNCPoly(alphabet, nvars);
  }
  // Combines duplicate words and drops zero coefficients.
  static SparseNCPoly normalize(Alphabet alphabet, std::uint32_t nvars,
                                const std::vector<std::pair<mpz_class, Word>>& raw);

  Alphabet alphabet() const { return alphabet_; }
  std::uint32_t nvars() const { return nvars_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t sparsity() const { return terms_.size(); }
  // Degree of the zero polynomial is absent, never a sentinel number.
  std::optional<std::uint64_t> degree() const;

  mpz_class coeff(const Word& w) const;
  const std::map<Word, mpz_class>& terms() const { return terms_; }

  void add_term(const Word& w, const mpz_class& c);

  SparseNCPoly operator+(const SparseNCPoly& o) const;
  SparseNCPoly operator-(const SparseNCPoly& o) const;
  SparseNCPoly operator*(const SparseNCPoly& o) const;  // concatenates words
  SparseNCPoly scaled(const mpz_class& c) const;

  bool operator==(const SparseNCPoly& o) const {
    return alphabet_ == o.alphabet_ && nvars_ == o.nvars_ && terms_ == o.terms_;
  }

 private:
  Alphabet alphabet_;
  std::uint32_t nvars_;
  std::map<Word, mpz_class> terms_;
};

// Bivariate encoding z_i -> x0 x1^i x0 on a single word.
Word encode_word(const Word& zword);

// Applies the encoding to every term; coefficients unchanged. The result
// degree is bounded by (n+2) * deg(f).
SparseNCPoly encode_bivariate(const SparseNCPoly& f);

// True iff the encodings of the given words are pairwise distinct. Always
// true (the encoding is injective); kept as the test oracle for that fact.
bool encoding_injective_check(const std::vector<Word>& words);

// The homogeneous top-degree slice of a nonzero polynomial.
struct MaxDegreeSet {
  std::uint64_t degree = 0;
  std::vector<Word> words;
};
MaxDegreeSet max_degree_set(const SparseNCPoly& f);

// Evaluates f at one dim x dim matrix per alphabet symbol: matrices[i-1]
// for z_i, or matrices[0], matrices[1] for x0, x1. Word products multiply
// left to right.
template <Ring R>
Matrix<R> ncpoly_eval(const R& ring, const SparseNCPoly& f, std::span<const Matrix<R>> matrices) {
  const std::size_t expected = f.alphabet() == Alphabet::X ? 2 : f.nvars();
  if (matrices.size() != expected)
    fail(Errc::DimMismatch, "ncpoly_eval: expected " + std::to_string(expected) + " matrices");
  if (expected == 0) fail(Errc::DimMismatch, "ncpoly_eval: polynomial has no variables to bind");
  const std::uint32_t dim = matrices[0].dim();
  for (const auto& m : matrices)
    if (m.dim() != dim) fail(Errc::DimMismatch, "ncpoly_eval: mixed matrix dimensions");

  Matrix<R> acc(ring, dim);
  for (const auto& [word, c] : f.terms()) {
    Matrix<R> prod = Matrix<R>::identity(ring, dim);
    for (std::uint32_t sym : word.symbols) {
      const std::size_t idx = f.alphabet() == Alphabet::X ? sym : sym - 1;
      prod = mat_mul(ring, prod, matrices[idx]);
    }
    acc = mat_add(ring, acc, mat_scale(ring, ring.from_integer(c), prod));
  }
  return acc;
}

// Text format. Header "ncpoly v1 vars=<n> alphabet=<z|x>", then one term per
// line: "<coeff> <sym> <sym> ..." with syms "z<k>" or "x0"/"x1". '#' starts
// a comment, blank lines are ignored.
std::string to_text(const SparseNCPoly& f);
SparseNCPoly parse_ncpoly(std::string_view text);

}  // namespace ncpit
