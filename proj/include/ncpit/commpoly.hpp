#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ncpit/error.hpp"

namespace ncpit {

using VarId = std::uint32_t;

// Commutative monomial in canonical form: factor list sorted by variable id,
// no zero exponents, empty list is the unit monomial.
class CommMonomial {
 public:
  CommMonomial() = default;

  static CommMonomial unit() { return CommMonomial(); }
  static CommMonomial var(VarId v, std::uint64_t exp = 1);

  CommMonomial times(const CommMonomial& other) const;

  std::uint64_t degree() const;
  std::uint64_t exponent_of(VarId v) const;
  bool is_unit() const { return factors_.empty(); }

  const std::vector<std::pair<VarId, std::uint64_t>>& factors() const { return factors_; }

  bool operator==(const CommMonomial& o) const { return factors_ == o.factors_; }
  bool operator<(const CommMonomial& o) const { return factors_ < o.factors_; }

 private:
  std::vector<std::pair<VarId, std::uint64_t>> factors_;
};

// Maps variable ids to display names and back; modules owning an id scheme
// (e.g. the NFA block/index variables) supply their own.
struct VarNames {
  std::function<std::string(VarId)> name;
  std::function<VarId(std::string_view)> resolve;
};

const VarNames& default_var_names();  // v<id>

// Exact-coefficient commutative multivariate polynomial over Z, canonical
// form (no zero coefficients), so equality is structural.
class CommPoly {
 public:
  CommPoly() = default;

  static CommPoly zero() { return CommPoly(); }
  static CommPoly constant(mpz_class c);
  static CommPoly variable(VarId v);
  static CommPoly monomial(CommMonomial m, mpz_class c);

  CommPoly operator+(const CommPoly& o) const;
  CommPoly operator-(const CommPoly& o) const;
  CommPoly operator*(const CommPoly& o) const;
  CommPoly operator-() const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  std::uint64_t degree() const;  // 0 for the zero polynomial

  // Coefficient of m, zero when absent.
  mpz_class coeff(const CommMonomial& m) const;

  const std::map<CommMonomial, mpz_class>& terms() const { return terms_; }

  bool operator==(const CommPoly& o) const { return terms_ == o.terms_; }

  // Terms sorted by monomial, "c * v1^e1 v2^e2" joined by " + "; the zero
  // polynomial prints as "0". Exponent 1 prints bare; parse() accepts both.
  std::string to_string(const VarNames& names = default_var_names()) const;
  static CommPoly parse(std::string_view text, const VarNames& names = default_var_names());

 private:
  void add_term(const CommMonomial& m, const mpz_class& c);

  std::map<CommMonomial, mpz_class> terms_;
};

// Ring adaptor so Matrix<CommPolyRing> and the generic evaluators work over
// exact symbolic entries.
class CommPolyRing {
 public:
  using Elem = CommPoly;

  Elem zero() const { return CommPoly::zero(); }
  Elem one() const { return CommPoly::constant(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem from_integer(const mpz_class& v) const { return CommPoly::constant(v); }
};

}  // namespace ncpit
